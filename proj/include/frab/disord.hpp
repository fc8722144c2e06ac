#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "frab/errors.hpp"
#include "frab/provenance.hpp"

namespace frab {

/// An unordered collection of values.
///
/// Items are stored in some hidden order that callers must not rely on. The
/// provenance token records which hidden order the items follow: elementwise
/// work is allowed only between collections whose tokens match (or when one
/// side is a length-1 scalar), and positional access by literal index is
/// always an error. Two collections with equal tokens have equal lengths.
template <typename T>
class Disord {
public:
    Disord(std::vector<T> items, ProvenanceToken token)
        : items_(std::move(items)), token_(token) {}

    /// Escape hatch: the items in their hidden order. Intended for display,
    /// multiset-style inspection and conversion back to an ordinary
    /// container, not for positional logic.
    const std::vector<T>& elements() const noexcept { return items_; }

    std::size_t size() const noexcept { return items_.size(); }
    bool empty() const noexcept { return items_.empty(); }
    const ProvenanceToken& token() const noexcept { return token_; }

private:
    std::vector<T> items_;
    ProvenanceToken token_;
};

/// Boolean-valued collection used for predicate selection and replacement.
using DisIndex = Disord<bool>;

/// Wraps `items` with a freshly generated provenance token.
template <typename T>
Disord<T> disord_new(std::vector<T> items) {
    return Disord<T>(std::move(items), ProvenanceToken::fresh());
}

/// True when the two collections may be combined elementwise: their tokens
/// match, or either one is a length-1 scalar (broadcast).
template <typename A, typename B>
bool consistent(const Disord<A>& d1, const Disord<B>& d2) {
    return d1.token() == d2.token() || d1.size() == 1 || d2.size() == 1;
}

/// Applies `fn` to every item. The result keeps the operand's token: the
/// hidden order is untouched, so the output stays consistent with its input.
template <typename T, typename F>
auto map_elementwise(const Disord<T>& d, F&& fn)
    -> Disord<std::decay_t<std::invoke_result_t<F&, const T&>>> {
    using R = std::decay_t<std::invoke_result_t<F&, const T&>>;
    std::vector<R> out;
    out.reserve(d.size());
    for (const auto& item : d.elements()) {
        out.push_back(fn(item));
    }
    return Disord<R>(std::move(out), d.token());
}

/// Pairwise application in the shared hidden order. A length-1 operand
/// broadcasts and the longer operand's token is preserved; combining two
/// unrelated scalars yields a fresh token.
template <typename A, typename B, typename F>
auto zip_elementwise(const Disord<A>& d1, const Disord<B>& d2, F&& fn)
    -> Disord<std::decay_t<std::invoke_result_t<F&, const A&, const B&>>> {
    using R = std::decay_t<std::invoke_result_t<F&, const A&, const B&>>;
    std::vector<R> out;
    if (d1.token() == d2.token()) {
        out.reserve(d1.size());
        for (std::size_t i = 0; i < d1.size(); ++i) {
            out.push_back(fn(d1.elements()[i], d2.elements()[i]));
        }
        return Disord<R>(std::move(out), d1.token());
    }
    if (d1.size() == 1 && d2.size() == 1) {
        out.push_back(fn(d1.elements()[0], d2.elements()[0]));
        return disord_new(std::move(out));
    }
    if (d1.size() == 1) {
        out.reserve(d2.size());
        for (const auto& item : d2.elements()) {
            out.push_back(fn(d1.elements()[0], item));
        }
        return Disord<R>(std::move(out), d2.token());
    }
    if (d2.size() == 1) {
        out.reserve(d1.size());
        for (const auto& item : d1.elements()) {
            out.push_back(fn(item, d2.elements()[0]));
        }
        return Disord<R>(std::move(out), d1.token());
    }
    throw DisciplineError(
        "cannot combine disord objects elementwise: hidden orders are not known to agree");
}

/// Keeps the items at the mask's true positions. Selection changes which
/// positions exist, so the result always carries a fresh token.
template <typename T>
Disord<T> filter_by(const Disord<T>& d, const DisIndex& mask) {
    std::vector<T> out;
    if (d.token() == mask.token()) {
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (mask.elements()[i]) {
                out.push_back(d.elements()[i]);
            }
        }
        return disord_new(std::move(out));
    }
    if (mask.size() == 1) {
        if (mask.elements()[0]) {
            out = d.elements();
        }
        return disord_new(std::move(out));
    }
    if (d.size() == 1) {
        throw LengthMismatch("filter mask longer than the collection it selects from");
    }
    throw DisciplineError(
        "cannot filter a disord object by a mask with unrelated provenance");
}

/// Positional extraction is meaningless for an unordered collection.
template <typename T>
[[noreturn]] T get_by_position(const Disord<T>&, std::ptrdiff_t) {
    throw DisciplineError(
        "positional extraction from a disord object is not implemented: "
        "elements are stored in an undefined order");
}

}  // namespace frab
