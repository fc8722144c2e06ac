#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "frab/errors.hpp"
#include "frab/provenance.hpp"
#include "frab/symbol.hpp"

namespace frab {

/// An element of the free Abelian group over string symbols: a finite formal
/// sum of symbols with real weights, kept in canonical form (each symbol at
/// most once, no entry is exactly 0.0).
///
/// Values are immutable; every operation returns a new object. Each object
/// carries a fresh provenance token identifying its snapshot, so unordered
/// views taken from different objects never mix silently.
class Frab {
public:
    using Entries = std::map<Symbol, double>;

    /// The identity element.
    Frab() : token_(ProvenanceToken::fresh()) {}

    /// Canonicalizes: exact zeros are dropped, non-finite entries rejected.
    explicit Frab(Entries entries)
        : entries_(std::move(entries)), token_(ProvenanceToken::fresh()) {
        for (auto it = entries_.begin(); it != entries_.end();) {
            if (!std::isfinite(it->second)) {
                throw NonFiniteCoefficient("non-finite coefficient for symbol '" +
                                           it->first.str() + "'");
            }
            it = it->second == 0.0 ? entries_.erase(it) : std::next(it);
        }
    }

    const Entries& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Snapshot identity shared by the names/values views of this object.
    const ProvenanceToken& token() const noexcept { return token_; }

private:
    Entries entries_;
    ProvenanceToken token_;
};

/// Builds a Frab from (symbol, coefficient) pairs. Coefficients of equal
/// symbols are summed left to right in input order; symbols whose net sum is
/// exactly zero are absent from the result.
inline Frab from_pairs(const std::vector<std::pair<Symbol, Coefficient>>& pairs) {
    Frab::Entries entries;
    for (const auto& [symbol, coefficient] : pairs) {
        entries[symbol] += coefficient.value();
    }
    return Frab(std::move(entries));
}

/// Keyed addition: the coefficient of every symbol in the result is the sum
/// of its coefficients in the operands. Exact-zero sums are dropped.
inline Frab add(const Frab& a, const Frab& b) {
    Frab::Entries out;
    auto ia = a.entries().begin();
    auto ib = b.entries().begin();
    const auto ea = a.entries().end();
    const auto eb = b.entries().end();
    // both inputs are sorted, so a hinted linear merge suffices
    while (ia != ea && ib != eb) {
        if (ia->first < ib->first) {
            out.emplace_hint(out.end(), *ia++);
        } else if (ib->first < ia->first) {
            out.emplace_hint(out.end(), *ib++);
        } else {
            out.emplace_hint(out.end(), ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    out.insert(ia, ea);
    out.insert(ib, eb);
    return Frab(std::move(out));
}

/// Additive inverse: every coefficient sign-flipped, support unchanged.
inline Frab negate(const Frab& a) {
    Frab::Entries out = a.entries();
    for (auto& [symbol, value] : out) {
        value = -value;
    }
    return Frab(std::move(out));
}

inline Frab subtract(const Frab& a, const Frab& b) { return add(a, negate(b)); }

/// Multiplies every coefficient by `factor`; exact-zero products are dropped,
/// so a zero factor annihilates.
inline Frab scalar_multiply(const Frab& a, Coefficient factor) {
    Frab::Entries out = a.entries();
    for (auto& [symbol, value] : out) {
        value *= factor.value();
    }
    return Frab(std::move(out));
}

/// The stored coefficient of `s`, or exactly 0.0 when absent.
inline Coefficient coefficient_of(const Frab& a, const Symbol& s) {
    const auto it = a.entries().find(s);
    return it == a.entries().end() ? 0.0 : it->second;
}

/// Canonical-form comparison: equal supports with equal coefficients.
/// Snapshot tokens are ignored.
inline bool equals(const Frab& a, const Frab& b) {
    return a.entries() == b.entries();
}

/// Number of stored symbols.
inline std::size_t support_size(const Frab& a) { return a.size(); }

/// Removes entries with |coefficient| <= tolerance. This is the only
/// tolerance-based cleanup: ordinary operations drop exact zeros only, so
/// round-off residuals survive until zapped explicitly.
inline Frab zap(const Frab& a, double tolerance) {
    if (std::isnan(tolerance) || std::isinf(tolerance)) {
        throw NonFiniteCoefficient("zap tolerance must be finite");
    }
    if (tolerance < 0.0) {
        throw NegativeTolerance("zap tolerance must be nonnegative");
    }
    Frab::Entries out;
    for (const auto& [symbol, value] : a.entries()) {
        if (std::abs(value) > tolerance) {
            out.emplace_hint(out.end(), symbol, value);
        }
    }
    return Frab(std::move(out));
}

inline Frab operator+(const Frab& a, const Frab& b) { return add(a, b); }
inline Frab operator-(const Frab& a) { return negate(a); }
inline Frab operator-(const Frab& a, const Frab& b) { return subtract(a, b); }
inline Frab operator*(const Frab& a, Coefficient factor) { return scalar_multiply(a, factor); }
inline Frab operator*(Coefficient factor, const Frab& a) { return scalar_multiply(a, factor); }
inline bool operator==(const Frab& a, const Frab& b) { return equals(a, b); }

}  // namespace frab
