#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "frab/disord.hpp"
#include "frab/frab.hpp"

namespace frab {

/// Comparison relations accepted by compare_values().
enum class Relation { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };

/// All symbols of `f` as an unordered view. The token is the Frab's snapshot
/// token, so the names and values views of one object are mutually
/// consistent and pair up positionally in the hidden order.
inline Disord<Symbol> names_view(const Frab& f) {
    std::vector<Symbol> names;
    names.reserve(f.size());
    for (const auto& [symbol, value] : f.entries()) {
        names.push_back(symbol);
    }
    return Disord<Symbol>(std::move(names), f.token());
}

/// All coefficients of `f` as an unordered view, paired with names_view().
inline Disord<Coefficient> values_view(const Frab& f) {
    std::vector<Coefficient> values;
    values.reserve(f.size());
    for (const auto& [symbol, value] : f.entries()) {
        values.push_back(value);
    }
    return Disord<Coefficient>(std::move(values), f.token());
}

/// Replaces the symbol at each hidden position, then re-canonicalizes:
/// colliding new names are summed and zero entries dropped. `new_names` must
/// be consistent with names_view(f); a length-1 collection broadcasts.
template <typename S>
Frab with_names(const Frab& f, const Disord<S>& new_names) {
    const bool shared = new_names.token() == f.token();
    if (!shared && new_names.size() != 1) {
        throw DisciplineError("replacement names are not consistent with this object");
    }
    std::vector<std::pair<Symbol, Coefficient>> pairs;
    pairs.reserve(f.size());
    std::size_t i = 0;
    for (const auto& [symbol, value] : f.entries()) {
        pairs.emplace_back(Symbol(new_names.elements()[shared ? i : 0]), Coefficient(value));
        ++i;
    }
    return from_pairs(pairs);
}

/// Replaces the coefficient at each hidden position; zeros are dropped.
/// `new_values` must be consistent with values_view(f).
template <typename V>
Frab with_values(const Frab& f, const Disord<V>& new_values) {
    const bool shared = new_values.token() == f.token();
    if (!shared && new_values.size() != 1) {
        throw DisciplineError("replacement values are not consistent with this object");
    }
    std::vector<std::pair<Symbol, Coefficient>> pairs;
    pairs.reserve(f.size());
    std::size_t i = 0;
    for (const auto& [symbol, value] : f.entries()) {
        pairs.emplace_back(symbol, Coefficient(new_values.elements()[shared ? i : 0]));
        ++i;
    }
    return from_pairs(pairs);
}

/// Restriction of `f` to the given symbols; absent symbols contribute
/// nothing.
inline Frab extract_by_symbols(const Frab& f, const std::set<Symbol>& symbols) {
    Frab::Entries out;
    for (const auto& symbol : symbols) {
        const auto it = f.entries().find(symbol);
        if (it != f.entries().end()) {
            out.emplace(symbol, it->second);
        }
    }
    return Frab(std::move(out));
}

/// Entries are keyed, not positioned; extracting "the first" entry is a
/// discipline violation.
[[noreturn]] inline Frab extract_by_position(const Frab&, std::ptrdiff_t) {
    throw DisciplineError(
        "positional extraction from a frab object is not implemented: "
        "entries are stored in an undefined order");
}

/// Boolean view consistent with values_view(f), true where the relation
/// against `threshold` holds.
inline DisIndex compare_values(const Frab& f, Relation relation, Coefficient threshold) {
    std::vector<bool> mask;
    mask.reserve(f.size());
    const double t = threshold.value();
    for (const auto& [symbol, value] : f.entries()) {
        bool on = false;
        switch (relation) {
            case Relation::Less: on = value < t; break;
            case Relation::LessEqual: on = value <= t; break;
            case Relation::Greater: on = value > t; break;
            case Relation::GreaterEqual: on = value >= t; break;
            case Relation::Equal: on = value == t; break;
            case Relation::NotEqual: on = value != t; break;
        }
        mask.push_back(on);
    }
    return DisIndex(std::move(mask), f.token());
}

/// Sets the coefficient at every true mask position to `value`, then
/// re-canonicalizes. The mask must be consistent with values_view(f); a
/// length-1 mask broadcasts.
inline Frab replace_where(const Frab& f, const DisIndex& mask, Coefficient value) {
    const bool shared = mask.token() == f.token();
    if (!shared && mask.size() != 1) {
        throw DisciplineError("replacement mask is not consistent with this object");
    }
    Frab::Entries out;
    std::size_t i = 0;
    for (const auto& [symbol, old_value] : f.entries()) {
        const bool on = mask.elements()[shared ? i : 0];
        out.emplace_hint(out.end(), symbol, on ? value.value() : old_value);
        ++i;
    }
    return Frab(std::move(out));
}

/// Sets the coefficient of `s` to `value`: inserted if absent, removed if
/// the value is exactly zero.
inline Frab replace_by_symbol(const Frab& f, const Symbol& s, Coefficient value) {
    Frab::Entries out = f.entries();
    if (value.value() == 0.0) {
        out.erase(s);
    } else {
        out.insert_or_assign(s, value.value());
    }
    return Frab(std::move(out));
}

inline DisIndex operator<(const Frab& f, Coefficient t) {
    return compare_values(f, Relation::Less, t);
}
inline DisIndex operator<=(const Frab& f, Coefficient t) {
    return compare_values(f, Relation::LessEqual, t);
}
inline DisIndex operator>(const Frab& f, Coefficient t) {
    return compare_values(f, Relation::Greater, t);
}
inline DisIndex operator>=(const Frab& f, Coefficient t) {
    return compare_values(f, Relation::GreaterEqual, t);
}

}  // namespace frab
