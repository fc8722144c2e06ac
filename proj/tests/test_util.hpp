#pragma once

// Shared generators and reference models for the test suites. The reference
// arithmetic here works on plain string->double maps so that library results
// can be checked against an independent computation path.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "frab/frab.hpp"
#include "frab/tabulation.hpp"

namespace testutil {

using RawPairs = std::vector<std::pair<std::string, double>>;
using RawMap = std::map<std::string, double>;

// Direct summation with exact zeros erased; mirrors the canonical-form
// definition, not the implementation.
inline RawMap naive_sum(const RawPairs& pairs) {
    RawMap out;
    for (const auto& [name, value] : pairs) {
        out[name] += value;
    }
    std::erase_if(out, [](const auto& entry) { return entry.second == 0.0; });
    return out;
}

inline RawMap raw_entries(const frab::Frab& f) {
    RawMap out;
    for (const auto& [symbol, value] : f.entries()) {
        out.emplace(symbol.str(), value);
    }
    return out;
}

inline frab::Frab build(const RawPairs& pairs) {
    std::vector<std::pair<frab::Symbol, frab::Coefficient>> converted;
    converted.reserve(pairs.size());
    for (const auto& [name, value] : pairs) {
        converted.emplace_back(name, value);
    }
    return frab::from_pairs(converted);
}

inline void expect_canonical(const frab::Frab& f) {
    for (const auto& [symbol, value] : f.entries()) {
        EXPECT_FALSE(symbol.str().empty());
        EXPECT_NE(value, 0.0);
        EXPECT_TRUE(std::isfinite(value));
    }
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    double real(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    bool chance(double p) { return real(0.0, 1.0) < p; }

    std::string pooled_symbol(int pool_size) {
        return "s" + std::to_string(integer(0, pool_size - 1));
    }

    std::string letter_symbol() { return std::string(1, static_cast<char>('a' + integer(0, 25))); }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline RawPairs random_integer_pairs(Rng& rng, int max_terms = 50, int magnitude = 1000000,
                                     int pool_size = 60) {
    RawPairs out;
    const int n = rng.integer(0, max_terms);
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.emplace_back(rng.pooled_symbol(pool_size),
                         static_cast<double>(rng.integer(-magnitude, magnitude)));
    }
    return out;
}

inline RawPairs random_real_pairs(Rng& rng, int max_terms = 30, int pool_size = 40) {
    RawPairs out;
    const int n = rng.integer(0, max_terms);
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.emplace_back(rng.pooled_symbol(pool_size), rng.real(-100.0, 100.0));
    }
    return out;
}

inline frab::Frab random_integer_frab(Rng& rng) { return build(random_integer_pairs(rng)); }

inline frab::Frab random_real_frab(Rng& rng) { return build(random_real_pairs(rng)); }

// Nonnegative integer counts over single-letter symbols.
inline frab::Frab random_count_frab(Rng& rng, int max_symbols = 26, int max_count = 40) {
    RawPairs out;
    const int n = rng.integer(0, max_symbols);
    for (int i = 0; i < n; ++i) {
        out.emplace_back(rng.letter_symbol(), static_cast<double>(rng.integer(0, max_count)));
    }
    return build(out);
}

inline frab::TokenStream random_stream(Rng& rng, int max_length = 1000, int alphabet = 26) {
    frab::TokenStream out;
    const int n = rng.integer(0, max_length);
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.emplace_back(std::string(1, static_cast<char>('a' + rng.integer(0, alphabet - 1))));
    }
    return out;
}

}  // namespace testutil
