#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "frab/tabulation.hpp"
#include "test_util.hpp"

using frab::Frab;
using frab::Symbol;
using frab::TokenStream;
using testutil::build;
using testutil::raw_entries;
using testutil::RawMap;

namespace {

TokenStream stream(const std::vector<std::string>& tokens) {
    TokenStream out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        out.emplace_back(token);
    }
    return out;
}

std::vector<std::string> names_of(const TokenStream& tokens) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        out.push_back(token.str());
    }
    return out;
}

// Reference count table computed without the library's arithmetic.
RawMap naive_counts(const TokenStream& tokens) {
    RawMap out;
    for (const auto& token : tokens) {
        out[token.str()] += 1.0;
    }
    return out;
}

// The flawed table addition this toolkit exists to avoid: values are paired
// slotwise in sorted-name order and the names of the first table are kept.
// Only meaningful when both tables have the same support size.
Frab positional_add(const Frab& x, const Frab& y) {
    EXPECT_EQ(x.size(), y.size());
    std::vector<double> other;
    other.reserve(y.size());
    for (const auto& [symbol, value] : y.entries()) {
        other.push_back(value);
    }
    std::vector<std::pair<Symbol, frab::Coefficient>> pairs;
    std::size_t i = 0;
    for (const auto& [symbol, value] : x.entries()) {
        pairs.emplace_back(symbol, value + other[i]);
        ++i;
    }
    return frab::from_pairs(pairs);
}

}  // namespace

TEST(Tabulate, CountsEachDistinctToken) {
    const Frab counts = frab::tabulate(stream({"a", "a", "b", "c", "d", "d", "a"}));
    const RawMap expected{{"a", 3}, {"b", 1}, {"c", 1}, {"d", 2}};
    EXPECT_EQ(raw_entries(counts), expected);
}

TEST(Tabulate, SecondSample) {
    const Frab counts = frab::tabulate(stream({"e", "d", "a", "b", "d", "a", "d"}));
    const RawMap expected{{"a", 2}, {"b", 1}, {"d", 3}, {"e", 1}};
    EXPECT_EQ(raw_entries(counts), expected);
}

TEST(Tabulate, EmptyStreamGivesEmptyTable) {
    EXPECT_TRUE(frab::tabulate(TokenStream{}).empty());
}

TEST(Tabulate, MatchesANaiveCounter) {
    testutil::Rng rng(111);
    for (int trial = 0; trial < 200; ++trial) {
        const TokenStream tokens = testutil::random_stream(rng, 300);
        ASSERT_EQ(raw_entries(frab::tabulate(tokens)), naive_counts(tokens));
    }
}

TEST(MergeCounts, AddsTablesByName) {
    const Frab x = frab::tabulate(stream({"a", "a", "b", "c", "d", "d", "a"}));
    const Frab y = frab::tabulate(stream({"e", "d", "a", "b", "d", "a", "d"}));
    const Frab merged = frab::merge_counts(x, y);
    const RawMap expected{{"a", 5}, {"b", 2}, {"c", 1}, {"d", 5}, {"e", 1}};
    EXPECT_EQ(raw_entries(merged), expected);
    EXPECT_EQ(frab::support_size(merged), 5u);
}

TEST(MergeCounts, IsExactlyGroupAddition) {
    testutil::Rng rng(222);
    for (int trial = 0; trial < 100; ++trial) {
        const Frab x = frab::tabulate(testutil::random_stream(rng, 200));
        const Frab y = frab::tabulate(testutil::random_stream(rng, 200));
        ASSERT_TRUE(frab::equals(frab::merge_counts(x, y), frab::add(x, y)));
    }
    EXPECT_TRUE(frab::merge_counts(Frab{}, Frab{}).empty());
}

TEST(MergeCounts, AgreesWithTabulatingTheConcatenation) {
    testutil::Rng rng(333);
    for (int trial = 0; trial < 200; ++trial) {
        const TokenStream s1 = testutil::random_stream(rng, 300);
        const TokenStream s2 = testutil::random_stream(rng, 300);
        TokenStream joined = s1;
        joined.insert(joined.end(), s2.begin(), s2.end());
        ASSERT_TRUE(frab::equals(frab::merge_counts(frab::tabulate(s1), frab::tabulate(s2)),
                                 frab::tabulate(joined)));
    }
}

TEST(MergeCounts, PositionalAdditionGetsTheWrongTable) {
    const Frab x = frab::tabulate(stream({"a", "a", "b", "c", "d", "d", "a"}));
    const Frab y = frab::tabulate(stream({"e", "d", "a", "b", "d", "a", "d"}));

    const Frab positional = positional_add(x, y);
    const RawMap slotwise{{"a", 5}, {"b", 2}, {"c", 4}, {"d", 3}};
    EXPECT_EQ(raw_entries(positional), slotwise);

    const Frab merged = frab::merge_counts(x, y);
    EXPECT_FALSE(frab::equals(positional, merged));
    EXPECT_EQ(frab::coefficient_of(merged, "c").value(), 1.0);
    EXPECT_EQ(frab::coefficient_of(positional, "c").value(), 4.0);
    EXPECT_EQ(frab::coefficient_of(merged, "e").value(), 1.0);
    EXPECT_EQ(frab::coefficient_of(positional, "e").value(), 0.0);
}

TEST(Reconstruct, ExpandsCountsIntoASortedStream) {
    const Frab counts = build({{"a", 3}, {"b", 1}, {"c", 1}, {"d", 2}});
    EXPECT_EQ(names_of(frab::reconstruct(counts)),
              (std::vector<std::string>{"a", "a", "a", "b", "c", "d", "d"}));
}

TEST(Reconstruct, EmptyTableGivesEmptyStream) {
    EXPECT_TRUE(frab::reconstruct(Frab{}).empty());
}

TEST(Reconstruct, NegativeEntriesAreRejected) {
    EXPECT_THROW(frab::reconstruct(build({{"a", -1}})), frab::NegativeCount);
    EXPECT_THROW(frab::reconstruct(build({{"a", 2}, {"b", -3}})), frab::NegativeCount);
}

TEST(Reconstruct, NonIntegralEntriesAreRejected) {
    EXPECT_THROW(frab::reconstruct(build({{"a", 1.5}})), frab::NonIntegralCount);
    EXPECT_THROW(frab::reconstruct(build({{"a", 2}, {"b", 0.25}})), frab::NonIntegralCount);
    // Negative and non-integral at once reads as a non-integral entry.
    EXPECT_THROW(frab::reconstruct(build({{"a", -1.5}})), frab::NonIntegralCount);
}

TEST(Reconstruct, NearIntegersWithinToleranceRound) {
    const Frab counts = build({{"a", 3.0 + 4e-10}, {"b", 2.0 - 4e-10}});
    EXPECT_EQ(names_of(frab::reconstruct(counts)),
              (std::vector<std::string>{"a", "a", "a", "b", "b"}));
    // A residual that rounds to zero contributes no tokens, even when it is
    // slightly negative.
    EXPECT_TRUE(frab::reconstruct(build({{"a", 4e-10}})).empty());
    EXPECT_TRUE(frab::reconstruct(build({{"a", -4e-10}})).empty());
}

TEST(Reconstruct, JustOutsideToleranceIsRejected) {
    EXPECT_THROW(frab::reconstruct(build({{"a", 3.0 + 2e-9}})), frab::NonIntegralCount);
}

TEST(Reconstruct, RoundTripsThroughTabulate) {
    testutil::Rng rng(444);
    for (int trial = 0; trial < 200; ++trial) {
        const Frab counts = testutil::random_count_frab(rng);
        const TokenStream tokens = frab::reconstruct(counts);
        ASSERT_TRUE(frab::equals(frab::tabulate(tokens), counts));

        double total = 0.0;
        for (const auto& [symbol, value] : counts.entries()) {
            total += value;
        }
        ASSERT_EQ(static_cast<double>(tokens.size()), total);
        ASSERT_TRUE(std::is_sorted(tokens.begin(), tokens.end()));
    }
}
