#include <gtest/gtest.h>

#include <numeric>

#include "brc/channel.hpp"
#include "brc/decoder.hpp"
#include "brc/encoder.hpp"
#include "brc/error.hpp"
#include "generators.hpp"

namespace brc {
namespace {

using testing::flagship;
using testing::Rng;

FragmentMultiset ms(std::initializer_list<const char*> items) {
    FragmentMultiset out;
    for (auto s : items) out.emplace_back(s);
    return canonical(out);
}

std::size_t total_length(const FragmentMultiset& f) {
    return std::accumulate(f.begin(), f.end(), std::size_t{0}, [](std::size_t a, const BitString& b) {
        return a + b.size();
    });
}

const BitString kExample("0100011100");

TEST(Adversary, ExampleOne) {
    const AdversaryAction a{{1, 5, 9}, {0, 3}, 7};
    EXPECT_EQ(canonical(apply_adversary(kExample, a, {3, 3})), ms({"1000", "1110"}));
}

TEST(Adversary, EmptyActionIsIdentity) {
    EXPECT_EQ(apply_adversary(kExample, {}, {0, 0}), FragmentMultiset{kExample});
}

TEST(Adversary, BudgetErrorsNameTheBudget) {
    try {
        apply_adversary(kExample, {{2, 7}, {1}, 0}, {3, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
        EXPECT_NE(std::string(e.what()).find("s budget"), std::string::npos);
    }
    try {
        apply_adversary(kExample, {{1, 2, 3, 4}, {}, 0}, {3, 3});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Budget);
        EXPECT_NE(std::string(e.what()).find("t budget"), std::string::npos);
    }
}

TEST(Adversary, MalformedActionsAreParameterErrors) {
    for (const AdversaryAction& a : {AdversaryAction{{0}, {}, 0}, AdversaryAction{{10}, {}, 0},
                                     AdversaryAction{{3, 3}, {}, 0}, AdversaryAction{{3}, {2}, 0},
                                     AdversaryAction{{3}, {0, 0}, 0}}) {
        try {
            apply_adversary(kExample, a, {4, 4});
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::Parameter);
        }
    }
}

TEST(Adversary, OrderDependsOnlyOnSeed) {
    const AdversaryAction a{{2, 4, 6, 8}, {}, 5};
    const auto first = apply_adversary(kExample, a, {4, 0});
    EXPECT_EQ(first, apply_adversary(kExample, a, {4, 0}));
    bool reordered = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto other = apply_adversary(kExample, {a.breaks, {}, seed}, {4, 0});
        EXPECT_EQ(canonical(other), canonical(first));
        reordered |= other != first;
    }
    EXPECT_TRUE(reordered);
}

TEST(Adversary, ConservationAndFragmentCount) {
    Rng rng(31);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 1 + testing::below(rng, 40);
        const Budget budget{testing::below(rng, 6), testing::below(rng, 10)};
        const BitString x = testing::random_bits(rng, n);
        const auto a = testing::random_legal_action(rng, n, budget);
        const auto f = apply_adversary(x, a, budget);
        std::size_t omitted = n - total_length(f);
        EXPECT_LE(omitted, budget.s);
        EXPECT_LE(f.size(), budget.t + 1);
        for (const auto& piece : f) EXPECT_NE(x.find(piece), std::string::npos);
        EXPECT_TRUE(is_producible(f, x, budget));
    }
}

TEST(Knockout, SingleBit) {
    const auto a = knockout_action(20, std::vector<Knockout>{{7, 1}});
    EXPECT_EQ(a.breaks, (std::vector<std::size_t>{7, 8}));
    EXPECT_EQ(a.omitted, (std::vector<std::size_t>{1}));
}

TEST(Knockout, EdgesNeedOneCutAndOverlapsMerge) {
    const auto prefix = knockout_action(20, std::vector<Knockout>{{0, 3}});
    EXPECT_EQ(prefix.breaks, (std::vector<std::size_t>{3}));
    EXPECT_EQ(prefix.omitted, (std::vector<std::size_t>{0}));
    const auto merged = knockout_action(20, std::vector<Knockout>{{4, 3}, {6, 3}, {9, 1}});
    EXPECT_EQ(merged.breaks, (std::vector<std::size_t>{4, 10}));
    EXPECT_EQ(merged.omitted, (std::vector<std::size_t>{1}));
    const std::vector<std::size_t> extra{2, 5};
    const auto split = knockout_action(20, std::vector<Knockout>{{4, 3}}, extra);
    EXPECT_EQ(split.breaks, (std::vector<std::size_t>{2, 4, 5, 7}));
    EXPECT_EQ(split.omitted, (std::vector<std::size_t>{2, 3}));
}

TEST(Strategy, NamesRoundTrip) {
    for (auto k : all_strategies()) EXPECT_EQ(parse_strategy(to_string(k)), k);
    EXPECT_FALSE(parse_strategy("nope").has_value());
}

TEST(Strategy, RandomWithoutBudgetIsEmpty) {
    const auto p = CodeParams::create(64, 15, 0, 0);
    const auto c = encode(sample_valid(p, 0).z, p);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto a = strategy(StrategyKind::Random, c, p, seed);
        EXPECT_TRUE(a.breaks.empty());
        EXPECT_TRUE(a.omitted.empty());
    }
}

TEST(Strategy, KnockoutPositionsTargetsOneBit) {
    const auto& p = flagship();
    const auto c = encode(sample_valid(p, 0).z, p);
    const std::vector<std::size_t> target{30};
    const auto a = strategy(StrategyKind::KnockoutPositions, c, p, 1, target);
    EXPECT_EQ(a.breaks, (std::vector<std::size_t>{30, 31}));
    EXPECT_EQ(a.omitted, (std::vector<std::size_t>{1}));
}

TEST(Strategy, EveryKindStaysWithinBudget) {
    for (auto budget : {Budget{2, 4}, Budget{1, 0}, Budget{3, 1}, Budget{4, 20}, Budget{0, 5}}) {
        const auto p = CodeParams::create(64, 15, budget.t, budget.s);
        const auto c = encode(sample_valid(p, 3).z, p);
        for (auto kind : all_strategies()) {
            for (std::uint64_t seed = 0; seed < 40; ++seed) {
                const auto a = strategy(kind, c, p, seed);
                EXPECT_NO_THROW(apply_adversary(c, a, p.budget())) << to_string(kind);
            }
        }
    }
}

TEST(Strategy, ChecksumTargetDestroysAtMostTwoSlots) {
    const auto& p = flagship();
    const auto c = encode(sample_valid(p, 9).z, p);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto a = strategy(StrategyKind::ChecksumTarget, c, p, seed);
        ASSERT_EQ(a.breaks.size(), 2U);
        const std::size_t begin = a.breaks[0], end = a.breaks[1];
        EXPECT_LE(end - begin, 4U);
        bool inside = false;
        for (std::size_t j = 1; j <= p.L(); ++j)
            inside |= p.checksum_offset(j) <= begin && end <= p.checksum_offset(j) + p.M();
        EXPECT_TRUE(inside);
        const auto f = apply_adversary(c, a, p.budget());
        const auto obs = extract_checksums(classify_fragments(f, p), p);
        EXPECT_GE(obs.filled().size() + 2, p.L());
    }
}

TEST(Strategy, MarkerTargetHitsMarkers) {
    const auto& p = flagship();
    const auto c = encode(sample_valid(p, 9).z, p);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto a = strategy(StrategyKind::MarkerTarget, c, p, seed);
        const auto f = apply_adversary(c, a, p.budget());
        std::size_t seen = 0;
        for (const auto& piece : f) seen += scan_markers(piece, p.book()).size();
        EXPECT_LT(seen, p.L() + 1);
    }
}

TEST(Strategy, BoundaryTargetRemovesMZero) {
    const auto p = CodeParams::create(64, 15, 2, 20);
    const auto c = encode(sample_valid(p, 9).z, p);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto a = strategy(StrategyKind::BoundaryTarget, c, p, seed);
        const auto f = apply_adversary(c, a, p.budget());
        for (const auto& piece : f) EXPECT_EQ(piece.find(p.book()[0].bits), std::string::npos);
    }
}

TEST(Strategy, LongOmitUsesTheWholeBudget) {
    const auto& p = flagship();
    const auto c = encode(sample_valid(p, 9).z, p);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto f = apply_adversary(c, strategy(StrategyKind::LongOmit, c, p, seed), p.budget());
        EXPECT_EQ(total_length(f), p.n() - p.s());
    }
}

TEST(Enumerate, NoBudgetGivesOnlyTheString) {
    const auto all = enumerate_multisets(kExample, {0, 0});
    ASSERT_EQ(all.size(), 1U);
    EXPECT_EQ(*all.begin(), FragmentMultiset{kExample});
}

TEST(Enumerate, ExampleOneMultisets) {
    const auto all = enumerate_multisets(kExample, {3, 3});
    EXPECT_TRUE(all.contains(ms({"1000", "1110"})));
    EXPECT_TRUE(all.contains(ms({"00111", "00"})));
    EXPECT_TRUE(all.contains(ms({"01", "11100"})));
}

TEST(Enumerate, TwoBitExample) {
    EXPECT_TRUE(enumerate_multisets(BitString("00"), {1, 1}).contains(ms({"0"})));
}

TEST(Enumerate, GuardRefusesLargeInputs) {
    EXPECT_THROW(enumerate_multisets(BitString(std::string(15, '0')), {1, 1}), Error);
    EXPECT_THROW(enumerate_multisets(kExample, {5, 1}), Error);
    EXPECT_THROW(enumerate_multisets(kExample, {1, 5}), Error);
}

TEST(Enumerate, BudgetMonotone) {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const BitString x = testing::random_bits(rng, 1 + testing::below(rng, 9));
        const Budget small{testing::below(rng, 4), testing::below(rng, 4)};
        const Budget big{small.t + testing::below(rng, 5 - small.t), small.s + testing::below(rng, 5 - small.s)};
        const auto a = enumerate_multisets(x, small);
        const auto b = enumerate_multisets(x, big);
        for (const auto& f : a) ASSERT_TRUE(b.contains(f));
    }
}

TEST(Enumerate, AgreesWithProducibility) {
    // Every enumerated multiset is producible, and producibility of a random action's
    // result implies enumeration found it.
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        const BitString x = testing::random_bits(rng, 1 + testing::below(rng, 10));
        const Budget budget{testing::below(rng, 4), testing::below(rng, 4)};
        const auto all = enumerate_multisets(x, budget);
        for (const auto& f : all) ASSERT_TRUE(is_producible(f, x, budget));
        const auto f = canonical(apply_adversary(x, testing::random_legal_action(rng, x.size(), budget), budget));
        EXPECT_TRUE(all.contains(f));
    }
}

TEST(Producible, RejectsWhatNoLegalActionMakes) {
    EXPECT_TRUE(is_producible(ms({"1000", "1110"}), kExample, {3, 3}));
    EXPECT_FALSE(is_producible(ms({"1000", "1110"}), kExample, {2, 3}));
    EXPECT_FALSE(is_producible(ms({"1000", "1110"}), kExample, {3, 1}));
    EXPECT_FALSE(is_producible(ms({"1111"}), kExample, {4, 4}));
    EXPECT_FALSE(is_producible(ms({"0100011100", "0"}), kExample, {4, 4}));
    // Both pieces occur in 01010, but no two occurrences are disjoint.
    EXPECT_FALSE(is_producible(ms({"101", "01"}), BitString("01010"), {4, 4}));
    EXPECT_TRUE(is_producible(ms({"0", "0", "0"}), BitString("000"), {2, 0}));
    EXPECT_FALSE(is_producible(ms({"0", "0", "0", "0"}), BitString("000"), {4, 0}));
}

}  // namespace
}  // namespace brc
