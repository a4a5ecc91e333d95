#include "icg/combinatorics.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace icg;

namespace {

using V = std::vector<int>;

const V kS44{1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1};

ProblemInstance inst(int s, int r, std::uint64_t p = 3) { return ProblemInstance(Prime(p), s, r); }

// Filter membership straight from the definitions.
bool naive_member(const V& d, StructureFilter f) {
    const int s = 1 + std::accumulate(d.begin(), d.end(), 0);
    const int n = static_cast<int>(d.size());
    const int lo = *std::min_element(d.begin(), d.end());
    const int hi = *std::max_element(d.begin(), d.end());
    if (f == StructureFilter::All) return true;
    if (hi - lo > 1) return false;
    if (f == StructureFilter::Biv) return true;
    const int fq = (s - 1) / n;
    if (d.front() != fq || d.back() != fq) return false;
    if (f == StructureFilter::BivStar) return true;
    const int g = (s - 1) % n;
    const int rare = 2 * g >= n ? fq : fq + 1;
    for (int i = 0; i + 1 < n; ++i)
        if (d[i] == rare && d[i + 1] == rare) return false;
    return true;
}

} // namespace

TEST(Delta, Examples) {
    EXPECT_EQ(delta(ExponentTuple({0, 1, 3, 6}), 7).values(), (V{1, 2, 3}));
    EXPECT_EQ(delta(ExponentTuple({0, 1, 2}), 3).values(), (V{1, 1}));
    const auto a = oracle::prefix_sums_from_zero(kS44);
    EXPECT_EQ(a.size(), 35u);
    EXPECT_EQ((V(a.begin(), a.begin() + 10)), (V{0, 1, 2, 3, 5, 6, 7, 9, 10, 11}));
    EXPECT_EQ(delta(ExponentTuple(a), 44).values(), kS44);
    EXPECT_THROW(delta(ExponentTuple({0, 1, 3}), 5), validation_error);
}

TEST(DeltaInv, Examples) {
    EXPECT_EQ(delta_inv(DeltaVector({1, 2, 3})), ExponentTuple({0, 1, 3, 6}));
    EXPECT_EQ(delta_inv(DeltaVector({3, 2, 3, 2, 2, 3, 2, 3, 2, 3})),
              ExponentTuple({0, 3, 5, 8, 10, 12, 15, 17, 20, 22, 25}));
    EXPECT_EQ(delta_inv(DeltaVector({2, 2, 2})), ExponentTuple({0, 2, 4, 6}));
    EXPECT_THROW(DeltaVector({1, 0}), validation_error);
    EXPECT_THROW(DeltaVector(V{}), validation_error);
}

TEST(Delta, BijectionExhaustiveUpToS12) {
    std::size_t checked = 0;
    for (int s = 2; s <= 12; ++s) {
        for (int r = 2; r <= s; ++r) {
            for (const auto& a : oracle::admissible_tuples(s, r)) {
                const ExponentTuple t(a);
                const DeltaVector d = delta(t, s);
                ASSERT_EQ(d.s(), s);
                ASSERT_EQ(d.r(), r);
                ASSERT_EQ(delta_inv(d), t);
                ASSERT_EQ(delta(delta_inv(d), s), d);
                ++checked;
            }
        }
    }
    EXPECT_GE(checked, 1000u);
}

TEST(Enumerate, SmallListAndCounts) {
    const auto all = enumerate_delta(inst(5, 3), StructureFilter::All);
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0].values(), (V{1, 3}));
    EXPECT_EQ(all[1].values(), (V{2, 2}));
    EXPECT_EQ(all[2].values(), (V{3, 1}));
    EXPECT_EQ(count_delta(inst(22, 17), StructureFilter::All), 15504u);
    EXPECT_EQ(count_delta(inst(44, 35), StructureFilter::Biv), 52451256u);
    EXPECT_EQ(binomial(34, 9), 52451256);
}

TEST(Enumerate, MatchesIndependentCompositions) {
    for (int s = 2; s <= 12; ++s) {
        for (int r = 2; r <= s; ++r) {
            std::vector<V> got;
            for (const auto& d : enumerate_delta(inst(s, r), StructureFilter::All)) got.push_back(d.values());
            ASSERT_EQ(got, oracle::compositions(s, r)) << s << ' ' << r;
        }
    }
}

TEST(Enumerate, CountsMatchBinomialUpToS16) {
    for (int s = 2; s <= 16; ++s)
        for (int r = 2; r <= s; ++r)
            ASSERT_EQ(BigInt(count_delta(inst(s, r), StructureFilter::All)),
                      binomial(static_cast<unsigned>(s - 2), static_cast<unsigned>(r - 2)));
}

TEST(Enumerate, FiltersMatchDefinitionsNestAndCloseUnderReversal) {
    for (int s = 3; s <= 16; ++s) {
        for (int r = 2; r <= s; ++r) {
            const auto all = enumerate_delta(inst(s, r), StructureFilter::All);
            std::set<V> previous;
            for (auto f : {StructureFilter::All, StructureFilter::Biv, StructureFilter::BivStar, StructureFilter::SepStar}) {
                std::set<V> expected;
                for (const auto& d : all)
                    if (naive_member(d.values(), f)) expected.insert(d.values());
                std::set<V> got;
                for (const auto& d : enumerate_delta(inst(s, r), f)) {
                    got.insert(d.values());
                    ASSERT_TRUE(membership(d, f));
                }
                ASSERT_EQ(got, expected) << s << ' ' << r << ' ' << to_string(f);
                for (const auto& v : got) ASSERT_TRUE(got.contains(V(v.rbegin(), v.rend())));
                if (f != StructureFilter::All) {
                    ASSERT_TRUE(std::includes(previous.begin(), previous.end(), got.begin(), got.end()));
                }
                previous = std::move(got);
            }
        }
    }
}

TEST(Enumerate, EntryBoundsHold) {
    for (int s = 3; s <= 14; ++s) {
        for (int r = 2; r <= s; ++r) {
            const Rational q(s - 1, r - 1);
            for_each_delta(inst(s, r), StructureFilter::All, [&](std::span<const int> d) {
                const int lo = *std::min_element(d.begin(), d.end());
                const int hi = *std::max_element(d.begin(), d.end());
                ASSERT_GE(lo, 1);
                ASSERT_LE(Rational(lo), q);
                ASSERT_GE(Rational(hi), q);
                ASSERT_LE(hi, s - r + 1);
            });
        }
    }
}

TEST(SplitPrefixes, PartitionTheStream) {
    const auto plan = make_walk_plan(inst(14, 7), StructureFilter::All);
    for (int depth = 0; depth <= plan.length; ++depth) {
        std::vector<V> joined;
        for (const auto& prefix : split_prefixes(plan, depth)) {
            struct Collect {
                std::vector<V>& out;
                void step(int, int) {}
                void leaf(std::span<const int> v) { out.emplace_back(v.begin(), v.end()); }
            } collect{joined};
            walk_deltas(plan, prefix, collect);
        }
        EXPECT_EQ(joined, oracle::compositions(14, 7)) << "depth " << depth;
    }
}

TEST(Predicates, RangeBivalenceFraming) {
    EXPECT_EQ(range_of(V{1, 1, 1}), 0);
    EXPECT_TRUE(is_bivalent(V{1, 1, 1}));
    EXPECT_EQ(range_of(V{1, 2, 1, 2}), 1);
    EXPECT_TRUE(is_bivalent(V{1, 2, 1, 2}));
    const V a2{1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 6};
    EXPECT_EQ(range_of(a2), 5);
    EXPECT_FALSE(is_bivalent(a2));
    EXPECT_TRUE(is_framed(V{1, 2, 1}, 1));
    EXPECT_FALSE(is_framed(V{2, 1, 1}));
    EXPECT_FALSE(is_framed(V{1, 2, 1}, 2));
    EXPECT_TRUE(is_framed(V{1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}, 1));
}

TEST(Predicates, Separability) {
    EXPECT_TRUE(is_separable(V{1, 2, 1, 2, 1}));
    EXPECT_TRUE(is_separable(V{1, 1, 2, 1, 1}));
    EXPECT_FALSE(is_separable(V{1, 1, 2, 2, 1}));
    EXPECT_THROW(is_separable(V{1, 1, 1}), validation_error);
    EXPECT_THROW(is_separable(V{1, 3, 1}), validation_error);
}

TEST(Membership, ExampleVectors) {
    const DeltaVector a4({1, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
    EXPECT_TRUE(membership(a4, StructureFilter::BivStar));
    EXPECT_FALSE(membership(a4, StructureFilter::SepStar));
    EXPECT_TRUE(membership(DeltaVector({1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1}), StructureFilter::SepStar));
    EXPECT_FALSE(membership(DeltaVector({3, 2, 3, 2, 2, 3, 2, 3, 2, 3}), StructureFilter::BivStar));
    EXPECT_TRUE(membership(DeltaVector({3, 2, 3, 2, 2, 3, 2, 3, 2, 3}), StructureFilter::Biv));
}

TEST(RunLength, EncodesArbitraryVectors) {
    EXPECT_EQ(run_length(V{1, 2, 2, 1, 2, 1}),
              (std::vector<icg::Run>{{1, 1}, {2, 2}, {1, 1}, {2, 1}, {1, 1}}));
    EXPECT_EQ(run_length(V{5, 5, 3}), (std::vector<icg::Run>{{5, 2}, {3, 1}}));
    EXPECT_TRUE(run_length(V{}).empty());
}

TEST(BlockDecomposition, Examples) {
    const auto bd = block_decomposition(DeltaVector({1, 2, 2, 1, 2, 1}));
    EXPECT_EQ(bd.runs, (std::vector<icg::Run>{{1, 1}, {2, 2}, {1, 1}, {2, 1}, {1, 1}}));
    EXPECT_EQ(bd.w, 2);
    EXPECT_EQ(bd.prefix_sums, (V{1, 3, 4, 5, 6}));

    const auto a1 = block_decomposition(DeltaVector({1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 2, 1, 1, 2, 1, 1}));
    EXPECT_EQ(a1.theta_max, 1);
    EXPECT_EQ(a1.eta_max, 2);
    EXPECT_EQ(a1.eta_min, 1);
    EXPECT_EQ(a1.eta(), 1);

    const auto a6 = block_decomposition(DeltaVector({1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 1}));
    V floor_blocks;
    for (std::size_t i = 0; i < a6.runs.size(); i += 2) floor_blocks.push_back(a6.runs[i].length);
    EXPECT_EQ(floor_blocks, (V{1, 2, 2, 2, 2, 2}));
    EXPECT_EQ(a6.theta(), 0);

    EXPECT_THROW(block_decomposition(DeltaVector({2, 1, 1})), validation_error);
}

TEST(BlockDecomposition, SumsAndAverageBoundsOverBivStar) {
    for (int s = 4; s <= 16; ++s) {
        for (int r = 3; r < s; ++r) {
            const int g = (s - 1) % (r - 1);
            for (const auto& d : enumerate_delta(inst(s, r), StructureFilter::BivStar)) {
                const auto bd = block_decomposition(d);
                V rebuilt;
                for (const auto& run : bd.runs) rebuilt.insert(rebuilt.end(), static_cast<std::size_t>(run.length), run.value);
                ASSERT_EQ(rebuilt, d.values());
                ASSERT_EQ(bd.prefix_sums.back(), r - 1);
                int odd = 0, even = 0;
                for (std::size_t i = 0; i < bd.runs.size(); ++i) (i % 2 == 0 ? odd : even) += bd.runs[i].length;
                ASSERT_EQ(odd, r - g - 1);
                ASSERT_EQ(even, g);
                if (g == 0) continue;
                ASSERT_LE(1, bd.eta_min);
                ASSERT_LE(Rational(bd.eta_min), bd.q1);
                ASSERT_LE(bd.q1, Rational(bd.eta_max));
                ASSERT_TRUE(bd.q2.has_value());
                ASSERT_LE(1, *bd.theta_min);
                ASSERT_LE(Rational(*bd.theta_min), *bd.q2);
                ASSERT_LE(*bd.q2, Rational(*bd.theta_max));
            }
        }
    }
}

TEST(StructureParams, Examples) {
    const auto a = structure_params(inst(22, 17));
    EXPECT_EQ(a.g, 5);
    EXPECT_EQ(a.q1, Rational(11, 6));
    EXPECT_EQ(a.f, 5);
    EXPECT_EQ(a.floor_q, 1);
    EXPECT_EQ(a.ceil_q, 2);
    EXPECT_FALSE(a.floor_isolated);
    EXPECT_EQ(a.theorem_case, TheoremCase::RareCeilBlocks);

    const auto b = structure_params(inst(44, 35));
    EXPECT_EQ(b.g, 9);
    EXPECT_EQ(b.q1, Rational(25, 10));
    EXPECT_EQ(b.theorem_case, TheoremCase::RareCeilBlocks);

    const auto c = structure_params(inst(9, 3));
    EXPECT_EQ(c.g, 0);
    EXPECT_TRUE(c.q_integral);
    EXPECT_EQ(c.theorem_case, TheoremCase::EqualSpacing);
    EXPECT_EQ(structure_params(inst(4, 3)).theorem_case, TheoremCase::OneShortGap);
    EXPECT_THROW(structure_params(inst(4, 2)), validation_error);
}

TEST(StructureParams, ResiduesMatchModularArithmetic) {
    for (int s = 4; s <= 40; ++s) {
        for (int r = 3; r < s; ++r) {
            const auto sp = structure_params(inst(s, r));
            const int g = (s - 1) % (r - 1);
            ASSERT_EQ(sp.g, g);
            ASSERT_EQ(sp.q, Rational(s - 1, r - 1));
            ASSERT_EQ(sp.q1, Rational(r - g - 1, g + 1));
            if (r - g - 2 > 0) {
                ASSERT_EQ(*sp.q2, Rational(g, r - g - 2));
                ASSERT_EQ(sp.e, g % (r - g - 2));
            } else {
                ASSERT_FALSE(sp.q2.has_value());
            }
            ASSERT_EQ(sp.f, (r - g - 1) % (g + 1));
            const bool blocks = sp.theorem_case == TheoremCase::RareFloorBlocks ||
                                sp.theorem_case == TheoremCase::RareCeilBlocks;
            if (sp.theorem_case == TheoremCase::RareFloorBlocks) { ASSERT_NE(sp.e, 0); }
            if (sp.theorem_case == TheoremCase::RareCeilBlocks) { ASSERT_NE(sp.f, 0); }
            if (!blocks && g != 0 && s % (r - 1) != 0) { ASSERT_TRUE(sp.e == 0 || sp.f == 0); }
        }
    }
}

TEST(PredictedMinimizers, Routing) {
    const auto a = predicted_minimizers(inst(9, 3));
    ASSERT_TRUE(a.is_explicit());
    EXPECT_EQ(a.vectors, (std::vector<DeltaVector>{DeltaVector({4, 4})}));

    const auto b = predicted_minimizers(inst(4, 3));
    std::set<V> got;
    for (const auto& d : b.vectors) got.insert(d.values());
    EXPECT_EQ(got, (std::set<V>{{1, 2}, {2, 1}}));

    EXPECT_EQ(predicted_minimizers(inst(10, 4)).vectors, (std::vector<DeltaVector>{DeltaVector({3, 3, 3})}));

    const auto d = predicted_minimizers(inst(22, 17));
    ASSERT_FALSE(d.is_explicit());
    const DeltaVector a1({1, 1, 2, 1, 1, 2, 1, 1, 2, 1, 2, 1, 1, 2, 1, 1});
    EXPECT_TRUE(d.predicate->violations(a1).empty());
    EXPECT_EQ(d.predicate->long_count, 5);
    EXPECT_FALSE(d.predicate->violations(DeltaVector({1, 2, 1, 2, 1, 2, 1, 1, 1, 1, 1, 1, 2, 1, 2, 1})).empty());

    EXPECT_THROW(predicted_minimizers(inst(5, 3, 2)), validation_error);
    EXPECT_THROW(predicted_minimizers(inst(5, 5)), validation_error);
}

TEST(Filters, ParseAndPrint) {
    for (auto f : {StructureFilter::All, StructureFilter::Biv, StructureFilter::BivStar, StructureFilter::SepStar})
        EXPECT_EQ(parse_filter(to_string(f)), f);
    EXPECT_THROW(parse_filter("sep"), validation_error);
}
