#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrt/generators.hpp"
#include "rrt/limit_coloring.hpp"
#include "rrt/predicates.hpp"
#include "rrt/rainbow_ops.hpp"

using namespace rrt;

namespace {

// Injective triple coloring except f(0,1,s) = f(2,3,s) for every s >= 4.
Coloring planted_duplicate(std::size_t n) {
    std::vector<Color> table(binomial(n, 3));
    for (Code r = 0; r < table.size(); ++r) table[r] = r + 1000;
    for (Element s = 4; s < n; ++s) table[triple_code(2, 3, s)] = table[triple_code(0, 1, s)];
    return Coloring(3, 2, n, std::move(table));
}

} // namespace

TEST(TailSubset, SameLastKeepsEverything) {
    const auto f = random_bounded_coloring(3, 2, 12, 3, {.same_last = true});
    EXPECT_EQ(extract_1tail_subset(f), oracle::range(12));
}

TEST(TailSubset, ChargingBound) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto f = random_bounded_coloring(3, 2, 40, seed);
        const auto xs = extract_1tail_subset(f);
        ASSERT_TRUE(is_k_tail_rainbow(xs, f, 1));
        // each kept triple has at most one partner, so it rules out at most one x
        const std::uint64_t m = xs.size();
        ASSERT_GE(m + binomial(m, 3), 40u) << seed;
    }
}

TEST(TailSubset, AgainstExhaustiveMaximum) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const auto f = random_bounded_coloring(3, 2, 12, seed);
        const auto xs = extract_1tail_subset(f);
        ASSERT_TRUE(oracle::is_tail_rainbow(xs, f, 1));
        EXPECT_LE(xs.size(), oracle::max_tail_rainbow_size(f, 1));
    }
}

TEST(FBarTest, MatchesDefinition) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = random_bounded_coloring(3, 2, 11, seed, {.same_last = true});
        const FBar fb(f);
        for (const auto& t : oracle::subsets(oracle::range(11), 3)) {
            const auto [u, v] = oracle::fbar(f, t[0], t[1], t[2]);
            ASSERT_EQ(fb(t[0], t[1], t[2]), pair_code(u, v));
            ASSERT_LE(fb(t[0], t[1], t[2]), pair_code(t[0], t[1]));
        }
    }
}

TEST(FBarTest, InjectiveSlicesPointAtThemselves) {
    const FBar fb(oracle::injective(3, 8));
    for (const auto& t : oracle::subsets(oracle::range(8), 3)) EXPECT_EQ(fb(t[0], t[1], t[2]), pair_code(t[0], t[1]));
}

TEST(FBarTest, NeedsTailDomain) {
    Coloring f(3, 2, 4, {1, 1, 2, 3});  // (0,1,2) and (0,1,3) share a color
    EXPECT_THROW(FBar{f}, PreconditionError);
}

TEST(RFamily, PartitionOfTheTail) {
    const auto f = random_bounded_coloring(3, 2, 14, 2, {.same_last = true});
    const FBar fb(f);
    for (Element y = 1; y < 14; ++y)
        for (Element x = 0; x < y; ++x) {
            std::vector<Element> all;
            for (const auto& r : r_partition(fb, x, y)) {
                EXPECT_EQ(r.xy, pair_code(x, y));
                EXPECT_FALSE(r.members.empty());
                EXPECT_EQ(r.members, r_set(fb, r.uv, x, y));
                all.insert(all.end(), r.members.begin(), r.members.end());
            }
            std::sort(all.begin(), all.end());
            std::vector<Element> want;
            for (Element s = y + 1; s < 14; ++s) want.push_back(s);
            EXPECT_EQ(all, want);
        }
}

TEST(RFamily, WindowOrdering) {
    const FBar fb(random_bounded_coloring(3, 2, 12, 5, {.same_last = true}));
    const auto fam = r_family_window(fb, 4);
    for (std::size_t i = 1; i < fam.size(); ++i) {
        ASSERT_TRUE(std::make_pair(fam[i - 1].xy, fam[i - 1].uv) < std::make_pair(fam[i].xy, fam[i].uv));
    }
    for (const auto& r : fam) EXPECT_LT(decode_pair(r.xy).second, 4u);
}

TEST(Thinning, EmptyFamily) {
    const auto d = oracle::range(7);
    EXPECT_EQ(cohesive_thin({}, d), d);
    EXPECT_THROW(cohesive_thin({}, {}), PreconditionError);
}

TEST(Thinning, SingleBisection) {
    const std::vector<std::vector<Element>> lower{{0, 1, 2, 3, 4}};
    EXPECT_EQ(cohesive_thin(lower, oracle::range(11)), (std::vector<Element>{5, 6, 7, 8, 9, 10}));
    // equal halves keep the intersection
    EXPECT_EQ(cohesive_thin(lower, oracle::range(10)), lower[0]);
}

TEST(Thinning, StableWindowPairsBecomeConstant) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto st = make_stable_triple_coloring(40, 6, seed);
        const FBar fb(st.base);
        std::vector<std::vector<Element>> sets;
        for (const auto& r : r_family_window(fb, 6)) sets.push_back(r.members);
        const auto c = cohesive_thin(sets, oracle::range(40));
        for (Element y = 1; y < 6; ++y)
            for (Element x = 0; x < y; ++x) {
                std::optional<Code> seen;
                for (Element s : c) {
                    if (s <= y) continue;
                    if (seen) {
                        ASSERT_EQ(*seen, fb(x, y, s)) << seed;
                    }
                    seen = fb(x, y, s);
                }
            }
    }
}

TEST(LimitColoringTest, InjectiveIsIdentity) {
    const auto f = oracle::injective(3, 9);
    const auto lim = f_hat(f, oracle::range(9), 0);
    for (Element j = 1; j < 9; ++j)
        for (Element i = 0; i < j; ++i) EXPECT_EQ(lim.coloring(i, j), pair_code(i, j));
    EXPECT_EQ(lim.coloring.max_class_size(), 1u);
}

TEST(LimitColoringTest, PlantedDuplicate) {
    const auto f = planted_duplicate(12);
    const auto lim = f_hat(f, oracle::range(12), 3);
    EXPECT_EQ(lim.coloring(2, 3), pair_code(0, 1));
    EXPECT_EQ(lim.coloring(0, 1), pair_code(0, 1));
    EXPECT_TRUE(lim.two_bounded);
    // Relabelled support: C = {0,1,2,3,5,...} keeps the same limit values.
    std::vector<Element> c{0, 1, 2, 3, 5, 7, 9, 11};
    const auto sub = f_hat(f, c, 3);
    EXPECT_EQ(sub.coloring(2, 3), pair_code(0, 1));
}

TEST(LimitColoringTest, StableInstancesAreTwoBounded) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto st = make_stable_triple_coloring(30, 5, seed);
        const auto lim = f_hat(st.base, oracle::range(30), 5);
        ASSERT_TRUE(lim.two_bounded) << seed;
        ASSERT_LE(oracle::max_class_size(lim.coloring), 2u);
    }
}

TEST(LimitColoringTest, UnstableInputIsReportedWithWitness) {
    bool thrown = false;
    for (std::uint64_t seed = 0; seed < 20 && !thrown; ++seed) {
        const auto f = random_bounded_coloring(3, 2, 12, seed, {.same_last = true});
        try {
            (void)f_hat(f, oracle::range(12), 0);
        } catch (const PreconditionError& e) {
            thrown = true;
            const auto& w = e.witness().tuples;
            ASSERT_EQ(w.size(), 2u);
            EXPECT_NE(oracle::fbar(f, w[0][0], w[0][1], w[0][2]), oracle::fbar(f, w[1][0], w[1][1], w[1][2]));
        }
    }
    EXPECT_TRUE(thrown);
}

TEST(Lift, InjectiveKeepsAllOfG) {
    const auto f = oracle::injective(3, 10);
    const std::vector<Element> g{1, 3, 4, 8};
    const auto trace = lift_rainbow(f, oracle::range(10), g, 0);
    EXPECT_EQ(trace.rainbow, g);
    EXPECT_EQ(trace.skips_beyond_threshold(), 0u);
    for (const auto& s : trace.steps) EXPECT_EQ(s.skipped, 0u);
}

TEST(Lift, Preconditions) {
    const auto f = planted_duplicate(12);
    const std::vector<Element> c{0, 1, 2, 3, 6, 8};
    EXPECT_THROW(lift_rainbow(f, c, std::vector<Element>{0, 5}, 3), PreconditionError);
    // {0,1,2,3} is not a rainbow for the limit coloring
    EXPECT_THROW(lift_rainbow(f, c, std::vector<Element>{0, 1, 2, 3}, 3), PreconditionError);
    const auto t = lift_rainbow(f, c, std::vector<Element>{0, 1, 3, 6, 8}, 3);
    EXPECT_TRUE(oracle::is_rainbow(t.rainbow, f));
}

TEST(Lift, TraceRecordsThresholds) {
    const auto st = make_stable_triple_coloring(40, 6, 2);
    const auto all = oracle::range(40);
    const auto lim = f_hat(st.base, all, 6);
    std::vector<Element> g;
    for (Element i : greedy_rainbow(lim.coloring, false)) g.push_back(all[i]);
    const auto trace = lift_rainbow(st.base, all, g, 6);
    EXPECT_TRUE(trace.prefixes_rainbow);
    EXPECT_TRUE(oracle::is_rainbow(trace.rainbow, st.base));
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (i < 2) {
            EXPECT_FALSE(s.threshold);
        } else {
            ASSERT_TRUE(s.threshold);
            EXPECT_EQ(*s.threshold, std::max<Element>(trace.rainbow[i - 1], 6));
        }
        EXPECT_EQ(s.skipped, s.skipped_candidates.size());
    }
}
