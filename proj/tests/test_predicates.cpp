#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrt/generators.hpp"
#include "rrt/predicates.hpp"

using namespace rrt;

namespace {

// f(0,2) = f(1,2), injective elsewhere.
Coloring one_collision() { return oracle::pairs_with_classes(3, {{{0, 2}, {1, 2}}}, 2); }

std::vector<Element> random_subset(Rng& rng, std::size_t n, std::size_t size) {
    auto xs = oracle::range(n);
    rng.shuffle(xs.begin(), xs.end());
    xs.resize(size);
    std::sort(xs.begin(), xs.end());
    return xs;
}

} // namespace

TEST(Rainbow, SmallSetsAreVacuous) {
    const auto f = random_bounded_coloring(3, 2, 6, 1);
    EXPECT_TRUE(is_rainbow(std::vector<Element>{0, 4}, f));
    EXPECT_TRUE(is_rainbow(std::vector<Element>{}, f));
}

TEST(Rainbow, InjectiveWholeDomain) {
    EXPECT_TRUE(is_rainbow(oracle::range(9), oracle::injective(3, 9)));
}

TEST(Rainbow, SingleCollision) {
    const auto f = one_collision();
    const std::vector<Element> all{0, 1, 2};
    EXPECT_FALSE(is_rainbow(all, f));
    EXPECT_TRUE(is_k_tail_rainbow(all, f, 1));
    const auto c = find_collision(all, f, 2);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->first, (std::vector<Element>{0, 2}));
    EXPECT_EQ(c->second, (std::vector<Element>{1, 2}));
    EXPECT_FALSE(find_collision(all, f, 1));
}

TEST(Rainbow, MatchesPairwiseScan) {
    Rng rng(5);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t k = 2 + seed % 2;
        const auto f = random_bounded_coloring(k, 2, 8, seed);
        const auto xs = random_subset(rng, 8, 5);
        ASSERT_EQ(is_rainbow(xs, f), oracle::is_rainbow(xs, f)) << seed;
        for (std::size_t w = 1; w <= k; ++w) {
            ASSERT_EQ(is_k_tail_rainbow(xs, f, w), oracle::is_tail_rainbow(xs, f, w)) << seed << " w=" << w;
        }
    }
}

TEST(Rainbow, TailWidthDefaults) {
    const auto f = one_collision();
    EXPECT_EQ(default_tail_width(f), 1u);
    EXPECT_TRUE(is_tail_rainbow(std::vector<Element>{0, 1, 2}, f));
    EXPECT_THROW(is_k_tail_rainbow(std::vector<Element>{0, 1}, f, 0), PreconditionError);
    EXPECT_THROW(is_k_tail_rainbow(std::vector<Element>{0, 1}, f, 3), PreconditionError);
}

TEST(Rainbow, RejectsBadSets) {
    const auto f = one_collision();
    EXPECT_THROW(is_rainbow(std::vector<Element>{1, 0}, f), PreconditionError);
    EXPECT_THROW(is_rainbow(std::vector<Element>{0, 3}, f), PreconditionError);
}

TEST(Rainbow, TailDomainViolation) {
    EXPECT_FALSE(find_tail_domain_violation(one_collision()));
    const auto g = oracle::pairs_with_classes(4, {{{0, 1}, {2, 3}}}, 2);
    const auto c = find_tail_domain_violation(g);
    ASSERT_TRUE(c);
    EXPECT_NE(c->first.back(), c->second.back());
    EXPECT_EQ(g.color(c->first), g.color(c->second));
}
