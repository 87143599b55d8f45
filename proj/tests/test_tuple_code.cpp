#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrt/tuple_code.hpp"

using namespace rrt;

TEST(TupleCode, SmallPairs) {
    EXPECT_EQ(encode_tuple(std::vector<Element>{0, 1}).rank, 0u);
    EXPECT_EQ(encode_tuple(std::vector<Element>{1, 2}).rank, 2u);
    EXPECT_EQ(encode_tuple(std::vector<Element>{0, 3}).rank, 3u);
}

TEST(TupleCode, MatchesColexEnumeration) {
    for (std::size_t k = 1; k <= 4; ++k) {
        auto all = oracle::subsets(oracle::range(9), k);
        std::sort(all.begin(), all.end(), oracle::colex_less);
        for (std::size_t i = 0; i < all.size(); ++i) {
            const auto code = encode_tuple(all[i]);
            ASSERT_EQ(code.arity, k);
            ASSERT_EQ(code.rank, i) << "k=" << k;
            ASSERT_EQ(decode_tuple(k, i), all[i]);
        }
    }
}

TEST(TupleCode, FastPathsAgree) {
    for (Element z = 2; z < 20; ++z)
        for (Element y = 1; y < z; ++y)
            for (Element x = 0; x < y; ++x) {
                ASSERT_EQ(pair_code(x, y), encode_tuple(std::vector<Element>{x, y}).rank);
                ASSERT_EQ(triple_code(x, y, z), encode_tuple(std::vector<Element>{x, y, z}).rank);
                ASSERT_EQ(decode_pair(pair_code(x, y)), std::make_pair(x, y));
            }
}

TEST(TupleCode, LargeRoundTrip) {
    std::vector<Element> t{5, 1000, 7000, 90000};
    const auto code = encode_tuple(t);
    EXPECT_EQ(decode_tuple(4, code.rank), t);
    EXPECT_THROW(encode_tuple(std::vector<Element>{5, 1000, 70000, 4000000}), PreconditionError);
}

TEST(TupleCode, OrderWithinArity) {
    const auto a = encode_tuple(std::vector<Element>{0, 5});
    const auto b = encode_tuple(std::vector<Element>{1, 5});
    EXPECT_TRUE(a.precedes(b));
    EXPECT_FALSE(b.precedes(a));
    const auto c = encode_tuple(std::vector<Element>{0, 1, 2});
    EXPECT_THROW((void)a.precedes(c), PreconditionError);
}

TEST(TupleCode, RejectsNonIncreasing) {
    EXPECT_THROW(encode_tuple(std::vector<Element>{2, 2}), PreconditionError);
    EXPECT_THROW(encode_tuple(std::vector<Element>{3, 1}), PreconditionError);
    EXPECT_THROW((IncreasingTuple{1, 0}), PreconditionError);
}

TEST(TupleCode, Binomial) {
    EXPECT_EQ(binomial(5, 2), 10u);
    EXPECT_EQ(binomial(2, 5), 0u);
    EXPECT_EQ(binomial(60, 30), 118264581564861424ull);
    EXPECT_THROW(binomial(200, 100), PreconditionError);
}

TEST(IncreasingTupleTest, Extend) {
    IncreasingTuple t{1, 4};
    EXPECT_EQ(t.extended(7).vec(), (std::vector<Element>{1, 4, 7}));
    EXPECT_THROW(t.extended(4), PreconditionError);
    std::vector<Element> tail{5, 6};
    EXPECT_EQ(t.concatenated(tail).size(), 4u);
}
