#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rrt/coloring_io.hpp"
#include "rrt/generators.hpp"
#include "rrt/predicates.hpp"

using namespace rrt;

TEST(ColoringTest, ValidatesShape) {
    EXPECT_THROW(Coloring(0, 1, 3, {}), PreconditionError);
    EXPECT_THROW(Coloring(5, 1, 6, std::vector<Color>(6)), PreconditionError);
    EXPECT_THROW(Coloring(2, 0, 3, {1, 2, 3}), PreconditionError);
    EXPECT_THROW(Coloring(2, 1, 3, {1, 2}), PreconditionError);
    EXPECT_NO_THROW(Coloring(2, 1, 3, {1, 2, 3}));
}

TEST(ColoringTest, BoundViolationCarriesWitness) {
    try {
        Coloring(2, 2, 3, {4, 4, 4});
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.witness().tuples.size(), 3u);
    }
    EXPECT_FALSE(find_bound_violation(2, std::vector<Color>{4, 4, 5}, 2));
}

TEST(ColoringTest, LookupAgreesWithColexRank) {
    const auto f = random_bounded_coloring(3, 2, 8, 11);
    for (const auto& t : oracle::subsets(oracle::range(8), 3)) {
        ASSERT_EQ(f.color(t), f.at(oracle::colex_rank(t)));
        ASSERT_EQ(f.color(t), f(t[0], t[1], t[2]));
    }
    EXPECT_THROW(f.color(std::vector<Element>{0, 1}), PreconditionError);
    EXPECT_THROW(f.color(std::vector<Element>{0, 1, 8}), PreconditionError);
}

TEST(ColoringTest, InducedRelabels) {
    const auto f = random_bounded_coloring(2, 2, 9, 3);
    const std::vector<Element> sub{1, 4, 5, 8};
    const auto g = f.induced(sub);
    EXPECT_EQ(g.domain_size(), 4u);
    for (Element j = 1; j < 4; ++j)
        for (Element i = 0; i < j; ++i) EXPECT_EQ(g(i, j), f(sub[i], sub[j]));
}

TEST(Generators, BoundOneIsInjective) {
    const auto f = random_bounded_coloring(2, 1, 30, 5);
    EXPECT_EQ(oracle::max_class_size(f), 1u);
}

TEST(Generators, DeterministicInSeed) {
    EXPECT_EQ(random_bounded_coloring(3, 2, 12, 9), random_bounded_coloring(3, 2, 12, 9));
    EXPECT_NE(random_bounded_coloring(3, 2, 12, 9), random_bounded_coloring(3, 2, 12, 10));
}

TEST(Generators, BoundedForManySeeds) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const std::size_t b = 1 + seed % 3;
        const auto f = random_bounded_coloring(2 + seed % 2, b, 9, seed);
        ASSERT_LE(oracle::max_class_size(f), b) << seed;
    }
}

TEST(Generators, SameLastKeepsClassesInOneSlice) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto f = random_bounded_coloring(3, 2, 10, seed, {.same_last = true});
        EXPECT_FALSE(find_tail_domain_violation(f));
        EXPECT_TRUE(oracle::is_tail_rainbow(oracle::range(10), f, 1));
    }
}

TEST(Generators, RejectsBadParameters) {
    EXPECT_THROW(random_bounded_coloring(3, 2, 2, 0), PreconditionError);
    EXPECT_THROW(random_bounded_coloring(2, 0, 5, 0), PreconditionError);
    EXPECT_THROW(make_stable_triple_coloring(8, 8, 0), PreconditionError);
}

// fbar(x, y, .) must be constant on s above the recorded threshold.
void expect_stable(const StableTripleColoring& st) {
    const auto& f = st.base;
    const Element n = static_cast<Element>(f.domain_size());
    EXPECT_LE(oracle::max_class_size(f), 2u);
    EXPECT_FALSE(find_tail_domain_violation(f));
    for (Element y = 1; y < n; ++y)
        for (Element x = 0; x < y; ++x) {
            const Element t = st.threshold(x, y);
            std::optional<std::pair<Element, Element>> seen;
            for (Element s = t + 1; s < n; ++s) {
                const auto v = oracle::fbar(f, x, y, s);
                if (seen) {
                    ASSERT_EQ(*seen, v) << x << "," << y << " s=" << s;
                }
                seen = v;
            }
        }
}

TEST(Generators, StableTriplesWindowZero) {
    const auto st = make_stable_triple_coloring(14, 0, 4);
    for (Element y = 1; y < 14; ++y)
        for (Element x = 0; x < y; ++x) EXPECT_EQ(st.threshold(x, y), y);
    expect_stable(st);
}

TEST(Generators, StableTriplesThresholdsHold) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) expect_stable(make_stable_triple_coloring(16, 5, seed));
}

TEST(ColoringIo, RrcolRoundTrip) {
    const auto f = random_bounded_coloring(3, 2, 7, 1);
    const auto text = to_rrcol(f);
    EXPECT_EQ(text.rfind("RRCOL 1 k=3 b=2 n=7\n", 0), 0u);
    EXPECT_EQ(parse_coloring(text), f);
    EXPECT_EQ(parse_coloring(serialize(f, ColoringFormat::json)), f);
}

TEST(ColoringIo, LineCountMatchesBinomial) {
    const auto f = random_bounded_coloring(2, 2, 100, 7);
    const auto text = to_rrcol(f);
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 4950);
}

TEST(ColoringIo, CommentsAndBlankLines) {
    const std::string text = "# demo\nRRCOL 1 k=2 b=1 n=3\n\n0 1 5 # first\n0 2 6\n1 2 7\n";
    const auto f = parse_rrcol(text);
    EXPECT_EQ(f(1, 2), 7u);
}

TEST(ColoringIo, ParseErrorsNameTheLine) {
    try {
        parse_rrcol("RRCOL 1 k=2 b=1 n=3\n0 1 5\n1 2 6\n0 2 7\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_rrcol("RRCOL 2 k=2 b=1 n=3\n"), ParseError);
    EXPECT_THROW(parse_rrcol("RRCOL 1 k=2 b=1 n=3\n0 1 5\n"), ParseError);
    EXPECT_THROW(parse_rrcol("RRCOL 1 k=2 b=1 n=3\n0 1 x\n0 2 1\n1 2 2\n"), ParseError);
    // Well-formed but over the declared bound.
    EXPECT_THROW(parse_rrcol("RRCOL 1 k=2 b=1 n=3\n0 1 5\n0 2 5\n1 2 6\n"), PreconditionError);
}

TEST(ColoringIo, MissingFileIsIoError) {
    EXPECT_THROW(read_coloring("/nonexistent/dir/f.rrcol"), IoError);
}
