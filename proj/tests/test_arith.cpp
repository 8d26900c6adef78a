#include "nestofan/feasibility.hpp"
#include "nestofan/label.hpp"
#include "nestofan/lattice.hpp"

#include <gtest/gtest.h>

using namespace nestofan;

TEST(Rational, FormatsAlwaysAsFraction) {
    EXPECT_EQ(format_rational(Rational(1)), "1/1");
    EXPECT_EQ(format_rational(Rational(-6, 4)), "-3/2");
    EXPECT_EQ(format_rational(Rational(0)), "0/1");
}

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(parse_rational("5/9"), Rational(5, 9));
    EXPECT_EQ(parse_rational("10/4"), Rational(5, 2));
    EXPECT_EQ(parse_rational("-3"), Rational(-3));
    EXPECT_EQ(parse_rational("+7/1"), Rational(7));
    for (const char* bad : {"", "/", "1/", "1/0", "a/b", "1 /2", "0.5"})
        EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(Rational, FormatParseRoundTrip) {
    for (long p = -13; p <= 13; ++p)
        for (long q = 1; q <= 24; ++q) EXPECT_EQ(parse_rational(format_rational(Rational(p, q))), Rational(p, q));
}

TEST(Integer, Int64Narrowing) {
    EXPECT_EQ(to_int64(Integer(-42)), -42);
    Integer big = Integer(1) << 70;
    EXPECT_FALSE(to_int64(big));
}

TEST(Label, ParseAndPrint) {
    EXPECT_EQ(Label::parse("4"), Label::simple(4));
    EXPECT_EQ(Label::parse("4:2"), Label::pair(4, 2));
    EXPECT_EQ(Label::pair(4, 2).str(), "4:2");
    EXPECT_EQ(Label::simple(3).str(), "3");
    EXPECT_THROW(Label::parse(""), InputError);
    EXPECT_THROW(Label::parse("x"), InputError);
    EXPECT_THROW(Label::parse("3:"), InputError);
}

TEST(Label, OrderPutsSimpleBeforePairs) {
    EXPECT_LT(Label::simple(3), Label::pair(3, 1));
    EXPECT_LT(Label::pair(3, 2), Label::simple(4));
    EXPECT_LT(Label::pair(3, 1), Label::pair(3, 2));
}

TEST(Lattice, Primitive) {
    EXPECT_EQ(primitive(LatticeVector{2, 4, -6}), (LatticeVector{1, 2, -3}));
    EXPECT_EQ(primitive(LatticeVector{1, 1}), (LatticeVector{1, 1}));
    EXPECT_EQ(primitive(LatticeVector{0, -5}), (LatticeVector{0, -1}));
    EXPECT_TRUE(is_primitive(LatticeVector{3, 5}));
    EXPECT_FALSE(is_primitive(LatticeVector{2, 0}));
}

TEST(Lattice, DeterminantAndRank) {
    EXPECT_EQ(determinant({{1, 0}, {1, 2}}), 2);
    EXPECT_EQ(determinant({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}), -1);
    std::vector<LatticeVector> rows{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
    EXPECT_EQ(rank_of(rows), 2u);
}

TEST(Lattice, MaximalMinorGcd) {
    std::vector<LatticeVector> unimodular{{1, 0, 0}, {1, 1, 0}};
    EXPECT_EQ(maximal_minor_gcd(unimodular), 1);
    std::vector<LatticeVector> index2{{1, 0}, {1, 2}};
    EXPECT_EQ(maximal_minor_gcd(index2), 2);
}

TEST(Lattice, DualBasisIsInverse) {
    std::vector<LatticeVector> gens{{1, 0, 0}, {1, 1, 0}, {-1, -1, -1}};
    auto h = dual_basis(gens);
    ASSERT_TRUE(h);
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 3; ++i) {
            Rational s = 0;
            for (std::size_t k = 0; k < 3; ++k) s += (*h)[j][k] * Rational(gens[i][k]);
            EXPECT_EQ(s, Rational(i == j ? 1 : 0));
        }
    std::vector<LatticeVector> degenerate{{1, 1}, {2, 2}};
    EXPECT_FALSE(dual_basis(degenerate));
}

TEST(Lattice, CoordinatesIn) {
    std::vector<LatticeVector> gens{{1, 0}, {1, 1}};
    auto c = coordinates_in(gens, LatticeVector{3, 1});
    ASSERT_TRUE(c);
    EXPECT_EQ((*c)[0], Rational(2));
    EXPECT_EQ((*c)[1], Rational(1));
    std::vector<LatticeVector> line{{1, 0}};
    EXPECT_FALSE(coordinates_in(line, LatticeVector{0, 1}));
}

TEST(Feasibility, NonnegativeSolutions) {
    using R = Rational;
    EXPECT_TRUE(nonnegative_solution_exists({{R(1), R(1)}}, {R(1)}));
    EXPECT_FALSE(nonnegative_solution_exists({{R(1), R(1)}}, {R(-1)}));
    EXPECT_TRUE(nonnegative_solution_exists({{R(1), R(-1)}}, {R(-1)}));
    EXPECT_FALSE(nonnegative_solution_exists({{R(1), R(0)}, {R(1), R(0)}}, {R(1), R(2)}));
}
