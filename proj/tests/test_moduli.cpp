#include "nestofan/moduli.hpp"
#include "nestofan/nested_fan.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace nestofan;

namespace {

std::vector<Rational> q(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Rational> out;
    for (auto [p, r] : xs) out.emplace_back(p, r);
    return out;
}

WeightVector weights(long d, long n, std::initializer_list<std::pair<long, long>> xs) {
    return WeightVector(d, n, q(xs));
}

}  // namespace

TEST(WeightFloor, Examples) {
    EXPECT_EQ(weight_floor(2, 5), q({{8, 9}, {8, 9}, {5, 9}, {1, 3}, {1, 3}}));
    EXPECT_EQ(weight_floor(1, 4), q({{5, 6}, {1, 2}, {1, 3}, {1, 3}}));
    EXPECT_THROW(weight_floor(2, 4), InputError);
    EXPECT_THROW(weight_floor(0, 4), InputError);
}

// 1 + w_{d+1} + ... + w_n = 2 + d eps', and all n entries sum to d + 1.
TEST(WeightFloor, SumIdentities) {
    for (long d = 1; d <= 4; ++d)
        for (long n = d + 3; n <= 10; ++n) {
            const auto w = weight_floor(d, n);
            Rational hassett = 1, total = 0;
            for (long i = 1; i <= n; ++i) {
                total += w[i - 1];
                if (i > d) hassett += w[i - 1];
            }
            EXPECT_EQ(hassett, 2 + Rational(d, (d + 1) * (n - d)));
            EXPECT_EQ(total, Rational(d + 1));
        }
}

TEST(ValidateWeight, Examples) {
    EXPECT_TRUE(validate_weight(weights(2, 5, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}})));
    EXPECT_TRUE(validate_weight(weights(2, 5, {{1, 1}, {1, 1}, {1, 1}, {1, 2}, {1, 2}})));
    EXPECT_FALSE(validate_weight(weights(2, 5, {{1, 1}, {1, 1}, {1, 1}, {1, 4}, {1, 4}})));
    EXPECT_FALSE(validate_weight(weights(2, 5, {{1, 1}, {1, 1}, {1, 1}, {1, 2}, {3, 2}})));
}

TEST(WeightVector, ConstructorChecksShape) {
    EXPECT_THROW(WeightVector(2, 5, q({{1, 1}})), InputError);
    EXPECT_THROW(WeightVector(2, 4, q({{1, 1}, {1, 1}, {1, 1}, {1, 1}})), InputError);
    EXPECT_THROW(WeightVector(0, 4, q({{1, 1}, {1, 1}, {1, 1}, {1, 1}})), InputError);
}

TEST(LmWeights, Examples) {
    EXPECT_EQ(lm_weights(2, 5).a, q({{1, 1}, {1, 1}, {1, 1}, {1, 2}, {1, 2}}));
    EXPECT_EQ(lm_weights(1, 5).a, q({{1, 1}, {1, 1}, {1, 3}, {1, 3}, {1, 3}}));
    for (long d = 1; d <= 3; ++d)
        for (long n = d + 3; n <= 8; ++n) {
            EXPECT_TRUE(validate_weight(lm_weights(d, n)));
            EXPECT_TRUE(is_toric_chamber(lm_weights(d, n)));
        }
    EXPECT_THROW(lm_weights(1, 3), InputError);
}

TEST(GA, Examples) {
    auto ones = weights(2, 5, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}});
    EXPECT_EQ(g_A(ones), (std::vector<LocusIndex>{{3, 4}, {3, 5}, {4, 5}}));
    EXPECT_EQ(g_A(lm_weights(2, 5)), (std::vector<LocusIndex>{{3, 4}, {3, 5}}));
    WeightVector floor(2, 5, weight_floor(2, 5));
    EXPECT_TRUE(g_A(floor).empty());
}

TEST(GA, PairsOfLightPointsNeverCollideAtTheFloor) {
    for (long d = 1; d <= 3; ++d)
        for (long n = d + 3; n <= 8; ++n) {
            WeightVector floor(d, n, weight_floor(d, n));
            for (const auto& I : g_A(floor)) EXPECT_EQ(I.front(), d + 1);
        }
}

TEST(ToricChamber, Examples) {
    EXPECT_TRUE(is_toric_chamber(lm_weights(2, 5)));
    EXPECT_FALSE(is_toric_chamber(weights(2, 5, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}})));
    EXPECT_TRUE(is_toric_chamber(weights(2, 6, {{1, 1}, {1, 1}, {1, 1}, {1, 2}, {1, 4}, {1, 4}})));
    EXPECT_FALSE(is_toric_chamber(weights(2, 6, {{1, 1}, {1, 1}, {1, 1}, {1, 2}, {1, 4}, {7, 24}})));
}

TEST(BA, LosevManinTwoFive) {
    auto cb = b_A(lm_weights(2, 5));
    EXPECT_EQ(cb.building_set.ground(), (std::vector<Label>{Label::simple(4), Label::simple(5)}));
    EXPECT_EQ(cb.promoted, (std::vector<Subset>{{0}, {1}}));
    EXPECT_EQ(cb.building_set.members(), (std::set<Subset>{{0}, {1}}));
    EXPECT_TRUE(validate_building_set(cb.building_set).ok());
}

TEST(BA, LosevManinPromotesEveryProperSubset) {
    for (long d = 1; d <= 3; ++d)
        for (long n = d + 3; n <= 8; ++n) {
            const long m = n - d - 1;
            EXPECT_EQ(b_A(lm_weights(d, n)).promoted.size(), (std::size_t{1} << m) - 2);
        }
}

TEST(BA, ThirdsOnTwoSix) {
    auto cb = b_A(weights(2, 6, {{1, 1}, {1, 1}, {1, 1}, {1, 3}, {1, 3}, {1, 3}}));
    EXPECT_EQ(cb.promoted.size(), 6u);
    EXPECT_EQ(cb.building_set.members().size(), 6u);
    EXPECT_TRUE(validate_building_set(cb.building_set).ok());
}

TEST(BA, RequiresToricChamber) {
    EXPECT_THROW(b_A(weights(2, 5, {{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}})), InputError);
}

TEST(HassettPrime, Examples) {
    EXPECT_EQ(hassett_weight_A_prime(lm_weights(2, 5)), q({{1, 1}, {1, 1}, {1, 2}, {1, 2}}));
    EXPECT_EQ(hassett_weight_A_prime(lm_weights(1, 5)), q({{1, 1}, {1, 1}, {1, 3}, {1, 3}, {1, 3}}));
}

TEST(BlowupFan, LosevManinTwoFiveIsHexagon) {
    Fan f = blowup_fan(lm_weights(2, 5));
    EXPECT_EQ(f_vector(f), (std::vector<std::size_t>{1, 6, 6}));
    EXPECT_TRUE(fan_equal(f, sym_fan(complete_building_set(1, 2), 2)));
}

TEST(BlowupFan, LosevManinOneFiveIsPermutohedral) {
    Fan f = blowup_fan(lm_weights(1, 5));
    EXPECT_EQ(f_vector(f), (std::vector<std::size_t>{1, 6, 6}));
    EXPECT_TRUE(fan_equal(f, nested_fan(complete_building_set(3, 5))));
}

TEST(BlowupFan, NoCentersLeavesProduct) {
    WeightVector floor(2, 5, weight_floor(2, 5));
    EXPECT_TRUE(fan_equal(blowup_fan(floor), blowup_base_fan(2, 5)));
}

TEST(BlowupFan, OrderMustDescend) {
    auto A = lm_weights(1, 5);
    auto order = blowup_order(A);
    ASSERT_GE(order.size(), 2u);
    EXPECT_GE(order.front().size(), order.back().size());
    std::reverse(order.begin(), order.end());
    EXPECT_THROW(blowup_fan(A, order), InputError);
}

TEST(BlowupFan, CenterConeUsesEveryCopy) {
    auto A = lm_weights(2, 6);
    Fan base = blowup_base_fan(2, 6);
    Cone c = center_cone(base, A, {3, 4, 5});
    EXPECT_EQ(c.dim(), 4u);
    for (auto r : c.rays) EXPECT_TRUE(base.labels()[r]->item == 4 || base.labels()[r]->item == 5);
}

TEST(RandomToricWeight, SamplesAreValid) {
    std::mt19937_64 rng(5);
    for (long d = 1; d <= 3; ++d)
        for (long n = d + 3; n <= 7; ++n)
            for (int t = 0; t < 20; ++t) {
                auto A = random_toric_weight(d, n, rng);
                EXPECT_TRUE(validate_weight(A));
                EXPECT_TRUE(is_toric_chamber(A));
                for (const auto& x : A.a) EXPECT_LE(boost::multiprecision::denominator(x), 24);
            }
}
