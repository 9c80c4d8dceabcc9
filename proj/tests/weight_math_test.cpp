#include <cmath>

#include <gtest/gtest.h>

#include "sombor/weight_math.hpp"

namespace sombor {
namespace {

TEST(EdgeWeight, KnownValues) {
    EXPECT_DOUBLE_EQ(edge_weight(3, 4), 5.0);
    EXPECT_DOUBLE_EQ(edge_weight(1, 1), std::sqrt(2.0));
    EXPECT_NEAR(edge_weight(2, 3), 3.605551275463989, 1e-15);
}

TEST(EdgeWeight, SymmetricOnGrid) {
    for (Degree x = 1; x <= 200; ++x)
        for (Degree y = 1; y <= 200; ++y) ASSERT_EQ(edge_weight(x, y), edge_weight(y, x));
}

TEST(EdgeWeight, RejectsNonPositive) {
    EXPECT_THROW(edge_weight(0, 3), Error);
    EXPECT_THROW(edge_weight(3, -1), Error);
}

TEST(GGap, KnownValue) { EXPECT_NEAR(g_gap(1, 2, 3), std::sqrt(10.0) - std::sqrt(13.0), 1e-15); }

TEST(GGap, VanishesFromBelowForLargeX) {
    // g_{1,2}(x) = -3 / (sqrt(x^2+1) + sqrt(x^2+4)), about -1.5 / x.
    const double x = 1e6;
    const double g = g_gap(1, 2, 1'000'000);
    EXPECT_LT(g, 0.0);
    EXPECT_NEAR(g, -3.0 / (std::sqrt(x * x + 1.0) + std::sqrt(x * x + 4.0)), 1e-9);
    EXPECT_LT(g_gap(1, 2, 100), g_gap(1, 2, 10'000));
    EXPECT_LT(g_gap(1, 2, 10'000), g);
}

TEST(GGap, RejectsUnorderedParameters) {
    EXPECT_THROW(g_gap(2, 2, 1), Error);
    EXPECT_THROW(g_gap(3, 2, 1), Error);
    EXPECT_THROW(g_gap(1, 2, 0), Error);
}

TEST(GGap, NegativeAndIncreasing) {
    for (Degree a = 1; a <= 30; ++a)
        for (Degree b = a + 1; b <= 31; ++b)
            for (Degree x = 1; x < 60; ++x) {
                ASSERT_LT(g_gap(a, b, x), 0.0);
                ASSERT_LT(g_gap(a, b, x), g_gap(a, b, x + 1)) << a << ' ' << b << ' ' << x;
            }
}

TEST(HGap, KnownValues) {
    EXPECT_NEAR(h_gap(3, 2), std::sqrt(13.0) - std::sqrt(5.0), 1e-15);
    EXPECT_NEAR(h_gap(3, 4), 5.0 - std::sqrt(17.0), 1e-15);
    EXPECT_LT(h_gap(3, 4), h_gap(3, 2));
}

TEST(HGap, RejectsSmallA) {
    EXPECT_THROW(h_gap(1, 3), Error);
    EXPECT_THROW(h_gap(0, 3), Error);
    EXPECT_THROW(h_gap(3, 0), Error);
}

TEST(HGap, PositiveDecreasingAndNegatesG) {
    for (Degree a = 2; a <= 100; ++a)
        for (Degree x = 1; x < 100; ++x) {
            ASSERT_GT(h_gap(a, x), 0.0);
            ASSERT_GT(h_gap(a, x), h_gap(a, x + 1));
            ASSERT_LE(std::abs(h_gap(a, x) + g_gap(1, a, x)), 1e-12);
        }
}

}  // namespace
}  // namespace sombor
