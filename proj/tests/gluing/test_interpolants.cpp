#include "contact_forge/gluing/interpolants.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

using namespace contact_forge::gluing;

namespace {

const InterpolantPair& default_pair()
{
    static const InterpolantPair pair = build_interpolants(0.25);
    return pair;
}

}  // namespace

TEST(Interpolants, EndpointValues)
{
    const auto& p = default_pair();
    EXPECT_EQ(p.f(-1.0), 1.0);
    EXPECT_EQ(p.g(-1.0), 1.0);
    EXPECT_EQ(p.f(1.0), 1.0);
    EXPECT_EQ(p.g(1.0), -1.0);
    EXPECT_EQ(p.g(0.0), 0.0);
}

TEST(Interpolants, LeftPieceIsExact)
{
    const auto& p = default_pair();
    for (double t : {-1.25, -1.2, -1.1, -1.0}) {
        EXPECT_EQ(p.f(t), std::exp(t + 1.0));
        EXPECT_EQ(p.f(t, 1), std::exp(t + 1.0));
        EXPECT_EQ(p.f(t, 2), std::exp(t + 1.0));
        EXPECT_EQ(p.g(t), 1.0);
        EXPECT_EQ(p.g(t, 1), 0.0);
        EXPECT_EQ(p.g(t, 2), 0.0);
    }
}

TEST(Interpolants, DerivativesMatchFiniteDifferences)
{
    const auto& p = default_pair();
    const double h = 1e-5;
    for (double t = -1.24; t < 1.25; t += 0.037) {
        for (int k = 0; k < 2; ++k) {
            const double df = (p.f(t + h, k) - p.f(t - h, k)) / (2 * h);
            const double dg = (p.g(t + h, k) - p.g(t - h, k)) / (2 * h);
            EXPECT_NEAR(df, p.f(t, k + 1), 1e-5) << "t = " << t << ", k = " << k;
            EXPECT_NEAR(dg, p.g(t, k + 1), 1e-5) << "t = " << t << ", k = " << k;
        }
    }
}

TEST(Interpolants, SmoothAcrossJoins)
{
    const auto& p = default_pair();
    for (double b : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        for (int k = 0; k <= 2; ++k) {
            EXPECT_NEAR(p.f(b - 1e-9, k), p.f(b + 1e-9, k), 1e-6) << b << " " << k;
            EXPECT_NEAR(p.g(b - 1e-9, k), p.g(b + 1e-9, k), 1e-6) << b << " " << k;
        }
    }
}

TEST(Interpolants, CertifiedMarginPositive)
{
    const auto& p = default_pair();
    EXPECT_TRUE(p.certification().certified);
    EXPECT_GT(p.margin(), 0.0);
    EXPECT_LE(p.margin(), p.certification().min_sampled);
    EXPECT_EQ(p.certification().cells, 2001u);
    // the minimum of f'g - fg' on the box is attained at the ends, e^{t+1}
    EXPECT_NEAR(p.certification().min_sampled, std::exp(-0.125), 1e-3);
}

TEST(Interpolants, EnclosuresContainPointValues)
{
    const auto& p = default_pair();
    for (double lo = -1.3; lo < 1.3; lo += 0.013) {
        const Interval box(lo, lo + 0.02);
        for (int k = 0; k <= 2; ++k) {
            const Interval ef = p.enclose_f(box, k);
            const Interval eg = p.enclose_g(box, k);
            for (double t : {box.lo, box.mid(), box.hi}) {
                EXPECT_TRUE(ef.contains(p.f(t, k))) << t << " " << k;
                EXPECT_TRUE(eg.contains(p.g(t, k))) << t << " " << k;
            }
        }
    }
}

TEST(Interpolants, SampleGridSymmetric)
{
    const auto& grid = default_pair().sample_grid();
    ASSERT_EQ(grid.size(), 2001u);
    EXPECT_EQ(grid.front(), -1.25);
    EXPECT_EQ(grid.back(), 1.25);
    EXPECT_EQ(grid[1000], 0.0);
    EXPECT_EQ(grid[200], -1.0);
    for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(grid[i], -grid[grid.size() - 1 - i]);
    for (std::size_t i = 1; i < grid.size(); ++i) EXPECT_LT(grid[i - 1], grid[i]);
}

TEST(Interpolants, ParameterRanges)
{
    for (double slope : {0.5, 0.6, 0.7, std::numbers::pi / 4})
        for (double delta : {0.25, 0.5, 1.0})
            EXPECT_NO_THROW(build_interpolants(0.25, {delta, slope}, 2001)) << delta << " " << slope;
    // a steep blend is not certified on the default grid
    EXPECT_THROW(build_interpolants(0.25, {0.05, 0.7}, 2001), CertificationFailure);
    EXPECT_THROW(build_interpolants(0.0), std::invalid_argument);
    EXPECT_THROW(build_interpolants(1.0), std::invalid_argument);
    EXPECT_THROW(build_interpolants(-0.5), std::invalid_argument);
    EXPECT_THROW(build_interpolants(0.25, {0.0, 0.7}), std::invalid_argument);
    EXPECT_THROW(build_interpolants(0.25, {0.5, 0.4}), std::invalid_argument);
    EXPECT_THROW(build_interpolants(0.25, {0.5, 1.0}), std::invalid_argument);
}

TEST(Interpolants, CoarseGridFailureCarriesPoint)
{
    try {
        build_interpolants(0.25, {}, 3);
        FAIL() << "expected CertificationFailure";
    } catch (const CertificationFailure& e) {
        EXPECT_LE(e.value(), 0.0);
        EXPECT_GE(e.t(), -1.125);
        EXPECT_LE(e.t(), 1.125);
    }
}

TEST(Interpolants, BuildUnderOneSecond)
{
    const auto start = std::chrono::steady_clock::now();
    const InterpolantPair p = build_interpolants(0.25, {}, 2001);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_GT(p.margin(), 0.0);
    EXPECT_LT(seconds, 1.0);
}
