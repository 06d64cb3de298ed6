#include "contact_forge/legendrian/legendrian.hpp"
#include "contact_forge/topology/topology.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace contact_forge::topology;

TEST(Adjunction, PlaneCurve)
{
    for (long d = 1; d <= 10; ++d) {
        const SurfaceData s = adjunction_solve({std::nullopt, d * d, 3 * d});
        EXPECT_EQ(s.genus, (d - 1) * (d - 2) / 2) << d;
    }
}

TEST(Adjunction, SmallCases)
{
    EXPECT_EQ(adjunction_solve({std::nullopt, -1, 1}).genus, 0);
    EXPECT_EQ(adjunction_solve({1, std::nullopt, 0}).self_intersection, 0);
    EXPECT_EQ(adjunction_solve({2, 5, std::nullopt}).c1_evaluation, 3);
}

TEST(Adjunction, Errors)
{
    EXPECT_THROW(adjunction_solve({std::nullopt, 1, std::nullopt}), std::invalid_argument);
    EXPECT_THROW(adjunction_solve({1, 2, 3}), std::invalid_argument);
    EXPECT_THROW(adjunction_solve({std::nullopt, 1, 0}), std::domain_error);
    EXPECT_THROW(adjunction_solve({std::nullopt, -5, 1}), std::domain_error);
    EXPECT_THROW(adjunction_solve({-1, 0, std::nullopt}), std::domain_error);
}

TEST(Decomposition, DegreeFour)
{
    const DecompositionReport r = cp2_decomposition(4);
    EXPECT_EQ(r.genus, 3);
    EXPECT_EQ(r.euler, -16);
    EXPECT_EQ(r.stab_count, 20);
    EXPECT_EQ(r.rot_plus, 20);
    EXPECT_EQ(r.rot_minus, -20);
    EXPECT_EQ(r.chern_plus, 5);
    EXPECT_EQ(r.chern_minus, -5);
    EXPECT_TRUE(r.routes_agree());
    EXPECT_EQ(r.special_case, SpecialCase::Generic);
}

TEST(Decomposition, DegreeThree)
{
    const DecompositionReport r = cp2_decomposition(3);
    EXPECT_EQ(r.genus, 1);
    EXPECT_EQ(r.euler, -9);
    EXPECT_EQ(r.stab_count, 9);
    EXPECT_EQ(r.chern_plus, 3);
    EXPECT_EQ(r.special_case, SpecialCase::Torus);
}

TEST(Decomposition, DegreeTwo)
{
    const DecompositionReport r = cp2_decomposition(2);
    EXPECT_EQ(r.genus, 0);
    EXPECT_EQ(r.euler, -4);
    EXPECT_EQ(r.stab_count, 2);
    EXPECT_EQ(r.rot_plus, 2);
    EXPECT_EQ(r.chern_plus, 1);
    EXPECT_EQ(r.chern_minus, -1);
    EXPECT_EQ(r.special_case, SpecialCase::Lens);
    EXPECT_TRUE(r.stein_ok);
    EXPECT_EQ(r.stein_inequality, -2);
}

TEST(Decomposition, DegreeOneRejected)
{
    EXPECT_THROW(cp2_decomposition(1), std::invalid_argument);
}

TEST(Coverage, SmallAndFifty)
{
    EXPECT_EQ(odd_class_coverage(5).values, (std::vector<long>{1, 3, 5, 7}));
    const CoverageResult c = odd_class_coverage(50);
    EXPECT_TRUE(c.complete());
    EXPECT_EQ(c.values.size(), 49u);
    EXPECT_EQ(c.values.back(), 97);
    for (long v : c.values) EXPECT_EQ(v % 2, 1);
    EXPECT_THROW(odd_class_coverage(1), std::invalid_argument);
}

TEST(Stein, Examples)
{
    EXPECT_TRUE(stein_disc_bundle_check(0, -4));
    EXPECT_FALSE(stein_disc_bundle_check(0, -1));
    EXPECT_TRUE(stein_disc_bundle_check(1, 0));
    EXPECT_THROW(stein_disc_bundle_check(-1, 0), std::invalid_argument);
}

TEST(Ruled, Examples)
{
    EXPECT_EQ(ruled_surface_piece(true, 2).max_euler, 2);
    EXPECT_EQ(ruled_surface_piece(true, 2).parity, "even");
    EXPECT_EQ(ruled_surface_piece(false, 0).max_euler, -3);
    EXPECT_EQ(ruled_surface_piece(false, 0).parity, "odd");
    EXPECT_EQ(ruled_surface_piece(true, 1).max_euler, 0);
}

TEST(Curvature, Examples)
{
    const BundleData q = euler_from_curvature(4);
    EXPECT_EQ(q.euler, -4);
    EXPECT_EQ(q.sign_class, BundleSignClass::Negative);
    EXPECT_EQ(q.filling_side, "convex");
    EXPECT_EQ(euler_from_curvature(0).sign_class, BundleSignClass::Neither);
    const BundleData p = euler_from_curvature(-7, 3);
    EXPECT_EQ(p.euler, 7);
    EXPECT_EQ(p.sign_class, BundleSignClass::Positive);
    EXPECT_EQ(p.filling_side, "concave");
    const BundleData b = euler_from_curvature(2, 0, 4);
    EXPECT_TRUE(b.dim_4m_remark);
    EXPECT_EQ(b.sign_class, BundleSignClass::Both);
}

TEST(Csv, Header)
{
    const std::string csv = to_csv({cp2_decomposition(2), cp2_decomposition(3), cp2_decomposition(4)});
    EXPECT_EQ(csv, "d,genus,e,stabs,rot_plus,rot_minus,chern_plus,chern_minus,stein_ok,case\n"
                   "2,0,-4,2,2,-2,1,-1,true,lens L(4,1)\n"
                   "3,1,-9,9,9,-9,3,-3,true,torus\n"
                   "4,3,-16,20,20,-20,5,-5,true,generic\n");
}

TEST(Properties, ChernTwoRoutes)
{
    std::mt19937_64 rng(201);
    for (int i = 0; i < 1000; ++i) {
        const long d = std::uniform_int_distribution<long>(2, 50)(rng);
        const DecompositionReport r = cp2_decomposition(d);
        ASSERT_TRUE(r.routes_agree()) << d;
        ASSERT_EQ(r.chern_plus * d, r.rot_plus) << d;
        ASSERT_EQ(r.chern_minus * d, r.rot_minus) << d;
        ASSERT_EQ(r.rot_plus, 2 * d * d - 3 * d) << d;
    }
}

TEST(Properties, AdjunctionInvolutive)
{
    std::mt19937_64 rng(202);
    std::uniform_int_distribution<long> genus(0, 200), self(-500, 500);
    for (int i = 0; i < 1000; ++i) {
        const long g = genus(rng);
        const long s = self(rng);
        const SurfaceData full = adjunction_solve({g, s, std::nullopt});
        ASSERT_EQ(adjunction_solve({std::nullopt, full.self_intersection, full.c1_evaluation}), full) << i;
        ASSERT_EQ(adjunction_solve({full.genus, std::nullopt, full.c1_evaluation}), full) << i;
        ASSERT_EQ(adjunction_solve({full.genus, full.self_intersection, std::nullopt}), full) << i;
    }
}

TEST(Properties, SteinMatchesDegreeInequality)
{
    std::mt19937_64 rng(203);
    for (int i = 0; i < 1000; ++i) {
        const long d = std::uniform_int_distribution<long>(2, 100000)(rng);
        const long g = (d - 1) * (d - 2) / 2;
        ASSERT_EQ(stein_disc_bundle_check(g, -d * d), 3 * d - 2 * d * d <= 0) << d;
    }
}

TEST(Properties, CoverageStrictlyIncreasing)
{
    std::mt19937_64 rng(204);
    for (int i = 0; i < 1000; ++i) {
        const long m = std::uniform_int_distribution<long>(2, 300)(rng);
        const CoverageResult c = odd_class_coverage(m);
        ASSERT_TRUE(c.complete()) << m;
        for (std::size_t k = 1; k < c.values.size(); ++k) ASSERT_LT(c.values[k - 1], c.values[k]) << m;
    }
}

TEST(Properties, StabCountIntermediateExpression)
{
    std::mt19937_64 rng(205);
    for (int i = 0; i < 1000; ++i) {
        const long d = std::uniform_int_distribution<long>(-1000, 1000)(rng);
        const long closed = 2 * d * d - 3 * d;
        ASSERT_EQ(closed, (d - 1) * (d - 2) - 2 + d * d) << d;
        if (d >= 2) {
            ASSERT_GE(closed, 0) << d;
            ASSERT_EQ(cp2_decomposition(d).stab_count, closed) << d;
        }
    }
}
