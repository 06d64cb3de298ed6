#include "contact_forge/symcalc/coord_map.hpp"
#include "contact_forge/symcalc/form.hpp"
#include "contact_forge/symcalc/sexpr.hpp"

#include <gtest/gtest.h>

using namespace contact_forge::sym;

namespace {

Expr sym(const char* n) { return Expr::symbol(n); }

}  // namespace

TEST(Wedge, Antisymmetry)
{
    const ChartPtr ch = make_chart({"x", "y"});
    const Form dx = Form::d(ch, "x");
    const Form dy = Form::d(ch, "y");
    EXPECT_EQ(wedge(dx, dy), -wedge(dy, dx));
}

TEST(Wedge, RepeatedOneFormVanishes)
{
    const ChartPtr ch = make_chart({"x", "y"});
    const Form a = sym("x") * Form::d(ch, "y");
    EXPECT_TRUE(wedge(a, a).is_zero());
}

TEST(Wedge, ChartOrderSign)
{
    const ChartPtr ch = make_chart({"t", "x", "y"});
    const Form r = wedge(Form::d(ch, "t"), wedge(Form::d(ch, "x"), Form::d(ch, "y")));
    EXPECT_TRUE(equivalent(top_coefficient(r), Expr(1)));
}

TEST(Wedge, ChartMismatch)
{
    const ChartPtr a = make_chart({"x", "y"});
    const ChartPtr b = make_chart({"x", "z"});
    EXPECT_THROW(wedge(Form::d(a, "x"), Form::d(b, "z")), ChartMismatch);
}

TEST(ExtD, RotationForm)
{
    const ChartPtr ch = make_chart({"x", "y"});
    const Form a = sym("x") * Form::d(ch, "y") - sym("y") * Form::d(ch, "x");
    EXPECT_EQ(ext_d(a), Expr(2) * Form::monomial(ch, {"x", "y"}));
}

TEST(ExtD, CollarSymplecticForm)
{
    const ChartPtr ch = make_chart({"t", "x", "y"});
    const Expr et = Expr::exp(sym("t"));
    const Form lambda = sym("x") * Form::d(ch, "y");
    const Form expected = wedge(et * Form::d(ch, "t"), lambda) + et * Form::monomial(ch, {"x", "y"});
    EXPECT_EQ(ext_d(et * lambda), expected);
}

TEST(TopCoefficient, Basics)
{
    const ChartPtr ch = make_chart({"t", "x", "y"});
    EXPECT_TRUE(equivalent(top_coefficient(Expr(5) * Form::monomial(ch, {"t", "x", "y"})), Expr(5)));
    EXPECT_TRUE(equivalent(top_coefficient(Form::monomial(ch, {"x", "t", "y"})), Expr(-1)));
    EXPECT_THROW(top_coefficient(Form::d(ch, "t")), std::invalid_argument);
}

TEST(TopCoefficient, DarbouxVolume)
{
    // Oracle: alpha ^ (d alpha)^2 with d alpha = dx1^dy1 + dx2^dy2. Only the
    // dz component of alpha survives; (d alpha)^2 = 2 dx1^dy1^dx2^dy2.
    const ChartPtr ch = make_chart({"z", "x1", "y1", "x2", "y2"});
    const Form alpha = Form::d(ch, "z") + sym("x1") * Form::d(ch, "y1") + sym("x2") * Form::d(ch, "y2");
    const Expr top = top_coefficient(wedge(alpha, wedge_power(ext_d(alpha), 2)));
    EXPECT_TRUE(equivalent(top, Expr(2)));
}

TEST(Contract, Basics)
{
    const ChartPtr ch = make_chart({"t", "x", "y"});
    const VectorField dt = VectorField::partial(ch, "t");
    EXPECT_EQ(contract(dt, Form::monomial(ch, {"t", "x"})), Form::d(ch, "x"));
    EXPECT_THROW(contract(dt, Form::scalar(ch, sym("x"))), std::invalid_argument);

    VectorField euler(ch);
    euler.set("x", sym("x")).set("y", sym("y"));
    EXPECT_EQ(contract(euler, Form::monomial(ch, {"x", "y"})),
              sym("x") * Form::d(ch, "y") - sym("y") * Form::d(ch, "x"));
}

TEST(Contract, CollarLiouville)
{
    const ChartPtr ch = make_chart({"t", "x", "y"});
    const Expr et = Expr::exp(sym("t"));
    const Form lambda = et * (sym("x") * Form::d(ch, "y"));
    EXPECT_EQ(contract(VectorField::partial(ch, "t"), ext_d(lambda)), lambda);
}

TEST(LieDerivative, Examples)
{
    const ChartPtr ch = make_chart({"t", "@theta", "x"});
    EXPECT_TRUE(lie_derivative(VectorField::partial(ch, "theta"), Form::d(ch, "theta")).is_zero());
    const Form a = Expr::exp(sym("t")) * Form::d(ch, "x");
    EXPECT_EQ(lie_derivative(VectorField::partial(ch, "t"), a), a);
}

TEST(LieDerivative, AgreesWithFlowOnRotation)
{
    // The flow of x d_y - y d_x rotates the plane and preserves x dy - y dx.
    const ChartPtr ch = make_chart({"x", "y"});
    VectorField rot(ch);
    rot.set("x", -sym("y")).set("y", sym("x"));
    const Form a = sym("x") * Form::d(ch, "y") - sym("y") * Form::d(ch, "x");
    EXPECT_TRUE(lie_derivative(rot, a).is_zero());
    // dilation x d_x + y d_y scales it by exp(2s): derivative 2a.
    VectorField dil(ch);
    dil.set("x", sym("x")).set("y", sym("y"));
    EXPECT_EQ(lie_derivative(dil, a), Expr(2) * a);
}

TEST(Pullback, Identity)
{
    const ChartPtr ch = make_chart({"t", "@theta", "x"});
    const Form a = Expr::sin("theta") * sym("x") * Form::d(ch, "t") + Form::d(ch, "theta");
    EXPECT_EQ(pullback(CoordMap::identity(ch), a), a);
}

TEST(Pullback, RescalingByConstantShift)
{
    // (t, x) -> (t + h, x) with h a parameter: e^t x dy pulls back to e^h (e^t x dy).
    const ChartPtr ch = make_chart({"t", "x", "y"});
    const Expr h = sym("h");
    const CoordMap m(ch, ch,
                     {{"t", MapComponent::value(sym("t") + h)},
                      {"x", MapComponent::value(sym("x"))},
                      {"y", MapComponent::value(sym("y"))}});
    const Form lambda = Expr::exp(sym("t")) * sym("x") * Form::d(ch, "y");
    EXPECT_EQ(pullback(m, lambda), Expr::exp(h) * lambda);
}

TEST(Pullback, ExpRescalingOfLinearCoordinate)
{
    // (t, u) -> (t, x = e^t u): x dy pulls back to e^t u dy, the collar primitive.
    const ChartPtr src = make_chart({"t", "u", "y"});
    const ChartPtr dst = make_chart({"t", "x", "y"});
    const CoordMap m(src, dst,
                     {{"t", MapComponent::value(sym("t"))},
                      {"x", MapComponent::value(Expr::exp(sym("t")) * sym("u"))},
                      {"y", MapComponent::value(sym("y"))}});
    EXPECT_EQ(pullback(m, sym("x") * Form::d(dst, "y")), Expr::exp(sym("t")) * sym("u") * Form::d(src, "y"));
}

TEST(Pullback, AngleShift)
{
    const ChartPtr ch = make_chart({"t", "@theta"});
    const CoordMap m(ch, ch, {{"t", MapComponent::value(sym("t"))}, {"theta", MapComponent::angle({{"theta", 1}}, sym("t"))}});
    EXPECT_EQ(pullback(m, Form::d(ch, "theta")), Form::d(ch, "theta") + Form::d(ch, "t"));
    EXPECT_THROW(pullback(m, Expr::sin("theta") * Form::d(ch, "t")), std::domain_error);
}

TEST(Pullback, DoubleAngle)
{
    const ChartPtr ch = make_chart({"@theta"});
    const CoordMap twice(ch, ch, {{"theta", MapComponent::angle({{"theta", 2}})}});
    const Expr expected = Expr(2) * Expr::sin("theta") * Expr::cos("theta");
    EXPECT_TRUE(equivalent(pullback(twice, Expr::sin("theta")), expected));
}

TEST(Pullback, ChartMismatch)
{
    const ChartPtr a = make_chart({"x", "y"});
    const ChartPtr b = make_chart({"u", "v"});
    EXPECT_THROW(pullback(CoordMap::identity(a), Form::d(b, "u")), ChartMismatch);
    EXPECT_THROW(CoordMap(a, b, {{"u", MapComponent::value(sym("x"))}}), std::invalid_argument);
}

TEST(FormText, StableSerialization)
{
    const ChartPtr ch = make_chart({"t", "x", "y"});
    const Form a = Expr::exp(sym("t")) * Form::monomial(ch, {"y", "x"}) + Expr(3) * Form::monomial(ch, {"t", "x"});
    EXPECT_EQ(to_sexpr(a), to_sexpr(Form::from_terms(ch, 2, a.terms())));
    EXPECT_EQ(to_sexpr(Form(ch, 1)), "(form 1)");
}
