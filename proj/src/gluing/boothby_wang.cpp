#include "contact_forge/gluing/boothby_wang.hpp"

#include "contact_forge/symcalc/certify.hpp"
#include "contact_forge/symcalc/sexpr.hpp"

#include <sstream>
#include <stdexcept>

namespace contact_forge::gluing {

using sym::Expr;
using sym::Form;

std::string to_string(BundleSign s) { return s == BundleSign::Positive ? "positive" : "negative"; }

BoothbyWangModel boothby_wang_model(BundleSign sign, Mutation mutation)
{
    const sym::ChartPtr chart = sym::make_chart({"r", "@theta", "x", "y"});
    const Expr r = Expr::symbol("r");
    const Expr x = Expr::symbol("x");
    const Expr y = Expr::symbol("y");
    // upper sign for positive bundles
    const Expr pm = sign == BundleSign::Positive ? Expr(1) : Expr(-1);
    const Form omega = Form::monomial(chart, {"x", "y"});
    const Form primitive = Expr::rational(1, 2) * (x * Form::d(chart, "y") - y * Form::d(chart, "x"));
    const Form alpha = Form::d(chart, "theta") - pm * primitive;
    const Form big_omega = Expr::rational(1, 2) * sym::ext_d(r * r * alpha) + omega;
    const Expr radial_sign = mutation == Mutation::BwRadial ? -pm : pm;
    sym::VectorField x_field(chart);
    x_field.set("r", (r * r - Expr(2) * radial_sign) * Expr::rational(1, 2) * Expr::pow(r, -1));
    return {sign, chart, omega, alpha, big_omega, x_field};
}

IdentityReport boothby_wang_verify(BundleSign sign, const BoothbyWangOptions& options, Mutation mutation)
{
    // X is singular at r = 0; r < 1/4 stays excluded
    if (!(options.r_min >= 0.25 && options.r_max > options.r_min))
        throw std::invalid_argument("need 1/4 <= r_min < r_max");
    const BoothbyWangModel m = boothby_wang_model(sign, mutation);
    const bool positive = sign == BundleSign::Positive;
    IdentityReport r;
    r.claim = std::string("Boothby-Wang filling of the ") + (positive ? "positive" : "negative") + " bundle is " +
              (positive ? "concave" : "convex");
    r.anchor = "Omega = (1/2) d(r^2 alpha) + pi^* omega with d alpha = -+ pi^* omega; "
                     "Liouville field X = ((r^2 -+ 2)/2r) d_r";
    r.mutation = mutation;

    const Expr pm = positive ? Expr(1) : Expr(-1);
    r.add(compare("d alpha = -+ omega", sym::ext_d(m.alpha), -pm * m.omega));
    r.add(compare("L_{d_theta} alpha = 0", sym::lie_derivative(sym::VectorField::partial(m.chart, "theta"), m.alpha),
                  Form(m.chart, 1)));

    const Expr top = sym::top_coefficient(sym::wedge(m.big_omega, m.big_omega));
    r.data["omega_squared_coefficient"] = sym::to_sexpr(top);
    const auto cert = sym::certify_positive(top, {{"r", sym::Interval(options.r_min, options.r_max)}}, options.grid_n);
    std::ostringstream box;
    box << "top coefficient " << sym::to_sexpr(top) << " on r in [" << options.r_min << ", " << options.r_max
        << "]: margin " << cert.margin;
    if (!cert.certified) box << ", fails near r = " << cert.worst_point.at("r");
    r.add(check("Omega ^ Omega positive", cert.certified, box.str()));
    r.margin = cert.margin;
    r.data["certification"] = {{"certified", cert.certified},
                               {"min_sampled", cert.min_sampled},
                               {"margin", cert.margin},
                               {"worst_r", cert.worst_point.at("r")}};

    r.add(compare("d(i_X Omega) = Omega", sym::ext_d(sym::contract(m.liouville, m.big_omega)), m.big_omega));

    sym::Substitution at_one;
    at_one.linear["r"] = Expr(1);
    const Expr radial = sym::substitute(m.liouville.component("r"), at_one);
    const Expr expected = (Expr(1) - Expr(2) * pm) * Expr::rational(1, 2);
    const double radial_value = sym::evaluate(radial, {});
    r.add(compare("X.r at r = 1", radial, expected,
                  std::string(radial_value < 0 ? "inward" : "outward") + ", " + sym::to_sexpr(radial)));
    r.add(check(positive ? "X points into W (concave)" : "X points out of W (convex)",
                positive ? radial_value < 0 : radial_value > 0));
    r.data["radial_at_1"] = sym::to_sexpr(radial);
    r.data["direction"] = radial_value < 0 ? "inward" : "outward";
    r.detail = "X.r at r = 1 is " + sym::to_sexpr(radial);
    return r;
}

}  // namespace contact_forge::gluing
