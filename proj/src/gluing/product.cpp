#include "contact_forge/gluing/product.hpp"

#include "contact_forge/symcalc/coord_map.hpp"
#include "contact_forge/symcalc/sexpr.hpp"

#include <stdexcept>

namespace contact_forge::gluing {

using sym::ChartPtr;
using sym::Expr;
using sym::Form;

std::string to_string(Region r)
{
    switch (r) {
    case Region::W1Interior: return "W1-interior";
    case Region::Collar: return "collar";
    case Region::W2Interior: return "W2-interior";
    }
    return "collar";
}

ChartPtr collar_chart(int n)
{
    if (n < 2 || n > 4) throw std::invalid_argument("n must be 2, 3 or 4");
    std::vector<sym::Coord> coords{{"t", sym::CoordKind::Linear}, {"z", sym::CoordKind::Linear}};
    for (int i = 1; i < n; ++i) {
        coords.push_back({"x" + std::to_string(i), sym::CoordKind::Linear});
        coords.push_back({"y" + std::to_string(i), sym::CoordKind::Linear});
    }
    coords.push_back({"theta", sym::CoordKind::Angular});
    return sym::make_chart(std::move(coords));
}

Form darboux_beta(const ChartPtr& chart)
{
    Form beta = Form::d(chart, "z");
    for (int i = 1;; ++i) {
        const std::string x = "x" + std::to_string(i);
        if (!chart->find(x)) break;
        beta += Expr::symbol(x) * Form::d(chart, "y" + std::to_string(i));
    }
    return beta;
}

RegionForm product_alpha(int n, Region region, Mutation mutation)
{
    const ChartPtr chart = collar_chart(n);
    const Form beta = darboux_beta(chart);
    const Form dtheta = Form::d(chart, "theta");
    const Expr et = Expr::exp(Expr::symbol("t"));
    switch (region) {
    case Region::W1Interior: return {region, chart, et * beta + dtheta};
    case Region::W2Interior: return {region, chart, et * beta - dtheta};
    case Region::Collar: break;
    }
    const Expr f = Expr::func("f", "t");
    const Expr g = Expr::func("g", "t");
    const Form gdtheta = g * dtheta;
    return {region, chart, f * beta + (mutation == Mutation::ProductSign ? -gdtheta : gdtheta)};
}

namespace {

Expr factorial(int n) { return n <= 1 ? Expr(1) : Expr(n) * factorial(n - 1); }

Form top_power(const Form& alpha, int n) { return sym::wedge(alpha, sym::wedge_power(sym::ext_d(alpha), n)); }

}  // namespace

IdentityReport verify_product_identity(int n, Mutation mutation)
{
    if (n < 2 || n > 4) throw std::invalid_argument("n must be 2, 3 or 4");
    IdentityReport r;
    r.claim = "alpha ^ (d alpha)^" + std::to_string(n) + " on the product collar";
    r.anchor = "alpha ^ (d alpha)^n = n f^{n-1} (f'g - fg') dt ^ beta ^ (d beta)^{n-1} ^ dtheta on the collar; "
                     "+(d lambda_1)^n ^ dtheta on W1 and -(d lambda_2)^n ^ dtheta on W2";
    r.mutation = mutation;

    const RegionForm collar = product_alpha(n, Region::Collar, mutation);
    const ChartPtr chart = collar.chart;
    const Form beta = darboux_beta(chart);
    const Form dt = Form::d(chart, "t");
    const Form dtheta = Form::d(chart, "theta");
    const Expr f = Expr::func("f", "t");
    const Expr fp = Expr::func("f", "t", 1);
    const Expr g = Expr::func("g", "t");
    const Expr gp = Expr::func("g", "t", 1);
    const Expr wronskian = fp * g - f * gp;

    const Form volume = sym::wedge(sym::wedge(dt, beta), sym::wedge(sym::wedge_power(sym::ext_d(beta), n - 1), dtheta));
    const Form lhs = top_power(collar.alpha, n);
    const Expr scale = Expr(n) * Expr::pow(f, n - 1) * wronskian;
    r.add(compare("collar volume identity", lhs, scale * volume));

    const Expr darboux = sym::top_coefficient(volume);
    r.add(compare("Darboux volume factor", darboux, factorial(n - 1),
                  "dt ^ beta ^ (d beta)^{n-1} ^ dtheta = (n-1)! in chart order"));
    const Expr coefficient = sym::top_coefficient(lhs);
    r.data["coefficient"] = sym::to_sexpr(coefficient);
    r.data["darboux_factor"] = sym::to_sexpr(darboux);
    r.data["chart"] = nlohmann::json::array();
    for (const auto& c : chart->coords()) r.data["chart"].push_back(c.name);

    const RegionForm w1 = product_alpha(n, Region::W1Interior);
    const RegionForm w2 = product_alpha(n, Region::W2Interior);
    const Form lambda = Expr::exp(Expr::symbol("t")) * beta;
    const Form dlambda_n = sym::wedge(sym::wedge_power(sym::ext_d(lambda), n), dtheta);
    const Form v1 = top_power(w1.alpha, n);
    const Form v2 = top_power(w2.alpha, n);
    r.add(compare("W1 interior volume", v1, dlambda_n));
    r.add(compare("W2 interior volume", v2, -dlambda_n));
    r.add(compare("W2 sign opposite to W1", sym::top_coefficient(v2), -sym::top_coefficient(v1)));
    r.data["w1_coefficient"] = sym::to_sexpr(sym::top_coefficient(v1));

    // Collar ends: t <= -1 carries (f, g) = (e^{t+1}, 1) and meets W1 via
    // s = t + 1; t >= 1 carries (e^{1-t}, -1) and meets W2 via s = 1 - t.
    const Expr t = Expr::symbol("t");
    auto shift = [&](const Expr& image) {
        std::map<std::string, sym::MapComponent> comps;
        for (const auto& c : chart->coords()) {
            if (c.name == "t")
                comps.emplace(c.name, sym::MapComponent::value(image));
            else if (c.kind == sym::CoordKind::Angular)
                comps.emplace(c.name, sym::MapComponent::angle({{c.name, 1}}));
            else
                comps.emplace(c.name, sym::MapComponent::value(Expr::symbol(c.name)));
        }
        return sym::CoordMap(chart, chart, comps);
    };
    sym::Substitution left;
    left.functions["f"] = {Expr::exp(t + Expr(1))};
    left.functions["g"] = {Expr(1)};
    sym::Substitution right;
    right.functions["f"] = {Expr::exp(Expr(1) - t)};
    right.functions["g"] = {Expr(-1)};
    r.add(compare("W1 meets collar at t = -1", collar.alpha.map_coefficients(left),
                  sym::pullback(shift(t + Expr(1)), w1.alpha)));
    r.add(compare("W2 meets collar at t = 1", collar.alpha.map_coefficients(right),
                  sym::pullback(shift(Expr(1) - t), w2.alpha)));

    r.detail = "top coefficient " + sym::to_sexpr(coefficient) + " in chart order (positive orientation)";
    return r;
}

IdentityReport verify_collar_liouville()
{
    IdentityReport r;
    r.claim = "d_t is the Liouville field of omega = d(e^t beta) on the collar";
    r.anchor = "i_X omega = lambda with X = d_t, omega = d(e^t lambda)";
    const ChartPtr chart = sym::make_chart({"t", "z", "x1", "y1"});
    const Form beta = darboux_beta(chart);
    const Expr t = Expr::symbol("t");
    const Form lambda = Expr::exp(t) * beta;
    const Form omega = sym::ext_d(lambda);
    const sym::VectorField dt = sym::VectorField::partial(chart, "t");
    r.add(compare("contraction i_{d_t} omega = e^t beta", sym::contract(dt, omega), lambda));
    r.add(compare("L_{d_t} omega = omega", sym::lie_derivative(dt, omega), omega));

    const Expr c = Expr::symbol("c");
    const sym::CoordMap shift(chart, chart,
                              {{"t", sym::MapComponent::value(t + c)},
                               {"z", sym::MapComponent::value(Expr::symbol("z"))},
                               {"x1", sym::MapComponent::value(Expr::symbol("x1"))},
                               {"y1", sym::MapComponent::value(Expr::symbol("y1"))}});
    r.add(compare("t -> t + c rescales omega by e^c", sym::pullback(shift, omega), Expr::exp(c) * omega));
    return r;
}

}  // namespace contact_forge::gluing
