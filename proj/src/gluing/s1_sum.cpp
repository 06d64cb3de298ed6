#include "contact_forge/gluing/s1_sum.hpp"

#include "contact_forge/symcalc/certify.hpp"
#include "contact_forge/symcalc/sexpr.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>

namespace contact_forge::gluing {

using sym::ChartPtr;
using sym::CoordMap;
using sym::Expr;
using sym::Form;
using sym::MapComponent;
using sym::Rational;

namespace {

Expr s(const char* n) { return Expr::symbol(n); }

std::map<std::string, MapComponent> identity_components(const ChartPtr& chart)
{
    std::map<std::string, MapComponent> comps;
    for (const auto& c : chart->coords())
        comps[c.name] = c.kind == sym::CoordKind::Angular ? MapComponent::angle({{c.name, 1}})
                                                           : MapComponent::value(Expr::symbol(c.name));
    return comps;
}

// Form on a (t, theta, v1, v2, v3, w3) chart:
// dv1 + a_t dt + a_theta dtheta + v3 dw3 - w3 dv3.
Form standard_shape(const ChartPtr& chart, const Expr& a_t, const Expr& a_theta)
{
    return Form::d(chart, "v1") + a_t * Form::d(chart, "t") + a_theta * Form::d(chart, "theta") +
           s("v3") * Form::d(chart, "w3") - s("w3") * Form::d(chart, "v3");
}

// Top coefficient of a ^ (da)^2 ^ dN with N = v1^2 + v2^2 + v3^2 + w3^2: the
// contact condition on the sphere slices of the S^3 factor.
Expr slice_contact_coefficient(const Form& a)
{
    const ChartPtr& chart = a.chart();
    const Expr n = s("v1") * s("v1") + s("v2") * s("v2") + s("v3") * s("v3") + s("w3") * s("w3");
    return sym::top_coefficient(
        sym::wedge(sym::wedge(a, sym::wedge_power(sym::ext_d(a), 2)), sym::ext_d(Form::scalar(chart, n))));
}

// Solves "every coefficient of `difference` vanishes" for unknown parameters
// entering linearly. Returns nullopt if the system is inconsistent or
// underdetermined.
std::optional<std::map<std::string, Rational>> solve_linear(const Form& difference,
                                                            const std::vector<std::string>& unknowns)
{
    const std::set<std::string> names(unknowns.begin(), unknowns.end());
    // one equation per (form monomial, residual coefficient monomial)
    std::map<std::pair<sym::Mask, sym::Monomial>, std::map<std::string, Rational>> rows;
    for (const auto& [mask, coeff] : difference.terms()) {
        const sym::Poly p = sym::to_poly(coeff);
        for (const auto& [mono, c] : p.terms()) {
            sym::Monomial rest = mono;
            std::string unknown;
            for (auto it = rest.powers.begin(); it != rest.powers.end();) {
                if (it->first.kind == sym::AtomKind::Var && names.count(it->first.name)) {
                    if (it->second != 1 || !unknown.empty()) throw std::domain_error("ansatz is not linear");
                    unknown = it->first.name;
                    it = rest.powers.erase(it);
                } else {
                    ++it;
                }
            }
            rows[{mask, rest}][unknown] += c;
        }
    }
    std::vector<std::map<std::string, Rational>> eqs;
    for (auto& [key, row] : rows) eqs.push_back(row);

    std::map<std::string, Rational> solution;
    std::vector<bool> used(eqs.size(), false);
    std::vector<std::pair<std::string, std::size_t>> pivots;
    for (const auto& u : unknowns) {
        std::size_t pivot = eqs.size();
        for (std::size_t i = 0; i < eqs.size(); ++i)
            if (!used[i] && eqs[i].count(u) && eqs[i][u] != 0) {
                pivot = i;
                break;
            }
        if (pivot == eqs.size()) return std::nullopt;
        used[pivot] = true;
        const Rational lead = eqs[pivot][u];
        for (auto& [k, v] : eqs[pivot]) v /= lead;
        for (std::size_t i = 0; i < eqs.size(); ++i) {
            if (i == pivot || !eqs[i].count(u) || eqs[i][u] == 0) continue;
            const Rational factor = eqs[i][u];
            for (const auto& [k, v] : eqs[pivot]) eqs[i][k] -= factor * v;
        }
        pivots.emplace_back(u, pivot);
    }
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (used[i]) continue;
        for (const auto& [k, v] : eqs[i])
            if (v != 0) return std::nullopt;
    }
    for (const auto& [u, row] : pivots) {
        for (const auto& [k, v] : eqs[row])
            if (!k.empty() && k != u && v != 0) return std::nullopt;
        solution[u] = eqs[row].count("") ? Rational(-eqs[row][""]) : Rational(0);
    }
    return solution;
}

}  // namespace

SumModelForms s1_sum_model(Mutation mutation)
{
    const ChartPtr ambient = sym::make_chart({"x1", "y1", "x2", "y2", "x3", "y3"});
    const ChartPtr chart = sym::make_chart({"t", "@theta", "v1", "v2", "v3", "w3"});
    const ChartPtr universal = sym::make_chart({"t", "theta", "v1", "v2", "v3", "w3"});

    Form alpha(ambient, 1);
    for (int i = 1; i <= 3; ++i) {
        const std::string x = "x" + std::to_string(i);
        const std::string y = "y" + std::to_string(i);
        alpha += Expr::symbol(x) * Form::d(ambient, y) - Expr::symbol(y) * Form::d(ambient, x);
    }

    const Expr sp = Expr::sin("phi");
    const Expr cp = Expr::cos("phi");
    const Form alpha0 = standard_shape(chart, s("v1"), Expr(2) * s("v2"));
    const Form alpha_phi =
        standard_shape(universal, s("v1") * cp - s("v2") * sp, Expr(2) * (s("v1") * sp + s("v2") * cp));
    const Form alpha_half_pi = standard_shape(chart, -s("v2"), Expr(2) * s("v1"));

    sym::VectorField x_field(ambient);
    x_field.set("y1", s("y1")).set("y2", s("y2"));
    x_field.set("x3", Expr::rational(1, 2) * s("x3")).set("y3", Expr::rational(1, 2) * s("y3"));

    auto psi_comps = identity_components(chart);
    psi_comps["t"] = MapComponent::value(mutation == Mutation::PsiSign ? s("t") : -s("t"));
    psi_comps["v2"] = MapComponent::value(-s("v2"));

    return {ambient, chart, universal, alpha, alpha0, alpha_phi, alpha_half_pi, x_field,
            CoordMap(chart, chart, psi_comps)};
}

IdentityReport s1_sum_alpha0_derivation(Mutation mutation)
{
    const SumModelForms m = s1_sum_model(mutation);
    IdentityReport r;
    r.claim = "alpha0 = e^{-t} alpha in (t, theta, v1, v2, v3, w3)";
    r.anchor = "alpha0 = dv1 + v1 dt + 2 v2 dtheta + v3 dw3 - w3 dv3 via (x1, x2) = (cos theta, sin theta), "
                     "(y1, y2, x3, y3) = (e^t u1, e^t u2, e^{t/2} v3, e^{t/2} w3)";
    r.mutation = mutation;

    const ChartPtr u_chart = sym::make_chart({"t", "@theta", "u1", "u2", "v3", "w3"});
    const Expr c = Expr::cos("theta");
    const Expr sn = Expr::sin("theta");
    const Expr t = s("t");
    const Expr et = Expr::exp(t);
    const Expr et2 = Expr::exp(Expr::rational(1, 2) * t);
    const CoordMap to_ambient(u_chart, m.ambient,
                              {{"x1", MapComponent::value(c)},
                               {"x2", MapComponent::value(sn)},
                               {"y1", MapComponent::value(et * s("u1"))},
                               {"y2", MapComponent::value(et * s("u2"))},
                               {"x3", MapComponent::value(et2 * s("v3"))},
                               {"y3", MapComponent::value(et2 * s("w3"))}});
    const Form alpha0_u = Expr::exp(-t) * sym::pullback(to_ambient, m.alpha);
    const Form intermediate = (s("u1") * c + s("u2") * sn) * Form::d(u_chart, "t") +
                              (s("u1") * sn - s("u2") * c) * Form::d(u_chart, "theta") +
                              c * Form::d(u_chart, "u1") + sn * Form::d(u_chart, "u2") +
                              s("v3") * Form::d(u_chart, "w3") - s("w3") * Form::d(u_chart, "v3");
    r.add(compare("intermediate form in (u1, u2)", alpha0_u, intermediate));

    // (v1, v2) = (u1 c + u2 s, u1 s - u2 c) is its own inverse.
    const CoordMap u_of_v(m.chart, u_chart,
                          {{"t", MapComponent::value(t)},
                           {"theta", MapComponent::angle({{"theta", 1}})},
                           {"u1", MapComponent::value(s("v1") * c + s("v2") * sn)},
                           {"u2", MapComponent::value(s("v1") * sn - s("v2") * c)},
                           {"v3", MapComponent::value(s("v3"))},
                           {"w3", MapComponent::value(s("w3"))}});
    const CoordMap v_of_u(u_chart, m.chart,
                          {{"t", MapComponent::value(t)},
                           {"theta", MapComponent::angle({{"theta", 1}})},
                           {"v1", MapComponent::value(s("u1") * c + s("u2") * sn)},
                           {"v2", MapComponent::value(s("u1") * sn - s("u2") * c)},
                           {"v3", MapComponent::value(s("v3"))},
                           {"w3", MapComponent::value(s("w3"))}});
    r.add(check("(u1, u2) <-> (v1, v2) are inverse", compose(v_of_u, u_of_v) == CoordMap::identity(m.chart)));

    Form target = m.alpha0;
    if (mutation == Mutation::Alpha0) target = standard_shape(m.chart, s("v1"), s("v2"));
    const Form alpha0_v = sym::pullback(u_of_v, alpha0_u);
    r.add(compare("alpha0 in (v1, v2)", alpha0_v, target));

    const ChartPtr slice = sym::make_chart({"t", "@theta", "v1"});
    const CoordMap inclusion(slice, m.chart,
                             {{"t", MapComponent::value(t)},
                              {"theta", MapComponent::angle({{"theta", 1}})},
                              {"v1", MapComponent::value(s("v1"))},
                              {"v2", MapComponent::value(0)},
                              {"v3", MapComponent::value(0)},
                              {"w3", MapComponent::value(0)}});
    r.add(compare("restriction to v2 = v3 = w3 = 0", sym::pullback(inclusion, alpha0_v),
                  Form::d(slice, "v1") + s("v1") * Form::d(slice, "t")));
    r.data["alpha0"] = sym::to_sexpr(alpha0_v);
    return r;
}

IdentityReport s1_sum_family_verify(Mutation mutation)
{
    const SumModelForms m = s1_sum_model(mutation);
    IdentityReport r;
    r.claim = "alpha_phi is the pullback of alpha0 under a unimodular (t, theta) map";
    r.anchor = "alpha_phi = dv1 + (v1 cos phi - v2 sin phi) dt + 2 (v1 sin phi + v2 cos phi) dtheta + v3 dw3 - "
                     "w3 dv3; (t, theta) -> (t cos phi + 2 theta sin phi, -(t/2) sin phi + theta cos phi)";
    r.mutation = mutation;
    r.assumptions = {
        "The isotopy from Gray stability is not constructed; the exact pullback identity for alpha_phi is its "
        "algebraic content.",
        "A neighbourhood of Sigma is identified with all of Sigma x R; this has no finite algebraic certificate and "
        "is taken as given."};

    const ChartPtr u = m.universal;
    const Expr sp = Expr::sin("phi");
    const Expr cp = Expr::cos("phi");
    const Expr t = s("t");
    const Expr th = s("theta");
    const Form alpha0 = standard_shape(u, s("v1"), Expr(2) * s("v2"));

    // (a) contact coefficient on the S^3 slices
    const Expr k0 = slice_contact_coefficient(alpha0);
    const Expr k_phi = slice_contact_coefficient(m.alpha_phi);
    r.add(compare("contact coefficient independent of phi", k_phi, k0,
                  "alpha ^ (d alpha)^2 ^ dN, N = v1^2 + v2^2 + v3^2 + w3^2"));
    r.add(check("contact coefficient free of phi", sym::free_symbols(k_phi).angular.count("phi") == 0));
    r.data["contact_coefficient"] = sym::to_sexpr(k_phi);

    // (b) induced (v1, v2) map from a linear ansatz
    const Expr big_t = t * cp + Expr(2) * th * sp;
    const Expr big_theta = -Expr::rational(1, 2) * t * sp + th * cp;
    const std::vector<std::string> unknowns{"m11", "m12", "m21", "m22"};
    auto map_with = [&](const Expr& v1, const Expr& v2) {
        return CoordMap(u, u,
                        {{"t", MapComponent::value(big_t)},
                         {"theta", MapComponent::value(big_theta)},
                         {"v1", MapComponent::value(v1)},
                         {"v2", MapComponent::value(v2)},
                         {"v3", MapComponent::value(s("v3"))},
                         {"w3", MapComponent::value(s("w3"))}});
    };
    const CoordMap ansatz = map_with(s("m11") * s("v1") + s("m12") * s("v2"), s("m21") * s("v1") + s("m22") * s("v2"));
    const auto solution = solve_linear(sym::pullback(ansatz, alpha0) - m.alpha_phi, unknowns);
    r.add(check("induced (v1, v2) map determined", solution.has_value()));
    if (solution) {
        auto entry = [&](const char* k) { return Expr(solution->at(k)); };
        const Expr v1 = entry("m11") * s("v1") + entry("m12") * s("v2");
        const Expr v2 = entry("m21") * s("v1") + entry("m22") * s("v2");
        const CoordMap full = map_with(v1, v2);
        r.add(compare("alpha_phi = pullback of alpha0", sym::pullback(full, alpha0), m.alpha_phi));
        nlohmann::json map;
        for (std::size_t i = 0; i < u->dimension(); ++i)
            map[u->coord(i).name] = sym::to_sexpr(full.component(i).expr);
        r.data["map"] = map;
        r.detail = "induced (v1, v2) map: v1 -> " + sym::to_sexpr(v1) + ", v2 -> " + sym::to_sexpr(v2);
    }
    const Expr jac = cp * cp - (Expr(2) * sp) * (-Expr::rational(1, 2) * sp);
    r.add(compare("(t, theta) map is unimodular", jac, Expr(1)));

    // (c) endpoints
    sym::Substitution at_zero;
    at_zero.trig["phi"] = {Expr(0), Expr(1)};
    sym::Substitution at_half_pi;
    at_half_pi.trig["phi"] = {Expr(1), Expr(0)};
    r.add(compare("phi = 0 gives alpha0", m.alpha_phi.map_coefficients(at_zero), alpha0));
    r.add(compare("phi = pi/2 gives alpha_{pi/2}", m.alpha_phi.map_coefficients(at_half_pi),
                  standard_shape(u, -s("v2"), Expr(2) * s("v1"))));
    return r;
}

IdentityReport s1_sum_psi_verify(Mutation mutation)
{
    const SumModelForms m = s1_sum_model(mutation);
    IdentityReport r;
    r.claim = "psi is a contactomorphism of ker alpha_{pi/2} reversing Sigma and its normal";
    r.anchor = "psi: (t, theta, v1, v2, v3, w3) -> (-t, theta, v1, -v2, v3, w3)";
    r.mutation = mutation;
    const ChartPtr ch = m.chart;
    r.add(compare("psi^* alpha_{pi/2} = alpha_{pi/2}", sym::pullback(m.psi, m.alpha_half_pi), m.alpha_half_pi));
    r.add(check("psi o psi = id", compose(m.psi, m.psi) == CoordMap::identity(ch)));
    r.add(compare("psi^* dt = -dt", sym::pullback(m.psi, Form::d(ch, "t")), -Form::d(ch, "t")));
    const Form sigma = Form::monomial(ch, {"theta", "v1", "v2", "v3", "w3"});
    r.add(compare("psi^* vol_Sigma = -vol_Sigma", sym::pullback(m.psi, sigma), -sigma));
    return r;
}

IdentityReport verify_contact_field(Mutation mutation)
{
    const SumModelForms m = s1_sum_model(mutation);
    IdentityReport r;
    r.claim = "X is a contact vector field and alpha0 is invariant under d_t";
    r.anchor = "X = y1 d_y1 + y2 d_y2 + (1/2) x3 d_x3 + (1/2) y3 d_y3 preserves ker alpha";
    r.mutation = mutation;
    r.add(compare("L_X alpha = alpha", sym::lie_derivative(m.contact_field, m.alpha), m.alpha));
    r.add(compare("alpha(X) = x1 y1 + x2 y2", sym::apply(m.alpha, m.contact_field),
                  s("x1") * s("y1") + s("x2") * s("y2")));
    r.add(compare("L_{d_t} alpha0 = 0", sym::lie_derivative(sym::VectorField::partial(m.chart, "t"), m.alpha0),
                  Form(m.chart, 1)));
    return r;
}

std::vector<IdentityReport> s1_sum_suite(Mutation mutation, unsigned threads)
{
    using Fn = IdentityReport (*)(Mutation);
    const std::vector<Fn> fns{s1_sum_alpha0_derivation, s1_sum_family_verify, s1_sum_psi_verify, verify_contact_field};
    std::vector<IdentityReport> out(fns.size());
    if (sym::worker_count(threads) <= 1) {
        for (std::size_t i = 0; i < fns.size(); ++i) out[i] = fns[i](mutation);
        return out;
    }
    std::vector<std::future<IdentityReport>> jobs;
    for (Fn fn : fns) jobs.push_back(std::async(std::launch::async, fn, mutation));
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i].get();
    return out;
}

}  // namespace contact_forge::gluing
