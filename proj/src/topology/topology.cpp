#include "contact_forge/topology/topology.hpp"

#include "contact_forge/legendrian/legendrian.hpp"

#include <sstream>
#include <stdexcept>

namespace contact_forge::topology {

bool operator==(const SurfaceData& a, const SurfaceData& b)
{
    return a.genus == b.genus && a.self_intersection == b.self_intersection && a.c1_evaluation == b.c1_evaluation;
}

SurfaceData adjunction_solve(const AdjunctionInput& known)
{
    const int given = known.genus.has_value() + known.self_intersection.has_value() + known.c1_evaluation.has_value();
    if (given != 2) throw std::invalid_argument("exactly two of genus, self-intersection, c1 must be given");
    SurfaceData s;
    if (!known.genus) {
        const long twice = *known.self_intersection - *known.c1_evaluation + 2;
        if (twice % 2 != 0) throw std::domain_error("adjunction gives a non-integer genus");
        if (twice < 0) throw std::domain_error("adjunction gives a negative genus");
        s = {twice / 2, *known.self_intersection, *known.c1_evaluation};
    } else {
        if (*known.genus < 0) throw std::domain_error("genus must be nonnegative");
        const long chi_term = 2 * *known.genus - 2;
        if (known.self_intersection)
            s = {*known.genus, *known.self_intersection, *known.self_intersection - chi_term};
        else
            s = {*known.genus, chi_term + *known.c1_evaluation, *known.c1_evaluation};
    }
    return s;
}

std::string to_string(SpecialCase c)
{
    switch (c) {
    case SpecialCase::Generic: return "generic";
    case SpecialCase::Torus: return "torus";
    case SpecialCase::Lens: return "lens L(4,1)";
    }
    return "generic";
}

bool DecompositionReport::routes_agree() const
{
    return chern_plus == chern_via_rot_plus && chern_minus == chern_via_rot_minus;
}

DecompositionReport cp2_decomposition(long d)
{
    if (d < 2) throw std::invalid_argument("degree must be at least 2");
    DecompositionReport r;
    r.d = d;

    // closed forms
    r.self_intersection = d * d;
    r.euler = -d * d;
    r.chern_plus = 2 * d - 3;
    r.chern_minus = -(2 * d - 3);
    r.stein_inequality = 3 * d - 2 * d * d;

    // adjunction, surgery count, stabilization chain
    const SurfaceData curve = adjunction_solve({std::nullopt, d * d, kC1OfLine * d});
    r.genus = curve.genus;
    r.stab_count = 2 * r.genus - 2 - r.euler;
    const auto g = static_cast<int>(r.genus);
    const auto n = static_cast<std::size_t>(r.stab_count);
    using legendrian::StabSign;
    const auto plus = legendrian::stabilize(legendrian::base_knot(g), std::vector<StabSign>(n, StabSign::Plus));
    const auto minus = legendrian::stabilize(legendrian::base_knot(g), std::vector<StabSign>(n, StabSign::Minus));
    r.rot_plus = plus.rot;
    r.rot_minus = minus.rot;
    if (r.rot_plus % d != 0 || r.rot_minus % d != 0) throw std::logic_error("d does not divide the rotation number");
    r.chern_via_rot_plus = r.rot_plus / d;
    r.chern_via_rot_minus = r.rot_minus / d;

    r.stein_ok = stein_disc_bundle_check(r.genus, r.euler);
    if (d == 2) {
        r.special_case = SpecialCase::Lens;
        r.annotations = {"boundary L(4,1) from contact (-1)-surgery on S+-^2 K0, smooth framing -4",
                         "pi_1(W1) = Z_2 (quoted, not computed)"};
    } else if (d == 3) {
        r.special_case = SpecialCase::Torus;
        r.annotations = {"base torus, e = -9"};
    }
    return r;
}

CoverageResult odd_class_coverage(long max_d)
{
    if (max_d < 2) throw std::invalid_argument("max_d must be at least 2");
    CoverageResult c;
    for (long d = 2; d <= max_d; ++d) c.values.push_back(2 * d - 3);
    std::size_t i = 0;
    for (long odd = 1; odd <= 2 * max_d - 3; odd += 2) {
        while (i < c.values.size() && c.values[i] < odd) ++i;
        if (i == c.values.size() || c.values[i] != odd) c.gaps.push_back(odd);
    }
    return c;
}

bool stein_disc_bundle_check(long genus, long euler)
{
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    return euler + (2 - 2 * genus) <= 0;
}

RuledPiece ruled_surface_piece(bool trivial_bundle, long genus)
{
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    const long bound = 2 * genus - 2;
    const long max_e = trivial_bundle ? bound : bound - 1;
    if (!stein_disc_bundle_check(genus, max_e)) throw std::logic_error("no admissible Euler number");
    return {trivial_bundle ? "even" : "odd", max_e};
}

std::string to_string(BundleSignClass c)
{
    switch (c) {
    case BundleSignClass::Positive: return "positive";
    case BundleSignClass::Negative: return "negative";
    case BundleSignClass::Both: return "both";
    case BundleSignClass::Neither: return "neither";
    }
    return "neither";
}

BundleData euler_from_curvature(long curvature_over_2pi, long base_genus, int base_dim)
{
    if (base_dim < 2 || base_dim % 2 != 0) throw std::invalid_argument("base dimension must be even and positive");
    BundleData b;
    b.base_genus = base_genus;
    b.base_dim = base_dim;
    b.euler = -curvature_over_2pi;
    b.dim_4m_remark = base_dim % 4 == 0;
    if (b.euler == 0)
        b.sign_class = BundleSignClass::Neither;
    else if (b.dim_4m_remark)
        b.sign_class = BundleSignClass::Both;
    else
        b.sign_class = b.euler > 0 ? BundleSignClass::Positive : BundleSignClass::Negative;
    switch (b.sign_class) {
    case BundleSignClass::Positive: b.filling_side = "concave"; break;
    case BundleSignClass::Negative: b.filling_side = "convex"; break;
    case BundleSignClass::Both: b.filling_side = "concave or convex"; break;
    case BundleSignClass::Neither: b.filling_side = "none"; break;
    }
    return b;
}

nlohmann::json to_json(const DecompositionReport& r)
{
    return {{"d", r.d},
            {"genus", r.genus},
            {"self_intersection", r.self_intersection},
            {"e", r.euler},
            {"stabs", r.stab_count},
            {"rot", {r.rot_plus, r.rot_minus}},
            {"chern", {r.chern_plus, r.chern_minus}},
            {"chern_via_rot", {r.chern_via_rot_plus, r.chern_via_rot_minus}},
            {"stein_inequality", r.stein_inequality},
            {"stein_ok", r.stein_ok},
            {"case", to_string(r.special_case)},
            {"routes_agree", r.routes_agree()},
            {"annotations", r.annotations}};
}

std::string to_csv(const std::vector<DecompositionReport>& rows)
{
    std::ostringstream out;
    out << "d,genus,e,stabs,rot_plus,rot_minus,chern_plus,chern_minus,stein_ok,case\n";
    for (const auto& r : rows)
        out << r.d << ',' << r.genus << ',' << r.euler << ',' << r.stab_count << ',' << r.rot_plus << ','
            << r.rot_minus << ',' << r.chern_plus << ',' << r.chern_minus << ',' << (r.stein_ok ? "true" : "false")
            << ',' << to_string(r.special_case) << '\n';
    return out.str();
}

}  // namespace contact_forge::topology
