#pragma once

#include "contact_forge/gluing/report.hpp"
#include "contact_forge/symcalc/coord_map.hpp"

#include <vector>

namespace contact_forge::gluing {

/// Forms of the circle-sum model.
///  - ambient: (x1, y1, x2, y2, x3, y3) with alpha = sum x_i dy_i - y_i dx_i
///  - chart: (t, theta, v1, v2, v3, w3), theta angular
///  - universal: the same names with theta linear (universal cover)
struct SumModelForms {
    sym::ChartPtr ambient;
    sym::ChartPtr chart;
    sym::ChartPtr universal;
    sym::Form alpha;
    /// dv1 + v1 dt + 2 v2 dtheta + v3 dw3 - w3 dv3, on `chart`.
    sym::Form alpha0;
    /// On `universal`; phi enters through sin(phi), cos(phi).
    sym::Form alpha_phi;
    /// dv1 - v2 dt + 2 v1 dtheta + v3 dw3 - w3 dv3, on `chart`.
    sym::Form alpha_half_pi;
    /// y1 d_y1 + y2 d_y2 + x3/2 d_x3 + y3/2 d_y3 on `ambient`.
    sym::VectorField contact_field;
    /// (t, theta, v1, v2, v3, w3) -> (-t, theta, v1, -v2, v3, w3).
    sym::CoordMap psi;
};

SumModelForms s1_sum_model(Mutation mutation = Mutation::None);

IdentityReport s1_sum_alpha0_derivation(Mutation mutation = Mutation::None);
IdentityReport s1_sum_family_verify(Mutation mutation = Mutation::None);
IdentityReport s1_sum_psi_verify(Mutation mutation = Mutation::None);
IdentityReport verify_contact_field(Mutation mutation = Mutation::None);

/// The four reports above, in that order, computed concurrently.
std::vector<IdentityReport> s1_sum_suite(Mutation mutation = Mutation::None, unsigned threads = 0);

}  // namespace contact_forge::gluing
