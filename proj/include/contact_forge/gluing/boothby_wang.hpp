#pragma once

#include "contact_forge/gluing/report.hpp"

namespace contact_forge::gluing {

enum class BundleSign { Positive, Negative };

std::string to_string(BundleSign s);

/// Local model on (r, theta, x, y) with base form omega = dx ^ dy.
struct BoothbyWangModel {
    BundleSign sign;
    sym::ChartPtr chart;
    sym::Form omega;
    /// dtheta -+ (x dy - y dx)/2, so d alpha = -+ omega.
    sym::Form alpha;
    /// (1/2) d(r^2 alpha) + omega.
    sym::Form big_omega;
    /// ((r^2 -+ 2) / 2r) d_r.
    sym::VectorField liouville;
};

BoothbyWangModel boothby_wang_model(BundleSign sign, Mutation mutation = Mutation::None);

struct BoothbyWangOptions {
    double r_min = 0.5;
    double r_max = 2.0;
    std::size_t grid_n = 2001;
};

/// (a) top coefficient of Omega ^ Omega certified positive for r in
/// [r_min, r_max], (b) d(i_X Omega) = Omega, (c) X.r at r = 1 equals (1 -+ 2)/2.
IdentityReport boothby_wang_verify(BundleSign sign, const BoothbyWangOptions& options = {},
                                   Mutation mutation = Mutation::None);

}  // namespace contact_forge::gluing
