#pragma once

#include "contact_forge/gluing/report.hpp"

namespace contact_forge::gluing {

enum class Region { W1Interior, Collar, W2Interior };

std::string to_string(Region r);

struct RegionForm {
    Region region;
    sym::ChartPtr chart;
    sym::Form alpha;
};

/// (t, z, x1, y1, ..., x_{n-1}, y_{n-1}, theta) for 2 <= n <= 4; theta angular.
sym::ChartPtr collar_chart(int n);

/// Darboux form dz + sum x_i dy_i on a collar chart.
sym::Form darboux_beta(const sym::ChartPtr& chart);

/// Collar: f(t) beta + g(t) dtheta with abstract f, g. W1: e^t beta + dtheta.
/// W2: e^t beta - dtheta. Throws std::invalid_argument for n outside [2, 4].
RegionForm product_alpha(int n, Region region, Mutation mutation = Mutation::None);

/// alpha ^ (d alpha)^n on the collar against n f^{n-1}(f'g - fg') dt ^ beta ^
/// (d beta)^{n-1} ^ dtheta, the interior regions against +-(d lambda)^n ^ dtheta,
/// and agreement of the region forms on the collar ends.
IdentityReport verify_product_identity(int n, Mutation mutation = Mutation::None);

/// i_{d_t} omega = e^t beta and L_{d_t} omega = omega for omega = d(e^t beta).
IdentityReport verify_collar_liouville();

}  // namespace contact_forge::gluing
