#pragma once

#include "contact_forge/symcalc/certify.hpp"

#include <memory>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace contact_forge::gluing {

using sym::Interval;

/// Shape of the interpolating curve (g, f) = rho (cos psi, sin psi),
/// psi = pi/2 + phi.
///
/// On t <= -1 the pair is (f, g) = (e^{t+1}, 1). On (-1, -1 + delta) the
/// phase phi and radius rho are blended with a smooth step into phi = slope * t
/// and rho = sqrt(2), which hold up to t = 0; t > 0 is obtained by reflection
/// (f even, g odd). f'g - fg' = rho^2 phi' is positive for
/// slope in [1/2, pi/4] and delta in (0, 1].
struct SmoothingParams {
    double delta = 0.5;
    double slope = std::numbers::pi / 4;
};

class CertificationFailure : public std::runtime_error {
public:
    CertificationFailure(const std::string& what, double t, double value)
        : std::runtime_error(what), t_(t), value_(value)
    {
    }
    double t() const { return t_; }
    double value() const { return value_; }

private:
    double t_;
    double value_;
};

class InterpolantPair {
public:
    InterpolantPair(double epsilon, SmoothingParams params);

    double epsilon() const { return epsilon_; }
    const SmoothingParams& params() const { return params_; }

    /// k-th derivative (k <= 2) of f and g.
    double f(double t, int k = 0) const;
    double g(double t, int k = 0) const;
    /// f'g - fg'.
    double wronskian(double t) const;

    /// Enclosures of the k-th derivatives over an interval of t.
    Interval enclose_f(const Interval& t, int k) const;
    Interval enclose_g(const Interval& t, int k) const;

    /// Instances named "f" and "g" for certify_positive.
    sym::FunctionTable functions() const;

    /// Certification of f'g - fg' on [-1 - eps/2, 1 + eps/2].
    const sym::CertificationReport& certification() const { return certification_; }
    double margin() const { return certification_.margin; }
    const std::vector<double>& sample_grid() const { return grid_; }

    /// Certified box [-1 - eps/2, 1 + eps/2].
    Interval certified_box() const;

private:
    friend InterpolantPair build_interpolants(double, SmoothingParams, std::size_t);

    double epsilon_;
    SmoothingParams params_;
    sym::CertificationReport certification_;
    std::vector<double> grid_;
};

/// Builds and certifies the pair; throws std::invalid_argument for epsilon
/// outside (0, 1) or parameters outside their valid ranges, and
/// CertificationFailure (carrying the offending point) if the margin is not
/// positive.
InterpolantPair build_interpolants(double epsilon, SmoothingParams params = {}, std::size_t grid_n = 2001);

/// grid_n points on [-1 - eps, 1 + eps], symmetric about 0 bit for bit.
std::vector<double> symmetric_grid(double epsilon, std::size_t n);

}  // namespace contact_forge::gluing
