#include "contact_forge/gluing/interpolants.hpp"

#include "contact_forge/gluing/jet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace contact_forge::gluing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// h(s) = exp(-1/s) for s > 0 and its first two derivatives.
struct HValues {
    double v, d1, d2;
};

HValues h_values(double s)
{
    if (s <= 0) return {0.0, 0.0, 0.0};
    const double e = std::exp(-1.0 / s);
    const double s2 = s * s;
    return {e, e / s2, e * (1.0 - 2.0 * s) / (s2 * s2)};
}

struct HIntervals {
    Interval v, d1, d2;
};

HIntervals hull(const HIntervals& a, const HIntervals& b)
{
    return {sym::hull(a.v, b.v), sym::hull(a.d1, b.d1), sym::hull(a.d2, b.d2)};
}

HIntervals h_values(const Interval& s)
{
    const HIntervals zero{Interval(0.0), Interval(0.0), Interval(0.0)};
    if (s.hi <= 0) return zero;
    if (s.lo < 0) return hull(zero, h_values(Interval(0.0, s.hi)));
    if (s.lo >= 0.1) {
        const Interval e = sym::exp(Interval(-1.0) / s);
        const Interval s2 = sym::sqr(s);
        return {e, e / s2, e * (Interval(1.0) - Interval(2.0) * s) / sym::sqr(s2)};
    }
    if (s.hi > 0.2) return hull(h_values(Interval(s.lo, 0.1)), h_values(Interval(0.1, s.hi)));
    // h, h', h'' are nonnegative and increasing on [0, 0.2]
    if (s.hi <= 0.01) return {Interval(0.0, 1e-30), Interval(0.0, 1e-30), Interval(0.0, 1e-30)};
    const HIntervals top = h_values(Interval(std::max(s.hi, 0.1)));
    if (s.hi >= 0.1) return {Interval(0.0, top.v.hi), Interval(0.0, top.d1.hi), Interval(0.0, top.d2.hi)};
    const Interval x(s.hi);
    const Interval e = sym::exp(Interval(-1.0) / x);
    const Interval x2 = sym::sqr(x);
    const Interval d2 = e * (Interval(1.0) - Interval(2.0) * x) / sym::sqr(x2);
    return {Interval(0.0, e.hi), Interval(0.0, (e / x2).hi), Interval(0.0, d2.hi)};
}

template <class T>
Jet<T> h_jet(const Jet<T>& s)
{
    const auto h = h_values(s.v);
    return compose(s, h.v, h.d1, h.d2);
}

template <class T>
Jet<T> smoothstep(const Jet<T>& s)
{
    const Jet<T> a = h_jet(s);
    const Jet<T> b = h_jet(Jet<T>::constant(T(1.0)) - s);
    return a / (a + b);
}

template <class T>
struct PairJet {
    Jet<T> f, g;
};

// -1 <= t <= -1 + delta: blended phase and radius.
template <class T>
PairJet<T> blend_piece(const T& t, const SmoothingParams& p)
{
    const Jet<T> one = Jet<T>::constant(T(1.0));
    const Jet<T> tj = Jet<T>::variable(t);
    const Jet<T> u = exp(tj + one);
    const Jet<T> phi_l = atan(u) - Jet<T>::constant(T(kPi / 2));
    const Jet<T> rho_l = sqrt(one + u * u);
    const Jet<T> chi = smoothstep(T(1.0 / p.delta) * (tj + one));
    const Jet<T> phi = (one - chi) * phi_l + chi * (T(p.slope) * tj);
    const Jet<T> rho = (one - chi) * rho_l + T(kSqrt2) * chi;
    return {rho * cos(phi), -(rho * sin(phi))};
}

// -1 + delta <= t <= 0: phi = slope * t, rho = sqrt(2).
template <class T>
PairJet<T> linear_piece(const T& t, const SmoothingParams& p)
{
    const Jet<T> phi = T(p.slope) * Jet<T>::variable(t);
    return {T(kSqrt2) * cos(phi), -(T(kSqrt2) * sin(phi))};
}

// t <= -1: (e^{t+1}, 1).
template <class T>
PairJet<T> left_piece(const T& t)
{
    using std::exp;
    const T e = exp(t + T(1.0));
    return {{e, e, e}, Jet<T>::constant(T(1.0))};
}

PairJet<double> half_jet(double t, const SmoothingParams& p)
{
    if (t <= -1.0) return left_piece(t);
    if (t < -1.0 + p.delta) return blend_piece(t, p);
    return linear_piece(t, p);
}

PairJet<Interval> hull(const PairJet<Interval>& a, const PairJet<Interval>& b)
{
    auto h = [](const Jet<Interval>& x, const Jet<Interval>& y) {
        return Jet<Interval>{sym::hull(x.v, y.v), sym::hull(x.d1, y.d1), sym::hull(x.d2, y.d2)};
    };
    return {h(a.f, b.f), h(a.g, b.g)};
}

// Enclosure on t <= 0, split at the piece boundaries.
PairJet<Interval> half_jet(const Interval& t, const SmoothingParams& p)
{
    const double b1 = -1.0;
    const double b2 = -1.0 + p.delta;
    if (t.lo < b1 && t.hi > b1) return hull(half_jet(Interval(t.lo, b1), p), half_jet(Interval(b1, t.hi), p));
    if (t.lo < b2 && t.hi > b2) return hull(half_jet(Interval(t.lo, b2), p), half_jet(Interval(b2, t.hi), p));
    if (t.hi <= b1) return left_piece(t);
    if (t.hi <= b2) return blend_piece(t, p);
    return linear_piece(t, p);
}

double sign_for(int k) { return k % 2 ? -1.0 : 1.0; }

class Component : public sym::FunctionInstance {
public:
    Component(const InterpolantPair& pair, bool is_f) : pair_(pair.epsilon(), pair.params()), is_f_(is_f) {}
    int max_order() const override { return 2; }
    double value(int k, double t) const override { return is_f_ ? pair_.f(t, k) : pair_.g(t, k); }
    Interval enclose(int k, const Interval& t) const override
    {
        return is_f_ ? pair_.enclose_f(t, k) : pair_.enclose_g(t, k);
    }

private:
    InterpolantPair pair_;
    bool is_f_;
};

}  // namespace

InterpolantPair::InterpolantPair(double epsilon, SmoothingParams params) : epsilon_(epsilon), params_(params)
{
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (!(params.delta > 0.0 && params.delta <= 1.0)) throw std::invalid_argument("delta must lie in (0, 1]");
    if (!(params.slope >= 0.5 && params.slope <= kPi / 4)) throw std::invalid_argument("slope must lie in [1/2, pi/4]");
}

double InterpolantPair::f(double t, int k) const
{
    if (k < 0 || k > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
    if (t > 0) return sign_for(k) * half_jet(-t, params_).f[k];
    return half_jet(t, params_).f[k];
}

double InterpolantPair::g(double t, int k) const
{
    if (k < 0 || k > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
    if (t > 0) return -sign_for(k) * half_jet(-t, params_).g[k];
    return half_jet(t, params_).g[k];
}

double InterpolantPair::wronskian(double t) const { return f(t, 1) * g(t) - f(t) * g(t, 1); }

Interval InterpolantPair::enclose_f(const Interval& t, int k) const
{
    if (k < 0 || k > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
    if (t.lo < 0 && t.hi > 0) return sym::hull(enclose_f(Interval(t.lo, 0.0), k), enclose_f(Interval(0.0, t.hi), k));
    if (t.lo >= 0 && t.hi > 0) {
        const Interval r = half_jet(-t, params_).f[k];
        return k % 2 ? -r : r;
    }
    return half_jet(t, params_).f[k];
}

Interval InterpolantPair::enclose_g(const Interval& t, int k) const
{
    if (k < 0 || k > 2) throw std::invalid_argument("derivative order must be 0, 1 or 2");
    if (t.lo < 0 && t.hi > 0) return sym::hull(enclose_g(Interval(t.lo, 0.0), k), enclose_g(Interval(0.0, t.hi), k));
    if (t.lo >= 0 && t.hi > 0) {
        const Interval r = half_jet(-t, params_).g[k];
        return k % 2 ? r : -r;
    }
    return half_jet(t, params_).g[k];
}

sym::FunctionTable InterpolantPair::functions() const
{
    return {{"f", std::make_shared<Component>(*this, true)}, {"g", std::make_shared<Component>(*this, false)}};
}

Interval InterpolantPair::certified_box() const { return Interval(-1.0 - epsilon_ / 2, 1.0 + epsilon_ / 2); }

std::vector<double> symmetric_grid(double epsilon, std::size_t n)
{
    if (n < 2) throw std::invalid_argument("grid needs at least two points");
    const double half_width = 1.0 + epsilon;
    const double m = static_cast<double>(n - 1) / 2.0;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double k = static_cast<double>(i);
        grid[i] = k < m ? -(half_width * (m - k)) / m : (half_width * (k - m)) / m;
    }
    for (std::size_t i = 0; i < n / 2; ++i) grid[n - 1 - i] = -grid[i];
    return grid;
}

InterpolantPair build_interpolants(double epsilon, SmoothingParams params, std::size_t grid_n)
{
    InterpolantPair pair(epsilon, params);
    const sym::Expr t = sym::Expr::symbol("t");
    const sym::Expr w = sym::Expr::func("f", "t", 1) * sym::Expr::func("g", "t") -
                        sym::Expr::func("f", "t") * sym::Expr::func("g", "t", 1);
    pair.certification_ =
        sym::certify_positive(w, {{"t", pair.certified_box()}}, grid_n, sym::BoundMode::PerCell, pair.functions());
    pair.grid_ = symmetric_grid(epsilon, grid_n);
    if (!pair.certification_.certified) {
        const double at = pair.certification_.worst_point.at("t");
        std::ostringstream msg;
        msg << "f'g - fg' not certified positive: bound " << pair.certification_.margin << " at t = " << at;
        throw CertificationFailure(msg.str(), at, pair.certification_.margin);
    }
    return pair;
}

}  // namespace contact_forge::gluing
