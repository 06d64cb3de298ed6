#include "contact_forge/symcalc/interval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace contact_forge::sym {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double v) { return std::isfinite(v) ? std::nextafter(v, -kInf) : v; }
double up(double v) { return std::isfinite(v) ? std::nextafter(v, kInf) : v; }

Interval widened(double lo, double hi) { return Interval(down(lo), up(hi)); }

}  // namespace

Interval::Interval(double l, double h) : lo(l), hi(h)
{
    if (std::isnan(l) || std::isnan(h) || l > h) throw std::domain_error("invalid interval");
}

double Interval::mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

Interval hull(const Interval& a, const Interval& b) { return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi)); }

Interval operator+(const Interval& a, const Interval& b) { return widened(a.lo + b.lo, a.hi + b.hi); }
Interval operator-(const Interval& a, const Interval& b) { return widened(a.lo - b.hi, a.hi - b.lo); }
Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b)
{
    auto prod = [](double x, double y) { return (x == 0.0 || y == 0.0) ? 0.0 : x * y; };
    const double p[] = {prod(a.lo, b.lo), prod(a.lo, b.hi), prod(a.hi, b.lo), prod(a.hi, b.hi)};
    return widened(*std::min_element(std::begin(p), std::end(p)), *std::max_element(std::begin(p), std::end(p)));
}

Interval operator/(const Interval& a, const Interval& b)
{
    if (b.contains_zero()) return Interval(-kInf, kInf);
    return a * widened(1.0 / b.hi, 1.0 / b.lo);
}

Interval sqr(const Interval& a)
{
    const double l = a.lo * a.lo;
    const double h = a.hi * a.hi;
    if (a.contains_zero()) return Interval(0.0, up(std::max(l, h)));
    return widened(std::min(l, h), std::max(l, h));
}

Interval pow(const Interval& a, int k)
{
    if (k == 0) return Interval(1.0);
    if (k < 0) return Interval(1.0) / pow(a, -k);
    if (k % 2 == 0) {
        Interval s = sqr(a);
        return k == 2 ? s : pow(s, k / 2);
    }
    // odd powers are monotone
    return widened(std::pow(a.lo, k), std::pow(a.hi, k));
}

Interval exp(const Interval& a) { return Interval(std::max(0.0, down(std::exp(a.lo))), up(std::exp(a.hi))); }

Interval sin(const Interval& a)
{
    return cos(a - Interval(std::numbers::pi / 2));
}

Interval cos(const Interval& a)
{
    if (!a.bounded() || a.hi - a.lo >= 2 * std::numbers::pi) return Interval(-1.0, 1.0);
    double lo = std::min(std::cos(a.lo), std::cos(a.hi));
    double hi = std::max(std::cos(a.lo), std::cos(a.hi));
    // extrema at multiples of pi inside the interval
    const double first = std::ceil(a.lo / std::numbers::pi);
    for (double k = first; k * std::numbers::pi <= a.hi; k += 1.0) {
        if (std::fmod(std::fabs(k), 2.0) == 0.0)
            hi = 1.0;
        else
            lo = -1.0;
    }
    return Interval(std::max(-1.0, down(lo)), std::min(1.0, up(hi)));
}

Interval atan(const Interval& a) { return widened(std::atan(a.lo), std::atan(a.hi)); }

Interval sqrt(const Interval& a)
{
    if (a.lo < 0) throw std::domain_error("sqrt of an interval reaching below zero");
    return Interval(std::max(0.0, down(std::sqrt(a.lo))), up(std::sqrt(a.hi)));
}

namespace {

template <class Scalar, class Env, class Lookup, class Func>
Scalar eval_poly(const Poly& p, const Env& env, Lookup value_of, Func func_value)
{
    using std::cos;
    using std::exp;
    using std::sin;
    Scalar total(0.0);
    for (const auto& [m, c] : p.terms()) {
        Scalar term(c.get_d());
        for (const auto& [atom, k] : m.powers) {
            Scalar base(0.0);
            switch (atom.kind) {
            case AtomKind::Var: base = value_of(atom.name); break;
            case AtomKind::Sin: base = sin(value_of(atom.name)); break;
            case AtomKind::Cos: base = cos(value_of(atom.name)); break;
            case AtomKind::Func: base = func_value(atom); break;
            }
            if constexpr (std::is_same_v<Scalar, double>)
                term = term * std::pow(base, k);
            else
                term = term * pow(base, k);
        }
        if (m.has_exp()) {
            Scalar arg(m.exp_const.get_d());
            for (const auto& [name, a] : m.exp_linear) arg = arg + Scalar(a.get_d()) * value_of(name);
            term = term * exp(arg);
        }
        total = total + term;
    }
    (void)env;
    return total;
}

const FunctionInstance& lookup_function(const FunctionTable& table, const Atom& atom)
{
    auto it = table.find(atom.name);
    if (it == table.end() || !it->second) throw std::invalid_argument("uninstantiated abstract function " + atom.name);
    if (atom.order > it->second->max_order())
        throw std::invalid_argument("derivative order too high for function " + atom.name);
    return *it->second;
}

}  // namespace

double evaluate(const Expr& e, const NumericEnv& env)
{
    auto value_of = [&](const std::string& n) {
        auto it = env.values.find(n);
        if (it == env.values.end()) throw std::invalid_argument("no value for symbol " + n);
        return it->second;
    };
    auto func_value = [&](const Atom& a) {
        return lookup_function(env.functions, a).value(a.order, value_of(a.arg));
    };
    return eval_poly<double>(to_poly(e), env, value_of, func_value);
}

Interval enclose(const Expr& e, const IntervalEnv& env)
{
    auto value_of = [&](const std::string& n) {
        auto it = env.values.find(n);
        if (it == env.values.end()) throw std::invalid_argument("no interval for symbol " + n);
        return it->second;
    };
    auto func_value = [&](const Atom& a) {
        return lookup_function(env.functions, a).enclose(a.order, value_of(a.arg));
    };
    return eval_poly<Interval>(to_poly(e), env, value_of, func_value);
}

}  // namespace contact_forge::sym
