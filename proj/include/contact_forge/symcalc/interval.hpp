#pragma once

#include "contact_forge/symcalc/expr.hpp"

#include <map>
#include <memory>
#include <string>

namespace contact_forge::sym {

/// Closed interval with outward-rounded endpoints (each operation widens its
/// result by one ulp on both sides).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h);

    double mid() const { return 0.5 * (lo + hi); }
    double radius() const { return 0.5 * (hi - lo); }
    double mag() const;
    bool contains(double v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return contains(0.0); }
    bool bounded() const;
};

Interval hull(const Interval& a, const Interval& b);
Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);
Interval pow(const Interval& a, int k);
Interval sqr(const Interval& a);
Interval exp(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval atan(const Interval& a);
Interval sqrt(const Interval& a);

/// A numerically instantiated abstract function together with its
/// derivatives up to `max_order()`.
class FunctionInstance {
public:
    virtual ~FunctionInstance() = default;
    virtual int max_order() const = 0;
    virtual double value(int order, double t) const = 0;
    /// Enclosure of the order-th derivative over t.
    virtual Interval enclose(int order, const Interval& t) const = 0;
};

using FunctionTable = std::map<std::string, std::shared_ptr<const FunctionInstance>>;

/// Values for linear symbols and angles (angles enter through sin/cos).
struct NumericEnv {
    std::map<std::string, double> values;
    FunctionTable functions;
};

struct IntervalEnv {
    std::map<std::string, Interval> values;
    FunctionTable functions;
};

double evaluate(const Expr& e, const NumericEnv& env);
Interval enclose(const Expr& e, const IntervalEnv& env);

}  // namespace contact_forge::sym
