#pragma once

#include "contact_forge/symcalc/interval.hpp"

#include <cmath>

namespace contact_forge::gluing {

using sym::Interval;

inline double square(double x) { return x * x; }
inline Interval square(const Interval& x) { return sym::sqr(x); }

/// Second-order Taylor jet (value, first and second derivative) over a
/// scalar type T (double or Interval).
template <class T>
struct Jet {
    T v{0.0};
    T d1{0.0};
    T d2{0.0};

    static Jet constant(const T& c) { return {c, T(0.0), T(0.0)}; }
    static Jet variable(const T& x) { return {x, T(1.0), T(0.0)}; }

    const T& operator[](int k) const { return k == 0 ? v : (k == 1 ? d1 : d2); }
};

template <class T>
Jet<T> operator+(const Jet<T>& a, const Jet<T>& b)
{
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

template <class T>
Jet<T> operator-(const Jet<T>& a, const Jet<T>& b)
{
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

template <class T>
Jet<T> operator-(const Jet<T>& a)
{
    return {-a.v, -a.d1, -a.d2};
}

template <class T>
Jet<T> operator*(const Jet<T>& a, const Jet<T>& b)
{
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + T(2.0) * (a.d1 * b.d1) + a.v * b.d2};
}

template <class T>
Jet<T> operator*(const T& c, const Jet<T>& a)
{
    return {c * a.v, c * a.d1, c * a.d2};
}

/// Chain rule: F(a) given F, F', F'' evaluated at a.v.
template <class T>
Jet<T> compose(const Jet<T>& a, const T& f0, const T& f1, const T& f2)
{
    return {f0, f1 * a.d1, f2 * square(a.d1) + f1 * a.d2};
}

template <class T>
Jet<T> recip(const Jet<T>& a)
{
    const T r = T(1.0) / a.v;
    const T r2 = square(r);
    return compose(a, r, -r2, T(2.0) * r2 * r);
}

template <class T>
Jet<T> operator/(const Jet<T>& a, const Jet<T>& b)
{
    return a * recip(b);
}

template <class T>
Jet<T> exp(const Jet<T>& a)
{
    using std::exp;
    const T e = exp(a.v);
    return compose(a, e, e, e);
}

template <class T>
Jet<T> sin(const Jet<T>& a)
{
    using std::cos;
    using std::sin;
    const T s = sin(a.v);
    return compose(a, s, cos(a.v), -s);
}

template <class T>
Jet<T> cos(const Jet<T>& a)
{
    using std::cos;
    using std::sin;
    const T c = cos(a.v);
    return compose(a, c, -sin(a.v), -c);
}

template <class T>
Jet<T> atan(const Jet<T>& a)
{
    using std::atan;
    const T q = T(1.0) / (T(1.0) + square(a.v));
    return compose(a, atan(a.v), q, T(-2.0) * a.v * q * q);
}

template <class T>
Jet<T> sqrt(const Jet<T>& a)
{
    using std::sqrt;
    const T s = sqrt(a.v);
    const T inv = T(1.0) / s;
    return compose(a, s, T(0.5) * inv, T(-0.25) * inv * inv * inv);
}

}  // namespace contact_forge::gluing
