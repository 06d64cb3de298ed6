#pragma once

// Normal form used by canonicalization.
//
// An expression in canonical form is a finite sum of monomials with rational
// coefficients. A monomial is a product of
//   - Laurent powers of linear symbols,
//   - nonnegative powers of sin/cos of angular symbols, with cos appearing at
//     most to the first power (cos^2 is rewritten as 1 - sin^2),
//   - nonnegative powers of abstract function jets f^(k)(x),
//   - at most one exponential e^{L} with L an affine rational form.
// Over these generators the representation is unique, so two expressions are
// equal iff their normal forms are identical.

#include <gmpxx.h>

#include <map>
#include <string>

namespace contact_forge::sym {

using Rational = mpq_class;

enum class AtomKind { Var = 0, Sin = 1, Cos = 2, Func = 3 };

struct Atom {
    AtomKind kind = AtomKind::Var;
    std::string name;  // symbol, angle, or function name
    std::string arg;   // function argument (Func only)
    int order = 0;     // derivative order (Func only)

    static Atom var(std::string n) { return {AtomKind::Var, std::move(n), {}, 0}; }
    static Atom sin(std::string n) { return {AtomKind::Sin, std::move(n), {}, 0}; }
    static Atom cos(std::string n) { return {AtomKind::Cos, std::move(n), {}, 0}; }
    static Atom func(std::string n, std::string a, int k) { return {AtomKind::Func, std::move(n), std::move(a), k}; }

    friend bool operator<(const Atom& a, const Atom& b);
    friend bool operator==(const Atom& a, const Atom& b);
};

struct Monomial {
    std::map<Atom, int> powers;                  // zero exponents never stored
    std::map<std::string, Rational> exp_linear;  // zero coefficients never stored
    Rational exp_const = 0;

    bool has_exp() const { return !exp_linear.empty() || exp_const != 0; }
    bool is_one() const { return powers.empty() && !has_exp(); }

    friend bool operator<(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b);
};

Monomial operator*(const Monomial& a, const Monomial& b);

class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    explicit Poly(const Rational& c);
    Poly(Monomial m, const Rational& c);

    static Poly atom(const Atom& a, int power = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    // Adds c*m, rewriting cos^k (k >= 2) so the result stays reduced.
    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rational(-1); }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    // Integer power; negative powers require a single invertible monomial.
    Poly pow(int k) const;
    Poly inverse() const;

private:
    Terms terms_;
};

bool exponent_less(const std::map<std::string, Rational>& a, const std::map<std::string, Rational>& b);

}  // namespace contact_forge::sym
