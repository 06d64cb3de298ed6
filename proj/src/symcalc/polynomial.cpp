#include "contact_forge/symcalc/polynomial.hpp"

#include <stdexcept>
#include <tuple>

namespace contact_forge::sym {

bool operator<(const Atom& a, const Atom& b)
{
    return std::tie(a.kind, a.name, a.arg, a.order) < std::tie(b.kind, b.name, b.arg, b.order);
}

bool operator==(const Atom& a, const Atom& b)
{
    return a.kind == b.kind && a.name == b.name && a.arg == b.arg && a.order == b.order;
}

bool exponent_less(const std::map<std::string, Rational>& a, const std::map<std::string, Rational>& b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.end() && ib != b.end();
}

bool operator<(const Monomial& a, const Monomial& b)
{
    if (a.powers != b.powers) return a.powers < b.powers;
    if (a.exp_linear != b.exp_linear) return exponent_less(a.exp_linear, b.exp_linear);
    return a.exp_const < b.exp_const;
}

bool operator==(const Monomial& a, const Monomial& b)
{
    return a.powers == b.powers && a.exp_linear == b.exp_linear && a.exp_const == b.exp_const;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial r = a;
    for (const auto& [atom, k] : b.powers) {
        int& e = r.powers[atom];
        e += k;
        if (e == 0) r.powers.erase(atom);
    }
    for (const auto& [name, c] : b.exp_linear) {
        Rational& e = r.exp_linear[name];
        e += c;
        if (e == 0) r.exp_linear.erase(name);
    }
    r.exp_const += b.exp_const;
    return r;
}

Poly::Poly(const Rational& c)
{
    if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly::Poly(Monomial m, const Rational& c)
{
    add_term(m, c);
}

Poly Poly::atom(const Atom& a, int power)
{
    if (power < 0 && a.kind != AtomKind::Var)
        throw std::domain_error("negative power of non-invertible atom " + a.name);
    Monomial m;
    if (power != 0) m.powers.emplace(a, power);
    return Poly(std::move(m), 1);
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::constant_term() const
{
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0) return;
    for (const auto& [atom, k] : m.powers) {
        if (atom.kind == AtomKind::Cos && k >= 2) {
            // cos^k = cos^(k-2) (1 - sin^2)
            Monomial lowered = m;
            if (k == 2)
                lowered.powers.erase(atom);
            else
                lowered.powers[atom] = k - 2;
            add_term(lowered, c);
            Monomial with_sin = lowered;
            with_sin.powers[Atom::sin(atom.name)] += 2;
            add_term(with_sin, -c);
            return;
        }
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

bool operator==(const Poly& a, const Poly& b)
{
    return a.terms_ == b.terms_;
}

Poly Poly::inverse() const
{
    if (terms_.size() != 1) throw std::domain_error("only a single monomial can be inverted");
    const auto& [m, c] = *terms_.begin();
    Monomial inv;
    for (const auto& [atom, k] : m.powers) {
        if (atom.kind != AtomKind::Var)
            throw std::domain_error("cannot invert sin/cos/function factor " + atom.name);
        inv.powers.emplace(atom, -k);
    }
    for (const auto& [name, e] : m.exp_linear) inv.exp_linear.emplace(name, -e);
    inv.exp_const = -m.exp_const;
    return Poly(std::move(inv), 1 / c);
}

Poly Poly::pow(int k) const
{
    if (k < 0) return inverse().pow(-k);
    Poly result(1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

}  // namespace contact_forge::sym
