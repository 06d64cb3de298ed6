#pragma once

#include "contact_forge/symcalc/chart.hpp"
#include "contact_forge/symcalc/expr.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace contact_forge::sym {

/// Bit i set <=> coordinate i of the chart appears in the wedge monomial.
/// A mask is the strictly increasing index list dx_{i1} ^ ... ^ dx_{ik}.
using Mask = std::uint32_t;

class ChartMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A differential k-form on a single chart with canonical Expr coefficients.
/// Zero coefficients are never stored; forms of degree above the chart
/// dimension exist only as zero.
class Form {
public:
    Form(ChartPtr chart, int degree);

    static Form scalar(ChartPtr chart, const Expr& f);
    static Form d(ChartPtr chart, const std::string& coord);
    /// coeff * dx_{c1} ^ ... ^ dx_{ck}, in the given order (sign applied).
    static Form monomial(ChartPtr chart, const std::vector<std::string>& coords, const Expr& coeff = 1);
    static Form from_terms(ChartPtr chart, int degree, const std::map<Mask, Expr>& terms);

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<Mask, Expr>& terms() const { return terms_; }
    Expr coefficient(Mask m) const;
    bool is_zero() const { return terms_.empty(); }

    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(const Form& a);
    friend Form operator*(const Expr& f, const Form& a);

    friend bool operator==(const Form& a, const Form& b);

    /// Applies a substitution to every coefficient (instantiating abstract
    /// functions or specializing parameters). Symbols of the chart must not be
    /// remapped; use `pullback` for changes of coordinates.
    Form map_coefficients(const Substitution& s) const;

private:
    void add(Mask m, const Expr& c);

    ChartPtr chart_;
    int degree_;
    std::map<Mask, Expr> terms_;
};

/// (-1)^{number of pairs (i in a, j in b) with i > j}; 0 if a and b overlap.
int wedge_sign(Mask a, Mask b);

Form wedge(const Form& a, const Form& b);
Form wedge_power(const Form& a, int k);
Form ext_d(const Form& a);

/// Coefficient of the volume monomial in the chart's declared order.
Expr top_coefficient(const Form& a);

class VectorField {
public:
    explicit VectorField(ChartPtr chart) : chart_(std::move(chart)) {}

    static VectorField partial(ChartPtr chart, const std::string& coord);

    const ChartPtr& chart() const { return chart_; }
    const std::map<std::size_t, Expr>& components() const { return comps_; }
    Expr component(const std::string& coord) const;

    VectorField& set(const std::string& coord, const Expr& value);
    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Expr& f, const VectorField& v);

private:
    ChartPtr chart_;
    std::map<std::size_t, Expr> comps_;
};

/// Interior product i_X a. Throws for 0-forms.
Form contract(const VectorField& x, const Form& a);
/// Cartan formula i_X d + d i_X.
Form lie_derivative(const VectorField& x, const Form& a);
/// a(X) for a 1-form.
Expr apply(const Form& one_form, const VectorField& x);

/// (form DEG ((c1 c2 ...) EXPR) ...) with coordinate names in chart order.
std::string to_sexpr(const Form& a);

}  // namespace contact_forge::sym
