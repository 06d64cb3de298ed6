#include "contact_forge/symcalc/form.hpp"

#include "contact_forge/symcalc/sexpr.hpp"

#include <bit>
#include <sstream>

namespace contact_forge::sym {

namespace {

void require_same(const ChartPtr& a, const ChartPtr& b)
{
    if (!same_chart(a, b)) throw ChartMismatch("forms live on different charts");
}

Mask bit(std::size_t i) { return Mask{1} << i; }

}  // namespace

int wedge_sign(Mask a, Mask b)
{
    if (a & b) return 0;
    int inversions = 0;
    for (Mask rest = b; rest; rest &= rest - 1) {
        const int j = std::countr_zero(rest);
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions & 1) ? -1 : 1;
}

Form::Form(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree)
{
    if (!chart_) throw std::invalid_argument("null chart");
    if (degree < 0) throw std::invalid_argument("negative form degree");
}

Form Form::scalar(ChartPtr chart, const Expr& f)
{
    Form r(std::move(chart), 0);
    r.add(0, f);
    return r;
}

Form Form::d(ChartPtr chart, const std::string& coord)
{
    const std::size_t i = chart->index_of(coord);
    Form r(std::move(chart), 1);
    r.add(bit(i), 1);
    return r;
}

Form Form::monomial(ChartPtr chart, const std::vector<std::string>& coords, const Expr& coeff)
{
    Form r = scalar(chart, coeff);
    for (const auto& c : coords) r = wedge(r, d(chart, c));
    return r;
}

Expr Form::coefficient(Mask m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Expr(0) : it->second;
}

void Form::add(Mask m, const Expr& c)
{
    auto it = terms_.find(m);
    Expr sum = canon(it == terms_.end() ? c : it->second + c);
    if (sum.is_zero()) {
        if (it != terms_.end()) terms_.erase(it);
    } else if (it == terms_.end()) {
        terms_.emplace(m, std::move(sum));
    } else {
        it->second = std::move(sum);
    }
}

Form& Form::operator+=(const Form& o)
{
    require_same(chart_, o.chart_);
    if (degree_ != o.degree_) throw std::invalid_argument("adding forms of different degree");
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Form& Form::operator-=(const Form& o)
{
    require_same(chart_, o.chart_);
    if (degree_ != o.degree_) throw std::invalid_argument("subtracting forms of different degree");
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Form operator-(const Form& a)
{
    return Expr(-1) * a;
}

Form operator*(const Expr& f, const Form& a)
{
    Form r(a.chart_, a.degree_);
    const Expr g = canon(f);
    if (g.is_zero()) return r;
    for (const auto& [m, c] : a.terms_) r.add(m, g * c);
    return r;
}

bool operator==(const Form& a, const Form& b)
{
    return same_chart(a.chart_, b.chart_) && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Form Form::map_coefficients(const Substitution& s) const
{
    for (const auto& c : chart_->coords())
        if (s.linear.count(c.name) || s.trig.count(c.name))
            throw std::invalid_argument("coefficient substitution may not remap chart coordinate " + c.name);
    Form r(chart_, degree_);
    for (const auto& [m, c] : terms_) r.add(m, substitute(c, s));
    return r;
}

Form Form::from_terms(ChartPtr chart, int degree, const std::map<Mask, Expr>& terms)
{
    Form r(std::move(chart), degree);
    for (const auto& [m, c] : terms) {
        if (std::popcount(m) != degree) throw std::invalid_argument("monomial degree mismatch");
        r.add(m, c);
    }
    return r;
}

Form wedge(const Form& a, const Form& b)
{
    require_same(a.chart(), b.chart());
    // Accumulate per mask in normal form before building trees.
    std::map<Mask, Poly> acc;
    for (const auto& [ma, ca] : a.terms()) {
        const Poly pa = to_poly(ca);
        for (const auto& [mb, cb] : b.terms()) {
            const int s = wedge_sign(ma, mb);
            if (s == 0) continue;
            Poly prod = pa * to_poly(cb);
            if (s < 0)
                acc[ma | mb] -= prod;
            else
                acc[ma | mb] += prod;
        }
    }
    std::map<Mask, Expr> terms;
    for (const auto& [m, p] : acc)
        if (!p.is_zero()) terms.emplace(m, from_poly(p));
    return Form::from_terms(a.chart(), a.degree() + b.degree(), terms);
}

Form wedge_power(const Form& a, int k)
{
    if (k < 0) throw std::invalid_argument("negative wedge power");
    Form r = Form::scalar(a.chart(), 1);
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

Form ext_d(const Form& a)
{
    const ChartPtr& chart = a.chart();
    std::map<Mask, Poly> acc;
    for (const auto& [m, c] : a.terms()) {
        for (std::size_t j = 0; j < chart->dimension(); ++j) {
            if (m & bit(j)) continue;
            Expr partial = diff(c, chart->coord(j).name, chart->symbol_kind(j));
            if (partial.is_zero()) continue;
            // dx_j ^ dx_I
            if (wedge_sign(bit(j), m) < 0)
                acc[m | bit(j)] -= to_poly(partial);
            else
                acc[m | bit(j)] += to_poly(partial);
        }
    }
    std::map<Mask, Expr> terms;
    for (const auto& [m, p] : acc)
        if (!p.is_zero()) terms.emplace(m, from_poly(p));
    return Form::from_terms(chart, a.degree() + 1, terms);
}

Expr top_coefficient(const Form& a)
{
    const std::size_t n = a.chart()->dimension();
    if (a.degree() != static_cast<int>(n)) throw std::invalid_argument("top_coefficient needs a form of top degree");
    return a.coefficient(n == 0 ? 0 : static_cast<Mask>((Mask{1} << n) - 1));
}

VectorField VectorField::partial(ChartPtr chart, const std::string& coord)
{
    VectorField v(chart);
    v.set(coord, 1);
    return v;
}

Expr VectorField::component(const std::string& coord) const
{
    auto it = comps_.find(chart_->index_of(coord));
    return it == comps_.end() ? Expr(0) : it->second;
}

VectorField& VectorField::set(const std::string& coord, const Expr& value)
{
    const std::size_t i = chart_->index_of(coord);
    Expr c = canon(value);
    if (c.is_zero())
        comps_.erase(i);
    else
        comps_[i] = std::move(c);
    return *this;
}

VectorField operator+(const VectorField& a, const VectorField& b)
{
    require_same(a.chart_, b.chart_);
    VectorField r = a;
    for (const auto& [i, c] : b.comps_) r.set(a.chart_->coord(i).name, r.component(a.chart_->coord(i).name) + c);
    return r;
}

VectorField operator*(const Expr& f, const VectorField& v)
{
    VectorField r(v.chart_);
    for (const auto& [i, c] : v.comps_) r.set(v.chart_->coord(i).name, f * c);
    return r;
}

Form contract(const VectorField& x, const Form& a)
{
    require_same(x.chart(), a.chart());
    if (a.degree() == 0) throw std::invalid_argument("cannot contract a 0-form");
    std::map<Mask, Poly> acc;
    for (const auto& [m, c] : a.terms()) {
        const Poly pc = to_poly(c);
        int position = 0;
        for (Mask rest = m; rest; rest &= rest - 1, ++position) {
            const std::size_t j = static_cast<std::size_t>(std::countr_zero(rest));
            auto it = x.components().find(j);
            if (it == x.components().end()) continue;
            Poly term = to_poly(it->second) * pc;
            if (position & 1)
                acc[m & ~bit(j)] -= term;
            else
                acc[m & ~bit(j)] += term;
        }
    }
    std::map<Mask, Expr> terms;
    for (const auto& [m, p] : acc)
        if (!p.is_zero()) terms.emplace(m, from_poly(p));
    return Form::from_terms(a.chart(), a.degree() - 1, terms);
}

Form lie_derivative(const VectorField& x, const Form& a)
{
    require_same(x.chart(), a.chart());
    Form r = contract(x, ext_d(a));
    if (a.degree() > 0) r += ext_d(contract(x, a));
    return r;
}

Expr apply(const Form& one_form, const VectorField& x)
{
    if (one_form.degree() != 1) throw std::invalid_argument("apply needs a 1-form");
    return contract(x, one_form).coefficient(0);
}

std::string to_sexpr(const Form& a)
{
    std::ostringstream os;
    os << "(form " << a.degree();
    for (const auto& [m, c] : a.terms()) {
        os << " ((";
        bool first = true;
        for (Mask rest = m; rest; rest &= rest - 1) {
            if (!first) os << ' ';
            first = false;
            os << a.chart()->coord(static_cast<std::size_t>(std::countr_zero(rest))).name;
        }
        os << ") " << to_sexpr(c) << ')';
    }
    os << ')';
    return os.str();
}

}  // namespace contact_forge::sym
