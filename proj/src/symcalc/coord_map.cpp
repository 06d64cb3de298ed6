#include "contact_forge/symcalc/coord_map.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace contact_forge::sym {

CoordMap::CoordMap(ChartPtr source, ChartPtr target, const std::map<std::string, MapComponent>& components)
    : source_(std::move(source)), target_(std::move(target))
{
    if (!source_ || !target_) throw std::invalid_argument("null chart");
    if (components.size() != target_->dimension())
        throw std::invalid_argument("coordinate map arity does not match target dimension");
    for (const auto& c : target_->coords()) {
        auto it = components.find(c.name);
        if (it == components.end()) throw std::invalid_argument("missing component for " + c.name);
        MapComponent comp{canon(it->second.expr), it->second.turns};
        source_->validate(comp.expr);
        if (c.kind == CoordKind::Linear && !comp.turns.empty())
            throw std::invalid_argument("linear coordinate " + c.name + " cannot carry angle turns");
        for (auto t = comp.turns.begin(); t != comp.turns.end();) {
            auto src = source_->find(t->first);
            if (!src || source_->coord(*src).kind != CoordKind::Angular)
                throw std::invalid_argument("angle turns must refer to angular source coordinates");
            t = t->second == 0 ? comp.turns.erase(t) : std::next(t);
        }
        comps_.push_back(std::move(comp));
    }
}

CoordMap CoordMap::identity(ChartPtr chart)
{
    std::map<std::string, MapComponent> comps;
    for (const auto& c : chart->coords()) {
        if (c.kind == CoordKind::Angular)
            comps.emplace(c.name, MapComponent::angle({{c.name, 1}}));
        else
            comps.emplace(c.name, MapComponent::value(Expr::symbol(c.name)));
    }
    return CoordMap(chart, chart, comps);
}

const MapComponent& CoordMap::component(const std::string& target_coord) const
{
    return comps_.at(target_->index_of(target_coord));
}

Substitution CoordMap::substitution() const
{
    Substitution s;
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        const Coord& c = target_->coord(i);
        const MapComponent& comp = comps_[i];
        if (c.kind == CoordKind::Linear) {
            s.linear.emplace(c.name, comp.expr);
            continue;
        }
        if (!comp.expr.is_zero()) {
            // sin/cos of a non-angular offset cannot be expanded; only
            // expressions free of this angle can be pulled back.
            continue;
        }
        s.trig.emplace(c.name, trig_of_angle_sum(comp.turns));
    }
    return s;
}

Form CoordMap::differential(std::size_t i) const
{
    const MapComponent& comp = comps_.at(i);
    Form r = ext_d(Form::scalar(source_, comp.expr));
    for (const auto& [angle, n] : comp.turns) r += Expr(static_cast<int>(n)) * Form::d(source_, angle);
    return r;
}

bool operator==(const CoordMap& a, const CoordMap& b)
{
    if (!same_chart(a.source_, b.source_) || !same_chart(a.target_, b.target_)) return false;
    for (std::size_t i = 0; i < a.comps_.size(); ++i)
        if (!equivalent(a.comps_[i].expr, b.comps_[i].expr) || a.comps_[i].turns != b.comps_[i].turns) return false;
    return true;
}

namespace {

void check_angle_free(const CoordMap& m, const Expr& e)
{
    const SymbolSet syms = free_symbols(e);
    for (std::size_t i = 0; i < m.target()->dimension(); ++i) {
        const Coord& c = m.target()->coord(i);
        if (c.kind == CoordKind::Angular && syms.angular.count(c.name) && !m.component(i).expr.is_zero())
            throw std::domain_error("cannot pull back sin/cos of " + c.name + " under an angle with a non-angular offset");
    }
}

}  // namespace

Expr pullback(const CoordMap& m, const Expr& e)
{
    m.target()->validate(e);
    check_angle_free(m, e);
    return substitute(e, m.substitution());
}

CoordMap compose(const CoordMap& outer, const CoordMap& inner)
{
    if (!same_chart(inner.target(), outer.source()))
        throw ChartMismatch("composition needs inner.target == outer.source");
    std::map<std::string, MapComponent> comps;
    for (std::size_t i = 0; i < outer.target()->dimension(); ++i) {
        const MapComponent& oc = outer.component(i);
        MapComponent r{pullback(inner, oc.expr), {}};
        for (const auto& [angle, n] : oc.turns) {
            const MapComponent& ic = inner.component(angle);
            for (const auto& [a, k] : ic.turns) r.turns[a] += n * k;
            r.expr = r.expr + Expr(static_cast<int>(n)) * ic.expr;
        }
        comps.emplace(outer.target()->coord(i).name, r);
    }
    return CoordMap(inner.source(), outer.target(), comps);
}

Form pullback(const CoordMap& m, const Form& a)
{
    if (!same_chart(a.chart(), m.target())) throw ChartMismatch("form does not live on the map's target chart");
    std::vector<std::optional<Form>> differentials(m.target()->dimension());
    auto dx = [&](std::size_t i) -> const Form& {
        if (!differentials[i]) differentials[i] = m.differential(i);
        return *differentials[i];
    };
    Form r(m.source(), a.degree());
    const Substitution subst = m.substitution();
    for (const auto& [mask, c] : a.terms()) {
        check_angle_free(m, c);
        Form term = Form::scalar(m.source(), substitute(c, subst));
        for (Mask rest = mask; rest; rest &= rest - 1) term = wedge(term, dx(static_cast<std::size_t>(std::countr_zero(rest))));
        r += term;
    }
    return r;
}

}  // namespace contact_forge::sym
