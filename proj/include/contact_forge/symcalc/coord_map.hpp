#pragma once

#include "contact_forge/symcalc/form.hpp"

#include <map>
#include <string>
#include <vector>

namespace contact_forge::sym {

/// Image of one target coordinate, written in source-chart variables.
///
/// Linear targets use `expr` only. An angular target is the angle
/// sum_i turns[i] * theta_i + expr, where theta_i are angular source
/// coordinates; its differential is sum_i turns[i] dtheta_i + d(expr).
/// sin/cos of an angular target can be pulled back only when `expr` is zero.
struct MapComponent {
    Expr expr;
    std::map<std::string, long> turns;

    static MapComponent value(const Expr& e) { return {e, {}}; }
    static MapComponent angle(std::map<std::string, long> turns, const Expr& offset = 0)
    {
        return {offset, std::move(turns)};
    }
};

class CoordMap {
public:
    /// Components are given by target coordinate name; every target
    /// coordinate must be mapped.
    CoordMap(ChartPtr source, ChartPtr target, const std::map<std::string, MapComponent>& components);

    static CoordMap identity(ChartPtr chart);

    const ChartPtr& source() const { return source_; }
    const ChartPtr& target() const { return target_; }
    const MapComponent& component(std::size_t target_index) const { return comps_.at(target_index); }
    const MapComponent& component(const std::string& target_coord) const;

    /// Substitution sending target-chart expressions to source-chart ones.
    Substitution substitution() const;

    /// Differential of the i-th target coordinate as a 1-form on the source.
    Form differential(std::size_t target_index) const;

    friend bool operator==(const CoordMap& a, const CoordMap& b);

private:
    ChartPtr source_;
    ChartPtr target_;
    std::vector<MapComponent> comps_;
};

/// outer o inner: apply `inner` first. Requires inner.target == outer.source.
CoordMap compose(const CoordMap& outer, const CoordMap& inner);

/// Pull back an expression written in target coordinates.
Expr pullback(const CoordMap& m, const Expr& e);
/// Pull back a form living on m.target() to m.source().
Form pullback(const CoordMap& m, const Form& a);

}  // namespace contact_forge::sym
