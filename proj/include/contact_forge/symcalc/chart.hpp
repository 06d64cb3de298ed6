#pragma once

#include "contact_forge/symcalc/expr.hpp"

#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace contact_forge::sym {

enum class CoordKind { Linear, Angular };

struct Coord {
    std::string name;
    CoordKind kind = CoordKind::Linear;
};

/// An ordered coordinate system. The declared order fixes the positive
/// orientation used by `top_coefficient`.
class Chart {
public:
    explicit Chart(std::vector<Coord> coords);

    std::size_t dimension() const { return coords_.size(); }
    const std::vector<Coord>& coords() const { return coords_; }
    const Coord& coord(std::size_t i) const { return coords_.at(i); }

    std::optional<std::size_t> find(const std::string& name) const;
    /// Throws std::invalid_argument for unknown names.
    std::size_t index_of(const std::string& name) const;
    SymbolKind symbol_kind(std::size_t i) const;

    /// Rejects bare angular symbols, sin/cos of linear coordinates, and
    /// abstract functions whose argument is not a linear coordinate.
    /// Symbols outside the chart are parameters and always allowed.
    void validate(const Expr& e) const;

    friend bool operator==(const Chart& a, const Chart& b);

private:
    std::vector<Coord> coords_;
};

using ChartPtr = std::shared_ptr<const Chart>;

ChartPtr make_chart(std::vector<Coord> coords);

/// Shorthand: names prefixed with '@' are angular, e.g. {"t", "@theta", "x"}.
ChartPtr make_chart(std::initializer_list<const char*> names);

bool same_chart(const ChartPtr& a, const ChartPtr& b);

/// Partial derivative in a chart coordinate; unknown names throw.
Expr differentiate(const Chart& chart, const Expr& e, const std::string& coord);

}  // namespace contact_forge::sym
