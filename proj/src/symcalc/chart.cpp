#include "contact_forge/symcalc/chart.hpp"

#include <set>
#include <stdexcept>

namespace contact_forge::sym {

Chart::Chart(std::vector<Coord> coords) : coords_(std::move(coords))
{
    if (coords_.size() > 31) throw std::invalid_argument("charts are limited to 31 coordinates");
    std::set<std::string> seen;
    for (const auto& c : coords_) {
        if (c.name.empty()) throw std::invalid_argument("empty coordinate name");
        if (!seen.insert(c.name).second) throw std::invalid_argument("duplicate coordinate name " + c.name);
    }
}

std::optional<std::size_t> Chart::find(const std::string& name) const
{
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (coords_[i].name == name) return i;
    return std::nullopt;
}

std::size_t Chart::index_of(const std::string& name) const
{
    if (auto i = find(name)) return *i;
    throw std::invalid_argument("unknown coordinate " + name);
}

SymbolKind Chart::symbol_kind(std::size_t i) const
{
    return coords_.at(i).kind == CoordKind::Angular ? SymbolKind::Angular : SymbolKind::Linear;
}

void Chart::validate(const Expr& e) const
{
    const SymbolSet s = free_symbols(e);
    auto kind_of = [&](const std::string& n) -> std::optional<CoordKind> {
        if (auto i = find(n)) return coords_[*i].kind;
        return std::nullopt;
    };
    for (const auto& n : s.linear)
        if (kind_of(n) == CoordKind::Angular)
            throw std::domain_error("angular coordinate " + n + " used as a bare symbol");
    for (const auto& n : s.angular)
        if (kind_of(n) == CoordKind::Linear)
            throw std::domain_error("sin/cos of linear coordinate " + n);
    for (const auto& n : s.function_args)
        if (kind_of(n) == CoordKind::Angular)
            throw std::domain_error("abstract function of angular coordinate " + n);
}

bool operator==(const Chart& a, const Chart& b)
{
    if (a.coords_.size() != b.coords_.size()) return false;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
        if (a.coords_[i].name != b.coords_[i].name || a.coords_[i].kind != b.coords_[i].kind) return false;
    return true;
}

ChartPtr make_chart(std::vector<Coord> coords)
{
    return std::make_shared<const Chart>(std::move(coords));
}

ChartPtr make_chart(std::initializer_list<const char*> names)
{
    std::vector<Coord> coords;
    for (const char* n : names) {
        std::string s(n);
        if (!s.empty() && s[0] == '@')
            coords.push_back({s.substr(1), CoordKind::Angular});
        else
            coords.push_back({s, CoordKind::Linear});
    }
    return make_chart(std::move(coords));
}

bool same_chart(const ChartPtr& a, const ChartPtr& b)
{
    return a == b || (a && b && *a == *b);
}

Expr differentiate(const Chart& chart, const Expr& e, const std::string& coord)
{
    return diff(e, coord, chart.symbol_kind(chart.index_of(coord)));
}

}  // namespace contact_forge::sym
