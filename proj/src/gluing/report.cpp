#include "contact_forge/gluing/report.hpp"

#include "contact_forge/symcalc/sexpr.hpp"

#include <sstream>
#include <stdexcept>

namespace contact_forge::gluing {

std::string to_string(Mutation m)
{
    switch (m) {
    case Mutation::None: return "none";
    case Mutation::PsiSign: return "psi-sign";
    case Mutation::ProductSign: return "product-sign";
    case Mutation::BwRadial: return "bw-radial";
    case Mutation::Alpha0: return "alpha0";
    }
    return "none";
}

Mutation parse_mutation(const std::string& name)
{
    for (Mutation m : {Mutation::None, Mutation::PsiSign, Mutation::ProductSign, Mutation::BwRadial, Mutation::Alpha0})
        if (to_string(m) == name) return m;
    throw std::invalid_argument("unknown mutation " + name);
}

bool IdentityReport::pass() const
{
    if (clauses.empty()) return false;
    for (const auto& c : clauses)
        if (!c.pass) return false;
    return true;
}

std::string IdentityReport::first_failure() const
{
    for (const auto& c : clauses)
        if (!c.pass) return c.name;
    return {};
}

std::string IdentityReport::difference_form() const
{
    for (const auto& c : clauses)
        if (!c.pass) return c.difference_form;
    return {};
}

Clause compare(const std::string& name, const sym::Form& lhs, const sym::Form& rhs, std::string detail)
{
    const sym::Form diff = lhs - rhs;
    return {name, diff.is_zero(), diff.is_zero() ? "" : sym::to_sexpr(diff), std::move(detail)};
}

Clause compare(const std::string& name, const sym::Expr& lhs, const sym::Expr& rhs, std::string detail)
{
    const sym::Expr diff = sym::canon(lhs - rhs);
    return {name, diff.is_zero(), diff.is_zero() ? "" : sym::to_sexpr(diff), std::move(detail)};
}

Clause check(const std::string& name, bool ok, std::string detail) { return {name, ok, "", std::move(detail)}; }

nlohmann::json to_json(const IdentityReport& r)
{
    nlohmann::json j;
    j["claim"] = r.claim;
    j["paper_anchor"] = r.anchor;
    j["status"] = r.pass() ? "pass" : "fail";
    j["difference_form"] = r.difference_form();
    if (r.margin) j["margin"] = *r.margin;
    j["detail"] = r.detail;
    j["clauses"] = nlohmann::json::array();
    for (const auto& c : r.clauses)
        j["clauses"].push_back({{"name", c.name},
                                {"status", c.pass ? "pass" : "fail"},
                                {"difference_form", c.difference_form},
                                {"detail", c.detail}});
    if (!r.assumptions.empty()) j["assumptions"] = r.assumptions;
    if (!r.data.empty()) j["data"] = r.data;
    if (r.mutation != Mutation::None) j["mutation"] = to_string(r.mutation);
    return j;
}

std::string to_text(const IdentityReport& r)
{
    std::ostringstream out;
    out << (r.pass() ? "PASS " : "FAIL ") << r.claim << "\n";
    out << "  " << r.anchor << "\n";
    for (const auto& c : r.clauses) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << "\n";
        if (!c.difference_form.empty()) out << "    difference " << c.difference_form << "\n";
    }
    if (r.margin) out << "  margin " << *r.margin << "\n";
    if (!r.detail.empty()) out << "  " << r.detail << "\n";
    for (const auto& a : r.assumptions) out << "  assumption: " << a << "\n";
    if (r.mutation != Mutation::None) out << "  mutation " << to_string(r.mutation) << "\n";
    return out.str();
}

}  // namespace contact_forge::gluing
