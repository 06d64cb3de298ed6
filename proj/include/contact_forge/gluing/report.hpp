#pragma once

#include "contact_forge/symcalc/form.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace contact_forge::gluing {

/// Deliberate corruptions used to show that a verifier can fail.
enum class Mutation { None, PsiSign, ProductSign, BwRadial, Alpha0 };

std::string to_string(Mutation m);
/// Accepts "none", "psi-sign", "product-sign", "bw-radial", "alpha0".
Mutation parse_mutation(const std::string& name);

struct Clause {
    std::string name;
    bool pass = false;
    /// Serialized nonzero difference, empty on success.
    std::string difference_form;
    std::string detail;
};

struct IdentityReport {
    std::string claim;
    /// The formula or statement being checked, written out.
    std::string anchor;
    std::vector<Clause> clauses;
    std::optional<double> margin;
    std::string detail;
    std::vector<std::string> assumptions;
    nlohmann::json data = nlohmann::json::object();
    Mutation mutation = Mutation::None;

    bool pass() const;
    /// Name of the first failing clause, empty if all pass.
    std::string first_failure() const;
    /// Difference form of the first failing clause.
    std::string difference_form() const;

    void add(Clause c) { clauses.push_back(std::move(c)); }
};

/// Exact comparison lhs == rhs; on failure the difference lhs - rhs is kept.
Clause compare(const std::string& name, const sym::Form& lhs, const sym::Form& rhs, std::string detail = {});
Clause compare(const std::string& name, const sym::Expr& lhs, const sym::Expr& rhs, std::string detail = {});
Clause check(const std::string& name, bool ok, std::string detail = {});

nlohmann::json to_json(const IdentityReport& r);
std::string to_text(const IdentityReport& r);

}  // namespace contact_forge::gluing
