// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "contact_forge/gluing/boothby_wang.hpp"
#include "contact_forge/gluing/interpolants.hpp"
#include "contact_forge/gluing/product.hpp"
#include "contact_forge/gluing/s1_sum.hpp"
#include "contact_forge/legendrian/legendrian.hpp"
#include "contact_forge/topology/topology.hpp"

#include "../support/properties.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace contact_forge;

namespace {

constexpr double kProductN4Seconds = 10.0;
constexpr double kInterpolantSeconds = 1.0;
constexpr double kEpsilon = 0.25;
constexpr std::size_t kGrid = 2001;
constexpr double kBwRMin = 0.5;
constexpr double kBwRMax = 2.0;
constexpr long kMaxDegree = 50;
constexpr int kPropertyCases = 1000;
constexpr double kPropertySeconds = 60.0;

struct Outcome {
    bool pass = true;
    std::ostringstream notes;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            if (!pass) notes << "; ";
            notes << what;
            pass = false;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion_product(Outcome& o)
{
    for (int n = 2; n <= 4; ++n) {
        const auto start = std::chrono::steady_clock::now();
        const gluing::IdentityReport r = gluing::verify_product_identity(n);
        const double elapsed = seconds_since(start);
        o.require(r.pass(), "n = " + std::to_string(n) + ": " + r.first_failure());
        for (const auto& c : r.clauses) o.require(c.difference_form.empty(), "nonzero difference for " + c.name);
        if (n == 4) o.require(elapsed < kProductN4Seconds, "n = 4 took " + std::to_string(elapsed) + " s");
    }
}

void criterion_interpolants(Outcome& o)
{
    const auto start = std::chrono::steady_clock::now();
    const gluing::InterpolantPair p = gluing::build_interpolants(kEpsilon, {}, kGrid);
    const double elapsed = seconds_since(start);
    o.require(elapsed < kInterpolantSeconds, "construction took " + std::to_string(elapsed) + " s");
    o.require(p.certification().certified && p.margin() > 0.0, "margin not positive");
    o.require(p.certification().cells >= kGrid, "grid below 2001");
    o.require(p.f(-1.0) == 1.0 && p.g(-1.0) == 1.0, "(f, g)(-1) != (1, 1)");
    o.require(p.f(1.0) == 1.0 && p.g(1.0) == -1.0, "(f, g)(1) != (1, -1)");
    o.require(p.g(0.0) == 0.0, "g(0) != 0");
    for (double t : p.sample_grid()) {
        for (int k = 0; k <= 2; ++k) {
            const double s = k % 2 ? -1.0 : 1.0;
            if (p.f(t, k) != s * p.f(-t, k) || p.g(t, k) != -s * p.g(-t, k)) {
                o.require(false, "parity broken at t = " + std::to_string(t));
                return;
            }
        }
        if (t <= -1.0 && (p.f(t) != std::exp(t + 1.0) || p.g(t) != 1.0)) {
            o.require(false, "boundary piece differs at t = " + std::to_string(t));
            return;
        }
    }
    o.notes << (o.pass ? "" : "; ") << "margin " << p.margin() << ", " << elapsed << " s";
}

void criterion_boothby_wang(Outcome& o)
{
    struct Case {
        gluing::BundleSign sign;
        const char* name;
        const char* radial;
    };
    for (const Case& c : {Case{gluing::BundleSign::Positive, "positive", "-1/2"},
                          Case{gluing::BundleSign::Negative, "negative", "1/2"}}) {
        const gluing::IdentityReport r = gluing::boothby_wang_verify(c.sign, {kBwRMin, kBwRMax, kGrid});
        for (const auto& cl : r.clauses) {
            if (cl.name.find("d(i_X Omega)") != std::string::npos)
                o.require(cl.pass, std::string(c.name) + ": d(i_X Omega) != Omega");
            if (cl.name.find("Omega ^ Omega") != std::string::npos)
                o.require(cl.pass, std::string(c.name) + ": Omega ^ Omega not certified positive on [1/2, 2] (" +
                                       cl.detail + ")");
        }
        const std::string radial = r.data["radial_at_1"].get<std::string>();
        o.require(radial == c.radial,
                  std::string(c.name) + ": X.r at r = 1 is " + radial + ", criterion expects " + c.radial);
    }
}

void criterion_sum(Outcome& o)
{
    for (const auto& r : gluing::s1_sum_suite()) {
        o.require(r.pass(), r.claim + ": " + r.first_failure());
        for (const auto& c : r.clauses) o.require(c.difference_form.empty(), "nonzero difference for " + c.name);
    }
    o.require(!gluing::s1_sum_psi_verify(gluing::Mutation::PsiSign).pass(), "psi-sign mutation not caught");
    o.require(!gluing::s1_sum_alpha0_derivation(gluing::Mutation::Alpha0).pass(), "alpha0 mutation not caught");
    o.require(!gluing::verify_product_identity(2, gluing::Mutation::ProductSign).pass(),
              "product-sign mutation not caught");
}

void criterion_chern(Outcome& o)
{
    for (long d = 2; d <= kMaxDegree; ++d) {
        const topology::DecompositionReport r = topology::cp2_decomposition(d);
        o.require(r.routes_agree(), "routes disagree at d = " + std::to_string(d));
        o.require(r.chern_plus == 2 * d - 3 && r.chern_minus == -(2 * d - 3), "chern != +-(2d - 3)");
        o.require(r.stein_inequality == 3 * d - 2 * d * d && r.stein_inequality <= 0 && r.stein_ok,
                  "Stein inequality fails at d = " + std::to_string(d));
    }
    o.require(topology::cp2_decomposition(2).chern_plus == 1 && topology::cp2_decomposition(2).chern_minus == -1,
              "d = 2 is not +-1");
    o.require(topology::cp2_decomposition(3).chern_plus == 3 && topology::cp2_decomposition(3).chern_minus == -3,
              "d = 3 is not +-3");
    const topology::CoverageResult cov = topology::odd_class_coverage(kMaxDegree);
    std::vector<long> odd;
    for (long k = 1; k <= 97; k += 2) odd.push_back(k);
    o.require(cov.complete() && cov.values == odd, "odd classes up to 97 not covered");
}

void criterion_surgery(Outcome& o)
{
    for (int g = 1; g <= 20; ++g)
        o.require(legendrian::surgery_circle_bundle(g, 0).euler == 2 * g - 2, "euler != 2g - 2");
    int cases = 0;
    for (int g = 2; g <= 5; ++g)
        for (int e = -5; e <= -1; ++e, ++cases) {
            const auto c = legendrian::tight_structure_counts(g, e);
            o.require(c.negative_twisting == 2 * g - 1 - e && c.horizontal == 2, "tight counts wrong");
        }
    o.require(cases == 20, "grid is not 20 cases");
    const auto l41 = legendrian::l41_universally_tight();
    using legendrian::TightnessTag;
    for (const auto& e : l41.entries) {
        const bool mixed = e.knot.plus_count() > 0 && e.knot.minus_count() > 0;
        o.require(e.tag == (mixed ? TightnessTag::VirtuallyOvertwisted : TightnessTag::UniversallyTight),
                  "L(4,1) tag wrong for " + e.label);
    }
    o.require(l41.entries.size() == 3 && l41.entries[1].label == "S+S-K0" &&
                  l41.entries[1].tag == TightnessTag::VirtuallyOvertwisted,
              "S+S-K0 not virtually overtwisted");
}

void criterion_properties(Outcome& o)
{
    using namespace cf_testing;
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::pair<std::string, std::function<PropertyResult()>>> suites{
        {"d^2 = 0", [] { return prop_d_squared(kPropertyCases, 11); }},
        {"graded antisymmetry", [] { return prop_graded_antisymmetry(kPropertyCases, 12); }},
        {"antiderivation", [] { return prop_antiderivation(kPropertyCases, 14); }},
        {"pullback commutes with d", [] { return prop_pullback_commutes_with_d(kPropertyCases, 16); }},
        {"canon idempotent", [] { return prop_canon_idempotent(kPropertyCases, 19); }},
    };
    for (const auto& [name, run] : suites) {
        const PropertyResult r = run();
        o.require(r.ok() && r.cases >= kPropertyCases, name + ": " + r.first_failure);
    }
    const double elapsed = seconds_since(start);
    o.require(elapsed < kPropertySeconds, "property suites took " + std::to_string(elapsed) + " s");
    o.notes << (o.pass ? "" : "; ") << suites.size() << " suites x " << kPropertyCases << " cases in " << elapsed
            << " s";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"product collar identity, n = 2, 3, 4", criterion_product},
        {"interpolants certified", criterion_interpolants},
        {"Boothby-Wang filling forms", criterion_boothby_wang},
        {"circle-sum coordinate suite", criterion_sum},
        {"Chern class table", criterion_chern},
        {"surgery arithmetic", criterion_surgery},
        {"engine property suites", criterion_properties},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(start);
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << " " << criteria[i].first << " ("
                  << elapsed << " s)";
        const std::string notes = o.notes.str();
        if (!notes.empty()) std::cout << ": " << notes;
        std::cout << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria PASS" : "failing criteria: " + std::to_string(failed)) << "\n";
    return failed == 0 ? 0 : 1;
}
