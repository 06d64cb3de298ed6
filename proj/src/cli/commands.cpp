#include "contact_forge/cli/commands.hpp"

#include "contact_forge/gluing/boothby_wang.hpp"
#include "contact_forge/gluing/interpolants.hpp"
#include "contact_forge/gluing/product.hpp"
#include "contact_forge/gluing/s1_sum.hpp"
#include "contact_forge/legendrian/legendrian.hpp"
#include "contact_forge/symcalc/sexpr.hpp"
#include "contact_forge/topology/topology.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <fstream>
#include <iomanip>
#include <limits>
#include <random>
#include <sstream>

namespace contact_forge::cli {

namespace {

using gluing::IdentityReport;

struct RunConfig {
    std::string command;
    std::string out_path;
    std::string format = "text";
    std::string mutate = "none";
    std::uint64_t seed = 1;
    int n = 2;
    int samples = 64;
    std::string sign = "pos";
    double r_min = 0.5;
    double r_max = 2.0;
    double epsilon = 0.25;
    std::size_t grid_n = 2001;
    double delta = 0.5;
    double slope = std::numbers::pi / 4;
    long max_d = 50;
    int genus = 3;
    int stabs = 0;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (c.format == f) return;
    throw UsageError("format '" + c.format + "' is not supported by " + c.command);
}

int finish_reports(const std::vector<IdentityReport>& reports, const RunConfig& c, std::ostream& out,
                   std::ostream& err)
{
    if (c.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(gluing::to_json(r));
        out << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) out << gluing::to_text(r);
    }
    int code = kPass;
    for (const auto& r : reports) {
        if (r.pass()) continue;
        err << "FAIL: " << r.claim << ": " << r.first_failure() << "\n";
        if (!r.difference_form().empty()) err << "  difference " << r.difference_form() << "\n";
        code = kVerificationFailure;
    }
    return code;
}

int cmd_verify_product(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    require_format(c, {"json", "text"});
    IdentityReport product = gluing::verify_product_identity(c.n, gluing::parse_mutation(c.mutate));

    // contact condition with the constructed interpolants at random collar points
    if (c.samples > 0) {
        const gluing::InterpolantPair pair = gluing::build_interpolants(0.25);
        const sym::Expr coefficient = sym::parse_sexpr(product.data["coefficient"].get<std::string>());
        const sym::Interval box = pair.certified_box();
        std::mt19937_64 rng(c.seed);
        std::uniform_real_distribution<double> dist(box.lo, box.hi);
        sym::NumericEnv env;
        env.functions = pair.functions();
        double lowest = std::numeric_limits<double>::infinity();
        for (int i = 0; i < c.samples; ++i) {
            env.values["t"] = dist(rng);
            lowest = std::min(lowest, sym::evaluate(coefficient, env));
        }
        product.data["samples"] = {{"count", c.samples}, {"seed", c.seed}, {"min_coefficient", lowest}};
        std::ostringstream detail;
        detail << c.samples << " points, seed " << c.seed << ", min " << lowest;
        product.add(gluing::check("contact condition at sampled collar points", lowest > 0, detail.str()));
    }
    return finish_reports({product, gluing::verify_collar_liouville()}, c, out, err);
}

int cmd_verify_bw(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    require_format(c, {"json", "text"});
    const auto sign = c.sign == "pos" ? gluing::BundleSign::Positive : gluing::BundleSign::Negative;
    const IdentityReport r =
        gluing::boothby_wang_verify(sign, {c.r_min, c.r_max, c.grid_n}, gluing::parse_mutation(c.mutate));
    if (c.format == "text")
        out << "radial component at r = 1: " << r.data["radial_at_1"].get<std::string>() << " ("
            << r.data["direction"].get<std::string>() << ")\n";
    return finish_reports({r}, c, out, err);
}

int cmd_verify_sum(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    require_format(c, {"json", "text"});
    return finish_reports(gluing::s1_sum_suite(gluing::parse_mutation(c.mutate)), c, out, err);
}

int cmd_interpolants(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    require_format(c, {"json", "text"});
    if (c.grid_n < 2) throw UsageError("--grid must be at least 2");
    const gluing::InterpolantPair pair = gluing::build_interpolants(c.epsilon, {c.delta, c.slope}, c.grid_n);
    if (c.out_path.empty()) throw UsageError("--out is required for interpolants");
    std::ofstream tsv(c.out_path);
    if (!tsv) throw UsageError("cannot write " + c.out_path);
    tsv << "t\tf\tg\twronskian\n" << std::setprecision(17);
    for (double t : pair.sample_grid())
        tsv << t << '\t' << pair.f(t) << '\t' << pair.g(t) << '\t' << pair.wronskian(t) << '\n';

    const auto& cert = pair.certification();
    const sym::Interval box = pair.certified_box();
    if (c.format == "json") {
        out << nlohmann::json{{"epsilon", c.epsilon},
                              {"grid", c.grid_n},
                              {"box", {box.lo, box.hi}},
                              {"certified", cert.certified},
                              {"margin", cert.margin},
                              {"min_sampled", cert.min_sampled},
                              {"data", c.out_path}}
                   .dump(2)
            << "\n";
    } else {
        out << "certified f'g - fg' > 0 on [" << box.lo << ", " << box.hi << "] with " << c.grid_n
            << " cells: margin " << cert.margin << ", sampled min " << cert.min_sampled << "\n";
    }
    (void)err;
    return kPass;
}

int cmd_chern(const RunConfig& c, std::ostream& out, std::ostream& err)
{
    require_format(c, {"json", "csv", "text"});
    std::vector<topology::DecompositionReport> rows;
    for (long d = 2; d <= c.max_d; ++d) rows.push_back(topology::cp2_decomposition(d));
    const topology::CoverageResult coverage = topology::odd_class_coverage(c.max_d);

    int code = kPass;
    for (const auto& r : rows) {
        if (!r.routes_agree()) {
            err << "FAIL: chern routes disagree at d = " << r.d << "\n";
            code = kVerificationFailure;
        }
        if (r.stein_ok != (r.stein_inequality <= 0) || !r.stein_ok) {
            err << "FAIL: Stein check at d = " << r.d << "\n";
            code = kVerificationFailure;
        }
    }
    if (!coverage.complete()) {
        err << "FAIL: odd classes missed up to " << 2 * c.max_d - 3 << "\n";
        code = kVerificationFailure;
    }

    if (c.format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rows) arr.push_back(topology::to_json(r));
        out << nlohmann::json{{"rows", arr}, {"odd_classes", coverage.values}, {"gaps", coverage.gaps}}.dump(2)
            << "\n";
    } else {
        out << topology::to_csv(rows);
        if (c.format == "text")
            out << "odd classes 1.." << 2 * c.max_d - 3 << (coverage.complete() ? " all realised" : " with gaps")
                << "\n";
    }
    return code;
}

int cmd_lens(const RunConfig& c, std::ostream& out, std::ostream&)
{
    require_format(c, {"json", "text"});
    const legendrian::L41Report r = legendrian::l41_universally_tight();
    if (c.format == "json") {
        std::vector<nlohmann::json> rows;
        for (const auto& e : r.entries) rows.push_back(legendrian::to_json(e));
        rows.push_back({{"lens_space", r.lens_space},
                        {"universally_tight_up_to_isotopy", r.universally_tight_up_to_isotopy},
                        {"universally_tight_up_to_diffeomorphism", r.universally_tight_up_to_diffeomorphism}});
        out << legendrian::to_json_lines(rows);
    } else {
        for (const auto& e : r.entries)
            out << e.label << ": tb " << e.knot.tb << ", rot " << e.knot.rot << ", smooth framing "
                << e.smooth_framing << ", " << to_string(e.tag) << "\n";
        out << r.lens_space << ": " << r.universally_tight_up_to_isotopy << " universally tight up to isotopy, "
            << r.universally_tight_up_to_diffeomorphism << " up to diffeomorphism\n";
    }
    return kPass;
}

int cmd_surgery(const RunConfig& c, std::ostream& out, std::ostream&)
{
    require_format(c, {"json", "text"});
    using legendrian::StabSign;
    const auto p = legendrian::circle_bundle_presentation(
        c.genus, std::vector<StabSign>(static_cast<std::size_t>(c.stabs), StabSign::Plus));
    const auto bundle = std::get<legendrian::CircleBundle>(p.result);
    std::vector<nlohmann::json> rows{legendrian::to_json(p.components[0].knot),
                                     {{"smooth_framing", p.components[0].smooth_framing()}},
                                     legendrian::to_json(bundle)};
    if (bundle.genus > 1 && bundle.euler < 0)
        rows.push_back(legendrian::to_json(legendrian::tight_structure_counts(bundle.genus, bundle.euler)));
    if (c.format == "json") {
        out << legendrian::to_json_lines(rows);
    } else {
        out << "genus " << bundle.genus << ", euler " << bundle.euler << ", smooth framing "
            << p.components[0].smooth_framing() << "\n";
        if (rows.size() == 4)
            out << "tight structures with negative twisting: " << rows[3]["negative_twisting"] << "\n";
    }
    return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Verification harness for contact-form constructions", "contact-forge"};
    app.require_subcommand(1);

    const std::vector<std::string> mutations{"none", "psi-sign", "product-sign", "bw-radial", "alpha0"};
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out_path, "Write output to this file");
        sub->add_option("--format", cfg.format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--seed", cfg.seed, "Seed for sampled checks");
    };
    auto mutable_cmd = [&](CLI::App* sub) {
        sub->add_option("--mutate", cfg.mutate, "Corrupt one formula (test hook)")->check(CLI::IsMember(mutations));
    };

    auto* product = app.add_subcommand("verify-product", "Contact condition on the product collar");
    product->add_option("--n", cfg.n, "Half dimension minus one of the product")->check(CLI::Range(2, 4));
    product->add_option("--samples", cfg.samples, "Random collar points for the numeric check")
        ->check(CLI::Range(0, 1000000));
    common(product);
    mutable_cmd(product);

    auto* bw = app.add_subcommand("verify-bw", "Boothby-Wang filling forms");
    bw->add_option("--sign", cfg.sign, "Bundle sign")->check(CLI::IsMember({"pos", "neg"}));
    bw->add_option("--r-min", cfg.r_min, "Lower end of the certified r range");
    bw->add_option("--r-max", cfg.r_max, "Upper end of the certified r range");
    bw->add_option("--grid", cfg.grid_n, "Certification cells")->check(CLI::Range(1, 10000000));
    common(bw);
    mutable_cmd(bw);

    auto* sum = app.add_subcommand("verify-sum", "Coordinate identities of the circle sum");
    common(sum);
    mutable_cmd(sum);

    auto* interp = app.add_subcommand("interpolants", "Construct and certify the collar functions f, g");
    interp->add_option("--epsilon", cfg.epsilon, "Collar overlap");
    interp->add_option("--grid", cfg.grid_n, "Grid size")->check(CLI::Range(2, 10000000));
    interp->add_option("--delta", cfg.delta, "Blend width");
    interp->add_option("--slope", cfg.slope, "Phase slope");
    common(interp);

    auto* chern = app.add_subcommand("chern", "Chern class table for complements of plane curves");
    chern->add_option("--max-d", cfg.max_d, "Largest degree")->check(CLI::Range(2L, 1000L));
    common(chern);

    auto* lens = app.add_subcommand("lens", "Stabilizations of the unknot and L(4,1)");
    common(lens);

    auto* surgery = app.add_subcommand("surgery", "Contact (-1)-surgery on the stabilized K_g");
    surgery->add_option("--genus", cfg.genus, "Genus of the base surface")->check(CLI::Range(1, 100000));
    surgery->add_option("--stabs", cfg.stabs, "Number of positive stabilizations")->check(CLI::Range(0, 10000000));
    common(surgery);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "chern" && chern->count("--format") == 0) cfg.format = "csv";

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty() && cfg.command != "interpolants") {
        file.open(cfg.out_path);
        if (!file) {
            err << "cannot write " << cfg.out_path << "\n";
            return kUsageError;
        }
        sink = &file;
    }

    try {
        if (cfg.command == "verify-product") return cmd_verify_product(cfg, *sink, err);
        if (cfg.command == "verify-bw") return cmd_verify_bw(cfg, *sink, err);
        if (cfg.command == "verify-sum") return cmd_verify_sum(cfg, *sink, err);
        if (cfg.command == "interpolants") return cmd_interpolants(cfg, *sink, err);
        if (cfg.command == "chern") return cmd_chern(cfg, *sink, err);
        if (cfg.command == "lens") return cmd_lens(cfg, *sink, err);
        return cmd_surgery(cfg, *sink, err);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return kUsageError;
    } catch (const gluing::CertificationFailure& e) {
        err << "FAIL: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception& e) {
        err << "FAIL: " << e.what() << "\n";
        return kVerificationFailure;
    }
}

}  // namespace contact_forge::cli
