#include "contact_forge/symcalc/certify.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace contact_forge::sym {

unsigned worker_count(unsigned requested)
{
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("CONTACT_FORGE_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && v > 0) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    }
    return n;
}

namespace {

struct Partial {
    double min_sampled = std::numeric_limits<double>::infinity();
    double margin = std::numeric_limits<double>::infinity();
    double lipschitz = 0.0;
    std::size_t worst_cell = 0;
};

}  // namespace

CertificationReport certify_positive(const Expr& e_in, const Box& box, std::size_t grid_n, BoundMode mode,
                                     const FunctionTable& functions, unsigned threads)
{
    if (grid_n == 0) throw std::invalid_argument("grid_n must be positive");
    const Expr e = canon(e_in);
    const SymbolSet syms = free_symbols(e);
    for (const auto& f : syms.functions) {
        auto it = functions.find(f);
        if (it == functions.end() || !it->second) throw std::invalid_argument("uninstantiated abstract function " + f);
    }

    std::vector<std::string> names;
    std::vector<SymbolKind> kinds;
    for (const auto& s : syms.linear) names.push_back(s), kinds.push_back(SymbolKind::Linear);
    for (const auto& s : syms.angular) names.push_back(s), kinds.push_back(SymbolKind::Angular);
    for (const auto& s : syms.function_args)
        if (!syms.linear.count(s)) names.push_back(s), kinds.push_back(SymbolKind::Linear);

    std::vector<Interval> ranges;
    for (const auto& n : names) {
        auto it = box.find(n);
        if (it == box.end()) throw std::invalid_argument("no range for symbol " + n);
        if (!it->second.bounded()) throw std::domain_error("unbounded range for symbol " + n);
        ranges.push_back(it->second);
    }

    std::vector<Expr> gradient;
    for (std::size_t i = 0; i < names.size(); ++i) gradient.push_back(canon(diff(e, names[i], kinds[i])));

    const std::size_t dim = names.size();
    std::size_t cells = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (cells > std::numeric_limits<std::size_t>::max() / grid_n) throw std::invalid_argument("grid too large");
        cells *= grid_n;
    }
    std::vector<double> width(dim);
    for (std::size_t i = 0; i < dim; ++i) width[i] = (ranges[i].hi - ranges[i].lo) / static_cast<double>(grid_n);

    auto cell_center = [&](std::size_t index, std::vector<double>& center, std::vector<Interval>& extent) {
        for (std::size_t i = 0; i < dim; ++i) {
            const std::size_t k = index % grid_n;
            index /= grid_n;
            const double lo = ranges[i].lo + width[i] * static_cast<double>(k);
            const double hi = k + 1 == grid_n ? ranges[i].hi : ranges[i].lo + width[i] * static_cast<double>(k + 1);
            center[i] = 0.5 * (lo + hi);
            extent[i] = Interval(lo, hi);
        }
    };

    auto gradient_bound = [&](const std::vector<Interval>& extent, const std::vector<double>& center) {
        IntervalEnv env{{}, functions};
        for (std::size_t i = 0; i < dim; ++i) env.values[names[i]] = extent[i];
        Interval total(0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            const double reach = std::max(center[i] - extent[i].lo, extent[i].hi - center[i]);
            total = total + Interval(enclose(gradient[i], env).mag()) * Interval(reach);
        }
        return total.hi;
    };

    double global_bound = 0.0;
    if (mode == BoundMode::Global) {
        // every cell has the same radius, so evaluate the radius of cell 0
        std::vector<double> c0(dim);
        std::vector<Interval> e0(dim);
        cell_center(0, c0, e0);
        IntervalEnv env{{}, functions};
        for (std::size_t i = 0; i < dim; ++i) env.values[names[i]] = ranges[i];
        Interval total(0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            const double reach = std::max(c0[i] - e0[i].lo, e0[i].hi - c0[i]);
            total = total + Interval(enclose(gradient[i], env).mag()) * Interval(reach);
        }
        global_bound = total.hi;
    }

    auto run = [&](std::size_t begin, std::size_t end, Partial& out) {
        std::vector<double> center(dim);
        std::vector<Interval> extent(dim);
        NumericEnv nenv{{}, functions};
        IntervalEnv ienv{{}, functions};
        for (std::size_t idx = begin; idx < end; ++idx) {
            cell_center(idx, center, extent);
            for (std::size_t i = 0; i < dim; ++i) {
                nenv.values[names[i]] = center[i];
                ienv.values[names[i]] = Interval(center[i]);
            }
            const double sampled = evaluate(e, nenv);
            const double bound = mode == BoundMode::Global ? global_bound : gradient_bound(extent, center);
            const double lower = (enclose(e, ienv) - Interval(bound)).lo;
            out.min_sampled = std::min(out.min_sampled, sampled);
            out.lipschitz = std::max(out.lipschitz, bound);
            if (lower < out.margin) {
                out.margin = lower;
                out.worst_cell = idx;
            }
        }
    };

    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(threads), cells));
    std::vector<Partial> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (cells + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t b = std::min(cells, w * chunk);
            const std::size_t en = std::min(cells, b + chunk);
            pool.emplace_back([&, w, b, en] {
                try {
                    run(b, en, parts[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    CertificationReport report;
    report.cells = cells;
    report.min_sampled = std::numeric_limits<double>::infinity();
    report.margin = std::numeric_limits<double>::infinity();
    std::size_t worst = 0;
    for (const auto& p : parts) {
        report.min_sampled = std::min(report.min_sampled, p.min_sampled);
        report.lipschitz = std::max(report.lipschitz, p.lipschitz);
        if (p.margin < report.margin) {
            report.margin = p.margin;
            worst = p.worst_cell;
        }
    }
    std::vector<double> center(dim);
    std::vector<Interval> extent(dim);
    cell_center(worst, center, extent);
    for (std::size_t i = 0; i < dim; ++i) report.worst_point[names[i]] = center[i];
    report.certified = report.margin > 0.0;
    return report;
}

}  // namespace contact_forge::sym
