#pragma once

#include "contact_forge/symcalc/interval.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace contact_forge::sym {

/// How the first-order error term is bounded.
///  - Global: one interval enclosure of the gradient over the whole box.
///  - PerCell: a separate enclosure over each grid cell.
enum class BoundMode { Global, PerCell };

using Box = std::map<std::string, Interval>;

struct CertificationReport {
    bool certified = false;
    /// Smallest value at a cell center.
    double min_sampled = 0.0;
    /// Smallest (center value - Lipschitz bound * cell radius) over all cells.
    double margin = 0.0;
    /// Cell center where the margin is attained.
    std::map<std::string, double> worst_point;
    /// Largest gradient bound used (sum over coordinates of |d_i e| * 1).
    double lipschitz = 0.0;
    std::size_t cells = 0;
};

/// Grid check of e > 0 on a box. Each free symbol of e (linear or angular)
/// needs a bounded range; grid_n cells are used per dimension.
/// Throws std::invalid_argument for missing ranges, uninstantiated abstract
/// functions or grid_n == 0, and std::domain_error for unbounded ranges.
CertificationReport certify_positive(const Expr& e, const Box& box, std::size_t grid_n,
                                     BoundMode mode = BoundMode::PerCell, const FunctionTable& functions = {},
                                     unsigned threads = 0);

/// Worker count: `requested` if nonzero, else hardware concurrency, capped by
/// the CONTACT_FORGE_THREADS environment variable when set.
unsigned worker_count(unsigned requested = 0);

}  // namespace contact_forge::sym
