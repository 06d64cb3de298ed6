#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace contact_forge::topology {

/// Embedded surface in a symplectic 4-manifold; symplectic surfaces satisfy
/// 2g - 2 = self_intersection - c1_evaluation.
struct SurfaceData {
    long genus = 0;
    long self_intersection = 0;
    long c1_evaluation = 0;
};

bool operator==(const SurfaceData& a, const SurfaceData& b);

struct AdjunctionInput {
    std::optional<long> genus;
    std::optional<long> self_intersection;
    std::optional<long> c1_evaluation;
};

/// Completes the missing field. Throws std::invalid_argument unless exactly two
/// fields are given, and std::domain_error for a non-integer or negative genus.
SurfaceData adjunction_solve(const AdjunctionInput& known);

/// <c1(CP^2), line> = 3.
inline constexpr long kC1OfLine = 3;

enum class SpecialCase { Generic, Torus, Lens };
std::string to_string(SpecialCase c);

/// Chain of invariants for the complement of a degree-d curve in CP^2.
/// Sign pairs are carried as (+, -) and never collapsed.
struct DecompositionReport {
    long d = 0;
    long genus = 0;
    long self_intersection = 0;
    long euler = 0;
    long stab_count = 0;
    long rot_plus = 0, rot_minus = 0;
    long chern_plus = 0, chern_minus = 0;
    /// rot / d from the stabilization chain.
    long chern_via_rot_plus = 0, chern_via_rot_minus = 0;
    /// 3d - 2d^2.
    long stein_inequality = 0;
    bool stein_ok = false;
    SpecialCase special_case = SpecialCase::Generic;
    std::vector<std::string> annotations;

    /// Closed-form and stabilization routes agree.
    bool routes_agree() const;
};

/// Requires d >= 2. Throws std::logic_error if d does not divide rot.
DecompositionReport cp2_decomposition(long d);

struct CoverageResult {
    std::vector<long> values;
    std::vector<long> gaps;
    bool complete() const { return gaps.empty(); }
};

/// {2d - 3 : 2 <= d <= max_d} and the odd numbers up to 2 max_d - 3 it misses.
CoverageResult odd_class_coverage(long max_d);

/// e + (2 - 2g) <= 0.
bool stein_disc_bundle_check(long genus, long euler);

struct RuledPiece {
    /// "even" for the trivial S^2-bundle, "odd" otherwise.
    std::string parity;
    long max_euler;
};

RuledPiece ruled_surface_piece(bool trivial_bundle, long genus);

enum class BundleSignClass { Positive, Negative, Both, Neither };
std::string to_string(BundleSignClass c);

struct BundleData {
    long base_genus = 0;
    int base_dim = 2;
    long euler = 0;
    BundleSignClass sign_class = BundleSignClass::Neither;
    /// "concave" for positive, "convex" for negative bundles.
    std::string filling_side;
    bool dim_4m_remark = false;
};

/// e = -[omega / 2 pi] for the integral curvature class value given.
BundleData euler_from_curvature(long curvature_over_2pi, long base_genus = 0, int base_dim = 2);

nlohmann::json to_json(const DecompositionReport& r);
/// Header d,genus,e,stabs,rot_plus,rot_minus,chern_plus,chern_minus,stein_ok,case
std::string to_csv(const std::vector<DecompositionReport>& rows);

}  // namespace contact_forge::topology
