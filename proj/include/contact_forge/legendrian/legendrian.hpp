#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace contact_forge::legendrian {

enum class StabSign { Plus, Minus };

/// "+" or "-".
std::string to_string(StabSign s);

/// Classical invariants of a Legendrian knot together with the stabilizations
/// applied to it since its base record.
struct LegendrianRecord {
    int tb = 0;
    int rot = 0;
    /// Genus of the base surface when the knot is the Legendrian K_g.
    std::optional<int> genus_context;
    std::vector<StabSign> stab_history;

    int plus_count() const;
    int minus_count() const;
};

bool operator==(const LegendrianRecord& a, const LegendrianRecord& b);

/// K_g: tb = 2g - 1, rot = 0. K_0 is the maximal unknot (-1, 0).
LegendrianRecord base_knot(int genus);
LegendrianRecord unknot();

/// tb - 1, rot +- 1, history appended.
LegendrianRecord stabilize(LegendrianRecord r, StabSign sign);
LegendrianRecord stabilize(LegendrianRecord r, const std::vector<StabSign>& signs);

/// Combinatorial front: crossing signs (+1 or -1) and cusps split by
/// orientation.
struct FrontDiagram {
    std::vector<int> crossing_signs;
    int cusps = 0;
    int down_cusps = 0;
    int up_cusps = 0;

    /// Front with |writhe| crossings, all of the sign of `writhe`.
    static FrontDiagram from_counts(int writhe, int cusps, int down_cusps, int up_cusps);
    int writhe() const;
    /// Throws std::invalid_argument unless c = c_d + c_u, c is even, c >= 2 and
    /// every crossing sign is +1 or -1.
    void validate() const;
};

/// The standard front of the maximal unknot: no crossings, one cusp of each
/// orientation.
FrontDiagram unknot_front();

struct FrontInvariants {
    int tb;
    int rot;
};

/// tb = w - c/2, rot = (c_d - c_u)/2.
FrontInvariants invariants_from_front(const FrontDiagram& fd);

/// Adds a zigzag: two down cusps for +, two up cusps for -.
FrontDiagram stabilize_front(FrontDiagram fd, StabSign sign);

struct CircleBundle {
    int genus;
    int euler;
};

/// Contact (-1)-surgery on the stabilized K_g inside the genus-g
/// neighbourhood: euler = 2g - 2 - stabs. Requires genus >= 1 and stabs >= 0.
CircleBundle surgery_circle_bundle(int genus, int stabs);

struct SurgeryComponent {
    LegendrianRecord knot;
    int contact_coefficient = -1;
    /// tb - 1 for contact (-1)-surgery.
    int smooth_framing() const { return knot.tb + contact_coefficient; }
};

struct SurgeryPresentation {
    std::vector<SurgeryComponent> components;
    /// Circle bundle over a surface, or a lens-space tag such as "L(4,1)".
    std::variant<CircleBundle, std::string> result;
};

/// Surgery on K_g stabilized according to `history`.
SurgeryPresentation circle_bundle_presentation(int genus, const std::vector<StabSign>& history);

/// Counts imported from the classification of tight structures on circle
/// bundles with negative twisting; these encode quoted statements and are not
/// derived here.
struct TightCounts {
    int negative_twisting;
    int horizontal;
    int universally_tight_via_same_sign;
    std::string note;
};

/// Requires genus > 1 and euler < 0 (std::domain_error otherwise).
TightCounts tight_structure_counts(int genus, int euler);

enum class TightnessTag { UniversallyTight, VirtuallyOvertwisted };
std::string to_string(TightnessTag t);

struct L41Entry {
    std::string label;
    LegendrianRecord knot;
    int smooth_framing;
    TightnessTag tag;
};

struct L41Report {
    std::vector<L41Entry> entries;
    std::string lens_space;
    int universally_tight_up_to_isotopy;
    int universally_tight_up_to_diffeomorphism;
};

/// The three twofold stabilizations of K_0 and their surgeries to L(4,1).
/// Same-sign stabilizations are tagged universally tight, mixed ones virtually
/// overtwisted (imported classification fact).
L41Report l41_universally_tight();

nlohmann::json to_json(const LegendrianRecord& r);
nlohmann::json to_json(const CircleBundle& b);
nlohmann::json to_json(const TightCounts& c);
nlohmann::json to_json(const L41Entry& e);
/// One JSON object per line.
std::string to_json_lines(const std::vector<nlohmann::json>& rows);

}  // namespace contact_forge::legendrian
