#include "contact_forge/legendrian/legendrian.hpp"

#include <algorithm>
#include <stdexcept>

namespace contact_forge::legendrian {

std::string to_string(StabSign s) { return s == StabSign::Plus ? "+" : "-"; }

int LegendrianRecord::plus_count() const
{
    return static_cast<int>(std::count(stab_history.begin(), stab_history.end(), StabSign::Plus));
}

int LegendrianRecord::minus_count() const { return static_cast<int>(stab_history.size()) - plus_count(); }

bool operator==(const LegendrianRecord& a, const LegendrianRecord& b)
{
    return a.tb == b.tb && a.rot == b.rot && a.genus_context == b.genus_context && a.stab_history == b.stab_history;
}

LegendrianRecord base_knot(int genus)
{
    if (genus < 0) throw std::invalid_argument("genus must be nonnegative");
    return {2 * genus - 1, 0, genus, {}};
}

LegendrianRecord unknot() { return {-1, 0, std::nullopt, {}}; }

LegendrianRecord stabilize(LegendrianRecord r, StabSign sign)
{
    r.tb -= 1;
    r.rot += sign == StabSign::Plus ? 1 : -1;
    r.stab_history.push_back(sign);
    return r;
}

LegendrianRecord stabilize(LegendrianRecord r, const std::vector<StabSign>& signs)
{
    for (StabSign s : signs) r = stabilize(std::move(r), s);
    return r;
}

FrontDiagram FrontDiagram::from_counts(int writhe, int cusps, int down_cusps, int up_cusps)
{
    FrontDiagram fd;
    fd.crossing_signs.assign(static_cast<std::size_t>(std::abs(writhe)), writhe < 0 ? -1 : 1);
    fd.cusps = cusps;
    fd.down_cusps = down_cusps;
    fd.up_cusps = up_cusps;
    return fd;
}

int FrontDiagram::writhe() const
{
    int w = 0;
    for (int s : crossing_signs) w += s;
    return w;
}

void FrontDiagram::validate() const
{
    if (cusps % 2 != 0) throw std::invalid_argument("odd cusp count");
    if (cusps < 2) throw std::invalid_argument("a front needs at least two cusps");
    if (down_cusps < 0 || up_cusps < 0 || cusps != down_cusps + up_cusps)
        throw std::invalid_argument("cusp count must equal down cusps plus up cusps");
    for (int s : crossing_signs)
        if (s != 1 && s != -1) throw std::invalid_argument("crossing signs must be +1 or -1");
}

FrontDiagram unknot_front() { return FrontDiagram::from_counts(0, 2, 1, 1); }

FrontInvariants invariants_from_front(const FrontDiagram& fd)
{
    fd.validate();
    return {fd.writhe() - fd.cusps / 2, (fd.down_cusps - fd.up_cusps) / 2};
}

FrontDiagram stabilize_front(FrontDiagram fd, StabSign sign)
{
    fd.cusps += 2;
    (sign == StabSign::Plus ? fd.down_cusps : fd.up_cusps) += 2;
    return fd;
}

CircleBundle surgery_circle_bundle(int genus, int stabs)
{
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
    if (stabs < 0) throw std::invalid_argument("number of stabilizations must be nonnegative");
    return {genus, 2 * genus - 2 - stabs};
}

SurgeryPresentation circle_bundle_presentation(int genus, const std::vector<StabSign>& history)
{
    SurgeryPresentation p;
    p.components.push_back({stabilize(base_knot(genus), history)});
    p.result = surgery_circle_bundle(genus, static_cast<int>(history.size()));
    return p;
}

TightCounts tight_structure_counts(int genus, int euler)
{
    if (genus <= 1) throw std::domain_error("classification input requires genus > 1");
    if (euler >= 0) throw std::domain_error("classification input requires negative Euler number");
    return {2 * genus - 1 - euler, 2, 2,
            "imported: 2g-1-e tight structures with negative twisting; exactly two horizontal, and these are the "
            "two same-sign stabilization choices"};
}

std::string to_string(TightnessTag t)
{
    return t == TightnessTag::UniversallyTight ? "universally tight" : "virtually overtwisted";
}

L41Report l41_universally_tight()
{
    using enum StabSign;
    const std::vector<std::pair<std::string, std::vector<StabSign>>> choices{
        {"S+S+K0", {Plus, Plus}}, {"S+S-K0", {Plus, Minus}}, {"S-S-K0", {Minus, Minus}}};
    L41Report r;
    r.lens_space = "L(4,1)";
    for (const auto& [label, signs] : choices) {
        const LegendrianRecord k = stabilize(unknot(), signs);
        const bool same_sign = k.plus_count() == 0 || k.minus_count() == 0;
        const SurgeryComponent c{k};
        r.entries.push_back(
            {label, k, c.smooth_framing(), same_sign ? TightnessTag::UniversallyTight : TightnessTag::VirtuallyOvertwisted});
    }
    r.universally_tight_up_to_isotopy = static_cast<int>(std::count_if(
        r.entries.begin(), r.entries.end(), [](const L41Entry& e) { return e.tag == TightnessTag::UniversallyTight; }));
    // S+S+K0 and S-S-K0 differ by the orientation reversal of the knot
    r.universally_tight_up_to_diffeomorphism = 1;
    return r;
}

nlohmann::json to_json(const LegendrianRecord& r)
{
    std::string history;
    for (StabSign s : r.stab_history) history += to_string(s);
    nlohmann::json j{{"tb", r.tb}, {"rot", r.rot}, {"stab_history", history}};
    if (r.genus_context) j["genus_context"] = *r.genus_context;
    return j;
}

nlohmann::json to_json(const CircleBundle& b) { return {{"genus", b.genus}, {"euler", b.euler}}; }

nlohmann::json to_json(const TightCounts& c)
{
    return {{"negative_twisting", c.negative_twisting},
            {"horizontal", c.horizontal},
            {"universally_tight_via_same_sign", c.universally_tight_via_same_sign},
            {"note", c.note}};
}

nlohmann::json to_json(const L41Entry& e)
{
    return {{"label", e.label},
            {"knot", to_json(e.knot)},
            {"smooth_framing", e.smooth_framing},
            {"tag", to_string(e.tag)}};
}

std::string to_json_lines(const std::vector<nlohmann::json>& rows)
{
    std::string out;
    for (const auto& r : rows) out += r.dump() + "\n";
    return out;
}

}  // namespace contact_forge::legendrian
