// Signed oriented Gauss codes for virtual link diagrams.
//
// A code is a list of components separated by ';', each a comma-separated
// cyclic sequence of passes.  A pass is O<id><sign> (over), U<id><sign>
// (under) or V<id> (virtual).  '0' is accepted for 'O'.  Whitespace is
// ignored everywhere.  Every crossing id occurs exactly twice: for a real
// crossing once as O and once as U with equal signs, for a virtual crossing
// twice as V.  Diagrams are immutable; the Reidemeister helpers return new
// values.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pbq/error.hpp"

namespace pbq {

enum class PassKind : std::uint8_t { Over, Under, Virtual };

struct Pass {
    PassKind kind = PassKind::Over;
    int crossing = 0;
    int sign = 0;  // +1 / -1 for real passes, 0 for virtual
    bool operator==(const Pass&) const = default;
};

// Position of one pass: component index and index within the component's
// cyclic pass sequence (both 0-based).
struct Loc {
    int component = 0;
    int position = 0;
    auto operator<=>(const Loc&) const = default;
};

struct CrossingInfo {
    int id = 0;
    bool is_virtual = false;
    int sign = 0;  // 0 for virtual crossings
    // Real crossings: a = over pass, b = under pass.
    // Virtual crossings: a, b in traversal order (smaller Loc first).
    Loc a, b;
};

enum class SignPolicy { Strict, Permissive };  // Permissive: missing sign reads as '+'

class Diagram {
public:
    Diagram() : components_(1) {}  // the unknot: one component, no passes

    static Diagram parse(const std::string& code, SignPolicy policy = SignPolicy::Strict);
    static Diagram from_components(std::vector<std::vector<Pass>> components);

    std::string serialize() const;

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<Pass>& component(int c) const { return components_.at(c); }
    int pass_count(int c) const { return static_cast<int>(components_.at(c).size()); }
    int total_passes() const;
    const Pass& pass_at(Loc l) const { return components_.at(l.component).at(l.position); }

    const std::map<int, CrossingInfo>& crossings() const { return crossings_; }
    int real_crossing_count() const;
    int virtual_crossing_count() const;
    bool has_virtual() const { return virtual_crossing_count() > 0; }
    bool has_empty_component() const;

    int writhe() const;

    int max_crossing_id() const;

    bool operator==(const Diagram& o) const { return components_ == o.components_; }

private:
    void index_crossings();  // validates and fills crossings_

    std::vector<std::vector<Pass>> components_;
    std::map<int, CrossingInfo> crossings_;
};

// --- Reidemeister moves ------------------------------------------------------
//
// Sites address arcs: arc p of a component runs from pass p to pass p+1
// (cyclically), so inserting "on arc p" places new passes after pass p.  An
// empty component accepts only arc 0.

struct MoveSite {
    int component = 0;
    int arc = 0;
};

enum class KinkOrder { OverFirst, UnderFirst };

// Inserts a one-crossing kink (two adjacent passes of a fresh crossing with
// the given sign) on the chosen arc.
Diagram r1_insert(const Diagram& d, MoveSite site, KinkOrder order, int sign);

// Removes real crossing `id`, whose two passes must be cyclically adjacent on
// one component.
Diagram r1_remove(const Diagram& d, int id);

// Inserts two fresh crossings a (sign eps) and b (sign -eps).  With
// over_at_first_site, siteA receives (O a, O b) and siteB (U b, U a);
// otherwise the O/U roles of the two sites are swapped.  Returns the new
// diagram and the two fresh ids (a, b).
struct R2Insertion {
    Diagram diagram;
    int id_a = 0, id_b = 0;
};
R2Insertion r2_insert(const Diagram& d, MoveSite site_a, MoveSite site_b,
                      bool over_at_first_site, int eps);

// Removes crossings a and b, whose four passes must form one of the r2_insert
// patterns (in either role order).
Diagram r2_remove(const Diagram& d, int id_a, int id_b);

// Moves the base point of component c forward by k passes.  Relabels nothing.
Diagram rotated(const Diagram& d, int c, int k);

}  // namespace pbq
