// Turns a diagram plus a rule set into linear relations between arc labels,
// builds the presentation matrix, and reduces its determinant to the
// canonical polynomial together with the derived crossing-number bounds.
//
// Arc p of a component runs from pass p to pass p+1 (cyclically), so a
// component with k passes has k arcs and every pass consumes exactly one arc
// and produces exactly one.  At a crossing the acting matrix M maps the two
// incoming labels to the two outgoing ones:
//   out1 = M11*in1 + M12*in2,   out2 = M21*in1 + M22*in2
// with slots assigned by crossing sign:
//   positive: (in1, in2) = (under-in, over-in), (out1, out2) = (over-out, under-out)
//   negative: (in1, in2) = (over-in, under-in), (out1, out2) = (under-out, over-out)
// and the inverse matrix acting at negative crossings.  Virtual crossings use
// the family's virtual switch with slot 2 on the pass that comes first in
// traversal order and outputs listed strand-swapped, like the real case; with
// the antidiagonal twist map this scales the first-traversed strand by alpha
// and the second by alpha^-1.

#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbq/diagram.hpp"
#include "pbq/parity.hpp"
#include "pbq/switches.hpp"

namespace pbq {

// ---------------------------------------------------------------------------
// Arc indexing

class ArcTable {
public:
    explicit ArcTable(const Diagram& d);

    int total() const { return total_; }
    // Arc consumed by the pass at loc.
    int in_arc(Loc loc) const;
    // Arc produced by the pass at loc.
    int out_arc(Loc loc) const;

private:
    std::vector<int> offset_, count_;
    int total_ = 0;
};

// ---------------------------------------------------------------------------
// Relation assembly

template <class C>
struct Relation {
    int out_arc = 0;
    std::vector<std::pair<int, Poly<C>>> inputs;
};

template <class C>
std::vector<Relation<C>> assemble_relations(const Diagram& d, const RuleSet<C>& rs,
                                            const ParityLabeling& labels) {
    ArcTable arcs(d);
    std::vector<Relation<C>> rels;
    rels.reserve(2 * d.crossings().size());

    auto emit = [&](const Matrix<C>& m, int in1, int in2, int out1, int out2) {
        for (int row = 0; row < 2; ++row) {
            Relation<C> rel;
            rel.out_arc = row == 0 ? out1 : out2;
            if (!m.at(row, 0).is_zero()) rel.inputs.emplace_back(in1, m.at(row, 0));
            if (!m.at(row, 1).is_zero()) rel.inputs.emplace_back(in2, m.at(row, 1));
            rels.push_back(std::move(rel));
        }
    };

    for (const auto& [id, info] : d.crossings()) {
        if (info.is_virtual) {
            if (!rs.virt)
                throw Error("family '" + family_name(rs.family) +
                            "' has no virtual crossing map; diagram contains virtual crossing " +
                            std::to_string(id));
            emit(rs.virt->fwd, arcs.in_arc(info.b), arcs.in_arc(info.a), arcs.out_arc(info.a),
                 arcs.out_arc(info.b));
            continue;
        }
        const ParityLabel& label = labels.at(id);
        const Switch<C>* sw = nullptr;
        if (label.cls == ParityClass::Link) {
            auto it = rs.link.find({label.comp_a - 1, label.comp_b - 1});
            if (it == rs.link.end())
                throw Error("family '" + family_name(rs.family) +
                            "' has no link crossing switch; crossing " + std::to_string(id) +
                            " joins components " + std::to_string(label.comp_a) + "," +
                            std::to_string(label.comp_b));
            sw = &it->second;
        } else if (label.cls == ParityClass::Odd) {
            sw = &rs.odd.at(info.a.component);
        } else {
            sw = &rs.even.at(info.a.component);
        }
        const Matrix<C>& m = info.sign > 0 ? sw->fwd : sw->inv;
        Loc over = info.a, under = info.b;
        if (info.sign > 0)
            emit(m, arcs.in_arc(under), arcs.in_arc(over), arcs.out_arc(over),
                 arcs.out_arc(under));
        else
            emit(m, arcs.in_arc(over), arcs.in_arc(under), arcs.out_arc(under),
                 arcs.out_arc(over));
    }
    return rels;
}

// Rows are indexed by output arc; each row states 0 = sum(inputs) - out.
template <class C>
Matrix<C> presentation_matrix(const std::vector<Relation<C>>& rels, int arcs) {
    Matrix<C> m(arcs, arcs);
    Poly<C> minus_one = Poly<C>::constant(-coeff_traits<C>::one());
    for (const auto& rel : rels) {
        for (const auto& [arc, coeff] : rel.inputs) m.at(rel.out_arc, arc) += coeff;
        m.at(rel.out_arc, rel.out_arc) += minus_one;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Canonical form

/// (-1)^writhe times the raw determinant, with the s and t exponent minima
/// shifted to zero.  Other variables are never shifted: their exponent ranges
/// carry the crossing-number information.
IntPoly canonical_normalize(const IntPoly& raw, int writhe);

/// Equality after shifting both sides' s,t minima to zero, optionally up to
/// an overall sign.  This is the equivalence in which the polynomials are
/// diagram invariants.
bool equal_up_to_st_unit(const IntPoly& a, const IntPoly& b, bool allow_sign = true);

// ---------------------------------------------------------------------------
// Bounds and results

struct VarRange {
    Var var;
    int e_min = 0, e_max = 0;
    int e = 0;  // max(|e_min|, |e_max|)
};

struct BoundsReport {
    bool zero = false;              // polynomial vanished; bounds degenerate to 0
    std::vector<VarRange> ranges;   // empty when zero
    std::optional<int> n_o_bound;   // lower bound on odd crossings (knots)
    std::optional<int> n_real_bound;  // lower bound on real crossings (knots)
    std::optional<int> z_span;      // e_max - e_min of z (reported, conjectural bound)
    std::map<int, int> o_bounds;    // per-component odd crossing bounds (1-based)
    std::map<std::pair<int, int>, int> l_bounds;  // per-pair link crossing bounds
    std::optional<int> n_v_bound;   // lower bound on virtual crossings
};

BoundsReport derive_bounds(Family f, int components, const IntPoly& canonical);

struct InvariantFlags {
    std::optional<bool> nonclassical;
    std::optional<bool> odd_evidence;
};

struct InvariantResult {
    Family family = Family::Sawollek;
    std::string gauss_code;
    int writhe = 0;
    IntPoly raw_det;
    IntPoly canonical;
    BoundsReport bounds;
    InvariantFlags flags;
};

/// Full pipeline.  Diagrams with no real crossing, or with an empty
/// component, evaluate to the zero polynomial before any switch is consulted.
InvariantResult compute_invariant(const Diagram& d, Family f, const QuatParams& params = {});

}  // namespace pbq
