#include "pbq/engine.hpp"

#include <cstdlib>

namespace pbq {

ArcTable::ArcTable(const Diagram& d) {
    offset_.reserve(d.component_count());
    count_.reserve(d.component_count());
    for (int c = 0; c < d.component_count(); ++c) {
        offset_.push_back(total_);
        count_.push_back(d.pass_count(c));
        total_ += d.pass_count(c);
    }
}

int ArcTable::in_arc(Loc loc) const {
    int k = count_[loc.component];
    return offset_[loc.component] + (loc.position + k - 1) % k;
}

int ArcTable::out_arc(Loc loc) const { return offset_[loc.component] + loc.position; }

namespace {

IntPoly st_shifted(const IntPoly& p) {
    if (p.is_zero()) return p;
    auto rs = p.exponent_range(Var::s());
    auto rt = p.exponent_range(Var::t());
    if (rs.min == 0 && rt.min == 0) return p;
    return p.shifted(Monomial::of(Var::s(), -rs.min).times(Monomial::of(Var::t(), -rt.min)));
}

}  // namespace

IntPoly canonical_normalize(const IntPoly& raw, int writhe) {
    return st_shifted(writhe % 2 != 0 ? -raw : raw);
}

bool equal_up_to_st_unit(const IntPoly& a, const IntPoly& b, bool allow_sign) {
    IntPoly sa = st_shifted(a), sb = st_shifted(b);
    return sa == sb || (allow_sign && sa == -sb);
}

BoundsReport derive_bounds(Family f, int components, const IntPoly& canonical) {
    BoundsReport rep;
    rep.zero = canonical.is_zero();

    // Both endpoints over the terms; e folds the range through |.|, which is
    // what the degree arguments control.
    auto extent = [&](Var v) {
        auto r = canonical.exponent_range(v);
        int e = std::max(std::abs(r.min), std::abs(r.max));
        if (!rep.zero) rep.ranges.push_back({v, r.min, r.max, e});
        return rep.zero ? 0 : e;
    };
    auto knot_bounds_from_z = [&](int e) {
        rep.n_o_bound = (e % 2 == 0) ? e : e + 1;
        rep.n_real_bound = (e > 0) ? e + 1 : 0;
    };

    switch (f) {
        case Family::Sawollek:
        case Family::P2Parity:
        case Family::Quaternionic:
            break;
        case Family::ZParity: {
            auto r = canonical.exponent_range(Var::z());
            int e = extent(Var::z());
            knot_bounds_from_z(e);
            rep.z_span = rep.zero ? 0 : r.max - r.min;
            break;
        }
        case Family::LinkParity:
        case Family::AlphaLinkParity: {
            if (components == 1) {
                knot_bounds_from_z(extent(Var::z()));
            } else {
                for (int c = 1; c <= components; ++c)
                    rep.o_bounds.emplace(c, extent(Var::z_comp(c)));
                for (int i = 1; i <= components; ++i)
                    for (int j = i + 1; j <= components; ++j)
                        rep.l_bounds.emplace(std::make_pair(i, j), extent(Var::w_pair(i, j)));
            }
            if (f == Family::AlphaLinkParity) rep.n_v_bound = extent(Var::alpha());
            break;
        }
        case Family::AlphaSawollek:
            rep.n_v_bound = extent(Var::alpha());
            break;
        case Family::ZParityQuaternionic:
            // The complex representation doubles z exponents, so the knot
            // bounds do not transfer; the range is still reported.
            extent(Var::z());
            break;
    }
    return rep;
}

InvariantResult compute_invariant(const Diagram& d, Family f, const QuatParams& params) {
    InvariantResult res;
    res.family = f;
    res.gauss_code = d.serialize();
    res.writhe = d.writhe();
    int nc = d.component_count();

    if (d.real_crossing_count() == 0 || d.has_empty_component()) {
        res.raw_det = IntPoly::zero();
        res.canonical = IntPoly::zero();
    } else {
        ParityLabeling labels = classify(d);
        int arcs = d.total_passes();
        if (family_is_quaternionic(f)) {
            auto rs = make_quaternionic_ruleset(f, nc, params);
            auto rels = assemble_relations(d, rs, labels);
            QuatMatrix m = presentation_matrix(rels, arcs);
            res.raw_det = gauss_to_int(determinant(quaternion_to_complex_rep(m)));
        } else {
            auto rs = make_alexander_ruleset(f, nc);
            auto rels = assemble_relations(d, rs, labels);
            res.raw_det = determinant(presentation_matrix(rels, arcs));
        }
        res.canonical = canonical_normalize(res.raw_det, res.writhe);
    }

    res.bounds = derive_bounds(f, nc, res.canonical);

    if (nc == 1 && (f == Family::Sawollek || f == Family::ZParity || f == Family::P2Parity ||
                    f == Family::LinkParity))
        res.flags.nonclassical = !res.canonical.is_zero();
    if (nc == 1 && f == Family::ZParity) {
        InvariantResult saw = compute_invariant(d, Family::Sawollek);
        res.flags.odd_evidence = !equal_up_to_st_unit(res.canonical, saw.canonical, true);
    }
    return res;
}

}  // namespace pbq
