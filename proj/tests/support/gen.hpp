// Seeded random generators shared across the test suites.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "pbq/diagram.hpp"
#include "pbq/matrix.hpp"

namespace pbq::testing {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline IntPoly random_poly(Rng& rng, const std::vector<Var>& vars, int max_terms, int max_abs_exp,
                           int max_abs_coeff = 3) {
    IntPoly p;
    int terms = uniform(rng, 0, max_terms);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (const Var& v : vars)
            if (uniform(rng, 0, 1)) m = m.times(Monomial::of(v, uniform(rng, -max_abs_exp, max_abs_exp)));
        int c = uniform(rng, -max_abs_coeff, max_abs_coeff);
        p += IntPoly::term(BigInt(c), m);
    }
    return p;
}

inline IntMatrix random_matrix(Rng& rng, std::size_t n, const std::vector<Var>& vars,
                               int max_terms = 2, int max_abs_exp = 2) {
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = random_poly(rng, vars, max_terms, max_abs_exp);
    return m;
}

inline QuatMatrix random_quat_matrix(Rng& rng, std::size_t n, int max_abs_exp = 1) {
    QuatMatrix m(n, n);
    std::vector<Var> vars{Var::z()};
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            QuatPoly p;
            int terms = uniform(rng, 0, 2);
            for (int i = 0; i < terms; ++i) {
                Quat q{BigInt(uniform(rng, -2, 2)), BigInt(uniform(rng, -1, 1)),
                       BigInt(uniform(rng, -1, 1)), BigInt(uniform(rng, -1, 1))};
                p += QuatPoly::term(q, Monomial::of(Var::z(), uniform(rng, -max_abs_exp, max_abs_exp)));
            }
            m.at(r, c) = p;
        }
    return m;
}

// A uniformly shuffled abstract Gauss code: every interleaving of the pass
// pairs is a valid virtual diagram, so no planarity filter is needed.
inline Diagram random_diagram(Rng& rng, int max_crossings, int components = 1,
                              int max_virtual = 0) {
    int n = uniform(rng, 1, max_crossings);
    int nv = uniform(rng, 0, max_virtual);
    std::vector<Pass> all;
    for (int id = 1; id <= n; ++id) {
        int sign = uniform(rng, 0, 1) ? 1 : -1;
        all.push_back({PassKind::Over, id, sign});
        all.push_back({PassKind::Under, id, sign});
    }
    for (int id = n + 1; id <= n + nv; ++id) {
        all.push_back({PassKind::Virtual, id, 0});
        all.push_back({PassKind::Virtual, id, 0});
    }
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::vector<Pass>> comps(components);
    for (std::size_t i = 0; i < all.size(); ++i)
        comps[uniform(rng, 0, components - 1)].push_back(all[i]);
    // A crossing split across components is a link crossing; that is fine.
    return Diagram::from_components(std::move(comps));
}

}  // namespace pbq::testing
