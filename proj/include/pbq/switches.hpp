// Switches (invertible 2x2 matrices over Laurent rings), the Yang-Baxter
// checker, and the per-family rule sets that tell the engine which switch to
// apply at each crossing class.
//
// Every compatibility identity used anywhere in the project is an instance of
// one matrix equation,
//   (X ox 1)(1 ox Y)(Z ox 1) == (1 ox Z)(Y ox 1)(1 ox X),
// over 3x3 block matrices, so the whole axiom suite reduces to ybe_identity
// calls with different (X, Y, Z) casts.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pbq/error.hpp"
#include "pbq/matrix.hpp"

namespace pbq {

// ---------------------------------------------------------------------------
// Switches

template <class C>
struct Switch {
    std::string name;
    Matrix<C> fwd;  // applied at positive crossings
    Matrix<C> inv;  // applied at negative crossings

    bool involution() const { return fwd == inv; }
};

using IntSwitch = Switch<BigInt>;
using QuatSwitch = Switch<Quat>;

// Validating factory: rejects anything that is not a two-sided inverse pair.
template <class C>
Switch<C> make_switch(std::string name, Matrix<C> fwd, Matrix<C> inv) {
    if (fwd.rows() != 2 || fwd.cols() != 2 || inv.rows() != 2 || inv.cols() != 2)
        throw std::logic_error("make_switch: switches are 2x2");
    auto id = Matrix<C>::identity(2);
    if (!(fwd * inv == id) || !(inv * fwd == id))
        throw std::logic_error("make_switch(" + name + "): matrices are not mutually inverse");
    return {std::move(name), std::move(fwd), std::move(inv)};
}

/// [[0, s], [t, 1-st]], the Alexander switch.
IntSwitch alexander_switch();

/// [[0, s], [t, st-1]]; invertible with unit off-diagonals but not itself a
/// Yang-Baxter solution, which is fine for a parity switch.
IntSwitch p2_switch();

/// [[0, v], [v^-1, 0]]: a self-inverse switch in a single fresh variable.
template <class C>
Switch<C> antidiagonal_switch(std::string name, Var v) {
    Matrix<C> m(2, 2);
    m.at(0, 1) = Poly<C>::monomial(v, 1);
    m.at(1, 0) = Poly<C>::monomial(v, -1);
    return make_switch(std::move(name), m, m);
}

/// [[1+u, t v], [-t^-1 v, 1+u]] for anticommuting imaginary units u, v.
QuatSwitch quaternionic_switch(const Quat& u, const Quat& v);

/// [[0, z], [z^-1, 0]] over the quaternions.
QuatSwitch quaternionic_parity_switch();

/// Parses one of "1", "-1", "i", "-i", "j", "-j", "k", "-k".
Quat parse_quat_unit(const std::string& text);

// ---------------------------------------------------------------------------
// Yang-Baxter machinery

/// M ox 1: the 2x2 matrix acting on the first two of three strands.
template <class C>
Matrix<C> tensor_left(const Matrix<C>& m) {
    Matrix<C> r(3, 3);
    r.at(0, 0) = m.at(0, 0);
    r.at(0, 1) = m.at(0, 1);
    r.at(1, 0) = m.at(1, 0);
    r.at(1, 1) = m.at(1, 1);
    r.at(2, 2) = Poly<C>::constant(coeff_traits<C>::one());
    return r;
}

/// 1 ox M: the same matrix acting on the last two strands.
template <class C>
Matrix<C> tensor_right(const Matrix<C>& m) {
    Matrix<C> r(3, 3);
    r.at(0, 0) = Poly<C>::constant(coeff_traits<C>::one());
    r.at(1, 1) = m.at(0, 0);
    r.at(1, 2) = m.at(0, 1);
    r.at(2, 1) = m.at(1, 0);
    r.at(2, 2) = m.at(1, 1);
    return r;
}

template <class C>
bool ybe_identity(const Matrix<C>& x, const Matrix<C>& y, const Matrix<C>& z) {
    return tensor_left(x) * tensor_right(y) * tensor_left(z) ==
           tensor_right(z) * tensor_left(y) * tensor_right(x);
}

// ---------------------------------------------------------------------------
// Axiom reports

struct CheckResult {
    std::string name;
    bool pass = false;
    bool required = true;
    std::string note;
};

struct AxiomReport {
    std::vector<CheckResult> checks;

    bool required_pass() const {
        for (const auto& c : checks)
            if (c.required && !c.pass) return false;
        return true;
    }
    std::string str() const;
};

/// Axioms of a single switch: two-sided inverse, unit off-diagonal entries,
/// the pure Yang-Baxter equation, and the fixed-point relation
/// g == M21 + M22*g for g = M12^-1*(1 - M11), checked on both matrices.
/// The last two are structural for even switches but fail for legitimate
/// parity switches, so their required flags are parameters.
template <class C>
AxiomReport check_switch_axioms(const Switch<C>& s, bool require_ybe, bool require_axiom4) {
    AxiomReport rep;
    auto id = Matrix<C>::identity(2);
    rep.checks.push_back({s.name + ": two-sided inverse",
                          s.fwd * s.inv == id && s.inv * s.fwd == id, true, ""});
    bool units = s.fwd.at(0, 1).unit_parts().has_value() &&
                 s.fwd.at(1, 0).unit_parts().has_value() &&
                 s.inv.at(0, 1).unit_parts().has_value() &&
                 s.inv.at(1, 0).unit_parts().has_value();
    rep.checks.push_back({s.name + ": unit off-diagonal entries", units, true, ""});
    rep.checks.push_back({"ybe(" + s.name + "," + s.name + "," + s.name + ")",
                          ybe_identity(s.fwd, s.fwd, s.fwd), require_ybe, ""});

    auto fixed_point = [](const Matrix<C>& m) {
        auto binv = m.at(0, 1).unit_inverse();
        if (!binv) return false;
        Poly<C> one = Poly<C>::constant(coeff_traits<C>::one());
        Poly<C> g = *binv * (one - m.at(0, 0));  // inverse on the left
        return g == m.at(1, 0) + m.at(1, 1) * g;
    };
    rep.checks.push_back({s.name + ": fixed-point relation",
                          fixed_point(s.fwd) && fixed_point(s.inv), require_axiom4, ""});
    return rep;
}

namespace detail {

template <class C>
void add_ybe_check(AxiomReport& rep, const Switch<C>& x, const Switch<C>& y, const Switch<C>& z) {
    rep.checks.push_back({"ybe(" + x.name + "," + y.name + "," + z.name + ")",
                          ybe_identity(x.fwd, y.fwd, z.fwd), true, ""});
}

}  // namespace detail

/// The three mixed equations a parity switch p must satisfy against its even
/// companion b; the pure (p,p,p) case never arises, since a triangle move
/// involves an even number of odd crossings.
template <class C>
AxiomReport verify_parity_pair(const Switch<C>& b, const Switch<C>& p) {
    AxiomReport rep;
    detail::add_ybe_check(rep, p, p, b);
    detail::add_ybe_check(rep, p, b, p);
    detail::add_ybe_check(rep, b, p, p);
    return rep;
}

/// The seven equations a link switch l must satisfy against the even and odd
/// switches b, p of one of its two components.
template <class C>
AxiomReport verify_link_equations(const Switch<C>& l, const Switch<C>& b, const Switch<C>& p) {
    AxiomReport rep;
    detail::add_ybe_check(rep, l, l, b);
    detail::add_ybe_check(rep, l, b, l);
    detail::add_ybe_check(rep, b, l, l);
    detail::add_ybe_check(rep, l, l, p);
    detail::add_ybe_check(rep, l, p, l);
    detail::add_ybe_check(rep, p, l, l);
    detail::add_ybe_check(rep, l, l, l);
    return rep;
}

/// The triangle equation for three pairwise link switches, components a<b<c:
/// (L_ab, L_ac, L_bc).
template <class C>
AxiomReport verify_triple(const Switch<C>& l_ab, const Switch<C>& l_ac, const Switch<C>& l_bc) {
    AxiomReport rep;
    detail::add_ybe_check(rep, l_ab, l_ac, l_bc);
    return rep;
}

// ---------------------------------------------------------------------------
// Families and rule sets

enum class Family : std::uint8_t {
    Sawollek,
    ZParity,
    P2Parity,
    LinkParity,
    AlphaSawollek,
    AlphaLinkParity,
    Quaternionic,
    ZParityQuaternionic,
};

Family parse_family(const std::string& name);
std::string family_name(Family f);
bool family_is_quaternionic(Family f);
bool family_has_virtual_map(Family f);
const std::vector<std::string>& family_names();

struct QuatParams {
    Quat u = Quat::unit_i();
    Quat v = Quat::unit_j();
};

/// Which switch acts where: even/odd self-crossings per component (0-based),
/// link crossings per component pair, virtual crossings if the family maps
/// them at all.
template <class C>
struct RuleSet {
    Family family = Family::Sawollek;
    int components = 1;
    std::map<int, Switch<C>> even;
    std::map<int, Switch<C>> odd;
    std::map<std::pair<int, int>, Switch<C>> link;
    std::optional<Switch<C>> virt;
};

using IntRuleSet = RuleSet<BigInt>;
using QuatRuleSet = RuleSet<Quat>;

RuleSet<BigInt> make_alexander_ruleset(Family f, int components);
RuleSet<Quat> make_quaternionic_ruleset(Family f, int components, const QuatParams& params = {});

/// Runs the complete axiom battery for a rule set: per-switch axioms (pure
/// Yang-Baxter required only of even, link and virtual switches), the mixed
/// parity equations per component, the seven link equations per pair against
/// both of its components, the triangle equation for every component triple,
/// and the virtual battery against every real switch.  Checks are deduplicated
/// by name, so repeated switches are verified once.
template <class C>
AxiomReport verify_ruleset(const RuleSet<C>& rs) {
    AxiomReport rep;
    std::set<std::string> seen;
    auto absorb = [&](const AxiomReport& sub) {
        for (const auto& c : sub.checks)
            if (seen.insert(c.name).second) rep.checks.push_back(c);
    };

    for (const auto& [c, sw] : rs.even) absorb(check_switch_axioms(sw, true, true));
    for (const auto& [c, sw] : rs.odd) absorb(check_switch_axioms(sw, false, false));
    for (int c = 0; c < rs.components; ++c)
        absorb(verify_parity_pair(rs.even.at(c), rs.odd.at(c)));

    for (const auto& [pair, l] : rs.link) {
        absorb(check_switch_axioms(l, true, false));
        for (int side : {pair.first, pair.second})
            absorb(verify_link_equations(l, rs.even.at(side), rs.odd.at(side)));
    }
    for (int i = 0; i < rs.components; ++i)
        for (int j = i + 1; j < rs.components; ++j)
            for (int k = j + 1; k < rs.components; ++k) {
                auto ij = rs.link.find({i, j});
                auto ik = rs.link.find({i, k});
                auto jk = rs.link.find({j, k});
                if (ij != rs.link.end() && ik != rs.link.end() && jk != rs.link.end())
                    absorb(verify_triple(ij->second, ik->second, jk->second));
            }

    if (rs.virt) {
        absorb(check_switch_axioms(*rs.virt, true, false));
        std::map<std::string, const Switch<C>*> reals;
        for (const auto& [c, sw] : rs.even) reals.emplace(sw.name, &sw);
        for (const auto& [c, sw] : rs.odd) reals.emplace(sw.name, &sw);
        for (const auto& [pair, sw] : rs.link) reals.emplace(sw.name, &sw);
        for (const auto& [name, sw] : reals) absorb(verify_parity_pair(*sw, *rs.virt));
    }
    return rep;
}

}  // namespace pbq
