#include "pbq/switches.hpp"

namespace pbq {

namespace {

IntPoly ip_one() { return IntPoly::constant(1); }
IntPoly ip_mono(Var v, int e) { return IntPoly::monomial(v, e); }

}  // namespace

IntSwitch alexander_switch() {
    IntPoly st = ip_mono(Var::s(), 1) * ip_mono(Var::t(), 1);
    IntMatrix fwd(2, 2);
    fwd.at(0, 1) = ip_mono(Var::s(), 1);
    fwd.at(1, 0) = ip_mono(Var::t(), 1);
    fwd.at(1, 1) = ip_one() - st;

    IntMatrix inv(2, 2);
    inv.at(0, 0) = ip_one() - ip_mono(Var::s(), -1) * ip_mono(Var::t(), -1);
    inv.at(0, 1) = ip_mono(Var::t(), -1);
    inv.at(1, 0) = ip_mono(Var::s(), -1);
    return make_switch("B", fwd, inv);
}

IntSwitch p2_switch() {
    IntPoly st = ip_mono(Var::s(), 1) * ip_mono(Var::t(), 1);
    IntMatrix fwd(2, 2);
    fwd.at(0, 1) = ip_mono(Var::s(), 1);
    fwd.at(1, 0) = ip_mono(Var::t(), 1);
    fwd.at(1, 1) = st - ip_one();

    IntMatrix inv(2, 2);
    inv.at(0, 0) = ip_mono(Var::s(), -1) * ip_mono(Var::t(), -1) - ip_one();
    inv.at(0, 1) = ip_mono(Var::t(), -1);
    inv.at(1, 0) = ip_mono(Var::s(), -1);
    return make_switch("P2", fwd, inv);
}

QuatSwitch quaternionic_switch(const Quat& u, const Quat& v) {
    Quat minus_one(-1);
    if (!(u * u == minus_one) || !(v * v == minus_one))
        throw Error("quaternionic switch: units must square to -1");
    if (!(u * v == -(v * u)))
        throw Error("quaternionic switch: units must anticommute");

    QuatPoly one_plus_u = QuatPoly::constant(Quat(1) + u);
    QuatPoly one_minus_u = QuatPoly::constant(Quat(1) - u);
    Monomial t = Monomial::of(Var::t(), 1);
    Monomial t_inv = Monomial::of(Var::t(), -1);

    QuatMatrix fwd(2, 2);
    fwd.at(0, 0) = one_plus_u;
    fwd.at(0, 1) = QuatPoly::term(v, t);
    fwd.at(1, 0) = QuatPoly::term(-v, t_inv);
    fwd.at(1, 1) = one_plus_u;

    QuatMatrix inv(2, 2);
    inv.at(0, 0) = one_minus_u;
    inv.at(0, 1) = QuatPoly::term(-v, t);
    inv.at(1, 0) = QuatPoly::term(v, t_inv);
    inv.at(1, 1) = one_minus_u;
    return make_switch("Q", fwd, inv);
}

QuatSwitch quaternionic_parity_switch() {
    return antidiagonal_switch<Quat>("P(z)", Var::z());
}

Quat parse_quat_unit(const std::string& text) {
    if (text == "1") return Quat(1);
    if (text == "-1") return Quat(-1);
    if (text == "i") return Quat::unit_i();
    if (text == "-i") return -Quat::unit_i();
    if (text == "j") return Quat::unit_j();
    if (text == "-j") return -Quat::unit_j();
    if (text == "k") return Quat::unit_k();
    if (text == "-k") return -Quat::unit_k();
    throw Error("unknown quaternion unit '" + text + "' (expected one of 1,-1,i,-i,j,-j,k,-k)");
}

std::string AxiomReport::str() const {
    std::string out;
    for (const auto& c : checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        if (!c.required) out += "  (informational)";
        if (!c.note.empty()) out += "  -- " + c.note;
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Families

namespace {

const std::vector<std::pair<std::string, Family>>& family_table() {
    static const std::vector<std::pair<std::string, Family>> table = {
        {"sawollek", Family::Sawollek},
        {"z-parity", Family::ZParity},
        {"p2-parity", Family::P2Parity},
        {"link-parity", Family::LinkParity},
        {"alpha-sawollek", Family::AlphaSawollek},
        {"alpha-link-parity", Family::AlphaLinkParity},
        {"quaternionic", Family::Quaternionic},
        {"z-parity-quaternionic", Family::ZParityQuaternionic},
    };
    return table;
}

}  // namespace

Family parse_family(const std::string& name) {
    for (const auto& [n, f] : family_table())
        if (n == name) return f;
    std::string known;
    for (const auto& [n, f] : family_table()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    throw Error("unknown family '" + name + "' (known: " + known + ")");
}

std::string family_name(Family f) {
    for (const auto& [n, g] : family_table())
        if (g == f) return n;
    throw std::logic_error("family_name: bad enum value");
}

bool family_is_quaternionic(Family f) {
    return f == Family::Quaternionic || f == Family::ZParityQuaternionic;
}

bool family_has_virtual_map(Family f) {
    return f == Family::AlphaSawollek || f == Family::AlphaLinkParity;
}

const std::vector<std::string>& family_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, f] : family_table()) out.push_back(n);
        return out;
    }();
    return names;
}

RuleSet<BigInt> make_alexander_ruleset(Family f, int components) {
    if (family_is_quaternionic(f))
        throw std::logic_error("make_alexander_ruleset: " + family_name(f) +
                               " is a quaternionic family");
    if (components < 1) throw Error("rule set needs at least one component");

    RuleSet<BigInt> rs;
    rs.family = f;
    rs.components = components;
    IntSwitch b = alexander_switch();
    for (int c = 0; c < components; ++c) rs.even.emplace(c, b);

    switch (f) {
        case Family::Sawollek:
        case Family::AlphaSawollek:
            for (int c = 0; c < components; ++c) rs.odd.emplace(c, b);
            for (int i = 0; i < components; ++i)
                for (int j = i + 1; j < components; ++j) rs.link.emplace(std::make_pair(i, j), b);
            break;
        case Family::ZParity:
            for (int c = 0; c < components; ++c)
                rs.odd.emplace(c, antidiagonal_switch<BigInt>("P(z)", Var::z()));
            break;
        case Family::P2Parity:
            for (int c = 0; c < components; ++c) rs.odd.emplace(c, p2_switch());
            break;
        case Family::LinkParity:
        case Family::AlphaLinkParity:
            for (int c = 0; c < components; ++c) {
                Var v = (components == 1) ? Var::z() : Var::z_comp(c + 1);
                rs.odd.emplace(c, antidiagonal_switch<BigInt>("P(" + v.str() + ")", v));
            }
            for (int i = 0; i < components; ++i)
                for (int j = i + 1; j < components; ++j) {
                    Var v = Var::w_pair(i + 1, j + 1);
                    rs.link.emplace(std::make_pair(i, j),
                                    antidiagonal_switch<BigInt>("L(" + v.str() + ")", v));
                }
            break;
        default:
            throw std::logic_error("make_alexander_ruleset: unhandled family");
    }
    if (family_has_virtual_map(f))
        rs.virt = antidiagonal_switch<BigInt>("V(alpha)", Var::alpha());
    return rs;
}

RuleSet<Quat> make_quaternionic_ruleset(Family f, int components, const QuatParams& params) {
    if (!family_is_quaternionic(f))
        throw std::logic_error("make_quaternionic_ruleset: " + family_name(f) +
                               " is not a quaternionic family");
    if (components < 1) throw Error("rule set needs at least one component");

    RuleSet<Quat> rs;
    rs.family = f;
    rs.components = components;
    QuatSwitch q = quaternionic_switch(params.u, params.v);
    for (int c = 0; c < components; ++c) rs.even.emplace(c, q);

    switch (f) {
        case Family::Quaternionic:
            for (int c = 0; c < components; ++c) rs.odd.emplace(c, q);
            for (int i = 0; i < components; ++i)
                for (int j = i + 1; j < components; ++j) rs.link.emplace(std::make_pair(i, j), q);
            break;
        case Family::ZParityQuaternionic:
            for (int c = 0; c < components; ++c) rs.odd.emplace(c, quaternionic_parity_switch());
            break;
        default:
            throw std::logic_error("make_quaternionic_ruleset: unhandled family");
    }
    return rs;
}

}  // namespace pbq
