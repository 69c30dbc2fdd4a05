#include "pbq/diagram.hpp"

#include <algorithm>
#include <cctype>

namespace pbq {

namespace {

std::string strip_ws(const std::string& in) {
    std::string out;
    out.reserve(in.size());
    for (char ch : in)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

std::vector<std::string> split(const std::string& in, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = in.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(in.substr(start));
            return parts;
        }
        parts.push_back(in.substr(start, pos - start));
        start = pos + 1;
    }
}

Pass parse_pass(const std::string& tok, SignPolicy policy, int comp, int idx) {
    if (tok.empty()) throw ParseError("empty pass token", comp, idx);
    PassKind kind;
    switch (tok[0]) {
        case 'O': case '0': kind = PassKind::Over; break;
        case 'U': kind = PassKind::Under; break;
        case 'V': kind = PassKind::Virtual; break;
        default:
            throw ParseError("malformed pass token '" + tok + "': expected O, U or V", comp, idx);
    }
    std::size_t p = 1, digits_end = 1;
    while (digits_end < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits_end])))
        ++digits_end;
    if (digits_end == p)
        throw ParseError("malformed pass token '" + tok + "': missing crossing id", comp, idx);
    long id = 0;
    for (std::size_t q = p; q < digits_end; ++q) {
        id = id * 10 + (tok[q] - '0');
        if (id > 1000000) throw ParseError("crossing id out of range in '" + tok + "'", comp, idx);
    }
    if (id < 1) throw ParseError("crossing ids must be positive in '" + tok + "'", comp, idx);

    int sign = 0;
    std::size_t rest = digits_end;
    if (rest < tok.size()) {
        if (tok[rest] == '+') sign = 1;
        else if (tok[rest] == '-') sign = -1;
        else throw ParseError("malformed pass token '" + tok + "'", comp, idx);
        ++rest;
    }
    if (rest != tok.size())
        throw ParseError("malformed pass token '" + tok + "': trailing characters", comp, idx);

    if (kind == PassKind::Virtual) {
        if (sign != 0)
            throw ParseError("virtual pass '" + tok + "' must not carry a sign", comp, idx);
        return {kind, static_cast<int>(id), 0};
    }
    if (sign == 0) {
        if (policy == SignPolicy::Strict)
            throw ParseError("pass '" + tok + "' is missing its sign", comp, idx);
        sign = 1;
    }
    return {kind, static_cast<int>(id), sign};
}

}  // namespace

Diagram Diagram::parse(const std::string& code, SignPolicy policy) {
    std::string text = strip_ws(code);
    std::vector<std::vector<Pass>> comps;
    int ci = 0;
    for (const std::string& comp_text : split(text, ';')) {
        std::vector<Pass> comp;
        if (!comp_text.empty()) {
            int ti = 0;
            for (const std::string& tok : split(comp_text, ','))
                comp.push_back(parse_pass(tok, policy, ci, ti++));
        }
        comps.push_back(std::move(comp));
        ++ci;
    }
    return from_components(std::move(comps));
}

Diagram Diagram::from_components(std::vector<std::vector<Pass>> components) {
    if (components.empty()) components.emplace_back();
    Diagram d;
    d.components_ = std::move(components);
    d.index_crossings();
    return d;
}

void Diagram::index_crossings() {
    crossings_.clear();
    struct Seen {
        std::vector<std::pair<Loc, Pass>> occ;
    };
    std::map<int, Seen> seen;
    for (int c = 0; c < component_count(); ++c) {
        const auto& comp = components_[c];
        for (int p = 0; p < static_cast<int>(comp.size()); ++p) {
            const Pass& pass = comp[p];
            if (pass.crossing < 1)
                throw ParseError("crossing ids must be positive", c, p);
            if (pass.kind != PassKind::Virtual && pass.sign != 1 && pass.sign != -1)
                throw ParseError("real pass of crossing " + std::to_string(pass.crossing) +
                                     " lacks a sign",
                                 c, p);
            if (pass.kind == PassKind::Virtual && pass.sign != 0)
                throw ParseError("virtual pass of crossing " + std::to_string(pass.crossing) +
                                     " carries a sign",
                                 c, p);
            seen[pass.crossing].occ.emplace_back(Loc{c, p}, pass);
        }
    }
    for (auto& [id, s] : seen) {
        if (s.occ.size() != 2)
            throw ParseError("crossing " + std::to_string(id) + " appears " +
                             std::to_string(s.occ.size()) + " times (expected 2)");
        const auto& [loc1, p1] = s.occ[0];
        const auto& [loc2, p2] = s.occ[1];
        CrossingInfo info;
        info.id = id;
        bool v1 = p1.kind == PassKind::Virtual, v2 = p2.kind == PassKind::Virtual;
        if (v1 != v2)
            throw ParseError("crossing " + std::to_string(id) + " mixes real and virtual passes");
        if (v1) {
            info.is_virtual = true;
            info.a = std::min(loc1, loc2);
            info.b = std::max(loc1, loc2);
        } else {
            if (p1.kind == p2.kind)
                throw ParseError("crossing " + std::to_string(id) + " has two " +
                                 (p1.kind == PassKind::Over ? std::string("over")
                                                            : std::string("under")) +
                                 " passes");
            if (p1.sign != p2.sign)
                throw ParseError("crossing " + std::to_string(id) +
                                 " has mismatched signs on its passes");
            info.sign = p1.sign;
            info.a = (p1.kind == PassKind::Over) ? loc1 : loc2;
            info.b = (p1.kind == PassKind::Over) ? loc2 : loc1;
        }
        crossings_.emplace(id, info);
    }
}

std::string Diagram::serialize() const {
    std::string out;
    for (int c = 0; c < component_count(); ++c) {
        if (c) out += ";";
        const auto& comp = components_[c];
        for (std::size_t p = 0; p < comp.size(); ++p) {
            if (p) out += ",";
            const Pass& pass = comp[p];
            switch (pass.kind) {
                case PassKind::Over: out += "O"; break;
                case PassKind::Under: out += "U"; break;
                case PassKind::Virtual: out += "V"; break;
            }
            out += std::to_string(pass.crossing);
            if (pass.kind != PassKind::Virtual) out += (pass.sign > 0) ? "+" : "-";
        }
    }
    return out;
}

int Diagram::total_passes() const {
    int n = 0;
    for (const auto& c : components_) n += static_cast<int>(c.size());
    return n;
}

int Diagram::real_crossing_count() const {
    int n = 0;
    for (const auto& [id, info] : crossings_)
        if (!info.is_virtual) ++n;
    return n;
}

int Diagram::virtual_crossing_count() const {
    int n = 0;
    for (const auto& [id, info] : crossings_)
        if (info.is_virtual) ++n;
    return n;
}

bool Diagram::has_empty_component() const {
    for (const auto& c : components_)
        if (c.empty()) return true;
    return false;
}

int Diagram::writhe() const {
    int w = 0;
    for (const auto& [id, info] : crossings_)
        if (!info.is_virtual) w += info.sign;
    return w;
}

int Diagram::max_crossing_id() const {
    return crossings_.empty() ? 0 : crossings_.rbegin()->first;
}

namespace {

// Insert position for "after pass `arc`" semantics; validates the site.
std::size_t insertion_index(const Diagram& d, MoveSite site) {
    if (site.component < 0 || site.component >= d.component_count())
        throw Error("move site names component " + std::to_string(site.component) +
                    " of a diagram with " + std::to_string(d.component_count()));
    int k = d.pass_count(site.component);
    if (k == 0) {
        if (site.arc != 0) throw Error("empty component has a single insertion arc, 0");
        return 0;
    }
    if (site.arc < 0 || site.arc >= k)
        throw Error("arc index " + std::to_string(site.arc) + " out of range");
    return static_cast<std::size_t>(site.arc) + 1;
}

}  // namespace

Diagram r1_insert(const Diagram& d, MoveSite site, KinkOrder order, int sign) {
    if (sign != 1 && sign != -1) throw Error("r1_insert: sign must be +1 or -1");
    std::vector<std::vector<Pass>> comps;
    for (int c = 0; c < d.component_count(); ++c) comps.push_back(d.component(c));
    std::size_t idx = insertion_index(d, site);
    int id = d.max_crossing_id() + 1;
    Pass over{PassKind::Over, id, sign}, under{PassKind::Under, id, sign};
    auto& comp = comps[site.component];
    if (order == KinkOrder::OverFirst) {
        comp.insert(comp.begin() + idx, {over, under});
    } else {
        comp.insert(comp.begin() + idx, {under, over});
    }
    return Diagram::from_components(std::move(comps));
}

Diagram r1_remove(const Diagram& d, int id) {
    auto it = d.crossings().find(id);
    if (it == d.crossings().end()) throw Error("r1_remove: no crossing " + std::to_string(id));
    const CrossingInfo& info = it->second;
    if (info.is_virtual) throw Error("r1_remove: crossing " + std::to_string(id) + " is virtual");
    if (info.a.component != info.b.component)
        throw Error("r1_remove: crossing " + std::to_string(id) + " spans two components");
    int c = info.a.component;
    int k = d.pass_count(c);
    int p1 = info.a.position, p2 = info.b.position;
    bool adjacent = ((p1 + 1) % k == p2) || ((p2 + 1) % k == p1);
    if (!adjacent || k < 2)
        throw Error("r1_remove: passes of crossing " + std::to_string(id) + " are not adjacent");
    std::vector<std::vector<Pass>> comps;
    for (int i = 0; i < d.component_count(); ++i) comps.push_back(d.component(i));
    auto& comp = comps[c];
    comp.erase(comp.begin() + std::max(p1, p2));
    comp.erase(comp.begin() + std::min(p1, p2));
    return Diagram::from_components(std::move(comps));
}

R2Insertion r2_insert(const Diagram& d, MoveSite site_a, MoveSite site_b,
                      bool over_at_first_site, int eps) {
    if (eps != 1 && eps != -1) throw Error("r2_insert: eps must be +1 or -1");
    if (site_a.component == site_b.component && site_a.arc == site_b.arc)
        throw Error("r2_insert: the two sites must be distinct");
    // Validate both against the original diagram before any mutation.
    std::size_t ia = insertion_index(d, site_a);
    std::size_t ib = insertion_index(d, site_b);
    int id_a = d.max_crossing_id() + 1;
    int id_b = id_a + 1;

    // siteA gets (X a eps, X b -eps); siteB gets (Y b -eps, Y a eps).
    PassKind first_kind = over_at_first_site ? PassKind::Over : PassKind::Under;
    PassKind second_kind = over_at_first_site ? PassKind::Under : PassKind::Over;
    std::vector<Pass> at_a = {{first_kind, id_a, eps}, {first_kind, id_b, -eps}};
    std::vector<Pass> at_b = {{second_kind, id_b, -eps}, {second_kind, id_a, eps}};

    std::vector<std::vector<Pass>> comps;
    for (int c = 0; c < d.component_count(); ++c) comps.push_back(d.component(c));
    if (site_a.component == site_b.component) {
        auto& comp = comps[site_a.component];
        // Insert at the later index first so the earlier one stays valid.
        if (ia > ib) {
            comp.insert(comp.begin() + ia, at_a.begin(), at_a.end());
            comp.insert(comp.begin() + ib, at_b.begin(), at_b.end());
        } else {
            comp.insert(comp.begin() + ib, at_b.begin(), at_b.end());
            comp.insert(comp.begin() + ia, at_a.begin(), at_a.end());
        }
    } else {
        comps[site_a.component].insert(comps[site_a.component].begin() + ia, at_a.begin(),
                                       at_a.end());
        comps[site_b.component].insert(comps[site_b.component].begin() + ib, at_b.begin(),
                                       at_b.end());
    }
    return {Diagram::from_components(std::move(comps)), id_a, id_b};
}

namespace {

bool immediately_before(const Diagram& d, Loc first, Loc second) {
    if (first.component != second.component) return false;
    int k = d.pass_count(first.component);
    return (first.position + 1) % k == second.position;
}

}  // namespace

Diagram r2_remove(const Diagram& d, int id_a, int id_b) {
    auto ita = d.crossings().find(id_a);
    auto itb = d.crossings().find(id_b);
    if (ita == d.crossings().end() || itb == d.crossings().end())
        throw Error("r2_remove: unknown crossing id");
    const CrossingInfo &xa = ita->second, &xb = itb->second;
    if (xa.is_virtual || xb.is_virtual) throw Error("r2_remove: crossings must be real");
    if (xa.sign != -xb.sign) throw Error("r2_remove: crossings must have opposite signs");

    // Accept the pattern with either crossing in the "a" role: O a before O b
    // on one strand with U b before U a on the other, or the same with O and
    // U exchanged.
    auto matches = [&](const CrossingInfo& ca, const CrossingInfo& cb) {
        bool over_form = immediately_before(d, ca.a, cb.a) && immediately_before(d, cb.b, ca.b);
        bool under_form = immediately_before(d, ca.b, cb.b) && immediately_before(d, cb.a, ca.a);
        return over_form || under_form;
    };
    if (!matches(xa, xb) && !matches(xb, xa))
        throw Error("r2_remove: crossings " + std::to_string(id_a) + "," + std::to_string(id_b) +
                    " do not form an adjacent pair pattern");

    std::vector<std::vector<Pass>> comps;
    for (int c = 0; c < d.component_count(); ++c) comps.push_back(d.component(c));
    std::map<int, std::vector<int>> doomed;  // component -> positions
    for (const Loc& l : {xa.a, xa.b, xb.a, xb.b}) doomed[l.component].push_back(l.position);
    for (auto& [c, positions] : doomed) {
        std::sort(positions.rbegin(), positions.rend());
        for (int p : positions) comps[c].erase(comps[c].begin() + p);
    }
    return Diagram::from_components(std::move(comps));
}

Diagram rotated(const Diagram& d, int c, int k) {
    if (c < 0 || c >= d.component_count()) throw Error("rotated: bad component");
    std::vector<std::vector<Pass>> comps;
    for (int i = 0; i < d.component_count(); ++i) comps.push_back(d.component(i));
    auto& comp = comps[c];
    if (!comp.empty()) {
        int n = static_cast<int>(comp.size());
        int shift = ((k % n) + n) % n;
        std::rotate(comp.begin(), comp.begin() + shift, comp.end());
    }
    return Diagram::from_components(std::move(comps));
}

}  // namespace pbq
