#include "pbq/parity.hpp"

#include <set>

namespace pbq {

namespace {

// Ids of real crossings whose both passes lie on component c.
std::set<int> self_crossings_of(const Diagram& d, int c) {
    std::set<int> ids;
    for (const auto& [id, info] : d.crossings())
        if (!info.is_virtual && info.a.component == c && info.b.component == c) ids.insert(id);
    return ids;
}

struct BetweenCounts {
    int forward = 0;
    int backward = 0;
};

BetweenCounts between_counts(const Diagram& d, int id) {
    auto it = d.crossings().find(id);
    if (it == d.crossings().end())
        throw Error("between_counts: no crossing " + std::to_string(id));
    const CrossingInfo& info = it->second;
    if (info.is_virtual || info.a.component != info.b.component)
        throw Error("between_counts: crossing " + std::to_string(id) + " is not a self-crossing");
    int c = info.a.component;
    std::set<int> counted = self_crossings_of(d, c);
    int k = d.pass_count(c);
    int p1 = info.a.position, p2 = info.b.position;
    if (p1 > p2) std::swap(p1, p2);
    BetweenCounts out;
    for (int p = 0; p < k; ++p) {
        if (p == p1 || p == p2) continue;
        const Pass& pass = d.pass_at({c, p});
        if (pass.kind == PassKind::Virtual) continue;
        if (pass.crossing == id || !counted.count(pass.crossing)) continue;
        if (p > p1 && p < p2)
            ++out.forward;
        else
            ++out.backward;
    }
    return out;
}

}  // namespace

int between_count_forward(const Diagram& d, int id) { return between_counts(d, id).forward; }

int between_count_backward(const Diagram& d, int id) { return between_counts(d, id).backward; }

bool parity_well_defined(const Diagram& d) {
    for (const auto& [id, info] : d.crossings()) {
        if (info.is_virtual || info.a.component != info.b.component) continue;
        BetweenCounts bc = between_counts(d, id);
        if (bc.forward % 2 != bc.backward % 2) return false;
    }
    return true;
}

ParityLabeling classify(const Diagram& d) {
    ParityLabeling out;
    for (const auto& [id, info] : d.crossings()) {
        if (info.is_virtual) continue;
        ParityLabel label;
        if (info.a.component != info.b.component) {
            label.cls = ParityClass::Link;
            int i = info.a.component + 1, j = info.b.component + 1;
            label.comp_a = std::min(i, j);
            label.comp_b = std::max(i, j);
        } else {
            label.cls = (between_counts(d, id).forward % 2 != 0) ? ParityClass::Odd
                                                                 : ParityClass::Even;
        }
        out.emplace(id, label);
    }
    return out;
}

std::string label_str(const ParityLabel& label) {
    switch (label.cls) {
        case ParityClass::Even: return "even";
        case ParityClass::Odd: return "odd";
        case ParityClass::Link:
            return "link(" + std::to_string(label.comp_a) + "," + std::to_string(label.comp_b) +
                   ")";
    }
    return "?";
}

}  // namespace pbq
