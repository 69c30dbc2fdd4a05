#include "pbq/json_io.hpp"

namespace pbq {

using nlohmann::json;

json diagram_json(const Diagram& d) {
    return json{{"code", d.serialize()},
                {"components", d.component_count()},
                {"passes", d.total_passes()},
                {"real_crossings", d.real_crossing_count()},
                {"virtual_crossings", d.virtual_crossing_count()},
                {"writhe", d.writhe()}};
}

json parity_json(const Diagram& d) {
    json labels = json::object();
    for (const auto& [id, label] : classify(d)) labels[std::to_string(id)] = label_str(label);
    return json{{"labels", labels}, {"well_defined", parity_well_defined(d)}};
}

json bounds_json(const BoundsReport& b) {
    json j = json::object();
    j["zero"] = b.zero;
    if (!b.ranges.empty()) {
        json ex = json::object();
        for (const auto& r : b.ranges)
            ex[r.var.str()] = json{{"e_min", r.e_min}, {"e_max", r.e_max}, {"e", r.e}};
        j["exponents"] = ex;
    }
    if (b.n_o_bound) j["n_o_bound"] = *b.n_o_bound;
    if (b.n_real_bound) j["n_real_bound"] = *b.n_real_bound;
    if (b.z_span) j["z_span"] = *b.z_span;
    if (!b.o_bounds.empty()) {
        json o = json::object();
        for (const auto& [comp, e] : b.o_bounds) o[std::to_string(comp)] = e;
        j["o_i_bounds"] = o;
    }
    if (!b.l_bounds.empty()) {
        json l = json::object();
        for (const auto& [pair, e] : b.l_bounds)
            l[std::to_string(pair.first) + "," + std::to_string(pair.second)] = e;
        j["l_ij_bounds"] = l;
    }
    if (b.n_v_bound) j["n_v_bound"] = *b.n_v_bound;
    return j;
}

json invariant_json(const InvariantResult& r) {
    json flags = json::object();
    if (r.flags.nonclassical) flags["nonclassical"] = *r.flags.nonclassical;
    if (r.flags.odd_evidence) flags["odd_evidence"] = *r.flags.odd_evidence;
    return json{{"family", family_name(r.family)},
                {"gauss_code", r.gauss_code},
                {"writhe", r.writhe},
                {"polynomial", r.canonical.str()},
                {"bounds", bounds_json(r.bounds)},
                {"flags", flags}};
}

}  // namespace pbq
