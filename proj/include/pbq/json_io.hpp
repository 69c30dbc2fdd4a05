// JSON views of the core result types, shared by the CLI and the batch
// report writer.  Field names are part of the output contract and must not
// drift; golden tests pin them.

#pragma once

#include <json.hpp>

#include "pbq/engine.hpp"

namespace pbq {

nlohmann::json diagram_json(const Diagram& d);
nlohmann::json parity_json(const Diagram& d);
nlohmann::json bounds_json(const BoundsReport& b);
nlohmann::json invariant_json(const InvariantResult& r);

}  // namespace pbq
