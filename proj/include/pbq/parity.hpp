#pragma once

#include <map>
#include <string>

#include "pbq/diagram.hpp"

namespace pbq {

enum class ParityClass : std::uint8_t { Even, Odd, Link };

/// Parity of one real crossing. Link crossings carry the 1-based indices of
/// the two components they join, with comp_a < comp_b.
struct ParityLabel {
    ParityClass cls = ParityClass::Even;
    int comp_a = 0;
    int comp_b = 0;

    bool operator==(const ParityLabel&) const = default;
};

/// Crossing id -> parity label, for every real crossing of the diagram.
using ParityLabeling = std::map<int, ParityLabel>;

/// Classifies each real crossing of `d`.
///
/// A crossing whose passes sit on two different components is a link
/// crossing. A self-crossing is odd iff an odd number of passes lie strictly
/// between its two occurrences along its component, where only passes of
/// self-crossings of that same component are counted; virtual passes and
/// passes of link crossings do not count. The count taken the other way
/// around the component has the same parity, so the label does not depend on
/// the direction (see parity_well_defined).
ParityLabeling classify(const Diagram& d);

/// Number of counted passes strictly between the occurrences of self-crossing
/// `id`, walking forward from its first occurrence. Exposed for tests.
int between_count_forward(const Diagram& d, int id);

/// Same count walking the other way around the component.
int between_count_backward(const Diagram& d, int id);

/// True iff the forward and backward between-counts agree modulo 2 for every
/// self-crossing of `d`.
bool parity_well_defined(const Diagram& d);

/// "even", "odd" or "link(i,j)".
std::string label_str(const ParityLabel& label);

}  // namespace pbq
