// Domain error hierarchy.  Error covers everything a caller can provoke with
// bad input (malformed codes, family/diagram mismatches); std::logic_error is
// reserved for internal invariant violations.

#pragma once

#include <stdexcept>
#include <string>

namespace pbq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// component/token are 0-based positions of the offending pass, -1 if the
// error is not tied to a single token.
struct ParseError : Error {
    int component = -1;
    int token = -1;
    ParseError(const std::string& msg, int comp = -1, int tok = -1)
        : Error(msg), component(comp), token(tok) {}
};

}  // namespace pbq
