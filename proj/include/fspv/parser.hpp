#pragma once

#include <string_view>

#include "fspv/ast.hpp"

namespace fspv {

// Parses an FSP specification document. Throws SyntaxError (with line/column
// and an expected-token hint) or ResolveError for duplicate definitions.
SpecAst parse_spec(std::string_view source);

}  // namespace fspv
