#pragma once

#include <string>

#include "fspv/ast.hpp"

namespace fspv {

// Canonical FSP text for an AST. Deterministic: structurally identical ASTs
// print byte-identically, and print -> parse -> print is a fixed point.
std::string print_spec(const SpecAst& spec);
std::string print_expr(const Expr& expr);
std::string print_process(const ProcessDef& def);
std::string print_composite(const CompositeDef& def);

}  // namespace fspv
