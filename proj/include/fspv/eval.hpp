#pragma once

#include <map>
#include <string>
#include <variant>

#include "fspv/ast.hpp"

namespace fspv {

using Env = std::map<std::string, long>;

// Integer or boolean result of a guard / index expression.
using Value = std::variant<long, bool>;

// Standard integer arithmetic (division truncates toward zero) and boolean
// logic. Throws EvalError for unbound names, division by zero and type
// misuse (e.g. arithmetic on a comparison result).
Value eval_expr(const Expr& expr, const Env& env);

long eval_int(const Expr& expr, const Env& env);
bool eval_bool(const Expr& expr, const Env& env);

}  // namespace fspv
