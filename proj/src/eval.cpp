#include "fspv/eval.hpp"

#include "fspv/errors.hpp"
#include "fspv/printer.hpp"

namespace fspv {

namespace {

long as_int(const Value& v, const Expr& e) {
    if (const long* n = std::get_if<long>(&v)) return *n;
    throw EvalError("expected an integer, got a boolean in '" + print_expr(e) +
                    "'");
}

bool as_bool(const Value& v, const Expr& e) {
    if (const bool* b = std::get_if<bool>(&v)) return *b;
    throw EvalError("expected a boolean, got an integer in '" + print_expr(e) +
                    "'");
}

}  // namespace

Value eval_expr(const Expr& expr, const Env& env) {
    if (const auto* lit = std::get_if<Expr::Literal>(&expr.node))
        return lit->value;
    if (const auto* name = std::get_if<Expr::Name>(&expr.node)) {
        auto it = env.find(name->name);
        if (it == env.end())
            throw EvalError("unbound name '" + name->name + "'");
        return it->second;
    }
    if (const auto* un = std::get_if<Expr::Unary>(&expr.node)) {
        Value v = eval_expr(*un->operand, env);
        if (un->op == UnOp::Neg) return -as_int(v, *un->operand);
        return !as_bool(v, *un->operand);
    }
    const auto& bin = std::get<Expr::Binary>(expr.node);
    switch (bin.op) {
        case BinOp::And:
            return eval_bool(*bin.lhs, env) && eval_bool(*bin.rhs, env);
        case BinOp::Or:
            return eval_bool(*bin.lhs, env) || eval_bool(*bin.rhs, env);
        default:
            break;
    }
    long l = eval_int(*bin.lhs, env);
    long r = eval_int(*bin.rhs, env);
    switch (bin.op) {
        case BinOp::Add: return l + r;
        case BinOp::Sub: return l - r;
        case BinOp::Mul: return l * r;
        case BinOp::Div:
            if (r == 0) throw EvalError("division by zero in '" +
                                        print_expr(expr) + "'");
            return l / r;
        case BinOp::Eq: return l == r;
        case BinOp::Ne: return l != r;
        case BinOp::Lt: return l < r;
        case BinOp::Le: return l <= r;
        case BinOp::Gt: return l > r;
        case BinOp::Ge: return l >= r;
        default: throw EvalError("bad operator");
    }
}

long eval_int(const Expr& expr, const Env& env) {
    return as_int(eval_expr(expr, env), expr);
}

bool eval_bool(const Expr& expr, const Env& env) {
    return as_bool(eval_expr(expr, env), expr);
}

}  // namespace fspv
