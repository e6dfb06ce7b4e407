#include "fspv/ast.hpp"

namespace fspv {

ExprPtr make_literal(long value) {
    return std::make_shared<Expr>(Expr{Expr::Literal{value}});
}

ExprPtr make_name(std::string name) {
    return std::make_shared<Expr>(Expr{Expr::Name{std::move(name)}});
}

ExprPtr make_unary(UnOp op, ExprPtr operand) {
    return std::make_shared<Expr>(Expr{Expr::Unary{op, std::move(operand)}});
}

ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs) {
    return std::make_shared<Expr>(
        Expr{Expr::Binary{op, std::move(lhs), std::move(rhs)}});
}

BodyPtr make_choice(std::vector<BodyPtr> branches) {
    return std::make_shared<Body>(Body{Body::Choice{std::move(branches)}});
}

BodyPtr make_guarded(ExprPtr guard, BodyPtr inner) {
    return std::make_shared<Body>(
        Body{Body::Guarded{std::move(guard), std::move(inner)}});
}

BodyPtr make_action_prefix(ActionPattern action, BodyPtr next) {
    return std::make_shared<Body>(
        Body{Body::ActionPrefix{std::move(action), std::move(next)}});
}

BodyPtr make_local_ref(std::string name, std::vector<ExprPtr> args) {
    return std::make_shared<Body>(
        Body{Body::LocalRef{std::move(name), std::move(args)}});
}

BodyPtr make_stop() { return std::make_shared<Body>(Body{Body::Stop{}}); }

const ProcessDef* SpecAst::find_process(const std::string& name) const {
    for (const ProcessDef& p : processes)
        if (p.name == name) return &p;
    return nullptr;
}

const CompositeDef* SpecAst::find_composite(const std::string& name) const {
    for (const CompositeDef& c : composites)
        if (c.name == name) return &c;
    return nullptr;
}

const ProgressDef* SpecAst::find_progress(const std::string& name) const {
    for (const ProgressDef& p : progress_defs)
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace fspv
