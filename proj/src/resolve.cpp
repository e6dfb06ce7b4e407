#include "fspv/resolve.hpp"

#include <functional>
#include <set>

#include "fspv/errors.hpp"
#include "fspv/eval.hpp"

namespace fspv {

namespace {

// Walks a body and applies fn to every local reference it contains.
void for_each_ref(const Body& body,
                  const std::function<void(const Body::LocalRef&)>& fn) {
    if (const auto* choice = std::get_if<Body::Choice>(&body.node)) {
        for (const BodyPtr& b : choice->branches) for_each_ref(*b, fn);
    } else if (const auto* guarded = std::get_if<Body::Guarded>(&body.node)) {
        for_each_ref(*guarded->inner, fn);
    } else if (const auto* prefix = std::get_if<Body::ActionPrefix>(&body.node)) {
        for_each_ref(*prefix->next, fn);
    } else if (const auto* ref = std::get_if<Body::LocalRef>(&body.node)) {
        fn(*ref);
    }
}

void check_composite_refs(const CompNode& node, const SpecAst& ast) {
    if (const auto* leaf = std::get_if<CompNode::Leaf>(&node.node)) {
        if (!ast.find_process(leaf->ref) && !ast.find_composite(leaf->ref))
            throw ResolveError("unknown process '" + leaf->ref +
                               "' referenced in composition");
    } else {
        for (const CompNodePtr& c : std::get<CompNode::Par>(node.node).children)
            check_composite_refs(*c, ast);
    }
}

}  // namespace

const ProgressProperty* ResolvedSpec::find_progress(
    const std::string& name) const {
    for (const ProgressProperty& p : progress)
        if (p.name == name) return &p;
    return nullptr;
}

ResolvedSpec resolve_constants(SpecAst ast) {
    ResolvedSpec out;
    out.ast = std::make_shared<const SpecAst>(std::move(ast));
    const SpecAst& spec = *out.ast;

    // Constants may reference one another; cycles are reported rather than
    // looping. Evaluation order follows the reference graph, not the file.
    std::set<std::string> in_progress;
    std::function<long(const std::string&)> const_value =
        [&](const std::string& name) -> long {
        if (auto it = out.constants.find(name); it != out.constants.end())
            return it->second;
        const ConstDef* def = nullptr;
        for (const ConstDef& c : spec.constants)
            if (c.name == name) def = &c;
        if (!def) throw ResolveError("unknown name '" + name + "'");
        if (!in_progress.insert(name).second)
            throw ResolveError("constant '" + name +
                               "' depends on itself (cyclic definition)");
        Env env;  // names are resolved through the callback below
        std::function<long(const Expr&)> eval_const = [&](const Expr& e) -> long {
            if (const auto* n = std::get_if<Expr::Name>(&e.node))
                return const_value(n->name);
            if (const auto* lit = std::get_if<Expr::Literal>(&e.node))
                return lit->value;
            if (const auto* un = std::get_if<Expr::Unary>(&e.node)) {
                if (un->op == UnOp::Neg) return -eval_const(*un->operand);
                throw ResolveError("boolean operator in constant definition '" +
                                   name + "'");
            }
            const auto& bin = std::get<Expr::Binary>(e.node);
            long l = eval_const(*bin.lhs), r = eval_const(*bin.rhs);
            switch (bin.op) {
                case BinOp::Add: return l + r;
                case BinOp::Sub: return l - r;
                case BinOp::Mul: return l * r;
                case BinOp::Div:
                    if (r == 0)
                        throw ResolveError("division by zero in constant '" +
                                           name + "'");
                    return l / r;
                default:
                    throw ResolveError(
                        "boolean operator in constant definition '" + name + "'");
            }
        };
        long value = eval_const(*def->value);
        in_progress.erase(name);
        out.constants.emplace(name, value);
        return value;
    };
    for (const ConstDef& c : spec.constants) const_value(c.name);

    Env const_env(out.constants.begin(), out.constants.end());
    for (const RangeDef& r : spec.ranges) {
        long lo, hi;
        try {
            lo = eval_int(*r.lo, const_env);
            hi = eval_int(*r.hi, const_env);
        } catch (const EvalError& e) {
            throw ResolveError(std::string("in range ") + r.name + ": " +
                               e.what());
        }
        if (lo > hi)
            throw ResolveError("empty range " + r.name + " = " +
                               std::to_string(lo) + ".." + std::to_string(hi) +
                               " (lo > hi)");
        out.ranges.emplace(r.name, std::make_pair(lo, hi));
    }

    // Every local reference must name a local of the same process.
    for (const ProcessDef& p : spec.processes) {
        std::set<std::string> locals;
        for (const LocalDef& l : p.locals) locals.insert(l.name);
        for (const LocalDef& l : p.locals) {
            for_each_ref(*l.body, [&](const Body::LocalRef& ref) {
                if (!locals.contains(ref.name))
                    throw ResolveError("unknown name '" + ref.name +
                                       "' referenced in process " + p.name);
            });
        }
        for (const auto& [pname, dflt] : p.parameters) {
            try {
                eval_int(*dflt, const_env);
            } catch (const EvalError& e) {
                throw ResolveError("in default for parameter " + pname +
                                   " of " + p.name + ": " + e.what());
            }
        }
    }

    for (const CompositeDef& c : spec.composites)
        check_composite_refs(*c.root, spec);

    // Index patterns in progress sets expand over declared ranges.
    for (const ProgressDef& def : spec.progress_defs) {
        ProgressProperty prop;
        prop.name = def.name;
        for (const ProgressItem& item : def.items) {
            std::string base;
            for (std::size_t i = 0; i < item.segments.size(); ++i) {
                if (i) base += ".";
                base += item.segments[i];
            }
            std::vector<std::string> texts{base};
            for (const RangeRef& pattern : item.index_patterns) {
                long lo, hi;
                if (!pattern.range_name.empty() &&
                    out.ranges.contains(pattern.range_name)) {
                    std::tie(lo, hi) = out.ranges.at(pattern.range_name);
                } else {
                    try {
                        lo = eval_int(*pattern.lo, const_env);
                        hi = pattern.hi ? eval_int(*pattern.hi, const_env) : lo;
                    } catch (const EvalError& e) {
                        throw ResolveError("in progress " + def.name + ": " +
                                           e.what());
                    }
                }
                if (lo > hi)
                    throw ResolveError("empty index range in progress " +
                                       def.name);
                std::vector<std::string> next;
                for (const std::string& t : texts)
                    for (long v = lo; v <= hi; ++v)
                        next.push_back(t + "." + std::to_string(v));
                texts = std::move(next);
            }
            for (std::string& t : texts) prop.action_set.insert(ActionLabel(t));
        }
        if (prop.action_set.empty())
            throw ResolveError("progress " + def.name + " has an empty action set");
        out.progress.push_back(std::move(prop));
    }

    return out;
}

}  // namespace fspv
