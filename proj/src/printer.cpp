#include "fspv/printer.hpp"

namespace fspv {

namespace {

int prec(BinOp op) {
    switch (op) {
        case BinOp::Or: return 1;
        case BinOp::And: return 2;
        case BinOp::Eq: case BinOp::Ne: case BinOp::Lt:
        case BinOp::Le: case BinOp::Gt: case BinOp::Ge: return 3;
        case BinOp::Add: case BinOp::Sub: return 4;
        case BinOp::Mul: case BinOp::Div: return 5;
    }
    return 0;
}

const char* op_text(BinOp op) {
    switch (op) {
        case BinOp::Or: return " || ";
        case BinOp::And: return " && ";
        case BinOp::Eq: return " == ";
        case BinOp::Ne: return " != ";
        case BinOp::Lt: return " < ";
        case BinOp::Le: return " <= ";
        case BinOp::Gt: return " > ";
        case BinOp::Ge: return " >= ";
        case BinOp::Add: return " + ";
        case BinOp::Sub: return " - ";
        case BinOp::Mul: return " * ";
        case BinOp::Div: return " / ";
    }
    return "?";
}

std::string expr_text(const Expr& e, int parent_prec, bool right_side) {
    if (const auto* lit = std::get_if<Expr::Literal>(&e.node))
        return std::to_string(lit->value);
    if (const auto* name = std::get_if<Expr::Name>(&e.node)) return name->name;
    if (const auto* un = std::get_if<Expr::Unary>(&e.node)) {
        std::string inner = expr_text(*un->operand, 6, false);
        return (un->op == UnOp::Not ? "!" : "-") + inner;
    }
    const auto& bin = std::get<Expr::Binary>(e.node);
    int p = prec(bin.op);
    std::string text = expr_text(*bin.lhs, p, false) + op_text(bin.op) +
                       expr_text(*bin.rhs, p, true);
    bool needs_parens = p < parent_prec ||
                        (p == parent_prec && right_side) ||
                        (p == parent_prec && p == 3);  // relationals don't chain
    return needs_parens ? "(" + text + ")" : text;
}

std::string pattern_text(const ActionPattern& p) {
    std::string out;
    for (std::size_t i = 0; i < p.segments.size(); ++i) {
        if (i) out += ".";
        out += p.segments[i];
    }
    for (const ExprPtr& ix : p.indices) out += "[" + expr_text(*ix, 0, false) + "]";
    return out;
}

std::string branch_text(const Body& b);

std::string body_text(const Body& b) {
    if (const auto* choice = std::get_if<Body::Choice>(&b.node)) {
        std::string out;
        if (choice->branches.size() <= 2) {
            out = "(";
            for (std::size_t i = 0; i < choice->branches.size(); ++i) {
                if (i) out += " | ";
                out += branch_text(*choice->branches[i]);
            }
            out += ")";
        } else {
            out = "(\n";
            for (std::size_t i = 0; i < choice->branches.size(); ++i) {
                out += i ? "    | " : "      ";
                out += branch_text(*choice->branches[i]);
                out += "\n";
            }
            out += ")";
        }
        return out;
    }
    if (const auto* ref = std::get_if<Body::LocalRef>(&b.node)) {
        std::string out = ref->name;
        for (const ExprPtr& a : ref->args) out += "[" + expr_text(*a, 0, false) + "]";
        return out;
    }
    if (std::holds_alternative<Body::Stop>(b.node)) return "STOP";
    return branch_text(b);
}

std::string branch_text(const Body& b) {
    if (const auto* guarded = std::get_if<Body::Guarded>(&b.node)) {
        return "when (" + expr_text(*guarded->guard, 0, false) + ") " +
               branch_text(*guarded->inner);
    }
    if (const auto* prefix = std::get_if<Body::ActionPrefix>(&b.node)) {
        return pattern_text(prefix->action) + " -> " + body_text(*prefix->next);
    }
    return body_text(b);
}

std::string range_ref_text(const RangeRef& r) {
    if (!r.range_name.empty()) return r.range_name;
    std::string out = expr_text(*r.lo, 0, false);
    if (r.hi) out += ".." + expr_text(*r.hi, 0, false);
    return out;
}

std::string comp_text(const CompNode& node) {
    std::string out;
    if (const auto* leaf = std::get_if<CompNode::Leaf>(&node.node)) {
        if (!leaf->prefix_label.empty()) {
            out += leaf->prefix_label;
            if (leaf->prefix_lo)
                out += "[" + expr_text(*leaf->prefix_lo, 0, false) + ".." +
                       expr_text(*leaf->prefix_hi, 0, false) + "]";
            out += ":";
        }
        out += leaf->ref;
        if (!leaf->args.empty()) {
            out += "(";
            for (std::size_t i = 0; i < leaf->args.size(); ++i) {
                if (i) out += ", ";
                out += expr_text(*leaf->args[i], 0, false);
            }
            out += ")";
        }
    } else {
        const auto& par = std::get<CompNode::Par>(node.node);
        out += "(";
        for (std::size_t i = 0; i < par.children.size(); ++i) {
            if (i) out += " || ";
            out += comp_text(*par.children[i]);
        }
        out += ")";
    }
    if (!node.relabels.empty()) {
        out += "/{";
        for (std::size_t i = 0; i < node.relabels.size(); ++i) {
            if (i) out += ", ";
            out += pattern_text(node.relabels[i].new_label) + "/" +
                   pattern_text(node.relabels[i].old_label);
        }
        out += "}";
    }
    return out;
}

}  // namespace

std::string print_expr(const Expr& expr) { return expr_text(expr, 0, false); }

std::string print_process(const ProcessDef& def) {
    std::string out;
    if (def.is_property) out += "property ";
    out += def.name;
    if (!def.parameters.empty()) {
        out += "(";
        for (std::size_t i = 0; i < def.parameters.size(); ++i) {
            if (i) out += ", ";
            out += def.parameters[i].first + "=" +
                   expr_text(*def.parameters[i].second, 0, false);
        }
        out += ")";
    }
    out += " = " + body_text(*def.locals[0].body);
    for (std::size_t i = 1; i < def.locals.size(); ++i) {
        const LocalDef& local = def.locals[i];
        out += ",\n" + local.name;
        for (const IndexVar& v : local.index_vars)
            out += "[" + v.name + ":" + range_ref_text(v.range) + "]";
        out += " = " + body_text(*local.body);
    }
    out += ".";
    return out;
}

std::string print_composite(const CompositeDef& def) {
    std::string root = comp_text(*def.root);
    if (root.front() != '(') root = "(" + root + ")";
    return "||" + def.name + " = " + root + ".";
}

std::string print_spec(const SpecAst& spec) {
    std::string out;
    for (const ConstDef& c : spec.constants)
        out += "const " + c.name + " = " + expr_text(*c.value, 0, false) + "\n";
    for (const RangeDef& r : spec.ranges)
        out += "range " + r.name + " = " + expr_text(*r.lo, 0, false) + ".." +
               expr_text(*r.hi, 0, false) + "\n";
    if (!spec.constants.empty() || !spec.ranges.empty()) out += "\n";
    for (const ProcessDef& p : spec.processes) out += print_process(p) + "\n\n";
    for (const CompositeDef& c : spec.composites)
        out += print_composite(c) + "\n\n";
    for (const ProgressDef& p : spec.progress_defs) {
        out += "progress " + p.name + " = {";
        for (std::size_t i = 0; i < p.items.size(); ++i) {
            if (i) out += ", ";
            const ProgressItem& item = p.items[i];
            for (std::size_t s = 0; s < item.segments.size(); ++s) {
                if (s) out += ".";
                out += item.segments[s];
            }
            for (const RangeRef& ix : item.index_patterns)
                out += "[" + range_ref_text(ix) + "]";
        }
        out += "}\n";
    }
    return out;
}

}  // namespace fspv
