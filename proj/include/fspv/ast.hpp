#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fspv {

// ---------------------------------------------------------------------------
// Integer / boolean expressions (guards, index arithmetic, constant defs)

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class BinOp { Add, Sub, Mul, Div, Eq, Ne, Lt, Le, Gt, Ge, And, Or };
enum class UnOp { Neg, Not };

struct Expr {
    struct Literal { long value; };
    struct Name { std::string name; };
    struct Unary { UnOp op; ExprPtr operand; };
    struct Binary { BinOp op; ExprPtr lhs, rhs; };

    std::variant<Literal, Name, Unary, Binary> node;
};

ExprPtr make_literal(long value);
ExprPtr make_name(std::string name);
ExprPtr make_unary(UnOp op, ExprPtr operand);
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs);

// ---------------------------------------------------------------------------
// Process bodies

// An action occurrence in source: dotted base segments plus index
// expressions, e.g. readSign[v] or full.moveto[part].
struct ActionPattern {
    std::vector<std::string> segments;
    std::vector<ExprPtr> indices;
};

struct Body;
using BodyPtr = std::shared_ptr<const Body>;

struct Body {
    struct Choice { std::vector<BodyPtr> branches; };
    struct Guarded { ExprPtr guard; BodyPtr inner; };
    struct ActionPrefix { ActionPattern action; BodyPtr next; };
    struct LocalRef { std::string name; std::vector<ExprPtr> args; };
    struct Stop {};

    std::variant<Choice, Guarded, ActionPrefix, LocalRef, Stop> node;
};

BodyPtr make_choice(std::vector<BodyPtr> branches);
BodyPtr make_guarded(ExprPtr guard, BodyPtr inner);
BodyPtr make_action_prefix(ActionPattern action, BodyPtr next);
BodyPtr make_local_ref(std::string name, std::vector<ExprPtr> args);
BodyPtr make_stop();

// ---------------------------------------------------------------------------
// Definitions

// Index-variable binding such as [v:R] or [part:Min..Max].
struct RangeRef {
    std::string range_name;  // non-empty when referring to a named range
    ExprPtr lo, hi;          // set when inline lo..hi
};

struct IndexVar {
    std::string name;
    RangeRef range;
};

struct LocalDef {
    std::string name;
    std::vector<IndexVar> index_vars;
    BodyPtr body;
};

// P(S=1) = BODY, LOCAL[v:R] = BODY, ... .
// locals[0] is the entry point and carries the process's own name.
struct ProcessDef {
    std::string name;
    std::vector<std::pair<std::string, ExprPtr>> parameters;
    std::vector<LocalDef> locals;
    bool is_property = false;
};

struct RelabelPair {
    ActionPattern new_label;
    ActionPattern old_label;
};

struct CompNode;
using CompNodePtr = std::shared_ptr<const CompNode>;

// Composition tree: leaves reference a process or composite, optionally
// label-prefixed (plain `a:` or range `c[lo..hi]:`); internal nodes compose
// children in parallel. Any node may carry a relabel suffix /{new/old,...}.
struct CompNode {
    struct Leaf {
        std::string prefix_label;  // empty when unprefixed
        ExprPtr prefix_lo, prefix_hi;  // set for label ranges c[lo..hi]:
        std::string ref;
        std::vector<ExprPtr> args;
    };
    struct Par { std::vector<CompNodePtr> children; };

    std::variant<Leaf, Par> node;
    std::vector<RelabelPair> relabels;  // applied as written, new/old
};

struct CompositeDef {
    std::string name;
    CompNodePtr root;
};

// One entry of a progress set: dotted segments plus index patterns, each a
// plain expression, a named range, or an inline lo..hi.
struct ProgressItem {
    std::vector<std::string> segments;
    std::vector<RangeRef> index_patterns;  // range_name empty + lo==hi-expr => single index
};

struct ProgressDef {
    std::string name;
    std::vector<ProgressItem> items;
};

// ---------------------------------------------------------------------------
// Whole specification

struct ConstDef {
    std::string name;
    ExprPtr value;
};

struct RangeDef {
    std::string name;
    ExprPtr lo, hi;
};

struct SpecAst {
    std::vector<ConstDef> constants;
    std::vector<RangeDef> ranges;
    std::vector<ProcessDef> processes;
    std::vector<CompositeDef> composites;
    std::vector<ProgressDef> progress_defs;

    const ProcessDef* find_process(const std::string& name) const;
    const CompositeDef* find_composite(const std::string& name) const;
    const ProgressDef* find_progress(const std::string& name) const;
};

}  // namespace fspv
