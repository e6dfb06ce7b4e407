#include "fspv/parser.hpp"

#include <set>

#include "fspv/errors.hpp"
#include "fspv/lexer.hpp"

namespace fspv {

namespace {

class Parser {
public:
    explicit Parser(std::string_view source) : toks_(lex(source)) {}

    SpecAst run() {
        SpecAst spec;
        while (!at(Tok::End)) {
            if (accept(Tok::KwConst)) {
                ConstDef def;
                def.name = expect_ident("constant name");
                declare(def.name);
                expect(Tok::Eq);
                def.value = parse_expr();
                spec.constants.push_back(std::move(def));
            } else if (accept(Tok::KwRange)) {
                RangeDef def;
                def.name = expect_ident("range name");
                declare(def.name);
                expect(Tok::Eq);
                def.lo = parse_expr();
                expect(Tok::DotDot);
                def.hi = parse_expr();
                spec.ranges.push_back(std::move(def));
            } else if (accept(Tok::KwProgress)) {
                spec.progress_defs.push_back(parse_progress());
            } else if (accept(Tok::PipePipe)) {
                spec.composites.push_back(parse_composite());
            } else if (at(Tok::KwProperty) || at(Tok::Ident)) {
                spec.processes.push_back(parse_process());
            } else {
                fail("expected a declaration (const, range, property, progress, "
                     "process or ||composite)");
            }
        }
        return spec;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::set<std::string> names_;

    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_next(Tok k) const {
        return pos_ + 1 < toks_.size() && toks_[pos_ + 1].kind == k;
    }

    bool accept(Tok k) {
        if (!at(k)) return false;
        ++pos_;
        return true;
    }

    Token expect(Tok k) {
        if (!at(k))
            fail(std::string("expected ") + token_name(k) + ", found " +
                 token_name(cur().kind));
        return toks_[pos_++];
    }

    std::string expect_ident(const char* what) {
        if (!at(Tok::Ident))
            fail(std::string("expected ") + what + ", found " +
                 token_name(cur().kind));
        return toks_[pos_++].text;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(cur().line, cur().column, msg);
    }

    void declare(const std::string& name) {
        if (!names_.insert(name).second)
            throw ResolveError("duplicate definition of '" + name + "'");
    }

    // ---- expressions -------------------------------------------------

    ExprPtr parse_expr() { return parse_or(); }

    ExprPtr parse_or() {
        ExprPtr e = parse_and();
        while (accept(Tok::PipePipe)) e = make_binary(BinOp::Or, e, parse_and());
        return e;
    }

    ExprPtr parse_and() {
        ExprPtr e = parse_rel();
        while (at(Tok::AmpAmp) || at(Tok::Amp)) {
            ++pos_;
            e = make_binary(BinOp::And, e, parse_rel());
        }
        return e;
    }

    ExprPtr parse_rel() {
        ExprPtr e = parse_add();
        BinOp op;
        switch (cur().kind) {
            case Tok::EqEq: op = BinOp::Eq; break;
            case Tok::Ne: op = BinOp::Ne; break;
            case Tok::Lt: op = BinOp::Lt; break;
            case Tok::Le: op = BinOp::Le; break;
            case Tok::Gt: op = BinOp::Gt; break;
            case Tok::Ge: op = BinOp::Ge; break;
            default: return e;
        }
        ++pos_;
        return make_binary(op, e, parse_add());
    }

    ExprPtr parse_add() {
        ExprPtr e = parse_mul();
        while (at(Tok::Plus) || at(Tok::Minus)) {
            BinOp op = at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
            ++pos_;
            e = make_binary(op, e, parse_mul());
        }
        return e;
    }

    ExprPtr parse_mul() {
        ExprPtr e = parse_unary();
        while (at(Tok::Star) || at(Tok::Slash)) {
            BinOp op = at(Tok::Star) ? BinOp::Mul : BinOp::Div;
            ++pos_;
            e = make_binary(op, e, parse_unary());
        }
        return e;
    }

    ExprPtr parse_unary() {
        if (accept(Tok::Bang)) return make_unary(UnOp::Not, parse_unary());
        if (accept(Tok::Minus)) return make_unary(UnOp::Neg, parse_unary());
        if (at(Tok::Int)) return make_literal(toks_[pos_++].value);
        if (at(Tok::Ident)) return make_name(toks_[pos_++].text);
        if (accept(Tok::LParen)) {
            ExprPtr e = parse_or();
            expect(Tok::RParen);
            return e;
        }
        fail("expected an expression");
    }

    // ---- processes ----------------------------------------------------

    ProcessDef parse_process() {
        ProcessDef def;
        def.is_property = accept(Tok::KwProperty);
        def.name = expect_ident("process name");
        declare(def.name);
        if (accept(Tok::LParen)) {
            do {
                std::string pname = expect_ident("parameter name");
                expect(Tok::Eq);
                def.parameters.emplace_back(std::move(pname), parse_expr());
            } while (accept(Tok::Comma));
            expect(Tok::RParen);
        }
        expect(Tok::Eq);

        std::set<std::string> local_names;
        LocalDef entry;
        entry.name = def.name;
        entry.body = parse_body();
        local_names.insert(entry.name);
        def.locals.push_back(std::move(entry));

        while (accept(Tok::Comma)) {
            LocalDef local;
            local.name = expect_ident("local process name");
            if (!local_names.insert(local.name).second)
                throw ResolveError("duplicate definition of local '" +
                                   local.name + "' in process " + def.name);
            while (accept(Tok::LBracket)) {
                IndexVar var;
                var.name = expect_ident("index variable");
                expect(Tok::Colon);
                var.range = parse_range_ref();
                expect(Tok::RBracket);
                local.index_vars.push_back(std::move(var));
            }
            expect(Tok::Eq);
            local.body = parse_body();
            def.locals.push_back(std::move(local));
        }
        expect(Tok::Dot);
        return def;
    }

    RangeRef parse_range_ref() {
        RangeRef ref;
        ExprPtr first = parse_expr();
        if (accept(Tok::DotDot)) {
            ref.lo = first;
            ref.hi = parse_expr();
            return ref;
        }
        if (const auto* name = std::get_if<Expr::Name>(&first->node)) {
            ref.range_name = name->name;
            return ref;
        }
        fail("expected a range name or lo..hi bounds");
    }

    BodyPtr parse_body() {
        if (at(Tok::LParen)) return parse_paren_body();
        if (accept(Tok::KwStop)) return make_stop();
        // Unparenthesized bodies are plain local references (e.g. the
        // ROUTE = EMPTY_ROUTE[9] entry point).
        std::string name = expect_ident("process body");
        return make_local_ref(name, parse_bracket_args());
    }

    std::vector<ExprPtr> parse_bracket_args() {
        std::vector<ExprPtr> args;
        while (accept(Tok::LBracket)) {
            args.push_back(parse_expr());
            expect(Tok::RBracket);
        }
        return args;
    }

    BodyPtr parse_paren_body() {
        expect(Tok::LParen);
        std::vector<BodyPtr> branches;
        branches.push_back(parse_branch());
        while (accept(Tok::Pipe)) branches.push_back(parse_branch());
        expect(Tok::RParen);
        return make_choice(std::move(branches));
    }

    BodyPtr parse_branch() {
        ExprPtr guard;
        if (accept(Tok::KwWhen)) {
            expect(Tok::LParen);
            guard = parse_expr();
            expect(Tok::RParen);
        }

        // A chain of '->'-separated elements; the last is the continuation
        // (local reference, STOP or a nested choice), all earlier ones are
        // action occurrences.
        struct Element {
            enum class Kind { Pattern, Stop, Nested } kind;
            ActionPattern pattern;
            BodyPtr nested;
            int line, column;
        };
        std::vector<Element> elems;
        while (true) {
            Element e;
            e.line = cur().line;
            e.column = cur().column;
            if (at(Tok::KwStop)) {
                ++pos_;
                e.kind = Element::Kind::Stop;
            } else if (at(Tok::LParen)) {
                e.kind = Element::Kind::Nested;
                e.nested = parse_paren_body();
            } else {
                e.kind = Element::Kind::Pattern;
                e.pattern = parse_action_pattern();
            }
            elems.push_back(std::move(e));
            if (!accept(Tok::Arrow)) break;
        }

        if (elems.size() < 2) {
            throw SyntaxError(elems[0].line, elems[0].column,
                              "choice branch must begin with an action prefix");
        }

        // Build right to left from the continuation.
        BodyPtr cont;
        const Element& last = elems.back();
        switch (last.kind) {
            case Element::Kind::Stop:
                cont = make_stop();
                break;
            case Element::Kind::Nested:
                cont = last.nested;
                break;
            case Element::Kind::Pattern: {
                if (last.pattern.segments.size() != 1)
                    throw SyntaxError(last.line, last.column,
                                      "expected a process reference after '->', "
                                      "found a dotted action");
                cont = make_local_ref(last.pattern.segments[0],
                                      last.pattern.indices);
                break;
            }
        }
        for (std::size_t k = elems.size() - 1; k-- > 0;) {
            Element& e = elems[k];
            if (e.kind != Element::Kind::Pattern)
                throw SyntaxError(e.line, e.column,
                                  "only the final element of a branch may be a "
                                  "process reference, STOP or nested choice");
            cont = make_action_prefix(std::move(e.pattern), cont);
        }
        return guard ? make_guarded(guard, cont) : cont;
    }

    ActionPattern parse_action_pattern() {
        ActionPattern p;
        p.segments.push_back(expect_segment());
        while (at(Tok::Dot)) {
            ++pos_;
            p.segments.push_back(expect_segment());
        }
        p.indices = parse_bracket_args();
        return p;
    }

    std::string expect_segment() {
        if (at(Tok::Ident) || at(Tok::Int)) return toks_[pos_++].text;
        fail("expected a label segment (identifier or integer)");
    }

    // ---- composites ----------------------------------------------------

    CompositeDef parse_composite() {
        CompositeDef def;
        def.name = expect_ident("composite name");
        declare(def.name);
        expect(Tok::Eq);
        CompNodePtr root = parse_comp_expr();
        if (at(Tok::Slash)) {
            auto node = std::make_shared<CompNode>(*root);
            node->relabels = parse_relabel();
            root = node;
        }
        expect(Tok::Dot);
        def.root = root;
        return def;
    }

    CompNodePtr parse_comp_expr() {
        expect(Tok::LParen);
        std::vector<CompNodePtr> children;
        children.push_back(parse_comp_term());
        while (accept(Tok::PipePipe)) children.push_back(parse_comp_term());
        expect(Tok::RParen);
        CompNodePtr node;
        if (children.size() == 1 && children[0]->relabels.empty()) {
            node = children[0];
        } else {
            auto par = std::make_shared<CompNode>();
            par->node = CompNode::Par{std::move(children)};
            node = par;
        }
        if (at(Tok::Slash)) {
            auto relabeled = std::make_shared<CompNode>(*node);
            relabeled->relabels = parse_relabel();
            node = relabeled;
        }
        return node;
    }

    CompNodePtr parse_comp_term() {
        if (at(Tok::LParen)) return parse_comp_expr();

        CompNode::Leaf leaf;
        std::string first = expect_ident("process reference or label prefix");
        if (accept(Tok::Colon)) {
            leaf.prefix_label = first;
        } else if (at(Tok::LBracket)) {
            ++pos_;
            leaf.prefix_label = first;
            leaf.prefix_lo = parse_expr();
            expect(Tok::DotDot);
            leaf.prefix_hi = parse_expr();
            expect(Tok::RBracket);
            expect(Tok::Colon);
        } else {
            leaf.ref = first;
        }
        if (leaf.ref.empty()) {
            if (at(Tok::LParen) && leaf.prefix_label.empty())
                fail("label prefixes apply to process references only");
            leaf.ref = expect_ident("process reference");
        }
        if (accept(Tok::LParen)) {
            do leaf.args.push_back(parse_expr());
            while (accept(Tok::Comma));
            expect(Tok::RParen);
        }
        auto node = std::make_shared<CompNode>();
        node->node = std::move(leaf);
        if (at(Tok::Slash)) node->relabels = parse_relabel();
        return node;
    }

    std::vector<RelabelPair> parse_relabel() {
        expect(Tok::Slash);
        expect(Tok::LBrace);
        std::vector<RelabelPair> pairs;
        do {
            RelabelPair pair;
            pair.new_label = parse_action_pattern();
            expect(Tok::Slash);
            pair.old_label = parse_action_pattern();
            pairs.push_back(std::move(pair));
        } while (accept(Tok::Comma));
        expect(Tok::RBrace);
        return pairs;
    }

    // ---- progress --------------------------------------------------------

    ProgressDef parse_progress() {
        ProgressDef def;
        def.name = expect_ident("progress property name");
        declare(def.name);
        expect(Tok::Eq);
        expect(Tok::LBrace);
        do {
            ProgressItem item;
            item.segments.push_back(expect_segment());
            while (accept(Tok::Dot)) item.segments.push_back(expect_segment());
            while (accept(Tok::LBracket)) {
                RangeRef pattern;
                ExprPtr first = parse_expr();
                if (accept(Tok::DotDot)) {
                    pattern.lo = first;
                    pattern.hi = parse_expr();
                } else if (const auto* name =
                               std::get_if<Expr::Name>(&first->node)) {
                    // Bare identifier: resolved as a named range if one is
                    // declared, a constant otherwise.
                    pattern.range_name = name->name;
                    pattern.lo = first;
                } else {
                    pattern.lo = first;
                }
                expect(Tok::RBracket);
                item.index_patterns.push_back(std::move(pattern));
            }
            def.items.push_back(std::move(item));
        } while (accept(Tok::Comma));
        expect(Tok::RBrace);
        return def;
    }
};

}  // namespace

SpecAst parse_spec(std::string_view source) { return Parser(source).run(); }

}  // namespace fspv
