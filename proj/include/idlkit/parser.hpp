#ifndef IDLKIT_PARSER_HPP
#define IDLKIT_PARSER_HPP

#include <string>
#include <utility>
#include <vector>

#include "idlkit/ast.hpp"
#include "idlkit/lexer.hpp"
#include "idlkit/validate.hpp"

namespace idlkit {

namespace detail {

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Model parse_model() {
        Model m;
        while (!at(Tok::End)) {
            m.dependencies.push_back(parse_dependency());
            expect(Tok::Semicolon, "';' after dependency");
        }
        return m;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t k = pos_ + ahead;
        return k < toks_.size() ? toks_[k] : toks_.back();
    }
    bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
    const Token& take() { return toks_[pos_++]; }
    const Token& expect(Tok k, const std::string& what) {
        if (!at(k))
            throw ParseError(peek().loc, "expected " + what + ", found " +
                                             describe(peek().kind));
        return take();
    }

    static bool is_predef_kw(Tok k) {
        return k == Tok::KwPOr || k == Tok::KwPOnlyOne || k == Tok::KwPAllOrNone ||
               k == Tok::KwPZeroOrOne;
    }
    static bool is_param_tok(Tok k) { return k == Tok::Id || k == Tok::BracketedId; }
    static bool is_rel_op(Tok k) {
        return k == Tok::Lt || k == Tok::Gt || k == Tok::Le || k == Tok::Ge ||
               k == Tok::EqEq || k == Tok::Ne;
    }
    static bool is_arith_op(Tok k) {
        return k == Tok::Plus || k == Tok::Minus || k == Tok::Star || k == Tok::Slash;
    }
    static RelOp to_rel_op(Tok k) {
        switch (k) {
            case Tok::Lt: return RelOp::Lt;
            case Tok::Gt: return RelOp::Gt;
            case Tok::Le: return RelOp::Le;
            case Tok::Ge: return RelOp::Ge;
            case Tok::EqEq: return RelOp::Eq;
            default: return RelOp::Ne;
        }
    }
    static ArithOp to_arith_op(Tok k) {
        switch (k) {
            case Tok::Plus: return ArithOp::Add;
            case Tok::Minus: return ArithOp::Sub;
            case Tok::Star: return ArithOp::Mul;
            default: return ArithOp::Div;
        }
    }
    static PredefKind to_predef_kind(Tok k) {
        switch (k) {
            case Tok::KwPOr: return PredefKind::Or;
            case Tok::KwPOnlyOne: return PredefKind::OnlyOne;
            case Tok::KwPAllOrNone: return PredefKind::AllOrNone;
            default: return PredefKind::ZeroOrOne;
        }
    }

    // --- leaf productions ---

    ParamRef parse_param() {
        if (at(Tok::Id)) {
            const Token& t = take();
            return ParamRef{t.text, false, t.loc};
        }
        if (at(Tok::BracketedId)) {
            const Token& t = take();
            return ParamRef{t.text, true, t.loc};
        }
        throw ParseError(peek().loc,
                         "expected parameter name, found " + std::string(describe(peek().kind)));
    }

    Decimal parse_signed_number() {
        bool neg = false;
        if (at(Tok::Minus)) {
            take();
            neg = true;
        }
        const Token& t = expect(Tok::Number, "numeric literal");
        Decimal d = Decimal::parse(t.text);
        return neg ? -d : d;
    }

    // --- arithmetic expressions ---
    //
    // Operation := Operand (ArithOp Operand)*   folded left-associatively
    // Operand   := Param | '(' Operation ')'
    //
    // A bare parameter is not an operation by itself: at the top of an
    // expression at least one operator must follow (parenthesised
    // sub-operations bring their own).

    ArithExpr parse_arith_operand() {
        if (at(Tok::LParen)) {
            take();
            ArithExpr inner = parse_operation();
            expect(Tok::RParen, "')' closing arithmetic group");
            return inner;
        }
        return ArithExpr{parse_param()};
    }

    ArithExpr parse_operation() {
        bool leaf_first = !at(Tok::LParen);
        ArithExpr expr = parse_arith_operand();
        if (leaf_first && !is_arith_op(peek().kind))
            throw ParseError(peek().loc,
                             "expected arithmetic operator, found " +
                                 std::string(describe(peek().kind)));
        while (is_arith_op(peek().kind)) {
            ArithOp op = to_arith_op(take().kind);
            ArithExpr rhs = parse_arith_operand();
            expr = make_arith_node(std::move(expr), op, std::move(rhs));
        }
        return expr;
    }

    Arithmetic parse_arithmetic(SourceLoc loc) {
        Arithmetic ar;
        ar.loc = loc;
        ar.expr = parse_operation();
        if (!is_rel_op(peek().kind))
            throw ParseError(peek().loc,
                             "expected comparison operator after arithmetic "
                             "expression, found " + std::string(describe(peek().kind)));
        ar.rel = to_rel_op(take().kind);
        ar.value = parse_signed_number();
        return ar;
    }

    /// Arithmetic continuation when the leading parameter has already been
    /// consumed and an arithmetic operator is next.
    Arithmetic parse_arithmetic_after(ParamRef first) {
        Arithmetic ar;
        ar.loc = first.loc;
        ArithExpr expr{std::move(first)};
        while (is_arith_op(peek().kind)) {
            ArithOp op = to_arith_op(take().kind);
            ArithExpr rhs = parse_arith_operand();
            expr = make_arith_node(std::move(expr), op, std::move(rhs));
        }
        ar.expr = std::move(expr);
        if (!is_rel_op(peek().kind))
            throw ParseError(peek().loc,
                             "expected comparison operator after arithmetic "
                             "expression, found " + std::string(describe(peek().kind)));
        ar.rel = to_rel_op(take().kind);
        ar.value = parse_signed_number();
        return ar;
    }

    // --- terms ---

    // Term body after the parameter name has been consumed: a bare presence
    // mention or a param-value relation. `negated` improves the error for
    // NOT p1 < p2 (relationals cannot be negated directly).
    Term finish_term(ParamRef param, bool negated) {
        Term term;
        term.negated = negated;
        term.loc = param.loc;
        if (at(Tok::KwLike)) {
            take();
            const Token& pat = expect(Tok::String, "pattern string after LIKE");
            term.body = ParamValueRel{LikeRel{std::move(param), pat.text}};
            return term;
        }
        if (is_rel_op(peek().kind)) {
            if (is_param_tok(peek(1).kind) && negated)
                throw ParseError(
                    peek().loc,
                    "a comparison between parameters cannot be negated directly; "
                    "wrap it as NOT ( ... )");
            Tok op_tok = take().kind;
            if (at(Tok::String)) {
                if (op_tok != Tok::EqEq)
                    throw ParseError(peek().loc, "string values support only '=='");
                std::vector<std::string> values;
                values.push_back(take().text);
                while (at(Tok::Pipe)) {
                    take();
                    values.push_back(expect(Tok::String, "string after '|'").text);
                }
                term.body = ParamValueRel{StringEq{std::move(param), std::move(values)}};
                return term;
            }
            if (at(Tok::True) || at(Tok::False)) {
                if (op_tok != Tok::EqEq)
                    throw ParseError(peek().loc, "boolean values support only '=='");
                term.body = ParamValueRel{BoolEq{std::move(param), take().kind == Tok::True}};
                return term;
            }
            if (at(Tok::Number) || at(Tok::Minus)) {
                Decimal v = parse_signed_number();
                term.body = ParamValueRel{NumRel{std::move(param), to_rel_op(op_tok), v}};
                return term;
            }
            throw ParseError(peek().loc,
                             "expected a value after comparison operator, found " +
                                 std::string(describe(peek().kind)));
        }
        term.body = std::move(param);
        return term;
    }

    // --- clause productions ---

    Predefined parse_predefined(bool negated) {
        SourceLoc loc = peek().loc;
        PredefKind kind = to_predef_kind(take().kind);
        expect(Tok::LParen, "'(' after " + std::string(to_keyword(kind)));
        Predefined out;
        out.negated = negated;
        out.kind = kind;
        out.loc = loc;
        out.clauses.push_back(parse_predicate());
        if (!at(Tok::Comma))
            throw ParseError(peek().loc, std::string(to_keyword(kind)) +
                                             " needs at least two arguments");
        while (at(Tok::Comma)) {
            take();
            out.clauses.push_back(parse_predicate());
        }
        expect(Tok::RParen, "')' closing " + std::string(to_keyword(kind)));
        return out;
    }

    Group parse_group(bool negated) {
        SourceLoc loc = expect(Tok::LParen, "'('").loc;
        Group g;
        g.negated = negated;
        g.loc = loc;
        g.inner.push_back(parse_predicate());
        expect(Tok::RParen, "')'");
        return g;
    }

    static bool earlier(SourceLoc a, SourceLoc b) {
        return a.line != b.line ? a.line < b.line : a.col < b.col;
    }

    Clause parse_clause() {
        if (at(Tok::KwNot)) {
            if (is_predef_kw(peek(1).kind)) {
                take();
                return parse_predefined(true);
            }
            if (at(Tok::LParen, 1)) {
                take();
                return parse_group(true);
            }
            SourceLoc not_loc = take().loc;
            if (!is_param_tok(peek().kind))
                throw ParseError(not_loc, "expected parameter, predefined form or "
                                          "'(' after NOT");
            return finish_term(parse_param(), true);
        }
        if (is_predef_kw(peek().kind)) return parse_predefined(false);
        if (at(Tok::LParen)) {
            // Ambiguous: "(p1 + p2) * p3 <= 100" is an arithmetic clause,
            // "(p1 AND p2)" a group. Try arithmetic, fall back to group,
            // keep whichever error got further when both fail.
            std::size_t mark = pos_;
            try {
                return parse_arithmetic(peek().loc);
            } catch (const ParseError& arith_err) {
                pos_ = mark;
                try {
                    return parse_group(false);
                } catch (const ParseError& group_err) {
                    throw earlier(arith_err.loc(), group_err.loc()) ? group_err
                                                                    : arith_err;
                }
            }
        }
        if (is_param_tok(peek().kind)) {
            ParamRef param = parse_param();
            if (is_rel_op(peek().kind) && is_param_tok(peek(1).kind)) {
                Relational rel;
                rel.loc = param.loc;
                rel.lhs = std::move(param);
                rel.op = to_rel_op(take().kind);
                rel.rhs = parse_param();
                return rel;
            }
            if (is_arith_op(peek().kind)) return parse_arithmetic_after(std::move(param));
            return finish_term(std::move(param), false);
        }
        throw ParseError(peek().loc, "expected a clause, found " + std::string(describe(peek().kind)));
    }

    Predicate parse_predicate() {
        Predicate p;
        p.clauses.push_back(parse_clause());
        while (at(Tok::KwAnd) || at(Tok::KwOr)) {
            p.conns.push_back(take().kind == Tok::KwAnd ? Conn::And : Conn::Or);
            p.clauses.push_back(parse_clause());
        }
        return p;
    }

    // --- dependency production ---

    Dependency parse_dependency() {
        SourceLoc loc = peek().loc;
        if (at(Tok::KwIf)) {
            take();
            ConditionalDep dep;
            dep.loc = loc;
            dep.condition = parse_predicate();
            expect(Tok::KwThen, "'THEN'");
            dep.consequence = parse_predicate();
            return dep;
        }
        if (at(Tok::KwNot)) {
            if (!is_predef_kw(peek(1).kind))
                throw ParseError(loc, "a top-level NOT may only precede a "
                                      "predefined form (Or/OnlyOne/AllOrNone/"
                                      "ZeroOrOne)");
            take();
            return PredefinedDep{parse_predefined(true), loc};
        }
        if (is_predef_kw(peek().kind)) return PredefinedDep{parse_predefined(false), loc};
        if (at(Tok::LParen)) return ArithmeticDep{parse_arithmetic(loc), loc};
        if (is_param_tok(peek().kind)) {
            ParamRef param = parse_param();
            if (is_arith_op(peek().kind))
                return ArithmeticDep{parse_arithmetic_after(std::move(param)), loc};
            if (is_rel_op(peek().kind) && is_param_tok(peek(1).kind)) {
                Relational rel;
                rel.loc = loc;
                rel.lhs = std::move(param);
                rel.op = to_rel_op(take().kind);
                rel.rhs = parse_param();
                return RelationalDep{std::move(rel), loc};
            }
            throw ParseError(peek().loc,
                             "a dependency must be IF...THEN..., a predefined form, "
                             "a comparison between parameters, or an arithmetic "
                             "comparison; found " + std::string(describe(peek().kind)) +
                             " after parameter");
        }
        throw ParseError(loc, "expected a dependency, found " + std::string(describe(peek().kind)));
    }
};

} // namespace detail

/// Parse IDL source without applying structural validation. Most callers
/// want parseIdl below; this entry point exists so invalid models can still
/// be inspected (e.g. to list every diagnostic).
inline Model parseIdlUnvalidated(const std::string& text) {
    return detail::Parser(lexIdl(text)).parse_model();
}

/// Parse and validate IDL source. Throws ParseError on malformed syntax and
/// ValidationError when the model breaks a structural restriction (e.g. a
/// negated element inside a predefined form).
inline Model parseIdl(const std::string& text) {
    Model m = parseIdlUnvalidated(text);
    if (auto diags = validateModel(m); !diags.empty()) throw ValidationError(std::move(diags));
    return m;
}

} // namespace idlkit

#endif // IDLKIT_PARSER_HPP
