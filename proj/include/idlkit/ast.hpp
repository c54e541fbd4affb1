#ifndef IDLKIT_AST_HPP
#define IDLKIT_AST_HPP

#include <string>
#include <variant>
#include <vector>

#include "idlkit/decimal.hpp"
#include "idlkit/errors.hpp"

namespace idlkit {

// ---------------------------------------------------------------------------
// Abstract syntax for the inter-parameter dependency language.
//
// A Model is a list of dependencies. Each dependency is one of:
//   - conditional:  IF <predicate> THEN <predicate>;
//   - predefined:   Or(...) / OnlyOne(...) / AllOrNone(...) / ZeroOrOne(...)
//   - relational:   p1 <op> p2;
//   - arithmetic:   p1 + p2 - p3 <op> number;
//
// Predicates are right-nested AND/OR chains of clauses; clauses recurse via
// parenthesised groups and predefined forms.
//
// Structural equality on all nodes ignores source locations.
// ---------------------------------------------------------------------------

enum class RelOp { Lt, Gt, Le, Ge, Eq, Ne };
enum class ArithOp { Add, Sub, Mul, Div };
enum class PredefKind { Or, OnlyOne, AllOrNone, ZeroOrOne };
enum class Conn { And, Or };

inline const char* to_symbol(RelOp op) {
    switch (op) {
        case RelOp::Lt: return "<";
        case RelOp::Gt: return ">";
        case RelOp::Le: return "<=";
        case RelOp::Ge: return ">=";
        case RelOp::Eq: return "==";
        case RelOp::Ne: return "!=";
    }
    return "?";
}

inline const char* to_symbol(ArithOp op) {
    switch (op) {
        case ArithOp::Add: return "+";
        case ArithOp::Sub: return "-";
        case ArithOp::Mul: return "*";
        case ArithOp::Div: return "/";
    }
    return "?";
}

inline const char* to_keyword(PredefKind k) {
    switch (k) {
        case PredefKind::Or: return "Or";
        case PredefKind::OnlyOne: return "OnlyOne";
        case PredefKind::AllOrNone: return "AllOrNone";
        case PredefKind::ZeroOrOne: return "ZeroOrOne";
    }
    return "?";
}

/// Reference to a parameter by name. `bracketed` records whether the source
/// used the [name] escape form (needed for names that are not plain
/// identifiers, e.g. "owner.percentage" or names containing spaces).
struct ParamRef {
    std::string name;
    bool bracketed = false;
    SourceLoc loc{};

    friend bool operator==(const ParamRef& a, const ParamRef& b) {
        return a.name == b.name && a.bracketed == b.bracketed;
    }
};

// --- ParamValueRelation alternatives ---------------------------------------

/// p == 'A'|'B'|'C' — parameter takes one of the listed string values.
struct StringEq {
    ParamRef param;
    std::vector<std::string> values; // at least one

    friend bool operator==(const StringEq&, const StringEq&) = default;
};

/// p LIKE 'pattern' — wildcard match with * and ?.
struct LikeRel {
    ParamRef param;
    std::string pattern;

    friend bool operator==(const LikeRel&, const LikeRel&) = default;
};

/// p == true / p == false.
struct BoolEq {
    ParamRef param;
    bool value = false;

    friend bool operator==(const BoolEq&, const BoolEq&) = default;
};

/// p <op> number.
struct NumRel {
    ParamRef param;
    RelOp op = RelOp::Eq;
    Decimal value;

    friend bool operator==(const NumRel&, const NumRel&) = default;
};

using ParamValueRel = std::variant<StringEq, LikeRel, BoolEq, NumRel>;

/// NOT? (param | param-value relation). The relevance atom of the language:
/// a bare param means "p is present (set)"; a value relation additionally
/// constrains the value it takes.
struct Term {
    bool negated = false;
    std::variant<ParamRef, ParamValueRel> body;
    SourceLoc loc{};

    friend bool operator==(const Term& a, const Term& b) {
        return a.negated == b.negated && a.body == b.body;
    }
};

/// p1 <op> p2 — comparison between two parameters' values.
struct Relational {
    ParamRef lhs;
    RelOp op = RelOp::Eq;
    ParamRef rhs;
    SourceLoc loc{};

    friend bool operator==(const Relational& a, const Relational& b) {
        return a.lhs == b.lhs && a.op == b.op && a.rhs == b.rhs;
    }
};

/// Binary node of an arithmetic expression tree. Unparenthesised chains fold
/// left-associatively ("p1 + p2 - p3" is ((p1+p2)-p3)); parentheses in the
/// source produce the corresponding subtree.
struct ArithNode {
    std::vector<std::variant<ParamRef, ArithNode>> kids; // exactly two
    ArithOp op = ArithOp::Add;

    friend bool operator==(const ArithNode&, const ArithNode&) = default;
};

using ArithExpr = std::variant<ParamRef, ArithNode>;

/// p1 + p2 - p3 <op> number. `expr` has at least two parameter leaves.
struct Arithmetic {
    ArithExpr expr;
    RelOp rel = RelOp::Eq;
    Decimal value;
    SourceLoc loc{};

    friend bool operator==(const Arithmetic& a, const Arithmetic& b) {
        return a.expr == b.expr && a.rel == b.rel && a.value == b.value;
    }
};

inline ArithExpr make_arith_node(ArithExpr lhs, ArithOp op, ArithExpr rhs) {
    ArithNode n;
    n.op = op;
    n.kids.push_back(std::move(lhs));
    n.kids.push_back(std::move(rhs));
    return n;
}

struct Predicate; // forward: Predefined/Group recurse through it

/// Or(...) / OnlyOne(...) / AllOrNone(...) / ZeroOrOne(...), optionally
/// negated when used as a clause. Arguments are full predicates.
struct Predefined {
    bool negated = false;
    PredefKind kind = PredefKind::Or;
    std::vector<Predicate> clauses; // well-formed models have >= 2
    SourceLoc loc{};

    friend bool operator==(const Predefined& a, const Predefined& b);
};

/// NOT? ( predicate ) — parenthesised sub-predicate.
struct Group {
    bool negated = false;
    std::vector<Predicate> inner; // exactly one; vector provides indirection
    SourceLoc loc{};

    friend bool operator==(const Group& a, const Group& b);
};

using Clause = std::variant<Term, Relational, Arithmetic, Predefined, Group>;

/// Clause chain "c0 AND c1 OR c2 ...". Connectives associate to the right,
/// mirroring the grammar: a AND b OR c reads as a AND (b OR c).
struct Predicate {
    std::vector<Clause> clauses;  // size >= 1
    std::vector<Conn> conns;      // size == clauses.size() - 1

    friend bool operator==(const Predicate& a, const Predicate& b) {
        return a.clauses == b.clauses && a.conns == b.conns;
    }
};

inline bool operator==(const Predefined& a, const Predefined& b) {
    return a.negated == b.negated && a.kind == b.kind && a.clauses == b.clauses;
}

inline bool operator==(const Group& a, const Group& b) {
    return a.negated == b.negated && a.inner == b.inner;
}

// --- Dependencies -----------------------------------------------------------

/// IF condition THEN consequence;
struct ConditionalDep {
    Predicate condition;
    Predicate consequence;
    SourceLoc loc{};

    friend bool operator==(const ConditionalDep& a, const ConditionalDep& b) {
        return a.condition == b.condition && a.consequence == b.consequence;
    }
};

/// Top-level predefined dependency, e.g. OnlyOne(p1, p2); may carry a
/// leading NOT.
struct PredefinedDep {
    Predefined form;
    SourceLoc loc{};

    friend bool operator==(const PredefinedDep& a, const PredefinedDep& b) {
        return a.form == b.form;
    }
};

/// Top-level relational dependency, e.g. maxprice >= minprice;
struct RelationalDep {
    Relational rel;
    SourceLoc loc{};

    friend bool operator==(const RelationalDep& a, const RelationalDep& b) {
        return a.rel == b.rel;
    }
};

/// Top-level arithmetic dependency, e.g. p1 + p2 <= 100;
struct ArithmeticDep {
    Arithmetic arith;
    SourceLoc loc{};

    friend bool operator==(const ArithmeticDep& a, const ArithmeticDep& b) {
        return a.arith == b.arith;
    }
};

using Dependency =
    std::variant<ConditionalDep, PredefinedDep, RelationalDep, ArithmeticDep>;

/// A parsed IDL document: zero or more dependencies.
struct Model {
    std::vector<Dependency> dependencies;

    friend bool operator==(const Model&, const Model&) = default;
};

// --- Walkers ----------------------------------------------------------------

namespace detail {

template <class F>
void walk_clauses(const Predicate& p, F& fn);

template <class F>
void walk_clauses(const Clause& c, F& fn) {
    fn(c);
    if (const auto* pre = std::get_if<Predefined>(&c)) {
        for (const auto& sub : pre->clauses) walk_clauses(sub, fn);
    } else if (const auto* grp = std::get_if<Group>(&c)) {
        for (const auto& sub : grp->inner) walk_clauses(sub, fn);
    }
}

template <class F>
void walk_clauses(const Predicate& p, F& fn) {
    for (const auto& c : p.clauses) walk_clauses(c, fn);
}

} // namespace detail

/// Visit every clause reachable from `p` (including nested ones), outermost
/// first.
template <class F>
void forEachClause(const Predicate& p, F fn) {
    detail::walk_clauses(p, fn);
}

/// Visit every clause of every dependency in the model. Top-level relational,
/// arithmetic and predefined dependencies are presented as clauses so callers
/// can treat all occurrences uniformly.
template <class F>
void forEachClause(const Model& m, F fn) {
    for (const auto& dep : m.dependencies) {
        std::visit(
            [&](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, ConditionalDep>) {
                    detail::walk_clauses(d.condition, fn);
                    detail::walk_clauses(d.consequence, fn);
                } else if constexpr (std::is_same_v<T, PredefinedDep>) {
                    Clause c = d.form;
                    detail::walk_clauses(c, fn);
                } else if constexpr (std::is_same_v<T, RelationalDep>) {
                    Clause c = d.rel;
                    fn(static_cast<const Clause&>(c));
                } else {
                    Clause c = d.arith;
                    fn(static_cast<const Clause&>(c));
                }
            },
            dep);
    }
}

/// Visit every parameter leaf of an arithmetic expression, left to right.
template <class F>
void forEachArithLeaf(const ArithExpr& e, F fn) {
    if (const auto* ref = std::get_if<ParamRef>(&e)) {
        fn(*ref);
        return;
    }
    for (const auto& kid : std::get<ArithNode>(e).kids) forEachArithLeaf(kid, fn);
}

/// Visit every parameter reference in the model.
template <class F>
void forEachParamRef(const Model& m, F fn) {
    forEachClause(m, [&](const Clause& c) {
        if (const auto* term = std::get_if<Term>(&c)) {
            if (const auto* ref = std::get_if<ParamRef>(&term->body)) {
                fn(*ref);
            } else {
                const auto& rel = std::get<ParamValueRel>(term->body);
                std::visit([&](const auto& r) { fn(r.param); }, rel);
            }
        } else if (const auto* rel = std::get_if<Relational>(&c)) {
            fn(rel->lhs);
            fn(rel->rhs);
        } else if (const auto* ar = std::get_if<Arithmetic>(&c)) {
            forEachArithLeaf(ar->expr, fn);
        }
    });
}

} // namespace idlkit

#endif // IDLKIT_AST_HPP
