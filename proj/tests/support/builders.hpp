#ifndef IDLKIT_TESTS_BUILDERS_HPP
#define IDLKIT_TESTS_BUILDERS_HPP

// Small AST construction helpers so tests can state expected structures
// without the ceremony of aggregate initialization.

#include <string>
#include <vector>

#include "idlkit/ast.hpp"

namespace tb {

using namespace idlkit;

inline ParamRef ref(std::string name, bool bracketed = false) {
    return ParamRef{std::move(name), bracketed, {}};
}

inline Term term(std::string name, bool negated = false) {
    Term t;
    t.negated = negated;
    t.body = ref(std::move(name));
    return t;
}

inline Term string_eq(std::string name, std::vector<std::string> values,
                      bool negated = false) {
    Term t;
    t.negated = negated;
    t.body = ParamValueRel{StringEq{ref(std::move(name)), std::move(values)}};
    return t;
}

inline Term like(std::string name, std::string pattern, bool negated = false) {
    Term t;
    t.negated = negated;
    t.body = ParamValueRel{LikeRel{ref(std::move(name)), std::move(pattern)}};
    return t;
}

inline Term bool_eq(std::string name, bool value, bool negated = false) {
    Term t;
    t.negated = negated;
    t.body = ParamValueRel{BoolEq{ref(std::move(name)), value}};
    return t;
}

inline Term num_rel(std::string name, RelOp op, Decimal value, bool negated = false) {
    Term t;
    t.negated = negated;
    t.body = ParamValueRel{NumRel{ref(std::move(name)), op, value}};
    return t;
}

inline Predicate pred(Clause c) {
    Predicate p;
    p.clauses.push_back(std::move(c));
    return p;
}

inline Predicate chain(std::vector<Clause> clauses, std::vector<Conn> conns) {
    Predicate p;
    p.clauses = std::move(clauses);
    p.conns = std::move(conns);
    return p;
}

inline Group group(Predicate inner, bool negated = false) {
    Group g;
    g.negated = negated;
    g.inner.push_back(std::move(inner));
    return g;
}

inline Predefined predef(PredefKind kind, std::vector<Predicate> clauses,
                         bool negated = false) {
    Predefined p;
    p.negated = negated;
    p.kind = kind;
    p.clauses = std::move(clauses);
    return p;
}

inline Relational relational(std::string lhs, RelOp op, std::string rhs) {
    Relational r;
    r.lhs = ref(std::move(lhs));
    r.op = op;
    r.rhs = ref(std::move(rhs));
    return r;
}

inline ArithExpr leaf(std::string name) { return ArithExpr{ref(std::move(name))}; }

inline Model model(std::vector<Dependency> deps) {
    Model m;
    m.dependencies = std::move(deps);
    return m;
}

inline Dependency requires_dep(Predicate cond, Predicate cons) {
    ConditionalDep d;
    d.condition = std::move(cond);
    d.consequence = std::move(cons);
    return d;
}

inline Dependency predef_dep(PredefKind kind, std::vector<Predicate> clauses,
                             bool negated = false) {
    return PredefinedDep{predef(kind, std::move(clauses), negated), {}};
}

} // namespace tb

#endif // IDLKIT_TESTS_BUILDERS_HPP
