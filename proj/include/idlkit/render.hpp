#ifndef IDLKIT_RENDER_HPP
#define IDLKIT_RENDER_HPP

#include <cctype>
#include <string>

#include "idlkit/ast.hpp"
#include "idlkit/value.hpp"

namespace idlkit {

namespace detail {

inline bool is_plain_id(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    // Words the lexer claims for itself can only appear bracketed.
    static const char* reserved[] = {"IF", "THEN", "AND", "OR", "NOT", "LIKE",
                                     "Or", "OnlyOne", "AllOrNone", "ZeroOrOne",
                                     "true", "false"};
    for (const char* kw : reserved)
        if (name == kw) return false;
    return true;
}

inline std::string render(const ParamRef& p) {
    if (p.bracketed || !is_plain_id(p.name)) return "[" + p.name + "]";
    return p.name;
}

inline std::string render(const Predicate& p);

inline std::string render(const Term& t) {
    std::string out = t.negated ? "NOT " : "";
    if (const auto* ref = std::get_if<ParamRef>(&t.body)) return out + render(*ref);
    const auto& rel = std::get<ParamValueRel>(t.body);
    if (const auto* se = std::get_if<StringEq>(&rel)) {
        out += render(se->param) + "==";
        for (std::size_t i = 0; i < se->values.size(); ++i) {
            if (i) out += "|";
            out += quote_idl_string(se->values[i]);
        }
        return out;
    }
    if (const auto* lk = std::get_if<LikeRel>(&rel))
        return out + render(lk->param) + " LIKE " + quote_idl_string(lk->pattern);
    if (const auto* be = std::get_if<BoolEq>(&rel))
        return out + render(be->param) + "==" + (be->value ? "true" : "false");
    const auto& nr = std::get<NumRel>(rel);
    return out + render(nr.param) + to_symbol(nr.op) + nr.value.str();
}

inline std::string render(const Relational& r) {
    return render(r.lhs) + " " + to_symbol(r.op) + " " + render(r.rhs);
}

/// Arithmetic trees render with the fewest parentheses that reparse to the
/// same tree: chains fold left, so only a compound right operand needs them.
inline std::string render_arith(const ArithExpr& e, bool parenthesize) {
    if (const auto* ref = std::get_if<ParamRef>(&e)) return render(*ref);
    const auto& node = std::get<ArithNode>(e);
    std::string out = render_arith(node.kids[0], false) + " " + to_symbol(node.op) +
                      " " + render_arith(node.kids[1], true);
    return parenthesize ? "(" + out + ")" : out;
}

inline std::string render(const Arithmetic& a) {
    return render_arith(a.expr, false) + " " + to_symbol(a.rel) + " " + a.value.str();
}

inline std::string render(const Predefined& p) {
    std::string out = p.negated ? "NOT " : "";
    out += to_keyword(p.kind);
    out += "(";
    for (std::size_t i = 0; i < p.clauses.size(); ++i) {
        if (i) out += ", ";
        out += render(p.clauses[i]);
    }
    return out + ")";
}

inline std::string render(const Group& g) {
    return std::string(g.negated ? "NOT " : "") + "(" + render(g.inner.front()) + ")";
}

inline std::string render(const Clause& c) {
    return std::visit([](const auto& node) { return render(node); }, c);
}

inline std::string render(const Predicate& p) {
    std::string out = render(p.clauses[0]);
    for (std::size_t i = 0; i < p.conns.size(); ++i) {
        out += p.conns[i] == Conn::And ? " AND " : " OR ";
        out += render(p.clauses[i + 1]);
    }
    return out;
}

inline std::string render(const Dependency& dep) {
    return std::visit(
        [](const auto& d) -> std::string {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, ConditionalDep>)
                return "IF " + render(d.condition) + " THEN " + render(d.consequence);
            else if constexpr (std::is_same_v<T, PredefinedDep>)
                return render(d.form);
            else if constexpr (std::is_same_v<T, RelationalDep>)
                return render(d.rel);
            else
                return render(d.arith);
        },
        dep);
}

} // namespace detail

/// Render a model back to canonical IDL text: one dependency per line, each
/// terminated by ';'. parseIdl(renderIdl(m)) reproduces m exactly.
inline std::string renderIdl(const Model& m) {
    std::string out;
    for (const auto& dep : m.dependencies) {
        out += detail::render(dep);
        out += ";\n";
    }
    return out;
}

} // namespace idlkit

#endif // IDLKIT_RENDER_HPP
