#ifndef IDLKIT_VALIDATE_HPP
#define IDLKIT_VALIDATE_HPP

#include <string>
#include <vector>

#include "idlkit/ast.hpp"

namespace idlkit {

/// A structural problem found in a model that parsed successfully.
struct Diagnostic {
    SourceLoc loc{};
    std::string rule;    // stable machine-readable id
    std::string message; // human-readable explanation

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Thrown by parseIdl when a syntactically well-formed model breaks a
/// structural restriction. Carries every diagnostic found.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<Diagnostic> diags)
        : Error(summarize(diags)), diags_(std::move(diags)) {}
    const std::vector<Diagnostic>& diagnostics() const { return diags_; }

private:
    static std::string summarize(const std::vector<Diagnostic>& diags) {
        std::string out = "invalid model";
        for (const auto& d : diags)
            out += "\n  " + to_string(d.loc) + ": " + d.message + " [" + d.rule + "]";
        return out;
    }
    std::vector<Diagnostic> diags_;
};

namespace detail {

/// Flag every negated element inside a predefined form's arguments. Negation
/// is scanned through groups and AND/OR chains; a nested predefined form is
/// itself an element (only its own negation flag is checked here — its
/// arguments are examined when the walker reaches it).
inline void check_predef_elements(const Predefined& predef,
                                  std::vector<Diagnostic>& out) {
    auto flag = [&](SourceLoc loc) {
        out.push_back({loc, "negated-predefined-element",
                       std::string("elements of ") + to_keyword(predef.kind) +
                           " must not be negated"});
    };
    // Walk one argument predicate, descending through groups only.
    auto scan = [&](const Predicate& arg, auto&& self_ref) -> void {
        for (const Clause& c : arg.clauses) {
            if (const auto* term = std::get_if<Term>(&c)) {
                if (term->negated) flag(term->loc);
            } else if (const auto* grp = std::get_if<Group>(&c)) {
                if (grp->negated) flag(grp->loc);
                self_ref(grp->inner.front(), self_ref);
            } else if (const auto* nested = std::get_if<Predefined>(&c)) {
                if (nested->negated) flag(nested->loc);
            }
        }
    };
    for (const Predicate& arg : predef.clauses) scan(arg, scan);
}

} // namespace detail

/// Check structural rules that the grammar cannot express. Returns one
/// diagnostic per violation (empty means the model is well-formed):
///   - predefined-arity: a predefined form needs at least two arguments;
///   - negated-predefined-element: arguments of a predefined form must not
///     carry NOT.
inline std::vector<Diagnostic> validateModel(const Model& m) {
    std::vector<Diagnostic> out;
    forEachClause(m, [&](const Clause& c) {
        if (const auto* predef = std::get_if<Predefined>(&c)) {
            if (predef->clauses.size() < 2)
                out.push_back({predef->loc, "predefined-arity",
                               std::string(to_keyword(predef->kind)) +
                                   " needs at least two arguments, has " +
                                   std::to_string(predef->clauses.size())});
            detail::check_predef_elements(*predef, out);
        }
    });
    return out;
}

} // namespace idlkit

#endif // IDLKIT_VALIDATE_HPP
