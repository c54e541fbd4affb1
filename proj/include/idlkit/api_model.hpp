#ifndef IDLKIT_API_MODEL_HPP
#define IDLKIT_API_MODEL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "idlkit/ast.hpp"
#include "idlkit/errors.hpp"
#include "idlkit/value.hpp"
#include "idlkit/wildcard.hpp"

namespace idlkit {

// --- Errors -----------------------------------------------------------------

class OperationNotFoundError : public IngestError {
public:
    using IngestError::IngestError;
};
class SchemaUnsupportedError : public IngestError {
public:
    using IngestError::IngestError;
};
class DuplicateParameterError : public IngestError {
public:
    using IngestError::IngestError;
};
class TypeMismatchError : public IngestError {
public:
    using IngestError::IngestError;
};
class UndeclaredParameterError : public BindError {
public:
    using BindError::BindError;
};

// --- Parameter domains -------------------------------------------------------

struct BooleanDom {
    friend bool operator==(const BooleanDom&, const BooleanDom&) = default;
};

/// Integer domain. Bounds may be missing on ingestion (an unbounded
/// declaration); buildDomains fills them with a finite window so the
/// enumeration engine can work.
struct IntRange {
    std::optional<std::int64_t> min, max;

    friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct EnumInt {
    std::vector<std::int64_t> values; // duplicate-free, declaration order

    friend bool operator==(const EnumInt&, const EnumInt&) = default;
};

struct EnumString {
    std::vector<std::string> values; // duplicate-free, declaration order

    friend bool operator==(const EnumString&, const EnumString&) = default;
};

/// A string parameter with no declared value set. buildDomains replaces it
/// with a finite symbolic EnumString covering every behavior class the model
/// distinguishes.
struct OpenString {
    friend bool operator==(const OpenString&, const OpenString&) = default;
};

/// Real-valued parameter. Never enumerated; usable only on analysis paths
/// that pin its value (request validation).
struct Continuous {
    friend bool operator==(const Continuous&, const Continuous&) = default;
};

using ParamDomain =
    std::variant<BooleanDom, IntRange, EnumInt, EnumString, OpenString, Continuous>;

/// Number of elements of a finite domain; nullopt when infinite (OpenString
/// before buildDomains, Continuous always).
inline std::optional<unsigned long long> domain_size(const ParamDomain& d) {
    if (std::holds_alternative<BooleanDom>(d)) return 2ULL;
    if (const auto* ir = std::get_if<IntRange>(&d)) {
        if (!ir->min || !ir->max) return std::nullopt;
        return static_cast<unsigned long long>(*ir->max - *ir->min) + 1ULL;
    }
    if (const auto* ei = std::get_if<EnumInt>(&d))
        return static_cast<unsigned long long>(ei->values.size());
    if (const auto* es = std::get_if<EnumString>(&d))
        return static_cast<unsigned long long>(es->values.size());
    return std::nullopt;
}

/// Materialize a finite domain in its canonical order; nullopt when infinite.
inline std::optional<std::vector<Value>> domain_values(const ParamDomain& d) {
    std::vector<Value> out;
    if (std::holds_alternative<BooleanDom>(d)) {
        out.emplace_back(false);
        out.emplace_back(true);
        return out;
    }
    if (const auto* ir = std::get_if<IntRange>(&d)) {
        if (!ir->min || !ir->max) return std::nullopt;
        for (std::int64_t v = *ir->min; v <= *ir->max; ++v) {
            out.emplace_back(v);
            if (v == *ir->max) break; // guard int64 overflow at the top end
        }
        return out;
    }
    if (const auto* ei = std::get_if<EnumInt>(&d)) {
        for (std::int64_t v : ei->values) out.emplace_back(v);
        return out;
    }
    if (const auto* es = std::get_if<EnumString>(&d)) {
        for (const std::string& v : es->values) out.emplace_back(v);
        return out;
    }
    return std::nullopt;
}

// --- Parameters and operations ----------------------------------------------

struct Parameter {
    std::string name;
    ParamDomain domain;
    bool required = false;

    friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct OperationSpec {
    std::string operationId;
    std::vector<Parameter> parameters;
    Model model;

    const Parameter* find(const std::string& name) const {
        for (const auto& p : parameters)
            if (p.name == name) return &p;
        return nullptr;
    }

    friend bool operator==(const OperationSpec&, const OperationSpec&) = default;
};

/// An (attempted) service call: values for a subset of the declared
/// parameters. The same shape serves as a partial request when interpreted
/// as extensible.
struct Request {
    std::map<std::string, Value> bindings;

    friend bool operator==(const Request&, const Request&) = default;
};

using PartialRequest = Request;

/// Verify that every parameter reference in the model names a declared
/// parameter. Throws UndeclaredParameterError otherwise.
inline void checkBinding(const OperationSpec& spec) {
    std::vector<std::string> missing;
    forEachParamRef(spec.model, [&](const ParamRef& r) {
        if (!spec.find(r.name) &&
            std::find(missing.begin(), missing.end(), r.name) == missing.end())
            missing.push_back(r.name);
    });
    if (!missing.empty()) {
        std::string msg = "undeclared parameter";
        if (missing.size() > 1) msg += "s";
        for (std::size_t i = 0; i < missing.size(); ++i)
            msg += (i ? ", '" : " '") + missing[i] + "'";
        msg += " referenced by the dependency model";
        throw UndeclaredParameterError(msg);
    }
}

// --- buildDomains -------------------------------------------------------------

struct DomainOptions {
    /// Window for unbounded integer domains; replaces the derived
    /// constants±100 window when present. Declared bounds always win.
    std::optional<std::pair<std::int64_t, std::int64_t>> int_window;
    /// Extra string constants per parameter, harvested as if they appeared in
    /// the model. Used to make request values participate in symbolic string
    /// domains (LIKE atoms are lowered over the built domain, so a request
    /// value must be in it to be judged exactly).
    std::map<std::string, std::vector<std::string>> extra_strings;
};

namespace detail {

struct Harvest {
    std::vector<std::string> constants; // '=='-compared strings, first occurrence
    std::vector<std::string> patterns;  // LIKE patterns, first occurrence
    std::vector<Decimal> numbers;       // numeric constants the parameter touches
};

inline void add_unique(std::vector<std::string>& xs, const std::string& x) {
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
}

inline std::map<std::string, Harvest> harvest_model(const Model& m) {
    std::map<std::string, Harvest> out;
    forEachClause(m, [&](const Clause& c) {
        if (const auto* term = std::get_if<Term>(&c)) {
            if (const auto* rel = std::get_if<ParamValueRel>(&term->body)) {
                if (const auto* se = std::get_if<StringEq>(rel)) {
                    auto& h = out[se->param.name];
                    for (const auto& v : se->values) add_unique(h.constants, v);
                } else if (const auto* lk = std::get_if<LikeRel>(rel)) {
                    auto& h = out[lk->param.name];
                    if (std::find(h.patterns.begin(), h.patterns.end(), lk->pattern) ==
                        h.patterns.end())
                        h.patterns.push_back(lk->pattern);
                } else if (const auto* nr = std::get_if<NumRel>(rel)) {
                    out[nr->param.name].numbers.push_back(nr->value);
                }
            }
        } else if (const auto* ar = std::get_if<Arithmetic>(&c)) {
            forEachArithLeaf(ar->expr, [&](const ParamRef& r) {
                out[r.name].numbers.push_back(ar->value);
            });
        }
    });
    return out;
}

/// Witness for a LIKE pattern: '*'→"", '?'→'a'; made unique among the values
/// collected so far by appending 'z'.
inline std::string pattern_witness(const std::string& pattern,
                                   const std::vector<std::string>& taken) {
    std::string w;
    for (char c : pattern) {
        if (c == '*') continue;
        w += (c == '?') ? 'a' : c;
    }
    while (std::find(taken.begin(), taken.end(), w) != taken.end()) w += 'z';
    return w;
}

/// Sentinel: a string equal to no collected value and matching no pattern.
/// A pattern like '*' admits no such string; after a bounded number of tries
/// the last candidate is kept (the symbolic domain is then an approximation,
/// which is unavoidable when every string matches).
inline std::string make_sentinel(const std::vector<std::string>& taken,
                                 const std::vector<std::string>& patterns) {
    std::string s = "⊥other"; // ⊥other
    for (int tries = 0; tries < 1000; ++tries) {
        bool clash = std::find(taken.begin(), taken.end(), s) != taken.end();
        for (const auto& p : patterns)
            clash = clash || wildcard_match(s, p);
        if (!clash) break;
        s += 'z';
    }
    return s;
}

} // namespace detail

/// Make every non-Continuous domain finite:
///   - OpenString → EnumString with the model's '=='-constants (plus any
///     injected extras), one witness per LIKE pattern, and a sentinel that
///     matches nothing;
///   - unbounded IntRange sides → clipped to constants±100 (default [0,100],
///     or the configured window); declared bounds are kept.
/// Finite domains pass through untouched, so the operation is idempotent.
inline OperationSpec buildDomains(const OperationSpec& spec,
                                  const DomainOptions& opt = {}) {
    auto harvest = detail::harvest_model(spec.model);
    OperationSpec out = spec;
    for (Parameter& p : out.parameters) {
        const detail::Harvest* h = nullptr;
        if (auto it = harvest.find(p.name); it != harvest.end()) h = &it->second;

        if (std::holds_alternative<OpenString>(p.domain)) {
            std::vector<std::string> values;
            std::vector<std::string> patterns;
            if (h) {
                for (const auto& c : h->constants) detail::add_unique(values, c);
                patterns = h->patterns;
            }
            if (auto it = opt.extra_strings.find(p.name); it != opt.extra_strings.end())
                for (const auto& c : it->second) detail::add_unique(values, c);
            for (const auto& pat : patterns)
                values.push_back(detail::pattern_witness(pat, values));
            values.push_back(detail::make_sentinel(values, patterns));
            p.domain = EnumString{std::move(values)};
        } else if (auto* ir = std::get_if<IntRange>(&p.domain)) {
            if (ir->min && ir->max) continue;
            std::optional<std::int64_t> lo_c, hi_c;
            if (h && !h->numbers.empty()) {
                Decimal mn = h->numbers.front(), mx = h->numbers.front();
                for (const Decimal& d : h->numbers) {
                    if (d < mn) mn = d;
                    if (d > mx) mx = d;
                }
                lo_c = mn.floor_int64() - 100;
                hi_c = mx.ceil_int64() + 100;
            }
            std::int64_t lo = ir->min ? *ir->min
                              : opt.int_window ? opt.int_window->first
                              : lo_c           ? *lo_c
                                               : 0;
            std::int64_t hi = ir->max ? *ir->max
                              : opt.int_window ? opt.int_window->second
                              : hi_c           ? *hi_c
                                               : 100;
            if (lo > hi)
                throw IngestError("empty integer window [" + std::to_string(lo) +
                                  ", " + std::to_string(hi) + "] for parameter '" +
                                  p.name + "'");
            ir->min = lo;
            ir->max = hi;
        }
    }
    return out;
}

// --- Request value typing -----------------------------------------------------

namespace detail {

inline bool parse_int64(const std::string& text, std::int64_t& out) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k]))) return false;
    try {
        out = std::stoll(text);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace detail

/// Interpret the raw text of a request value under the parameter's declared
/// domain. HTTP-style inputs are untyped; the declaration supplies the type.
inline Value typed_value(const std::string& text, const ParamDomain& domain,
                         const std::string& param_name) {
    if (std::holds_alternative<BooleanDom>(domain)) {
        if (text == "true") return Value(true);
        if (text == "false") return Value(false);
        throw TypeMismatchError("parameter '" + param_name +
                                "' is boolean; got '" + text + "'");
    }
    if (std::holds_alternative<IntRange>(domain) ||
        std::holds_alternative<EnumInt>(domain)) {
        std::int64_t v = 0;
        if (!detail::parse_int64(text, v))
            throw TypeMismatchError("parameter '" + param_name +
                                    "' is integer; got '" + text + "'");
        return Value(v);
    }
    if (std::holds_alternative<Continuous>(domain)) {
        try {
            return Value(Decimal::parse(text));
        } catch (const EvalError&) {
            throw TypeMismatchError("parameter '" + param_name +
                                    "' is numeric; got '" + text + "'");
        }
    }
    return Value(text); // EnumString / OpenString
}

/// Parse the CLI literal form "name=value[,name=value]*". Whitespace around
/// names and values is trimmed; the first '=' of each pair separates them.
inline Request parse_request_literal(const std::string& text,
                                     const OperationSpec& spec) {
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t");
        std::size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    Request r;
    if (trim(text).empty()) return r;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string pair = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw IngestError("request pair '" + trim(pair) + "' lacks '='");
        std::string name = trim(pair.substr(0, eq));
        std::string value = trim(pair.substr(eq + 1));
        if (name.empty()) throw IngestError("request pair with empty name");
        const Parameter* p = spec.find(name);
        if (!p)
            throw UndeclaredParameterError("request names unknown parameter '" +
                                           name + "'");
        if (r.bindings.count(name))
            throw IngestError("request repeats parameter '" + name + "'");
        r.bindings.emplace(name, typed_value(value, p->domain, name));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return r;
}

} // namespace idlkit

#endif // IDLKIT_API_MODEL_HPP
