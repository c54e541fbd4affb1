#ifndef IDLKIT_VALUE_HPP
#define IDLKIT_VALUE_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "idlkit/decimal.hpp"
#include "idlkit/errors.hpp"

namespace idlkit {

/// A concrete parameter value. Integers keep their own alternative so integer
/// domains enumerate cheaply; Decimal covers non-integral numerics exactly.
using Value = std::variant<bool, std::int64_t, Decimal, std::string>;

enum class ValueKind { Bool, Int, Dec, Str };

inline ValueKind kind_of(const Value& v) {
    switch (v.index()) {
        case 0: return ValueKind::Bool;
        case 1: return ValueKind::Int;
        case 2: return ValueKind::Dec;
        default: return ValueKind::Str;
    }
}

inline bool is_numeric(const Value& v) {
    return kind_of(v) == ValueKind::Int || kind_of(v) == ValueKind::Dec;
}

inline Decimal as_decimal(const Value& v) {
    if (const auto* i = std::get_if<std::int64_t>(&v)) return Decimal(*i);
    if (const auto* d = std::get_if<Decimal>(&v)) return *d;
    throw EvalError("value is not numeric");
}

/// Equality across kinds: numerics compare by magnitude, otherwise values of
/// different kinds are simply unequal.
inline bool value_equal(const Value& a, const Value& b) {
    if (is_numeric(a) && is_numeric(b)) return as_decimal(a) == as_decimal(b);
    if (a.index() != b.index()) return false;
    return a == b;
}

/// Ordering is defined on numerics only.
inline std::strong_ordering value_compare(const Value& a, const Value& b) {
    if (!is_numeric(a) || !is_numeric(b))
        throw EvalError("ordered comparison on non-numeric values");
    return as_decimal(a) <=> as_decimal(b);
}

/// Escape a string for single-quoted IDL literals.
inline std::string quote_idl_string(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'' || c == '\\') out += '\\';
        out += c;
    }
    out += '\'';
    return out;
}

/// Raw text form of a value (no quoting).
inline std::string value_plain(const Value& v) {
    switch (kind_of(v)) {
        case ValueKind::Bool: return std::get<bool>(v) ? "true" : "false";
        case ValueKind::Int: return std::to_string(std::get<std::int64_t>(v));
        case ValueKind::Dec: return std::get<Decimal>(v).str();
        default: return std::get<std::string>(v);
    }
}

/// IDL literal form of a value (strings quoted).
inline std::string value_literal(const Value& v) {
    if (kind_of(v) == ValueKind::Str) return quote_idl_string(std::get<std::string>(v));
    return value_plain(v);
}

} // namespace idlkit

#endif // IDLKIT_VALUE_HPP
