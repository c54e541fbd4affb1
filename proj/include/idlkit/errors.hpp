#ifndef IDLKIT_ERRORS_HPP
#define IDLKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idlkit {

/// Position of a token in IDL source text (1-based).
struct SourceLoc {
    int line = 0;
    int col = 0;
};

inline std::string to_string(SourceLoc loc) {
    return std::to_string(loc.line) + ":" + std::to_string(loc.col);
}

/// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the IDL lexer/parser on malformed input.
class ParseError : public Error {
public:
    ParseError(SourceLoc loc, const std::string& msg)
        : Error(to_string(loc) + ": " + msg), loc_(loc) {}
    SourceLoc loc() const { return loc_; }

private:
    SourceLoc loc_;
};

/// Raised when an input document (OpenAPI, params, request) cannot be ingested.
class IngestError : public Error {
public:
    using Error::Error;
};

/// Raised when an IDL model does not fit the parameter spec it is paired with
/// (unknown parameter names, value/domain type mismatches).
class BindError : public Error {
public:
    using Error::Error;
};

/// Raised when an operation would need to enumerate a continuous domain.
class InfiniteDomainError : public Error {
public:
    using Error::Error;
};

/// Raised on malformed constraint evaluation (internal invariant breach).
class EvalError : public Error {
public:
    using Error::Error;
};

} // namespace idlkit

#endif // IDLKIT_ERRORS_HPP
