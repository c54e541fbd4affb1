#ifndef IDLKIT_LEXER_HPP
#define IDLKIT_LEXER_HPP

#include <cctype>
#include <string>
#include <vector>

#include "idlkit/errors.hpp"

namespace idlkit {

enum class Tok {
    Id,
    BracketedId, // [raw name], for parameters that are not plain identifiers
    String,      // single-quoted, \' and \\ escapes
    Number,      // digits with optional fraction; sign is a separate token
    True,
    False,
    KwIf,
    KwThen,
    KwAnd,
    KwOr,
    KwNot,
    KwLike,
    KwPOr, // predefined forms
    KwPOnlyOne,
    KwPAllOrNone,
    KwPZeroOrOne,
    LParen,
    RParen,
    Comma,
    Semicolon,
    Pipe,
    Lt,
    Gt,
    Le,
    Ge,
    EqEq,
    Ne,
    Plus,
    Minus,
    Star,
    Slash,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text; // identifier name, string value, or number lexeme
    SourceLoc loc{};
};

inline const char* describe(Tok k) {
    switch (k) {
        case Tok::Id: return "identifier";
        case Tok::BracketedId: return "bracketed name";
        case Tok::String: return "string literal";
        case Tok::Number: return "number";
        case Tok::True: return "'true'";
        case Tok::False: return "'false'";
        case Tok::KwIf: return "'IF'";
        case Tok::KwThen: return "'THEN'";
        case Tok::KwAnd: return "'AND'";
        case Tok::KwOr: return "'OR'";
        case Tok::KwNot: return "'NOT'";
        case Tok::KwLike: return "'LIKE'";
        case Tok::KwPOr: return "'Or'";
        case Tok::KwPOnlyOne: return "'OnlyOne'";
        case Tok::KwPAllOrNone: return "'AllOrNone'";
        case Tok::KwPZeroOrOne: return "'ZeroOrOne'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Semicolon: return "';'";
        case Tok::Pipe: return "'|'";
        case Tok::Lt: return "'<'";
        case Tok::Gt: return "'>'";
        case Tok::Le: return "'<='";
        case Tok::Ge: return "'>='";
        case Tok::EqEq: return "'=='";
        case Tok::Ne: return "'!='";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Slash: return "'/'";
        case Tok::End: return "end of input";
    }
    return "?";
}

/// Tokenize IDL source. Keywords are case-sensitive; identifiers are
/// [A-Za-z_][A-Za-z0-9_]*.
inline std::vector<Token> lexIdl(const std::string& src) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto here = [&] { return SourceLoc{line, col}; };
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++i;
    };
    auto fail = [&](SourceLoc loc, const std::string& msg) -> void {
        throw ParseError(loc, msg);
    };

    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(c);
            continue;
        }
        SourceLoc loc = here();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                word += src[i];
                advance(src[i]);
            }
            Tok kind = Tok::Id;
            if (word == "IF") kind = Tok::KwIf;
            else if (word == "THEN") kind = Tok::KwThen;
            else if (word == "AND") kind = Tok::KwAnd;
            else if (word == "OR") kind = Tok::KwOr;
            else if (word == "NOT") kind = Tok::KwNot;
            else if (word == "LIKE") kind = Tok::KwLike;
            else if (word == "Or") kind = Tok::KwPOr;
            else if (word == "OnlyOne") kind = Tok::KwPOnlyOne;
            else if (word == "AllOrNone") kind = Tok::KwPAllOrNone;
            else if (word == "ZeroOrOne") kind = Tok::KwPZeroOrOne;
            else if (word == "true") kind = Tok::True;
            else if (word == "false") kind = Tok::False;
            out.push_back({kind, word, loc});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                num += src[i];
                advance(src[i]);
            }
            if (i + 1 < src.size() && src[i] == '.' &&
                std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
                num += '.';
                advance('.');
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                    num += src[i];
                    advance(src[i]);
                }
            }
            out.push_back({Tok::Number, num, loc});
            continue;
        }
        switch (c) {
            case '\'': {
                advance(c);
                std::string text;
                bool closed = false;
                while (i < src.size()) {
                    char d = src[i];
                    if (d == '\'') {
                        advance(d);
                        closed = true;
                        break;
                    }
                    if (d == '\\' && i + 1 < src.size() &&
                        (src[i + 1] == '\'' || src[i + 1] == '\\')) {
                        advance(d);
                        text += src[i];
                        advance(src[i]);
                        continue;
                    }
                    if (d == '\n') fail(loc, "unterminated string literal");
                    text += d;
                    advance(d);
                }
                if (!closed) fail(loc, "unterminated string literal");
                out.push_back({Tok::String, text, loc});
                break;
            }
            case '[': {
                advance(c);
                std::string name;
                bool closed = false;
                while (i < src.size()) {
                    char d = src[i];
                    if (d == ']') {
                        advance(d);
                        closed = true;
                        break;
                    }
                    if (d == '\n') fail(loc, "unterminated bracketed name");
                    name += d;
                    advance(d);
                }
                if (!closed) fail(loc, "unterminated bracketed name");
                if (name.empty()) fail(loc, "empty bracketed name");
                out.push_back({Tok::BracketedId, name, loc});
                break;
            }
            case '(': advance(c); out.push_back({Tok::LParen, "(", loc}); break;
            case ')': advance(c); out.push_back({Tok::RParen, ")", loc}); break;
            case ',': advance(c); out.push_back({Tok::Comma, ",", loc}); break;
            case ';': advance(c); out.push_back({Tok::Semicolon, ";", loc}); break;
            case '|': advance(c); out.push_back({Tok::Pipe, "|", loc}); break;
            case '+': advance(c); out.push_back({Tok::Plus, "+", loc}); break;
            case '-': advance(c); out.push_back({Tok::Minus, "-", loc}); break;
            case '*': advance(c); out.push_back({Tok::Star, "*", loc}); break;
            case '/':
                if (i + 1 < src.size() && src[i + 1] == '/') {
                    while (i < src.size() && src[i] != '\n') advance(src[i]);
                } else {
                    advance(c);
                    out.push_back({Tok::Slash, "/", loc});
                }
                break;
            case '<':
                advance(c);
                if (i < src.size() && src[i] == '=') {
                    advance('=');
                    out.push_back({Tok::Le, "<=", loc});
                } else {
                    out.push_back({Tok::Lt, "<", loc});
                }
                break;
            case '>':
                advance(c);
                if (i < src.size() && src[i] == '=') {
                    advance('=');
                    out.push_back({Tok::Ge, ">=", loc});
                } else {
                    out.push_back({Tok::Gt, ">", loc});
                }
                break;
            case '=':
                advance(c);
                if (i < src.size() && src[i] == '=') {
                    advance('=');
                    out.push_back({Tok::EqEq, "==", loc});
                } else {
                    fail(loc, "expected '==' (single '=' is not an operator)");
                }
                break;
            case '!':
                advance(c);
                if (i < src.size() && src[i] == '=') {
                    advance('=');
                    out.push_back({Tok::Ne, "!=", loc});
                } else {
                    fail(loc, "expected '!=' (single '!' is not an operator)");
                }
                break;
            default:
                fail(loc, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({Tok::End, "", here()});
    return out;
}

} // namespace idlkit

#endif // IDLKIT_LEXER_HPP
