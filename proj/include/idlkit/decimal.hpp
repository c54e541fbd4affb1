#ifndef IDLKIT_DECIMAL_HPP
#define IDLKIT_DECIMAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <string>

#include "idlkit/errors.hpp"

namespace idlkit {

/// Exact rational number. IDL numeric literals are terminating decimals, so
/// they round-trip through this type without loss; arithmetic over them
/// (including division) stays exact.
class Decimal {
public:
    using Rational = boost::multiprecision::cpp_rational;

    Decimal() : r_(0) {}
    explicit Decimal(Rational r) : r_(std::move(r)) {}
    Decimal(std::int64_t v) : r_(v) {} // NOLINT: implicit by design
    Decimal(int v) : r_(v) {}          // NOLINT: implicit by design

    /// Parse "[+-]?digits[.digits]" exactly.
    static Decimal parse(const std::string& text) {
        std::size_t i = 0;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        std::string int_part, frac_part;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            int_part += text[i++];
        if (i < text.size() && text[i] == '.') {
            ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                frac_part += text[i++];
        }
        if (i != text.size() || int_part.empty())
            throw EvalError("not a decimal literal: '" + text + "'");
        boost::multiprecision::cpp_int num(int_part.empty() ? "0" : int_part);
        boost::multiprecision::cpp_int den = 1;
        for (char c : frac_part) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        if (neg) num = -num;
        return Decimal(Rational(num, den));
    }

    bool is_integer() const { return boost::multiprecision::denominator(r_) == 1; }

    std::int64_t to_int64() const {
        if (!is_integer())
            throw EvalError("decimal " + str() + " is not an integer");
        return boost::multiprecision::numerator(r_).convert_to<std::int64_t>();
    }

    std::int64_t floor_int64() const {
        using boost::multiprecision::cpp_int;
        cpp_int num = boost::multiprecision::numerator(r_);
        cpp_int den = boost::multiprecision::denominator(r_);
        cpp_int q = num / den; // truncates toward zero
        if (num < 0 && q * den != num) --q;
        return q.convert_to<std::int64_t>();
    }

    std::int64_t ceil_int64() const {
        using boost::multiprecision::cpp_int;
        cpp_int num = boost::multiprecision::numerator(r_);
        cpp_int den = boost::multiprecision::denominator(r_);
        cpp_int q = num / den;
        if (num > 0 && q * den != num) ++q;
        return q.convert_to<std::int64_t>();
    }

    /// Canonical text form. Terminating decimals render as decimal text
    /// ("3", "-0.25"); anything else falls back to "num/den".
    std::string str() const {
        using boost::multiprecision::cpp_int;
        cpp_int num = boost::multiprecision::numerator(r_);
        cpp_int den = boost::multiprecision::denominator(r_);
        if (num == 0) return "0";
        int twos = 0, fives = 0;
        cpp_int d = den;
        while (d % 2 == 0) { d /= 2; ++twos; }
        while (d % 5 == 0) { d /= 5; ++fives; }
        if (d != 1) return num.str() + "/" + den.str();
        int k = twos > fives ? twos : fives;
        cpp_int scaled = num;
        for (int i = fives; i < k; ++i) scaled *= 5;
        for (int i = twos; i < k; ++i) scaled *= 2;
        bool neg = scaled < 0;
        std::string digits = (neg ? -scaled : scaled).str();
        if (k == 0) return (neg ? "-" : "") + digits;
        while (digits.size() <= static_cast<std::size_t>(k))
            digits.insert(digits.begin(), '0');
        digits.insert(digits.size() - static_cast<std::size_t>(k), ".");
        return (neg ? "-" : "") + digits;
    }

    const Rational& rational() const { return r_; }

    friend Decimal operator+(const Decimal& a, const Decimal& b) { return Decimal(a.r_ + b.r_); }
    friend Decimal operator-(const Decimal& a, const Decimal& b) { return Decimal(a.r_ - b.r_); }
    friend Decimal operator*(const Decimal& a, const Decimal& b) { return Decimal(a.r_ * b.r_); }
    friend Decimal operator/(const Decimal& a, const Decimal& b) {
        if (b.r_ == 0) throw EvalError("division by zero");
        return Decimal(a.r_ / b.r_);
    }
    friend Decimal operator-(const Decimal& a) { return Decimal(-a.r_); }

    friend bool operator==(const Decimal& a, const Decimal& b) { return a.r_ == b.r_; }
    friend std::strong_ordering operator<=>(const Decimal& a, const Decimal& b) {
        if (a.r_ < b.r_) return std::strong_ordering::less;
        if (a.r_ > b.r_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rational r_;
};

} // namespace idlkit

#endif // IDLKIT_DECIMAL_HPP
