#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace kss {

/// Exact arbitrary-precision fraction kept in canonical form
/// (positive denominator, numerator and denominator coprime).
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT: implicit from integers
    Rational(int value) : value_(value) {}   // NOLINT
    Rational(long num, long den);
    Rational(const mpz_class& num, const mpz_class& den);

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed text
    /// and ZeroDenominator when q = 0.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    /// Always "p/q", also for integers ("3/1").
    std::string str() const;

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    Rational abs() const;

    /// Exact decimal text when the expansion terminates; empty string otherwise.
    std::string terminating_decimal() const;
    /// Decimal rounded half away from zero to `digits` fractional digits.
    std::string rounded_decimal(unsigned digits) const;

    const mpq_class& raw() const { return value_; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws ZeroDenominator on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    explicit Rational(mpq_class v);
    mpq_class value_{0};
};

/// Canonical num/den. Throws ZeroDenominator when den = 0.
Rational rat(long num, long den);

Rational pow(const Rational& base, unsigned exponent);

}  // namespace kss
