#include "kss/rational.hpp"

#include "kss/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace kss {

namespace {

mpz_class parse_integer(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("malformed integer: " + std::string(text));
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("malformed integer: " + std::string(text));
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(long num, long den) {
    if (den == 0) throw ZeroDenominator();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw ZeroDenominator();
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text), mpz_class(1));
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::string Rational::str() const { return value_.get_num().get_str() + "/" + value_.get_den().get_str(); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::terminating_decimal() const {
    mpz_class den = value_.get_den();
    unsigned twos = 0;
    unsigned fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) return {};
    return rounded_decimal(std::max(twos, fives));
}

std::string Rational::rounded_decimal(unsigned digits) const {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class num = ::abs(value_.get_num()) * scale;
    const mpz_class& den = value_.get_den();
    mpz_class q = num / den;
    const mpz_class rem = num % den;
    if (2 * rem >= den) q += 1;
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (sign() < 0 && q != 0) s.insert(0, "-");
    return s;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDenominator();
    value_ /= o.value_;
    return *this;
}

Rational rat(long num, long den) { return Rational(num, den); }

Rational pow(const Rational& base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) out *= base;
    return out;
}

}  // namespace kss
