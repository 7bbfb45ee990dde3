#include "kss/beta.hpp"

#include <stdexcept>

namespace kss {

std::string ConstraintLabel::str() const {
    switch (kind) {
        case Kind::AxisLower: return "AxisLower(" + std::to_string(index) + ")";
        case Kind::AxisUpper: return "AxisUpper(" + std::to_string(index) + ")";
        case Kind::CalabiYau: return "CalabiYau";
        case Kind::Beta: return "Beta(" + std::to_string(index) + ")";
    }
    return "?";
}

ConstraintLabel ConstraintLabel::parse(std::string_view text) {
    if (text == "CalabiYau") return calabi_yau();
    const auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw std::invalid_argument("malformed constraint label: " + std::string(text));
    const std::string_view name = text.substr(0, open);
    const std::string digits(text.substr(open + 1, text.size() - open - 2));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed constraint label: " + std::string(text));
    const std::size_t i = std::stoul(digits);
    if (i == 0) throw std::invalid_argument("constraint label index must be >= 1: " + std::string(text));
    if (name == "AxisLower") return axis_lower(i);
    if (name == "AxisUpper") return axis_upper(i);
    if (name == "Beta") return beta(i);
    throw std::invalid_argument("unknown constraint label: " + std::string(text));
}

Rational AffineForm::evaluate(std::span<const Rational> x) const { return constant + dot(coeffs, x); }

namespace {

void check_point(const PairConfig& config, std::span<const Rational> x, std::size_t i) {
    if (x.size() != config.k())
        throw DimensionMismatch("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(config.k()));
    config.degree(i);
}

// L - sum d_j x_j
Rational anticanonical_slack(const PairConfig& config, std::span<const Rational> x) {
    Rational slack = config.level();
    for (std::size_t j = 0; j < config.k(); ++j) slack -= Rational(config.degree(j)) * x[j];
    return slack;
}

}  // namespace

Rational log_discrepancy(const PairConfig& config, std::span<const Rational> x, std::size_t i) {
    check_point(config, x, i);
    return Rational(1) - x[i];
}

Rational s_invariant(const PairConfig& config, std::span<const Rational> x, std::size_t i) {
    check_point(config, x, i);
    const Rational slack = anticanonical_slack(config, x);
    if (slack.sign() <= 0) throw NotLogFano("L - sum d_j x_j = " + slack.str() + " is not positive");
    return slack / Rational(config.degree(i) * (config.dimension() + 1));
}

Rational volume_profile(const PairConfig& config, std::span<const Rational> x, std::size_t i, const Rational& t) {
    check_point(config, x, i);
    if (t.sign() < 0) throw std::invalid_argument("volume_profile needs t >= 0");
    const Rational base = anticanonical_slack(config, x) - Rational(config.degree(i)) * t;
    if (base.sign() <= 0) return Rational(0);
    return Rational(config.ci_degree_product()) * pow(base, static_cast<unsigned>(config.dimension()));
}

Rational beta(const PairConfig& config, std::span<const Rational> x, std::size_t i) {
    return log_discrepancy(config, x, i) - s_invariant(config, x, i);
}

AffineForm beta_affine_form(const PairConfig& config, std::size_t i) {
    const int di = config.degree(i);
    const int n = config.dimension();
    const Rational denom(di * (n + 1));
    AffineForm form;
    form.constant = Rational(di * (n + 1) - config.level()) / denom;
    form.coeffs.reserve(config.k());
    for (std::size_t j = 0; j < config.k(); ++j)
        form.coeffs.push_back(j == i ? Rational(-n, n + 1) : Rational(config.degree(j)) / denom);
    form.label = ConstraintLabel::beta(i + 1);
    return form;
}

}  // namespace kss
