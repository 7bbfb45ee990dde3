#pragma once

#include "kss/linalg.hpp"
#include "kss/pair_config.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

namespace kss {

/// Which inequality of the domain a form encodes. `index` is 1-based and
/// ignored for CalabiYau.
struct ConstraintLabel {
    enum class Kind { AxisLower, AxisUpper, CalabiYau, Beta };

    Kind kind = Kind::AxisLower;
    std::size_t index = 0;

    static ConstraintLabel axis_lower(std::size_t i) { return {Kind::AxisLower, i}; }
    static ConstraintLabel axis_upper(std::size_t i) { return {Kind::AxisUpper, i}; }
    static ConstraintLabel calabi_yau() { return {Kind::CalabiYau, 0}; }
    static ConstraintLabel beta(std::size_t i) { return {Kind::Beta, i}; }

    /// "AxisLower(1)", "AxisUpper(2)", "CalabiYau", "Beta(3)".
    std::string str() const;
    /// Inverse of str(). Throws std::invalid_argument.
    static ConstraintLabel parse(std::string_view text);

    friend auto operator<=>(const ConstraintLabel&, const ConstraintLabel&) = default;
};

/// The predicate constant + sum coeffs_j * x_j >= 0.
struct AffineForm {
    Rational constant;
    RatVector coeffs;
    ConstraintLabel label;

    /// Throws DimensionMismatch.
    Rational evaluate(std::span<const Rational> x) const;

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

/// A = 1 - x_i for the divisor D_i (i is 0-based).
Rational log_discrepancy(const PairConfig& config, std::span<const Rational> x, std::size_t i);

/// S = (L - sum d_j x_j) / (d_i (n + 1)). Throws NotLogFano outside the log Fano region.
Rational s_invariant(const PairConfig& config, std::span<const Rational> x, std::size_t i);

/// (prod e) * (L - sum d_j x_j - d_i t)^n on [0, threshold], zero beyond it.
Rational volume_profile(const PairConfig& config, std::span<const Rational> x, std::size_t i, const Rational& t);

/// beta = A - S.
Rational beta(const PairConfig& config, std::span<const Rational> x, std::size_t i);

/// beta_i written as an affine functional of x, labelled Beta(i + 1).
AffineForm beta_affine_form(const PairConfig& config, std::size_t i);

}  // namespace kss
