#pragma once

#include "kss/errors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kss {

enum class ConfigErrorKind {
    NonPositiveDegree,
    DimensionTooSmall,
    NotFano,
    EmptyBoundary,
    DegreeExceedsLevel,
};

std::string_view to_string(ConfigErrorKind kind);

class ConfigError : public KssError {
public:
    ConfigError(ConfigErrorKind kind, const std::string& detail)
        : KssError(std::string(to_string(kind)) + ": " + detail), kind_(kind), detail_(detail) {}

    ConfigErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ConfigErrorKind kind_;
    std::string detail_;
};

/// The log pair (X, sum x_j D_j): X is a general complete intersection of
/// hypersurfaces of degrees ci_degrees in P^N and D_j is the restriction of a
/// general hypersurface of degree boundary_degrees[j].
///
/// dimension() = N - m and level() = N + 1 - sum(e_i), so that -K_X = O(level)|_X.
class PairConfig {
public:
    /// Top-level validation: n >= 2, level >= 1, 1 <= d_j <= level, k >= 1.
    /// Throws ConfigError with the first violated invariant.
    static PairConfig validate(int ambient_dim, std::vector<int> ci_degrees, std::vector<int> boundary_degrees,
                               bool assume_ci_kss = true);

    int ambient_dim() const { return ambient_dim_; }
    const std::vector<int>& ci_degrees() const { return ci_degrees_; }
    const std::vector<int>& boundary_degrees() const { return boundary_degrees_; }
    bool assume_ci_kss() const { return assume_ci_kss_; }

    int dimension() const { return ambient_dim_ - static_cast<int>(ci_degrees_.size()); }
    int level() const { return level_; }
    std::size_t k() const { return boundary_degrees_.size(); }
    int degree(std::size_t j) const;
    int degree_sum() const;
    /// Product of the complete-intersection degrees (1 for X = P^N).
    long ci_degree_product() const;

    /// Boundary with index j (0-based) removed; the face x_j = 0.
    PairConfig face_config(std::size_t j) const;

    /// Moves boundary j into the complete intersection: n and k drop by one,
    /// level drops by d_j. Returns nullopt as the terminal marker when k = 1.
    /// Throws ConfigError(NotFano) when level - d_j <= 0 and
    /// ConfigError(DimensionTooSmall) when the result would have dimension < 1.
    std::optional<PairConfig> absorb_boundary(std::size_t j) const;

    /// Same pair with boundary_degrees reordered: result[i] = d[perm[i]].
    PairConfig permuted(const std::vector<std::size_t>& perm) const;

    std::string describe() const;

    friend bool operator==(const PairConfig&, const PairConfig&) = default;

private:
    PairConfig(int ambient_dim, std::vector<int> ci, std::vector<int> boundary, bool assume);

    int ambient_dim_ = 0;
    std::vector<int> ci_degrees_;
    std::vector<int> boundary_degrees_;
    bool assume_ci_kss_ = true;
    int level_ = 0;
};

}  // namespace kss
