#include "kss/pair_config.hpp"

#include <numeric>
#include <sstream>

namespace kss {

std::string_view to_string(ConfigErrorKind kind) {
    switch (kind) {
        case ConfigErrorKind::NonPositiveDegree: return "NonPositiveDegree";
        case ConfigErrorKind::DimensionTooSmall: return "DimensionTooSmall";
        case ConfigErrorKind::NotFano: return "NotFano";
        case ConfigErrorKind::EmptyBoundary: return "EmptyBoundary";
        case ConfigErrorKind::DegreeExceedsLevel: return "DegreeExceedsLevel";
    }
    return "Unknown";
}

PairConfig::PairConfig(int ambient_dim, std::vector<int> ci, std::vector<int> boundary, bool assume)
    : ambient_dim_(ambient_dim),
      ci_degrees_(std::move(ci)),
      boundary_degrees_(std::move(boundary)),
      assume_ci_kss_(assume) {
    level_ = ambient_dim_ + 1 - std::accumulate(ci_degrees_.begin(), ci_degrees_.end(), 0);
}

PairConfig PairConfig::validate(int ambient_dim, std::vector<int> ci_degrees, std::vector<int> boundary_degrees,
                                bool assume_ci_kss) {
    for (int e : ci_degrees)
        if (e < 1)
            throw ConfigError(ConfigErrorKind::NonPositiveDegree,
                              "complete-intersection degree " + std::to_string(e) + " < 1");
    for (int d : boundary_degrees)
        if (d < 1)
            throw ConfigError(ConfigErrorKind::NonPositiveDegree, "boundary degree " + std::to_string(d) + " < 1");

    PairConfig c(ambient_dim, std::move(ci_degrees), std::move(boundary_degrees), assume_ci_kss);
    if (c.dimension() < 2)
        throw ConfigError(ConfigErrorKind::DimensionTooSmall,
                          "dimension n = " + std::to_string(c.dimension()) + " < 2");
    if (c.level() < 1)
        throw ConfigError(ConfigErrorKind::NotFano, "anticanonical level L = " + std::to_string(c.level()) + " < 1");
    if (c.boundary_degrees_.empty()) throw ConfigError(ConfigErrorKind::EmptyBoundary, "no boundary divisors");
    for (std::size_t j = 0; j < c.k(); ++j)
        if (c.boundary_degrees_[j] > c.level())
            throw ConfigError(ConfigErrorKind::DegreeExceedsLevel,
                              "d_" + std::to_string(j + 1) + " = " + std::to_string(c.boundary_degrees_[j]) +
                                  " > L = " + std::to_string(c.level()));
    return c;
}

int PairConfig::degree(std::size_t j) const {
    if (j >= boundary_degrees_.size())
        throw IndexOutOfRange("boundary index " + std::to_string(j) + " out of range for k = " + std::to_string(k()));
    return boundary_degrees_[j];
}

int PairConfig::degree_sum() const { return std::accumulate(boundary_degrees_.begin(), boundary_degrees_.end(), 0); }

long PairConfig::ci_degree_product() const {
    long p = 1;
    for (int e : ci_degrees_) p *= e;
    return p;
}

PairConfig PairConfig::face_config(std::size_t j) const {
    degree(j);
    if (k() < 2) throw ConfigError(ConfigErrorKind::EmptyBoundary, "cannot drop the only boundary divisor");
    std::vector<int> boundary = boundary_degrees_;
    boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(j));
    return PairConfig(ambient_dim_, ci_degrees_, std::move(boundary), assume_ci_kss_);
}

std::optional<PairConfig> PairConfig::absorb_boundary(std::size_t j) const {
    const int d = degree(j);
    if (k() < 2) return std::nullopt;
    if (level_ - d <= 0)
        throw ConfigError(ConfigErrorKind::NotFano,
                          "absorbing d_" + std::to_string(j + 1) + " leaves level " + std::to_string(level_ - d));
    if (dimension() - 1 < 1)
        throw ConfigError(ConfigErrorKind::DimensionTooSmall, "absorption would drop below dimension 1");
    std::vector<int> ci = ci_degrees_;
    ci.push_back(d);
    std::vector<int> boundary = boundary_degrees_;
    boundary.erase(boundary.begin() + static_cast<std::ptrdiff_t>(j));
    return PairConfig(ambient_dim_, std::move(ci), std::move(boundary), assume_ci_kss_);
}

PairConfig PairConfig::permuted(const std::vector<std::size_t>& perm) const {
    if (perm.size() != k()) throw DimensionMismatch("permutation length does not match k");
    std::vector<int> boundary;
    boundary.reserve(k());
    for (std::size_t i : perm) boundary.push_back(degree(i));
    return PairConfig(ambient_dim_, ci_degrees_, std::move(boundary), assume_ci_kss_);
}

std::string PairConfig::describe() const {
    std::ostringstream os;
    os << "P^" << ambient_dim_;
    if (!ci_degrees_.empty()) {
        os << " cut by [";
        for (std::size_t i = 0; i < ci_degrees_.size(); ++i) os << (i ? "," : "") << ci_degrees_[i];
        os << "]";
    }
    os << "; boundary [";
    for (std::size_t i = 0; i < boundary_degrees_.size(); ++i) os << (i ? "," : "") << boundary_degrees_[i];
    os << "]; n=" << dimension() << ", L=" << level_;
    return os.str();
}

}  // namespace kss
