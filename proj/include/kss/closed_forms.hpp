#pragma once

#include "kss/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kss {

class UnsupportedK : public KssError {
public:
    using KssError::KssError;
};

/// Subcritical when sum d_j < L, Critical otherwise.
enum class Branch { Subcritical, Critical };

std::string_view to_string(Branch b);
Branch parse_branch(std::string_view text);
Branch branch_of(const PairConfig& config);

struct ClosedFormResult {
    VertexSet vertices;
    Branch branch = Branch::Subcritical;
    /// provenance[i] names every formula that produced vertices.vertices[i].
    std::vector<std::vector<std::string>> provenance;

    friend bool operator==(const ClosedFormResult&, const ClosedFormResult&) = default;
};

/// Right endpoint ((n+1)d - L) / (n d) of the K-semistable interval when k = 1.
/// Throws DimensionMismatch for k != 1.
Rational kss_interval_k1(const PairConfig& config);

/// The common zero of all beta forms,
///   a_j = (sum_{i != j} d_i + (n-k+2) d_j - L) / ((n-k+1) d_j),
/// present only when sum d_j < L and k <= n.
std::optional<RatVector> interior_vertex(const PairConfig& config);

/// Explicit extremal points for k in {1, 2, 3}, both branches, deduplicated.
/// Throws UnsupportedK for k > 3.
ClosedFormResult closed_form_vertices(const PairConfig& config);

}  // namespace kss
