#pragma once

#include "kss/beta.hpp"

#include <vector>

namespace kss {

/// H-representation of the candidate domain: forms are ordered
/// AxisLower(1..k), AxisUpper(1..k), CalabiYau, Beta(1..k).
struct HalfspaceSystem {
    PairConfig config;
    std::vector<AffineForm> forms;

    friend bool operator==(const HalfspaceSystem&, const HalfspaceSystem&) = default;
};

struct Vertex {
    RatVector point;
    std::vector<ConstraintLabel> active;  // sorted, every form vanishing at point

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Vertices sorted lexicographically by point, without duplicates.
struct VertexSet {
    std::vector<Vertex> vertices;

    std::size_t size() const { return vertices.size(); }
    std::vector<RatVector> points() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

HalfspaceSystem build_halfspace_system(const PairConfig& config);

/// Solves every k-subset of forms with a nonsingular linear part and keeps the
/// feasible solutions. The result does not depend on `threads`.
VertexSet enumerate_vertices(const HalfspaceSystem& system, unsigned threads = 1);

/// Every form is >= 0 at x. Throws DimensionMismatch.
bool contains(const HalfspaceSystem& system, std::span<const Rational> x);

/// Labels of the forms vanishing at x, sorted.
std::vector<ConstraintLabel> active_constraints(const HalfspaceSystem& system, std::span<const Rational> x);

/// Sorted, deduplicated vertex set built from raw points (active sets filled from system).
VertexSet make_vertex_set(const HalfspaceSystem& system, std::vector<RatVector> points);

/// Exact equality of the point sets; active labels are ignored.
/// Throws DimensionMismatch when the two sets live in different dimensions.
bool vertex_sets_equal(const VertexSet& a, const VertexSet& b);

/// Rank of the linear parts of the forms with the given labels.
std::size_t active_rank(const HalfspaceSystem& system, const std::vector<ConstraintLabel>& labels);

}  // namespace kss
