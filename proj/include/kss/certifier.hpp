#pragma once

#include "kss/closed_forms.hpp"

#include <string>
#include <variant>
#include <vector>

namespace kss {

class NotAVertex : public KssError {
public:
    using KssError::KssError;
};

/// An arithmetic identity a certificate relies on failed. Never expected for
/// configurations the closed forms cover; signals a transcription bug.
class IdentityFailure : public KssError {
public:
    IdentityFailure(std::string identity, RatVector vertex);

    const std::string& identity() const { return identity_; }
    const RatVector& vertex() const { return vertex_; }

private:
    std::string identity_;
    RatVector vertex_;
};

struct VertexClass {
    enum class Kind { Origin, FaceEmbedded, LogCalabiYau, InteriorBetaZero, IntervalEndpoint };

    Kind kind = Kind::Origin;
    std::vector<std::size_t> zero_indices;  // 1-based, FaceEmbedded only

    friend bool operator==(const VertexClass&, const VertexClass&) = default;
};

std::string_view to_string(VertexClass::Kind kind);

/// Precedence: Origin, LogCalabiYau, InteriorBetaZero, FaceEmbedded, IntervalEndpoint.
/// Throws NotAVertex when x is outside the polytope or its active set has rank < k.
VertexClass classify_vertex(const PairConfig& config, std::span<const Rational> x);

/// One exact relation lhs (=, <=, <) rhs.
struct Check {
    enum class Relation { Equal, LessEqual, Less };

    std::string identity;
    Rational lhs;
    Rational rhs;
    Relation relation = Relation::Equal;

    bool holds() const;

    friend bool operator==(const Check&, const Check&) = default;
};

std::string_view to_string(Check::Relation r);

/// The configuration a certificate node speaks about. Nodes inside a cone
/// recursion may have dimension 1, which top-level validation refuses.
struct ConfigSnapshot {
    int ambient_dim = 0;
    std::vector<int> ci_degrees;
    std::vector<int> boundary_degrees;
    int dimension = 0;
    int level = 0;

    static ConfigSnapshot of(const PairConfig& c);

    friend bool operator==(const ConfigSnapshot&, const ConfigSnapshot&) = default;
};

struct LogCYNode {
    friend bool operator==(const LogCYNode&, const LogCYNode&) = default;
};

struct InterpolationNode {
    Rational value;
    Rational endpoint;

    friend bool operator==(const InterpolationNode&, const InterpolationNode&) = default;
};

struct ConeStepNode {
    std::size_t absorbed = 0;  // original 1-based boundary index
    Rational r;
    std::string justification;

    friend bool operator==(const ConeStepNode&, const ConeStepNode&) = default;
};

struct FaceReductionNode {
    std::vector<std::size_t> dropped;  // original 1-based boundary indices

    friend bool operator==(const FaceReductionNode&, const FaceReductionNode&) = default;
};

struct AssumptionNode {
    std::string text;

    friend bool operator==(const AssumptionNode&, const AssumptionNode&) = default;
};

using CertificateNode = std::variant<LogCYNode, InterpolationNode, ConeStepNode, FaceReductionNode, AssumptionNode>;

std::string_view node_name(const CertificateNode& node);

struct Certificate {
    RatVector vertex;
    std::vector<std::size_t> coordinates;  // original 1-based index of each entry of vertex
    ConfigSnapshot config;
    CertificateNode node;
    std::vector<Check> checks;
    std::vector<Certificate> children;
    bool verified = false;

    /// Recomputes the verification status from checks, children and leaf kinds.
    bool recompute_verified() const;
    /// Number of non-Assumption nodes on the longest root-to-leaf path.
    std::size_t depth() const;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertifyOptions {
    /// Preference order (0-based original indices) for choosing which boundary
    /// divisor a cone step absorbs. Empty means lowest available index first.
    std::vector<std::size_t> absorb_order;
};

/// Throws NotAVertex or IdentityFailure.
Certificate certify_vertex(const PairConfig& config, std::span<const Rational> x, const CertifyOptions& options = {});

struct CertificationReport {
    std::size_t vertex_count = 0;
    bool all_verified = false;
    bool assume_ci_kss = true;
    std::vector<Certificate> certificates;

    friend bool operator==(const CertificationReport&, const CertificationReport&) = default;
};

/// Enumerates the vertices and certifies each. Throws IdentityFailure.
CertificationReport certify_domain(const PairConfig& config, unsigned threads = 1);

}  // namespace kss
