#include "kss/certifier.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace kss {

namespace {

std::string render_point(std::span<const Rational> x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].str();
    return s + ")";
}

constexpr const char* kConeJustification =
    "degenerate along the absorbed divisor to the projective cone over it with polarization O(d); "
    "the cone pair with this boundary coefficient is K-semistable iff the base pair is";
constexpr const char* kLogCanonicalAssumption =
    "general members: the log Calabi-Yau pair is log canonical, hence K-semistable";
constexpr const char* kCompleteIntersectionAssumption = "all Fano complete intersections are K-semistable";

}  // namespace

IdentityFailure::IdentityFailure(std::string identity, RatVector vertex)
    : KssError("identity failed at " + render_point(vertex) + ": " + identity),
      identity_(std::move(identity)),
      vertex_(std::move(vertex)) {}

std::string_view to_string(VertexClass::Kind kind) {
    switch (kind) {
        case VertexClass::Kind::Origin: return "Origin";
        case VertexClass::Kind::FaceEmbedded: return "FaceEmbedded";
        case VertexClass::Kind::LogCalabiYau: return "LogCalabiYau";
        case VertexClass::Kind::InteriorBetaZero: return "InteriorBetaZero";
        case VertexClass::Kind::IntervalEndpoint: return "IntervalEndpoint";
    }
    return "?";
}

std::string_view to_string(Check::Relation r) {
    switch (r) {
        case Check::Relation::Equal: return "=";
        case Check::Relation::LessEqual: return "<=";
        case Check::Relation::Less: return "<";
    }
    return "?";
}

bool Check::holds() const {
    switch (relation) {
        case Relation::Equal: return lhs == rhs;
        case Relation::LessEqual: return lhs <= rhs;
        case Relation::Less: return lhs < rhs;
    }
    return false;
}

ConfigSnapshot ConfigSnapshot::of(const PairConfig& c) {
    return {c.ambient_dim(), c.ci_degrees(), c.boundary_degrees(), c.dimension(), c.level()};
}

std::string_view node_name(const CertificateNode& node) {
    struct Visitor {
        std::string_view operator()(const LogCYNode&) const { return "LogCY"; }
        std::string_view operator()(const InterpolationNode&) const { return "Interpolation"; }
        std::string_view operator()(const ConeStepNode&) const { return "ConeStep"; }
        std::string_view operator()(const FaceReductionNode&) const { return "FaceReduction"; }
        std::string_view operator()(const AssumptionNode&) const { return "Assumption"; }
    };
    return std::visit(Visitor{}, node);
}

VertexClass classify_vertex(const PairConfig& config, std::span<const Rational> x) {
    const HalfspaceSystem system = build_halfspace_system(config);
    if (!contains(system, x)) throw NotAVertex(render_point(x) + " is outside the polytope");
    if (active_rank(system, active_constraints(system, x)) != config.k())
        throw NotAVertex(render_point(x) + " is not an extremal point");

    const std::size_t k = config.k();
    std::vector<std::size_t> zeros;
    for (std::size_t j = 0; j < k; ++j)
        if (x[j].is_zero()) zeros.push_back(j + 1);
    if (zeros.size() == k) return {VertexClass::Kind::Origin, {}};

    Rational weighted;
    for (std::size_t j = 0; j < k; ++j) weighted += Rational(config.degree(j)) * x[j];
    if (weighted == Rational(config.level())) return {VertexClass::Kind::LogCalabiYau, {}};

    bool all_beta_zero = true;
    for (std::size_t i = 0; i < k && all_beta_zero; ++i) all_beta_zero = beta_affine_form(config, i).evaluate(x).is_zero();
    if (all_beta_zero && zeros.empty()) return {VertexClass::Kind::InteriorBetaZero, {}};

    if (!zeros.empty()) return {VertexClass::Kind::FaceEmbedded, std::move(zeros)};
    return {VertexClass::Kind::IntervalEndpoint, {}};
}

bool Certificate::recompute_verified() const {
    if (!std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds(); })) return false;
    const bool leaf_kind_ok = std::holds_alternative<LogCYNode>(node) || std::holds_alternative<InterpolationNode>(node) ||
                              std::holds_alternative<AssumptionNode>(node);
    if (children.empty()) return leaf_kind_ok;
    return std::all_of(children.begin(), children.end(), [](const Certificate& c) { return c.recompute_verified(); });
}

std::size_t Certificate::depth() const {
    std::size_t below = 0;
    for (const auto& c : children) below = std::max(below, c.depth());
    return below + (std::holds_alternative<AssumptionNode>(node) ? 0 : 1);
}

namespace {

struct Certifier {
    const CertifyOptions& options;

    Certificate leaf(const PairConfig& config, std::span<const Rational> x, const std::vector<std::size_t>& coords,
                     CertificateNode node) const {
        Certificate c;
        c.vertex.assign(x.begin(), x.end());
        c.coordinates = coords;
        c.config = ConfigSnapshot::of(config);
        c.node = std::move(node);
        return c;
    }

    Certificate assumption(const PairConfig& config, std::span<const Rational> x,
                           const std::vector<std::size_t>& coords, std::string text) const {
        Certificate c = leaf(config, x, coords, AssumptionNode{std::move(text)});
        c.verified = true;
        return c;
    }

    static void finish(Certificate& c) {
        for (const auto& check : c.checks)
            if (!check.holds())
                throw IdentityFailure(check.identity + " [" + check.lhs.str() + " " +
                                          std::string(to_string(check.relation)) + " " + check.rhs.str() + "]",
                                      c.vertex);
        c.verified = c.recompute_verified();
    }

    Certificate interpolation(const PairConfig& config, std::span<const Rational> x,
                              const std::vector<std::size_t>& coords, const Rational& value,
                              const Rational& endpoint) const {
        Certificate c = leaf(config, x, coords, InterpolationNode{value, endpoint});
        c.checks.push_back({"coefficient <= K-semistable interval endpoint", value, endpoint, Check::Relation::LessEqual});
        return c;
    }

    std::size_t pick_absorbed(const std::vector<std::size_t>& coords) const {
        for (std::size_t original : options.absorb_order) {
            auto it = std::find(coords.begin(), coords.end(), original + 1);
            if (it != coords.end()) return static_cast<std::size_t>(it - coords.begin());
        }
        return 0;
    }

    Certificate certify(const PairConfig& config, std::span<const Rational> x,
                        const std::vector<std::size_t>& coords) const {
        const VertexClass cls = classify_vertex(config, x);
        const std::size_t k = config.k();
        const int n = config.dimension();
        Certificate c;
        auto kind = cls.kind;
        if (kind == VertexClass::Kind::LogCalabiYau &&
            std::any_of(x.begin(), x.end(), [](const Rational& v) { return v.is_zero(); }))
            kind = VertexClass::Kind::FaceEmbedded;  // reduce to the face first, log CY there

        switch (kind) {
            case VertexClass::Kind::Origin: {
                Rational endpoint;
                for (std::size_t j = 0; j < k; ++j) {
                    const Rational e((n + 1) * config.degree(j) - config.level(), n * config.degree(j));
                    if (j == 0 || e < endpoint) endpoint = e;
                }
                c = interpolation(config, x, coords, Rational(0), endpoint);
                c.checks.front().identity = "0 <= smallest axis interval endpoint";
                break;
            }
            case VertexClass::Kind::LogCalabiYau: {
                c = leaf(config, x, coords, LogCYNode{});
                Rational weighted;
                for (std::size_t j = 0; j < k; ++j) {
                    const std::string name = "x_" + std::to_string(coords[j]);
                    c.checks.push_back({"0 <= " + name, Rational(0), x[j], Check::Relation::LessEqual});
                    c.checks.push_back({name + " <= 1", x[j], Rational(1), Check::Relation::LessEqual});
                    weighted += Rational(config.degree(j)) * x[j];
                }
                c.checks.push_back({"sum d_j x_j = L", weighted, Rational(config.level()), Check::Relation::Equal});
                c.children.push_back(assumption(config, x, coords, kLogCanonicalAssumption));
                break;
            }
            case VertexClass::Kind::InteriorBetaZero:
            case VertexClass::Kind::IntervalEndpoint: {
                if (k == 1) {
                    c = interpolation(config, x, coords, x[0], kss_interval_k1(config));
                    break;
                }
                if (kind == VertexClass::Kind::IntervalEndpoint)
                    throw NotAVertex(render_point(x) + " has no reduction for k = " + std::to_string(k));
                const std::size_t j = pick_absorbed(coords);
                const int dj = config.degree(j);
                Rational rest;
                for (std::size_t i = 0; i < k; ++i)
                    if (i != j) rest += Rational(config.degree(i)) * x[i];
                const Rational r = (Rational(config.level() - dj) - rest) / Rational(dj);

                c = leaf(config, x, coords, ConeStepNode{coords[j], r, kConeJustification});
                const std::string name = "x_" + std::to_string(coords[j]);
                c.checks.push_back({"0 < r", Rational(0), r, Check::Relation::Less});
                c.checks.push_back({name + " = 1 - r/n", x[j], Rational(1) - r / Rational(n), Check::Relation::Equal});

                const PairConfig child = *config.absorb_boundary(j);
                RatVector sub;
                std::vector<std::size_t> sub_coords;
                for (std::size_t i = 0; i < k; ++i) {
                    if (i == j) continue;
                    sub.push_back(x[i]);
                    sub_coords.push_back(coords[i]);
                }
                c.children.push_back(certify(child, sub, sub_coords));
                break;
            }
            case VertexClass::Kind::FaceEmbedded: {
                PairConfig face = config;
                RatVector sub;
                std::vector<std::size_t> sub_coords;
                std::vector<std::size_t> dropped;
                for (std::size_t i = k; i-- > 0;) {
                    if (x[i].is_zero()) {
                        face = face.face_config(i);
                        dropped.insert(dropped.begin(), coords[i]);
                    }
                }
                for (std::size_t i = 0; i < k; ++i) {
                    if (x[i].is_zero()) continue;
                    sub.push_back(x[i]);
                    sub_coords.push_back(coords[i]);
                }
                c = leaf(config, x, coords, FaceReductionNode{dropped});
                c.children.push_back(certify(face, sub, sub_coords));
                break;
            }
        }
        finish(c);
        return c;
    }
};

}  // namespace

Certificate certify_vertex(const PairConfig& config, std::span<const Rational> x, const CertifyOptions& options) {
    if (x.size() != config.k()) throw DimensionMismatch("vertex dimension does not match k");
    std::vector<std::size_t> coords(config.k());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i + 1;
    Certificate root = Certifier{options}.certify(config, x, coords);
    if (config.assume_ci_kss())
        root.children.push_back(Certifier{options}.assumption(config, x, coords, kCompleteIntersectionAssumption));
    root.verified = root.recompute_verified();
    return root;
}

CertificationReport certify_domain(const PairConfig& config, unsigned threads) {
    const VertexSet vertices = enumerate_vertices(build_halfspace_system(config), threads);
    CertificationReport report;
    report.vertex_count = vertices.size();
    report.assume_ci_kss = config.assume_ci_kss();
    report.certificates.resize(vertices.size());

    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, vertices.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            report.certificates[i] = certify_vertex(config, vertices.vertices[i].point);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < vertices.size(); i += workers)
                        report.certificates[i] = certify_vertex(config, vertices.vertices[i].point);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    report.all_verified = std::all_of(report.certificates.begin(), report.certificates.end(),
                                      [](const Certificate& c) { return c.verified; });
    return report;
}

}  // namespace kss
