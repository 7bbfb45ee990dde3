#include "kss/polytope.hpp"

#include <algorithm>
#include <thread>

namespace kss {

std::vector<RatVector> VertexSet::points() const {
    std::vector<RatVector> out;
    out.reserve(vertices.size());
    for (const auto& v : vertices) out.push_back(v.point);
    return out;
}

HalfspaceSystem build_halfspace_system(const PairConfig& config) {
    const std::size_t k = config.k();
    HalfspaceSystem system{config, {}};
    system.forms.reserve(3 * k + 1);

    for (std::size_t i = 0; i < k; ++i) {
        AffineForm f{Rational(0), RatVector(k), ConstraintLabel::axis_lower(i + 1)};
        f.coeffs[i] = 1;
        system.forms.push_back(std::move(f));
    }
    for (std::size_t i = 0; i < k; ++i) {
        AffineForm f{Rational(1), RatVector(k), ConstraintLabel::axis_upper(i + 1)};
        f.coeffs[i] = -1;
        system.forms.push_back(std::move(f));
    }
    AffineForm cy{Rational(config.level()), RatVector(k), ConstraintLabel::calabi_yau()};
    for (std::size_t j = 0; j < k; ++j) cy.coeffs[j] = -config.degree(j);
    system.forms.push_back(std::move(cy));
    for (std::size_t i = 0; i < k; ++i) system.forms.push_back(beta_affine_form(config, i));
    return system;
}

bool contains(const HalfspaceSystem& system, std::span<const Rational> x) {
    if (x.size() != system.config.k()) throw DimensionMismatch("point dimension does not match system");
    return std::all_of(system.forms.begin(), system.forms.end(),
                       [&](const AffineForm& f) { return f.evaluate(x).sign() >= 0; });
}

std::vector<ConstraintLabel> active_constraints(const HalfspaceSystem& system, std::span<const Rational> x) {
    std::vector<ConstraintLabel> active;
    for (const auto& f : system.forms)
        if (f.evaluate(x).is_zero()) active.push_back(f.label);
    std::sort(active.begin(), active.end());
    return active;
}

std::size_t active_rank(const HalfspaceSystem& system, const std::vector<ConstraintLabel>& labels) {
    std::vector<RatVector> rows;
    for (const auto& f : system.forms)
        if (std::find(labels.begin(), labels.end(), f.label) != labels.end()) rows.push_back(f.coeffs);
    if (rows.empty()) return 0;
    return rank(RatMatrix(std::move(rows)));
}

VertexSet make_vertex_set(const HalfspaceSystem& system, std::vector<RatVector> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    VertexSet set;
    set.vertices.reserve(points.size());
    for (auto& p : points) {
        auto active = active_constraints(system, p);
        set.vertices.push_back({std::move(p), std::move(active)});
    }
    return set;
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<RatVector> solve_subsets(const HalfspaceSystem& system,
                                     const std::vector<std::vector<std::size_t>>& subsets, std::size_t begin,
                                     std::size_t stride) {
    const std::size_t k = system.config.k();
    std::vector<RatVector> found;
    auto in_box = [](const RatVector& x) {
        return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() >= 0 && v <= Rational(1); });
    };
    for (std::size_t s = begin; s < subsets.size(); s += stride) {
        // x_i >= 0 and x_i <= 1 together are parallel, never a vertex
        bool parallel = false;
        for (std::size_t r = 0; r + 1 < k && !parallel; ++r)
            for (std::size_t q = r + 1; q < k && !parallel; ++q) parallel = subsets[s][q] == subsets[s][r] + k;
        if (parallel) continue;
        RatMatrix a(k, k);
        RatVector b(k);
        for (std::size_t r = 0; r < k; ++r) {
            const AffineForm& f = system.forms[subsets[s][r]];
            for (std::size_t c = 0; c < k; ++c) a(r, c) = f.coeffs[c];
            b[r] = -f.constant;
        }
        auto x = solve_square_system(a, b);
        if (x && in_box(*x) && contains(system, *x)) found.push_back(std::move(*x));
    }
    return found;
}

}  // namespace

VertexSet enumerate_vertices(const HalfspaceSystem& system, unsigned threads) {
    const auto subsets = combinations(system.forms.size(), system.config.k());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, subsets.size()));

    std::vector<RatVector> points;
    if (workers == 1) {
        points = solve_subsets(system, subsets, 0, 1);
    } else {
        std::vector<std::vector<RatVector>> partial(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&, w] { partial[w] = solve_subsets(system, subsets, w, workers); });
        for (auto& t : pool) t.join();
        for (auto& p : partial) std::move(p.begin(), p.end(), std::back_inserter(points));
    }
    return make_vertex_set(system, std::move(points));
}

bool vertex_sets_equal(const VertexSet& a, const VertexSet& b) {
    auto dim = [](const VertexSet& s) { return s.vertices.empty() ? std::size_t{0} : s.vertices.front().point.size(); };
    if (!a.vertices.empty() && !b.vertices.empty() && dim(a) != dim(b))
        throw DimensionMismatch("vertex sets live in different dimensions");
    auto pa = a.points();
    auto pb = b.points();
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    pa.erase(std::unique(pa.begin(), pa.end()), pa.end());
    pb.erase(std::unique(pb.begin(), pb.end()), pb.end());
    return pa == pb;
}

}  // namespace kss
