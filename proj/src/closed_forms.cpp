#include "kss/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace kss {

std::string_view to_string(Branch b) { return b == Branch::Subcritical ? "subcritical" : "critical"; }

Branch parse_branch(std::string_view text) {
    if (text == "subcritical") return Branch::Subcritical;
    if (text == "critical") return Branch::Critical;
    throw std::invalid_argument("unknown branch: " + std::string(text));
}

Branch branch_of(const PairConfig& config) {
    return config.degree_sum() < config.level() ? Branch::Subcritical : Branch::Critical;
}

Rational kss_interval_k1(const PairConfig& config) {
    if (config.k() != 1) throw DimensionMismatch("kss_interval_k1 needs exactly one boundary divisor");
    const int n = config.dimension();
    const int d = config.degree(0);
    return Rational((n + 1) * d - config.level(), n * d);
}

std::optional<RatVector> interior_vertex(const PairConfig& config) {
    const int n = config.dimension();
    const int k = static_cast<int>(config.k());
    const int sum = config.degree_sum();
    if (sum >= config.level() || k > n) return std::nullopt;
    RatVector a;
    a.reserve(config.k());
    for (std::size_t j = 0; j < config.k(); ++j) {
        const int dj = config.degree(j);
        a.push_back(Rational(sum - dj + (n - k + 2) * dj - config.level(), (n - k + 1) * dj));
    }
    return a;
}

namespace {

struct Builder {
    const PairConfig& config;
    int n;
    int level;
    std::vector<std::pair<RatVector, std::string>> points;

    explicit Builder(const PairConfig& c) : config(c), n(c.dimension()), level(c.level()) {}

    int d(std::size_t j) const { return config.degree(j); }

    void add(RatVector p, std::string name) { points.emplace_back(std::move(p), std::move(name)); }

    RatVector zeros() const { return RatVector(config.k()); }

    Rational axis(std::size_t j) const { return Rational((n + 1) * d(j) - level, n * d(j)); }

    // beta_i = beta_j = 0 on the face where every other coordinate vanishes
    Rational pair_interior(std::size_t i, std::size_t j) const {
        return Rational(d(j) + n * d(i) - level, (n - 1) * d(i));
    }

    void add_origin_and_axes() {
        add(zeros(), "origin");
        for (std::size_t j = 0; j < config.k(); ++j) {
            RatVector p = zeros();
            p[j] = axis(j);
            add(std::move(p), "axis(" + std::to_string(j + 1) + ")");
        }
    }

    void add_pair_interior(std::size_t i, std::size_t j) {
        RatVector p = zeros();
        p[i] = pair_interior(i, j);
        p[j] = pair_interior(j, i);
        add(std::move(p), "face_interior(" + std::to_string(std::min(i, j) + 1) + "," +
                              std::to_string(std::max(i, j) + 1) + ")");
    }

    // x_i = 1 and x_j fills the Calabi-Yau level; every other coordinate is zero
    void add_cy_unit(std::size_t i, std::size_t j) {
        RatVector p = zeros();
        p[i] = 1;
        p[j] = Rational(level - d(i), d(j));
        add(std::move(p), "cy(one=" + std::to_string(i + 1) + ",fill=" + std::to_string(j + 1) + ")");
    }

    // x_i = x_j = 1 and x_l fills the Calabi-Yau level
    void add_cy_two_units(std::size_t i, std::size_t j, std::size_t l) {
        RatVector p = zeros();
        p[i] = 1;
        p[j] = 1;
        p[l] = Rational(level - d(i) - d(j), d(l));
        add(std::move(p), "cy(one=" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ",fill=" + std::to_string(l + 1) + ")");
    }
};

}  // namespace

ClosedFormResult closed_form_vertices(const PairConfig& config) {
    const std::size_t k = config.k();
    if (k == 0 || k > 3) throw UnsupportedK("closed forms exist only for k in {1,2,3}, got k = " + std::to_string(k));

    Builder b(config);
    const Branch branch = branch_of(config);
    const int level = config.level();

    if (k == 1) {
        b.add(b.zeros(), "origin");
        b.add({kss_interval_k1(config)}, "interval_endpoint");
    } else if (k == 2) {
        b.add_origin_and_axes();
        if (branch == Branch::Subcritical) {
            b.add(*interior_vertex(config), "interior");
        } else {
            b.add_cy_unit(0, 1);
            b.add_cy_unit(1, 0);
        }
    } else {
        b.add_origin_and_axes();
        const std::size_t pairs[3][3] = {{1, 2, 0}, {0, 2, 1}, {0, 1, 2}};
        if (branch == Branch::Subcritical) {
            for (const auto& p : pairs) b.add_pair_interior(p[0], p[1]);
            b.add(*interior_vertex(config), "interior");
        } else {
            // At d_i + d_j == L both cases apply and their points coincide.
            for (const auto& p : pairs) {
                const int s = b.d(p[0]) + b.d(p[1]);
                if (s >= level) {
                    b.add_cy_unit(p[0], p[1]);
                    b.add_cy_unit(p[1], p[0]);
                }
                if (s <= level) {
                    b.add_pair_interior(p[0], p[1]);
                    b.add_cy_two_units(p[0], p[1], p[2]);
                }
            }
        }
    }

    std::sort(b.points.begin(), b.points.end());
    ClosedFormResult result;
    result.branch = branch;
    std::vector<RatVector> pts;
    for (auto& [p, name] : b.points) {
        if (pts.empty() || pts.back() != p) {
            pts.push_back(p);
            result.provenance.emplace_back();
        }
        auto& names = result.provenance.back();
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
    result.vertices = make_vertex_set(build_halfspace_system(config), std::move(pts));
    return result;
}

}  // namespace kss
