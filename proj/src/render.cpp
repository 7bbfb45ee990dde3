#include "kss/render.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kss {

namespace {

constexpr int kMargin = 60;

Rational centroid_coord(const std::vector<RatVector>& pts, std::size_t axis) {
    Rational s;
    for (const auto& p : pts) s += p[axis];
    return s / Rational(static_cast<long>(pts.size()));
}

// 0 for directions in [0, pi), 1 for [pi, 2 pi), measured from `ref`
// in the plane with normal `normal` (2D when normal is empty).
struct AngularOrder {
    RatVector ref;
    RatVector normal;

    Rational cross(const RatVector& u, const RatVector& v) const {
        if (normal.empty()) return u[0] * v[1] - u[1] * v[0];
        const Rational cx = u[1] * v[2] - u[2] * v[1];
        const Rational cy = u[2] * v[0] - u[0] * v[2];
        const Rational cz = u[0] * v[1] - u[1] * v[0];
        return normal[0] * cx + normal[1] * cy + normal[2] * cz;
    }

    int half(const RatVector& u) const {
        const int s = cross(ref, u).sign();
        if (s > 0) return 0;
        if (s < 0) return 1;
        return dot(ref, u).sign() >= 0 ? 0 : 1;
    }

    bool operator()(const RatVector& u, const RatVector& v) const {
        const int hu = half(u);
        const int hv = half(v);
        if (hu != hv) return hu < hv;
        return cross(u, v).sign() > 0;
    }
};

std::vector<std::size_t> order_around(const std::vector<RatVector>& pts, const RatVector& normal) {
    const std::size_t dim = pts.front().size();
    RatVector c(dim);
    for (std::size_t a = 0; a < dim; ++a) c[a] = centroid_coord(pts, a);
    std::vector<RatVector> rel;
    for (const auto& p : pts) {
        RatVector u(dim);
        for (std::size_t a = 0; a < dim; ++a) u[a] = p[a] - c[a];
        rel.push_back(std::move(u));
    }
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    if (pts.size() < 3) return idx;
    AngularOrder cmp{rel.front(), normal};
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return cmp(rel[a], rel[b]); });
    return idx;
}

class Pixel {
public:
    explicit Pixel(int scale) : scale_(scale) {}

    Rational x(const Rational& v) const { return Rational(kMargin) + v * Rational(scale_); }
    Rational y(const Rational& v) const { return Rational(kMargin) + (Rational(1) - v) * Rational(scale_); }
    int size() const { return 2 * kMargin + scale_; }

    // Exact decimal when terminating, else rounded; exact values collected in notes_.
    std::string fmt(const Rational& v) {
        std::string s = v.terminating_decimal();
        if (!s.empty()) return s;
        notes_.push_back(v.str());
        return v.rounded_decimal(3);
    }

    std::string take_notes() {
        if (notes_.empty()) return {};
        std::string s = "<!-- exact:";
        for (const auto& n : notes_) s += " " + n;
        s += " -->\n";
        notes_.clear();
        return s;
    }

private:
    int scale_;
    std::vector<std::string> notes_;
};

// Segment of {constant + a.x = 0} inside the unit square, if any.
std::vector<RatVector> clip_to_unit_square(const AffineForm& f) {
    const Rational& a = f.coeffs[0];
    const Rational& b = f.coeffs[1];
    std::vector<RatVector> hits;
    auto inside = [](const Rational& t) { return t.sign() >= 0 && t <= Rational(1); };
    for (int side = 0; side <= 1; ++side) {
        const Rational s(side);
        if (!b.is_zero()) {
            const Rational y = -(f.constant + a * s) / b;
            if (inside(y)) hits.push_back({s, y});
        }
        if (!a.is_zero()) {
            const Rational x = -(f.constant + b * s) / a;
            if (inside(x)) hits.push_back({x, s});
        }
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    if (hits.size() < 2) return {};
    return {hits.front(), hits.back()};
}

std::string caption(const RatVector& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
    return s + ")";
}

}  // namespace

std::vector<RatVector> convex_polygon_order(std::vector<RatVector> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;
    std::vector<RatVector> out;
    for (std::size_t i : order_around(points, {})) out.push_back(points[i]);
    return out;
}

std::string render_polygon_svg(const ResultDocument& doc, int scale) {
    if (doc.k() != 2) throw WrongDimension("SVG rendering needs k = 2, got k = " + std::to_string(doc.k()));
    if (scale <= 0) throw std::invalid_argument("scale must be positive");
    Pixel px(scale);
    std::ostringstream os;
    const int size = px.size();
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "<!-- boundary degrees [" << doc.config.boundary_degrees[0] << "," << doc.config.boundary_degrees[1]
       << "], n=" << doc.config.dimension << ", L=" << doc.config.level << " -->\n";
    os << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << scale << "\" height=\"" << scale
       << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";

    const auto points = convex_polygon_order(doc.v_representation.points());
    std::string poly;
    for (const auto& p : points) poly += (poly.empty() ? "" : " ") + px.fmt(px.x(p[0])) + "," + px.fmt(px.y(p[1]));
    os << px.take_notes();
    os << "<polygon id=\"kss-domain\" points=\"" << poly
       << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";

    for (const auto& f : doc.h_representation) {
        const bool cy = f.label.kind == ConstraintLabel::Kind::CalabiYau;
        if (!cy && f.label.kind != ConstraintLabel::Kind::Beta) continue;
        const auto seg = clip_to_unit_square(f);
        if (seg.empty()) {
            os << "<!-- " << f.label.str() << " does not meet the unit square -->\n";
            continue;
        }
        const std::string line = "<line id=\"" + f.label.str() + "\" x1=\"" + px.fmt(px.x(seg[0][0])) + "\" y1=\"" +
                                 px.fmt(px.y(seg[0][1])) + "\" x2=\"" + px.fmt(px.x(seg[1][0])) + "\" y2=\"" +
                                 px.fmt(px.y(seg[1][1])) + "\" stroke=\"" + (cy ? "#d62728" : "#2ca02c") +
                                 "\" stroke-width=\"1.5\"" + (cy ? "" : " stroke-dasharray=\"6,4\"") + "/>\n";
        os << px.take_notes() << line;
    }

    for (const auto& v : doc.v_representation.vertices) {
        const std::string cx = px.fmt(px.x(v.point[0]));
        const std::string cy = px.fmt(px.y(v.point[1]));
        os << px.take_notes();
        os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"4\" fill=\"#08306b\"/>\n";
        os << "<text x=\"" << cx << "\" y=\"" << cy << "\" dx=\"6\" dy=\"-6\" font-family=\"monospace\" "
           << "font-size=\"12\">" << caption(v.point) << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_polytope_mesh(const ResultDocument& doc) {
    if (doc.k() != 3) throw WrongDimension("mesh rendering needs k = 3, got k = " + std::to_string(doc.k()));
    const auto& verts = doc.v_representation.vertices;

    std::vector<std::vector<std::size_t>> faces;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& f : doc.h_representation) {
        std::vector<std::size_t> incident;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (std::find(verts[i].active.begin(), verts[i].active.end(), f.label) != verts[i].active.end())
                incident.push_back(i);
        if (incident.size() < 3 || !seen.insert(incident).second) continue;

        std::vector<RatVector> pts;
        for (std::size_t i : incident) pts.push_back(verts[i].point);
        RatVector outward;
        for (const auto& c : f.coeffs) outward.push_back(-c);
        std::vector<std::size_t> face;
        for (std::size_t local : order_around(pts, outward)) face.push_back(incident[local]);
        faces.push_back(std::move(face));
    }

    std::ostringstream os;
    os << "OFF\n";
    os << "# boundary degrees [" << doc.config.boundary_degrees[0] << "," << doc.config.boundary_degrees[1] << ","
       << doc.config.boundary_degrees[2] << "], n=" << doc.config.dimension << ", L=" << doc.config.level << "\n";
    for (std::size_t i = 0; i < verts.size(); ++i) os << "# v" << i << " = " << caption(verts[i].point) << "\n";
    os << verts.size() << " " << faces.size() << " 0\n";
    for (const auto& v : verts) {
        for (std::size_t a = 0; a < 3; ++a) {
            std::string s = v.point[a].terminating_decimal();
            if (s.empty()) s = v.point[a].rounded_decimal(12);
            os << (a ? " " : "") << s;
        }
        os << "\n";
    }
    for (const auto& face : faces) {
        os << face.size();
        for (std::size_t i : face) os << " " << i;
        os << "\n";
    }
    return os.str();
}

}  // namespace kss
