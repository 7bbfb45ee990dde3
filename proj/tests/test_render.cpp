#include "test_support.hpp"

#include "kss/render.hpp"

#include <doctest.h>

#include <map>
#include <regex>
#include <sstream>

using namespace kss;
using kss::testing::vec;

namespace {

ResultDocument doc_for(int n, std::vector<int> ci, std::vector<int> d) {
    PipelineOptions options;
    options.certify = false;
    return run_pipeline(PairConfig::validate(n, std::move(ci), std::move(d)), options);
}

std::string polygon_points(const std::string& svg) {
    std::smatch m;
    REQUIRE(std::regex_search(svg, m, std::regex("id=\"kss-domain\" points=\"([^\"]*)\"")));
    return m[1];
}

struct Mesh {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::size_t>> faces;
};

Mesh parse_off(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::getline(is, line);
    REQUIRE(line == "OFF");
    while (std::getline(is, line) && line.rfind("#", 0) == 0) {
    }
    Mesh mesh;
    std::size_t faces = 0, edges = 0;
    std::istringstream(line) >> mesh.vertex_count >> faces >> edges;
    for (std::size_t i = 0; i < mesh.vertex_count; ++i) std::getline(is, line);
    for (std::size_t f = 0; f < faces; ++f) {
        std::size_t count = 0;
        is >> count;
        std::vector<std::size_t> face(count);
        for (auto& v : face) is >> v;
        mesh.faces.push_back(face);
    }
    return mesh;
}

// closed, consistently oriented, outward (positive signed volume)
void check_closed_outward(const Mesh& mesh, const std::vector<RatVector>& pts) {
    std::map<std::pair<std::size_t, std::size_t>, int> directed;
    Rational volume;
    for (const auto& face : mesh.faces) {
        for (std::size_t i = 0; i < face.size(); ++i) ++directed[{face[i], face[(i + 1) % face.size()]}];
        for (std::size_t i = 1; i + 1 < face.size(); ++i) {
            const auto& a = pts[face[0]];
            const auto& b = pts[face[i]];
            const auto& c = pts[face[i + 1]];
            volume += a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                      a[2] * (b[0] * c[1] - b[1] * c[0]);
        }
    }
    for (const auto& [edge, count] : directed) {
        CHECK(count == 1);
        CHECK(directed.count({edge.second, edge.first}) == 1);
    }
    CHECK(volume.sign() > 0);
    const std::size_t e = directed.size() / 2;
    CHECK(mesh.vertex_count + mesh.faces.size() == e + 2);
}

}  // namespace

TEST_CASE("svg polygon for (P3;[2,1])") {
    const std::string svg = render_polygon_svg(doc_for(3, {}, {2, 1}));
    CHECK(polygon_points(svg) == "60,460 326.667,460 360,260");
    CHECK(svg.find("<!-- exact: 980/3 -->") != std::string::npos);
    CHECK(svg.find("(3/4, 1/2)</text>") != std::string::npos);
    CHECK(svg.find("(2/3, 0/1)</text>") != std::string::npos);
    CHECK(svg.find("<!-- CalabiYau does not meet the unit square -->") != std::string::npos);
    CHECK(render_polygon_svg(doc_for(3, {}, {2, 3})).find("id=\"CalabiYau\"") != std::string::npos);
    CHECK(svg.find("id=\"Beta(1)\"") != std::string::npos);
    CHECK(svg.find("<rect x=\"60\" y=\"60\" width=\"400\" height=\"400\"") != std::string::npos);
}

TEST_CASE("svg quadrilateral for the quadric threefold") {
    const std::string svg = render_polygon_svg(doc_for(4, {2}, {1, 1}));
    CHECK(polygon_points(svg) == "60,460 193.333,460 260,260 60,326.667");
}

TEST_CASE("svg scale and determinism") {
    const auto doc = doc_for(3, {}, {2, 2});
    CHECK(render_polygon_svg(doc) == render_polygon_svg(doc));
    const std::string small = render_polygon_svg(doc, 100);
    CHECK(small.find("width=\"220\"") != std::string::npos);
    CHECK(polygon_points(small) == "60,160 126.667,160 160,60 60,93.333");
}

TEST_CASE("wrong dimensions") {
    CHECK_THROWS_AS(render_polygon_svg(doc_for(3, {}, {2, 2, 2})), WrongDimension);
    CHECK_THROWS_AS(render_polytope_mesh(doc_for(3, {}, {2, 2})), WrongDimension);
}

TEST_CASE("mesh of (P3;[2,2,2])") {
    const auto doc = doc_for(3, {}, {2, 2, 2});
    const std::string off = render_polytope_mesh(doc);
    const auto mesh = parse_off(off);
    CHECK(mesh.vertex_count == 7);
    check_closed_outward(mesh, doc.v_representation.points());
    CHECK(off.find("0.666666666667 0 0") != std::string::npos);
    CHECK(render_polytope_mesh(doc) == off);
}

TEST_CASE("mesh of the quadric with three hyperplanes") {
    const auto doc = doc_for(4, {2}, {1, 1, 1});
    const auto mesh = parse_off(render_polytope_mesh(doc));
    CHECK(mesh.vertex_count == 8);
    check_closed_outward(mesh, doc.v_representation.points());
}

TEST_CASE("property: k = 3 meshes are closed and outward oriented") {
    kss::testing::ConfigSampler rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        PipelineOptions options;
        options.certify = false;
        const auto doc = run_pipeline(rng.next(3, 3), options);
        const auto pts = doc.v_representation.points();
        if (pts.size() < 4) continue;
        check_closed_outward(parse_off(render_polytope_mesh(doc)), pts);
    }
}

TEST_CASE("convex_polygon_order is counter-clockwise") {
    const auto ordered = convex_polygon_order({vec({"1", "1"}), vec({"0", "0"}), vec({"0", "1"}), vec({"1", "0"})});
    CHECK(ordered == std::vector<RatVector>{vec({"0", "0"}), vec({"1", "0"}), vec({"1", "1"}), vec({"0", "1"})});
}
