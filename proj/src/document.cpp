#include "kss/document.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace kss {

using json = nlohmann::ordered_json;

namespace {

json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
    if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string, got " + j.dump());
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

json to_json(std::span<const Rational> v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(to_json(r));
    return a;
}

RatVector vector_from(const json& j) {
    if (!j.is_array()) throw FormatError("expected an array of rationals");
    RatVector v;
    for (const auto& e : j) v.push_back(rational_from(e));
    return v;
}

json labels_to_json(const std::vector<ConstraintLabel>& labels) {
    json a = json::array();
    for (const auto& l : labels) a.push_back(l.str());
    return a;
}

std::vector<ConstraintLabel> labels_from(const json& j) {
    std::vector<ConstraintLabel> out;
    for (const auto& e : j) {
        try {
            out.push_back(ConstraintLabel::parse(e.get<std::string>()));
        } catch (const std::invalid_argument& ex) {
            throw FormatError(ex.what());
        }
    }
    return out;
}

json to_json(const ConfigSnapshot& c, bool assume) {
    return json{{"ambient", {{"projective_dim", c.ambient_dim}, {"ci_degrees", c.ci_degrees}}},
                {"boundary_degrees", c.boundary_degrees},
                {"assume_ci_kss", assume},
                {"dimension", c.dimension},
                {"level", c.level}};
}

ConfigSnapshot snapshot_from(const json& j) {
    ConfigSnapshot c;
    c.ambient_dim = j.at("ambient").at("projective_dim").get<int>();
    c.ci_degrees = j.at("ambient").at("ci_degrees").get<std::vector<int>>();
    c.boundary_degrees = j.at("boundary_degrees").get<std::vector<int>>();
    c.dimension = j.at("dimension").get<int>();
    c.level = j.at("level").get<int>();
    return c;
}

json to_json(const Vertex& v) { return json{{"point", to_json(v.point)}, {"active", labels_to_json(v.active)}}; }

Vertex vertex_from(const json& j) { return {vector_from(j.at("point")), labels_from(j.at("active"))}; }

json to_json(const VertexSet& s) {
    json a = json::array();
    for (const auto& v : s.vertices) a.push_back(to_json(v));
    return a;
}

VertexSet vertex_set_from(const json& j) {
    VertexSet s;
    for (const auto& e : j) s.vertices.push_back(vertex_from(e));
    return s;
}

json to_json(const AffineForm& f) {
    return json{{"label", f.label.str()}, {"constant", to_json(f.constant)}, {"coeffs", to_json(f.coeffs)}};
}

AffineForm form_from(const json& j) {
    AffineForm f;
    f.label = labels_from(json::array({j.at("label")})).front();
    f.constant = rational_from(j.at("constant"));
    f.coeffs = vector_from(j.at("coeffs"));
    return f;
}

Check::Relation relation_from(const std::string& s) {
    if (s == "=") return Check::Relation::Equal;
    if (s == "<=") return Check::Relation::LessEqual;
    if (s == "<") return Check::Relation::Less;
    throw FormatError("unknown relation: " + s);
}

json node_to_json(const CertificateNode& node) {
    json j{{"kind", std::string(node_name(node))}};
    if (const auto* p = std::get_if<InterpolationNode>(&node)) {
        j["value"] = to_json(p->value);
        j["endpoint"] = to_json(p->endpoint);
    } else if (const auto* c = std::get_if<ConeStepNode>(&node)) {
        j["absorbed"] = c->absorbed;
        j["r"] = to_json(c->r);
        j["justification"] = c->justification;
    } else if (const auto* f = std::get_if<FaceReductionNode>(&node)) {
        j["dropped"] = f->dropped;
    } else if (const auto* a = std::get_if<AssumptionNode>(&node)) {
        j["text"] = a->text;
    }
    return j;
}

CertificateNode node_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "LogCY") return LogCYNode{};
    if (kind == "Interpolation") return InterpolationNode{rational_from(j.at("value")), rational_from(j.at("endpoint"))};
    if (kind == "ConeStep")
        return ConeStepNode{j.at("absorbed").get<std::size_t>(), rational_from(j.at("r")),
                            j.at("justification").get<std::string>()};
    if (kind == "FaceReduction") return FaceReductionNode{j.at("dropped").get<std::vector<std::size_t>>()};
    if (kind == "Assumption") return AssumptionNode{j.at("text").get<std::string>()};
    throw FormatError("unknown certificate node kind: " + kind);
}

json to_json(const Certificate& c) {
    json checks = json::array();
    for (const auto& ch : c.checks)
        checks.push_back({{"identity", ch.identity},
                          {"lhs", to_json(ch.lhs)},
                          {"relation", std::string(to_string(ch.relation))},
                          {"rhs", to_json(ch.rhs)},
                          {"holds", ch.holds()}});
    json children = json::array();
    for (const auto& child : c.children) children.push_back(to_json(child));
    json cfg = to_json(c.config, true);
    cfg.erase("assume_ci_kss");
    return json{{"vertex", to_json(c.vertex)}, {"coordinates", c.coordinates}, {"config", cfg},
                {"node", node_to_json(c.node)},  {"checks", checks},             {"verified", c.verified},
                {"children", children}};
}

Certificate certificate_from(const json& j) {
    Certificate c;
    c.vertex = vector_from(j.at("vertex"));
    c.coordinates = j.at("coordinates").get<std::vector<std::size_t>>();
    c.config = snapshot_from(j.at("config"));
    c.node = node_from(j.at("node"));
    for (const auto& ch : j.at("checks"))
        c.checks.push_back({ch.at("identity").get<std::string>(), rational_from(ch.at("lhs")),
                            rational_from(ch.at("rhs")), relation_from(ch.at("relation").get<std::string>())});
    for (const auto& child : j.at("children")) c.children.push_back(certificate_from(child));
    c.verified = j.at("verified").get<bool>();
    return c;
}

json to_json(const CertificationReport& r) {
    json certs = json::array();
    for (const auto& c : r.certificates) certs.push_back(to_json(c));
    return json{{"vertex_count", r.vertex_count},
                {"all_verified", r.all_verified},
                {"assume_ci_kss", r.assume_ci_kss},
                {"certificates", certs}};
}

CertificationReport report_from(const json& j) {
    CertificationReport r;
    r.vertex_count = j.at("vertex_count").get<std::size_t>();
    r.all_verified = j.at("all_verified").get<bool>();
    r.assume_ci_kss = j.at("assume_ci_kss").get<bool>();
    for (const auto& c : j.at("certificates")) r.certificates.push_back(certificate_from(c));
    return r;
}

json to_json(const ClosedFormComparison& c) {
    json vertices = json::array();
    for (std::size_t i = 0; i < c.result.vertices.size(); ++i) {
        json v = to_json(c.result.vertices.vertices[i]);
        v["provenance"] = c.result.provenance[i];
        vertices.push_back(v);
    }
    return json{{"equal", c.equal}, {"branch", std::string(to_string(c.result.branch))}, {"vertices", vertices}};
}

ClosedFormComparison comparison_from(const json& j) {
    ClosedFormComparison c;
    c.equal = j.at("equal").get<bool>();
    c.result.branch = parse_branch(j.at("branch").get<std::string>());
    for (const auto& v : j.at("vertices")) {
        c.result.vertices.vertices.push_back(vertex_from(v));
        c.result.provenance.push_back(v.at("provenance").get<std::vector<std::string>>());
    }
    return c;
}

template <typename F>
auto wrap_format_errors(F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw FormatError(e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

}  // namespace

PairConfig RunConfigFile::to_pair_config() const {
    return PairConfig::validate(projective_dim, ci_degrees, boundary_degrees, assume_ci_kss);
}

RunConfigFile parse_run_config(const std::string& text) {
    return wrap_format_errors([&] {
        const json j = json::parse(text);
        RunConfigFile c;
        const json& ambient = j.at("ambient");
        c.projective_dim = ambient.at("projective_dim").get<int>();
        c.ci_degrees = ambient.value("ci_degrees", std::vector<int>{});
        c.boundary_degrees = j.at("boundary_degrees").get<std::vector<int>>();
        c.assume_ci_kss = j.value("assume_ci_kss", true);
        if (j.contains("output")) {
            const json& o = j.at("output");
            if (o.contains("out")) c.output.out = o.at("out").get<std::string>();
            c.output.check_closed_form = o.value("check_closed_form", false);
            if (o.contains("scale")) c.output.scale = o.at("scale").get<int>();
        }
        return c;
    });
}

RunConfigFile load_run_config(const std::string& path) { return parse_run_config(read_file(path)); }

std::string serialize_run_config(const RunConfigFile& c) {
    json j{{"ambient", {{"projective_dim", c.projective_dim}, {"ci_degrees", c.ci_degrees}}},
           {"boundary_degrees", c.boundary_degrees},
           {"assume_ci_kss", c.assume_ci_kss}};
    json o = json::object();
    if (c.output.out) o["out"] = *c.output.out;
    if (c.output.check_closed_form) o["check_closed_form"] = true;
    if (c.output.scale) o["scale"] = *c.output.scale;
    if (!o.empty()) j["output"] = o;
    return j.dump(2) + "\n";
}

ResultDocument run_pipeline(const PairConfig& config, const PipelineOptions& options) {
    ResultDocument doc;
    doc.config = ConfigSnapshot::of(config);
    doc.assume_ci_kss = config.assume_ci_kss();
    doc.branch = branch_of(config);
    const HalfspaceSystem system = build_halfspace_system(config);
    doc.h_representation = system.forms;
    doc.v_representation = enumerate_vertices(system, options.threads);
    if (options.closed_form && config.k() <= 3) {
        ClosedFormComparison cmp;
        cmp.result = closed_form_vertices(config);
        cmp.equal = vertex_sets_equal(cmp.result.vertices, doc.v_representation);
        doc.closed_form = std::move(cmp);
    }
    if (options.certify) doc.certification = certify_domain(config, options.threads);
    return doc;
}

std::string serialize(const ResultDocument& doc) {
    json forms = json::array();
    for (const auto& f : doc.h_representation) forms.push_back(to_json(f));
    json j{{"config", to_json(doc.config, doc.assume_ci_kss)},
           {"branch", std::string(to_string(doc.branch))},
           {"h_representation", forms},
           {"v_representation", to_json(doc.v_representation)}};
    if (doc.closed_form) j["closed_form"] = to_json(*doc.closed_form);
    if (doc.certification) j["certification"] = to_json(*doc.certification);
    return j.dump(2) + "\n";
}

ResultDocument parse_document(const std::string& text) {
    return wrap_format_errors([&] {
        const json j = json::parse(text);
        ResultDocument doc;
        doc.config = snapshot_from(j.at("config"));
        doc.assume_ci_kss = j.at("config").at("assume_ci_kss").get<bool>();
        doc.branch = parse_branch(j.at("branch").get<std::string>());
        for (const auto& f : j.at("h_representation")) doc.h_representation.push_back(form_from(f));
        doc.v_representation = vertex_set_from(j.at("v_representation"));
        if (j.contains("closed_form")) doc.closed_form = comparison_from(j.at("closed_form"));
        if (j.contains("certification")) doc.certification = report_from(j.at("certification"));
        return doc;
    });
}

void write_file_atomically(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw KssError("cannot open " + tmp.string() + " for writing");
        os << contents;
        os.flush();
        if (!os) throw KssError("failed writing " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw KssError("cannot rename onto " + path + ": " + ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot read " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace kss
