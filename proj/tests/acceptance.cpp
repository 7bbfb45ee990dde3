#include "test_support.hpp"

#include "kss/cli.hpp"
#include "kss/document.hpp"
#include "kss/render.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace kss;
using kss::testing::sorted;
using kss::testing::vec;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> failures;

    void fail(std::string why) {
        pass = false;
        if (failures.size() < 10) failures.push_back(std::move(why));
    }
};

int report(int number, const std::string& title, const Outcome& o) {
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << " (" << title << "): " << o.summary
              << "\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
    return o.pass ? 0 : 1;
}

std::vector<PairConfig> sweep_configs() {
    std::vector<PairConfig> out;
    for (int m = 0; m <= 2; ++m)
        for (int n = 2; n <= 8; ++n) {
            const int ambient = n + m;
            std::vector<std::vector<int>> cis{{}};
            if (m >= 1) {
                cis.clear();
                for (int e1 = 1; e1 <= ambient; ++e1) {
                    if (m == 1) {
                        cis.push_back({e1});
                        continue;
                    }
                    for (int e2 = e1; e1 + e2 <= ambient; ++e2) cis.push_back({e1, e2});
                }
            }
            for (const auto& ci : cis) {
                const int level = ambient + 1 - std::accumulate(ci.begin(), ci.end(), 0);
                if (level < 1) continue;
                for (int k = 1; k <= 3; ++k) {
                    std::vector<int> d(static_cast<std::size_t>(k), 1);
                    while (true) {
                        out.push_back(PairConfig::validate(ambient, ci, d));
                        std::size_t i = 0;
                        while (i < d.size() && d[i] == level) d[i++] = 1;
                        if (i == d.size()) break;
                        ++d[i];
                    }
                }
            }
        }
    return out;
}

// (P^N; ci; d) -> expected vertex list for the configurations quoted in the criteria
struct Quoted {
    int ambient;
    std::vector<int> ci;
    std::vector<int> boundary;
    std::vector<RatVector> vertices;
    bool subset = false;
};

std::vector<Quoted> quoted_cases() {
    return {
        {3, {}, {2, 1}, {vec({"0", "0"}), vec({"2/3", "0"}), vec({"3/4", "1/2"})}},
        {3, {}, {2, 2}, {vec({"0", "0"}), vec({"2/3", "0"}), vec({"0", "2/3"}), vec({"1", "1"})}},
        {4, {2}, {1, 1}, {vec({"0", "0"}), vec({"1/3", "0"}), vec({"0", "1/3"}), vec({"1/2", "1/2"})}},
        {3, {}, {2, 2, 2},
         {vec({"0", "0", "0"}), vec({"2/3", "0", "0"}), vec({"0", "2/3", "0"}), vec({"0", "0", "2/3"}),
          vec({"0", "1", "1"}), vec({"1", "0", "1"}), vec({"1", "1", "0"})}},
        {3, {}, {2, 1, 1},
         {vec({"0", "0", "0"}), vec({"2/3", "0", "0"}), vec({"3/4", "0", "1/2"}), vec({"3/4", "1/2", "0"})},
         true},
        {3, {}, {2, 2, 1},
         {vec({"0", "0", "0"}), vec({"2/3", "0", "0"}), vec({"0", "2/3", "0"}), vec({"0", "3/4", "1/2"}),
          vec({"1/2", "1", "1"}), vec({"3/4", "0", "1/2"}), vec({"1", "1/2", "1"}), vec({"1", "1", "0"})}},
        {4, {2}, {1, 1, 1},
         {vec({"0", "0", "0"}), vec({"1/3", "0", "0"}), vec({"0", "1/3", "0"}), vec({"0", "0", "1/3"}),
          vec({"0", "1/2", "1/2"}), vec({"1/2", "0", "1/2"}), vec({"1/2", "1/2", "0"}), vec({"1", "1", "1"})}},
    };
}

std::string show(const std::vector<RatVector>& pts) {
    std::string s = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        s += i ? ", (" : "(";
        for (std::size_t j = 0; j < pts[i].size(); ++j) s += (j ? "," : "") + pts[i][j].str();
        s += ")";
    }
    return s + "}";
}

Outcome criterion_golden() {
    Outcome o;
    double slowest = 0;
    std::size_t checked = 0;
    for (const auto& g : kss::testing::load_golden(KSS_GOLDEN_DIR)) {
        const auto start = Clock::now();
        const auto c = parse_run_config(g.config_text).to_pair_config();
        const auto got = enumerate_vertices(build_halfspace_system(c)).points();
        const double t = seconds_since(start);
        slowest = std::max(slowest, t);
        ++checked;
        if (got != sorted(g.expected)) o.fail(g.name + ": got " + show(got));
        if (t >= 1.0) o.fail(g.name + " took " + std::to_string(t) + " s");
    }
    std::size_t quoted = 0;
    for (const auto& q : quoted_cases()) {
        const auto c = PairConfig::validate(q.ambient, q.ci, q.boundary);
        const auto got = enumerate_vertices(build_halfspace_system(c)).points();
        ++quoted;
        if (q.subset) {
            for (const auto& v : q.vertices)
                if (std::find(got.begin(), got.end(), v) == got.end()) o.fail(c.describe() + ": missing vertex");
        } else if (got != sorted(q.vertices)) {
            o.fail(c.describe() + ": got " + show(got));
        }
    }
    std::ostringstream s;
    s << checked << " golden files and " << quoted << " quoted lists exact, slowest " << slowest * 1000 << " ms";
    o.summary = s.str();
    return o;
}

Outcome criterion_oracle(const std::vector<PairConfig>& sweep, double& elapsed) {
    Outcome o;
    const auto start = Clock::now();
    for (const auto& c : sweep) {
        const auto closed = closed_form_vertices(c);
        const auto enumerated = enumerate_vertices(build_halfspace_system(c));
        if (!vertex_sets_equal(closed.vertices, enumerated)) o.fail(c.describe());
    }
    elapsed = seconds_since(start);
    if (elapsed >= 30.0) o.fail("sweep took " + std::to_string(elapsed) + " s");
    std::ostringstream s;
    s << sweep.size() << " configurations (exhaustive, k<=3, m<=2, 2<=n<=8), " << elapsed << " s";
    o.summary = s.str();
    return o;
}

Outcome criterion_integral() {
    Outcome o;
    kss::testing::ConfigSampler rng(31337);
    std::size_t triples = 0;
    while (triples < 250) {
        const auto c = rng.next(1, 4);
        RatVector x = rng.point(c.k());
        Rational slack = c.level();
        for (std::size_t j = 0; j < c.k(); ++j) slack -= Rational(c.degree(j)) * x[j];
        if (slack.sign() <= 0) continue;
        const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(c.k()) - 1));
        const Rational threshold = slack / Rational(c.degree(i));
        const Rational integral = kss::testing::integrate_polynomial(
            [&](const Rational& t) { return volume_profile(c, x, i, t); }, threshold,
            static_cast<unsigned>(c.dimension()));
        const Rational s = integral / volume_profile(c, x, i, Rational(0));
        if (s != s_invariant(c, x, i)) o.fail(c.describe() + ": integral gives " + s.str());
        ++triples;
    }
    o.summary = std::to_string(triples) + " random (config, point, index) triples, zero error";
    return o;
}

const Certificate& structural_child(const Certificate& c) {
    for (const auto& child : c.children)
        if (!std::holds_alternative<AssumptionNode>(child.node)) return child;
    return c;
}

Outcome criterion_certification(const std::vector<PairConfig>& sweep) {
    Outcome o;
    const auto start = Clock::now();
    std::vector<PairConfig> configs;
    for (const auto& q : quoted_cases()) configs.push_back(PairConfig::validate(q.ambient, q.ci, q.boundary));
    for (const auto& g : kss::testing::load_golden(KSS_GOLDEN_DIR))
        configs.push_back(parse_run_config(g.config_text).to_pair_config());
    configs.insert(configs.end(), sweep.begin(), sweep.end());

    std::size_t certificates = 0, chains = 0, on_faces = 0;
    for (const auto& c : configs) {
        CertificationReport report;
        try {
            report = certify_domain(c);
        } catch (const KssError& e) {
            o.fail(c.describe() + ": " + e.what());
            continue;
        }
        certificates += report.certificates.size();
        if (!report.all_verified) o.fail(c.describe() + ": not all verified");

        const auto a = interior_vertex(c);
        if (!a) continue;
        if (std::any_of(a->begin(), a->end(), [](const Rational& v) { return v.is_zero(); })) {
            ++on_faces;  // the beta-zero point sits on a coordinate face, certified above by reduction
            continue;
        }
        ++chains;
        const auto cert = certify_vertex(c, *a);
        const Certificate* node = &cert;
        while (std::holds_alternative<ConeStepNode>(node->node)) node = &structural_child(*node);
        const auto* leaf = std::get_if<InterpolationNode>(&node->node);
        if (cert.depth() != c.k()) o.fail(c.describe() + ": interior chain depth " + std::to_string(cert.depth()));
        if (!leaf || leaf->value != leaf->endpoint) o.fail(c.describe() + ": interior chain does not end in equality");
    }
    std::ostringstream s;
    s << configs.size() << " configurations, " << certificates << " certificates verified, " << chains
      << " subcritical interior chains of depth k ending in equality (" << on_faces
      << " beta-zero points on a coordinate face), " << seconds_since(start) << " s";
    o.summary = s.str();
    return o;
}

Outcome criterion_structure(const std::vector<PairConfig>& sweep) {
    Outcome o;
    std::size_t vertices = 0;
    for (const auto& c : sweep) {
        const auto h = build_halfspace_system(c);
        const auto vs = enumerate_vertices(h);
        const RatVector origin(c.k(), Rational(0));
        if (vs.size() == 0 || !contains(h, origin) || vs.vertices.front().point != origin)
            o.fail(c.describe() + ": origin missing");
        for (const auto& v : vs.vertices) {
            ++vertices;
            Rational weighted;
            for (std::size_t j = 0; j < c.k(); ++j) {
                const auto& x = v.point[j];
                if (x.sign() < 0 || x > Rational(1)) o.fail(c.describe() + ": vertex outside the unit cube");
                if (x.denominator() <= 0 || gcd(x.numerator(), x.denominator()) != 1)
                    o.fail(c.describe() + ": non-canonical rational");
                weighted += Rational(c.degree(j)) * x;
            }
            if (weighted > Rational(c.level())) o.fail(c.describe() + ": vertex beyond the Calabi-Yau bound");
            if (active_rank(h, v.active) != c.k()) o.fail(c.describe() + ": vertex of deficient rank");
        }
    }
    o.summary = std::to_string(sweep.size()) + " configurations, " + std::to_string(vertices) +
                " rational vertices in the unit cube under the Calabi-Yau bound, origin always present";
    return o;
}

Outcome criterion_symmetry() {
    Outcome o;
    kss::testing::ConfigSampler rng(4242);
    std::size_t configs = 0;
    while (configs < 150) {
        const auto c = rng.next(2, 5, 2, 7);
        std::vector<std::size_t> perm(c.k());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng.engine());
        std::vector<RatVector> moved;
        for (const auto& p : enumerate_vertices(build_halfspace_system(c)).points()) {
            RatVector y;
            for (std::size_t i : perm) y.push_back(p[i]);
            moved.push_back(y);
        }
        if (enumerate_vertices(build_halfspace_system(c.permuted(perm))).points() != sorted(moved))
            o.fail(c.describe());
        ++configs;
    }
    o.summary = std::to_string(configs) + " random configurations with 2 <= k <= 5 under random relabelling";
    return o;
}

int run_binary(const std::string& args, const std::string& stdout_path) {
    const std::string cmd = std::string(KSS_CLI_PATH) + " " + args + " >" + stdout_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_cli() {
    Outcome o;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / ("kss_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto config = [&](const std::string& name, const std::string& text) {
        const auto p = (dir / name).string();
        write_file_atomically(p, text);
        return p;
    };
    const auto k2 = config("k2.json", R"({"ambient":{"projective_dim":3,"ci_degrees":[]},"boundary_degrees":[2,1]})");
    const auto k3 =
        config("k3.json", R"({"ambient":{"projective_dim":4,"ci_degrees":[2]},"boundary_degrees":[1,1,1]})");
    const auto bad = config("bad.json", R"({"ambient":{"projective_dim":3,"ci_degrees":[]},"boundary_degrees":[5]})");
    const auto out = (dir / "stdout").string();

    std::size_t runs = 0;
    auto expect = [&](const std::string& args, int code) {
        ++runs;
        const int got = run_binary(args, out);
        if (got != code) o.fail("kss " + args + " exited " + std::to_string(got) + ", expected " + std::to_string(code));
        return read_file(out);
    };

    for (const auto& cfg : {k2, k3}) {
        for (const char* sub : {"compute --check-closed-form", "check", "certify"}) {
            const std::string text = expect(std::string(sub) + " --config " + cfg, kExitOk);
            try {
                const auto doc = parse_document(text);
                if (serialize(doc) != text) o.fail(std::string(sub) + ": document does not round-trip");
                if (doc.certification && !doc.certification->all_verified) o.fail(std::string(sub) + ": unverified");
            } catch (const KssError& e) {
                o.fail(std::string(sub) + ": " + e.what());
            }
        }
    }
    for (const char* sub : {"compute", "check", "certify", "render --format svg"}) {
        const std::string text = expect(std::string(sub) + " --config " + bad, kExitInvalidConfig);
        if (text.find("DegreeExceedsLevel") == std::string::npos) o.fail(std::string(sub) + ": no error block");
    }
    expect("render --format off --config " + k2, kExitInvalidConfig);
    expect("render --format svg --config " + k3, kExitInvalidConfig);

    const std::string svg1 = expect("render --format svg --config " + k2, kExitOk);
    const std::string svg2 = expect("render --format svg --config " + k2, kExitOk);
    const std::string off1 = expect("render --format off --config " + k3, kExitOk);
    const std::string off2 = expect("render --format off --config " + k3, kExitOk);
    if (svg1.empty() || svg1 != svg2) o.fail("SVG output differs between runs");
    if (off1.empty() || off1 != off2) o.fail("OFF output differs between runs");

    auto doc = run_pipeline(PairConfig::validate(3, {}, {2, 1}));
    doc.closed_form->equal = false;
    if (exit_code_for(doc, true) != kExitClosedFormMismatch) o.fail("closed-form mismatch does not map to 2");
    doc.closed_form->equal = true;
    doc.certification->all_verified = false;
    if (exit_code_for(doc, false) != kExitCertificationFailure) o.fail("certification failure does not map to 3");

    fs::remove_all(dir);
    o.summary = std::to_string(runs) + " binary runs with the documented exit codes, documents round-trip, "
                                       "SVG and OFF byte-identical across runs";
    return o;
}

}  // namespace

int main() {
    const auto sweep = sweep_configs();
    int failed = 0;
    double oracle_seconds = 0;
    failed += report(1, "golden vertex sets", criterion_golden());
    failed += report(2, "closed forms vs enumeration", criterion_oracle(sweep, oracle_seconds));
    failed += report(3, "integral identity", criterion_integral());
    failed += report(4, "certification", criterion_certification(sweep));
    failed += report(5, "structural properties", criterion_structure(sweep));
    failed += report(6, "symmetry", criterion_symmetry());
    failed += report(7, "CLI contract", criterion_cli());
    std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
