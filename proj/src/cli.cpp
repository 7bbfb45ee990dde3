#include "kss/cli.hpp"

#include "kss/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>

namespace kss {

namespace {

constexpr std::size_t kMaxBoundary = 6;

struct Invocation {
    std::string config_path;
    std::string out_path;
    std::string format;
    bool check_closed_form = false;
    int scale = 0;
    unsigned threads = 1;
};

struct Failure {
    int code;
    std::string kind;
    std::string detail;
};

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty())
        out << text;
    else
        write_file_atomically(out_path, text);
}

std::string error_block(const Failure& f, const nlohmann::ordered_json& extra = {}) {
    nlohmann::ordered_json j{{"error", {{"exit_code", f.code}, {"kind", f.kind}, {"detail", f.detail}}}};
    for (const auto& [key, value] : extra.items()) j["error"][key] = value;
    return j.dump(2) + "\n";
}

PairConfig load_config(const Invocation& inv, RunConfigFile& file) {
    file = load_run_config(inv.config_path);
    PairConfig config = file.to_pair_config();
    if (config.k() > kMaxBoundary)
        throw UnsupportedK("the tool supports 1 <= k <= " + std::to_string(kMaxBoundary) + ", got k = " +
                           std::to_string(config.k()));
    return config;
}

int finish_document(const ResultDocument& doc, bool compare, const std::string& out_path, std::ostream& out,
                    std::ostream& err) {
    emit(serialize(doc), out_path, out);
    const int code = exit_code_for(doc, compare);
    if (code == kExitClosedFormMismatch) err << "closed-form vertices differ from the enumerated vertex set\n";
    if (code == kExitCertificationFailure) err << "certification failed\n";
    return code;
}

int run(const std::string& command, Invocation inv, std::ostream& out, std::ostream& err) {
    RunConfigFile file;
    PairConfig config = load_config(inv, file);
    if (inv.out_path.empty() && file.output.out) inv.out_path = *file.output.out;
    inv.check_closed_form = inv.check_closed_form || file.output.check_closed_form;
    if (inv.scale == 0) inv.scale = file.output.scale.value_or(400);

    PipelineOptions options;
    options.threads = inv.threads;

    if (command == "compute") {
        return finish_document(run_pipeline(config, options), inv.check_closed_form, inv.out_path, out, err);
    }
    if (command == "check") {
        if (config.k() > 3) throw UnsupportedK("check needs k <= 3 for the closed-form comparison");
        return finish_document(run_pipeline(config, options), true, inv.out_path, out, err);
    }
    if (command == "certify") {
        options.closed_form = false;
        return finish_document(run_pipeline(config, options), false, inv.out_path, out, err);
    }
    // render
    options.closed_form = false;
    options.certify = false;
    const ResultDocument doc = run_pipeline(config, options);
    const std::string text = inv.format == "svg" ? render_polygon_svg(doc, inv.scale) : render_polytope_mesh(doc);
    emit(text, inv.out_path, out);
    return kExitOk;
}

}  // namespace

int exit_code_for(const ResultDocument& doc, bool compare) {
    if (compare && doc.closed_form && !doc.closed_form->equal) return kExitClosedFormMismatch;
    if (doc.certification && !doc.certification->all_verified) return kExitCertificationFailure;
    return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact K-semistable domains of log Fano pairs on complete intersections", "kss"};
    app.require_subcommand(1);

    Invocation inv;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", inv.config_path, "Run configuration (JSON)")->required();
        sub->add_option("--out", inv.out_path, "Output path (default: standard output)");
        sub->add_option("--threads", inv.threads, "Worker threads for enumeration and certification")
            ->check(CLI::Range(1u, 256u));
    };
    CLI::App* compute = app.add_subcommand("compute", "Full pipeline: H-rep, V-rep, closed forms, certification");
    add_common(compute);
    compute->add_flag("--check-closed-form", inv.check_closed_form, "Exit 2 when closed forms and enumeration differ");
    compute->add_option("--format", inv.format, "Output format")->check(CLI::IsMember({"json"}));
    CLI::App* check = app.add_subcommand("check", "Compute and compare against the closed-form vertex lists");
    add_common(check);
    CLI::App* certify = app.add_subcommand("certify", "Enumerate vertices and certify each");
    add_common(certify);
    CLI::App* render = app.add_subcommand("render", "Draw the domain: SVG for k = 2, OFF mesh for k = 3");
    add_common(render);
    render->add_option("--format", inv.format, "svg or off")->required()->check(CLI::IsMember({"svg", "off", "mesh"}));
    render->add_option("--scale", inv.scale, "SVG units per coordinate unit")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitInvalidConfig;
    }
    if (inv.format == "mesh") inv.format = "off";

    const std::string command = app.get_subcommands().front()->get_name();
    auto fail = [&](const Failure& f, const nlohmann::ordered_json& extra = {}) {
        err << "kss " << command << ": " << f.kind << ": " << f.detail << "\n";
        try {
            emit(error_block(f, extra), inv.out_path, out);
        } catch (const KssError& e) {
            err << e.what() << "\n";
        }
        return f.code;
    };

    try {
        return run(command, inv, out, err);
    } catch (const ConfigError& e) {
        return fail({kExitInvalidConfig, std::string(to_string(e.kind())), e.detail()});
    } catch (const FormatError& e) {
        return fail({kExitInvalidConfig, "FormatError", e.what()});
    } catch (const UnsupportedK& e) {
        return fail({kExitInvalidConfig, "UnsupportedK", e.what()});
    } catch (const WrongDimension& e) {
        return fail({kExitInvalidConfig, "WrongDimension", e.what()});
    } catch (const IdentityFailure& e) {
        nlohmann::ordered_json vertex = nlohmann::ordered_json::array();
        for (const auto& r : e.vertex()) vertex.push_back(r.str());
        return fail({kExitCertificationFailure, "IdentityFailure", e.identity()}, {{"vertex", vertex}});
    } catch (const NotAVertex& e) {
        return fail({kExitCertificationFailure, "NotAVertex", e.what()});
    } catch (const KssError& e) {
        return fail({kExitInvalidConfig, "Error", e.what()});
    }
}

}  // namespace kss
