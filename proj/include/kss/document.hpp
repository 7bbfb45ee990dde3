#pragma once

#include "kss/certifier.hpp"

#include <optional>
#include <string>

namespace kss {

/// Malformed config file or result document.
class FormatError : public KssError {
public:
    using KssError::KssError;
};

struct OutputOptions {
    std::optional<std::string> out;
    bool check_closed_form = false;
    std::optional<int> scale;

    friend bool operator==(const OutputOptions&, const OutputOptions&) = default;
};

/// On-disk run configuration:
///   { "ambient": {"projective_dim": N, "ci_degrees": [...]},
///     "boundary_degrees": [...], "assume_ci_kss": true, "output": {...} }
struct RunConfigFile {
    int projective_dim = 0;
    std::vector<int> ci_degrees;
    std::vector<int> boundary_degrees;
    bool assume_ci_kss = true;
    OutputOptions output;

    /// Throws ConfigError.
    PairConfig to_pair_config() const;

    friend bool operator==(const RunConfigFile&, const RunConfigFile&) = default;
};

/// Throws FormatError.
RunConfigFile parse_run_config(const std::string& text);
RunConfigFile load_run_config(const std::string& path);
std::string serialize_run_config(const RunConfigFile& config);

struct ClosedFormComparison {
    ClosedFormResult result;
    bool equal = false;

    friend bool operator==(const ClosedFormComparison&, const ClosedFormComparison&) = default;
};

struct ResultDocument {
    ConfigSnapshot config;
    bool assume_ci_kss = true;
    Branch branch = Branch::Subcritical;
    std::vector<AffineForm> h_representation;
    VertexSet v_representation;
    std::optional<ClosedFormComparison> closed_form;
    std::optional<CertificationReport> certification;

    std::size_t k() const { return config.boundary_degrees.size(); }

    friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

struct PipelineOptions {
    bool closed_form = true;  // only applied when k <= 3
    bool certify = true;
    unsigned threads = 1;
};

/// validate -> H-rep -> V-rep -> closed forms (k <= 3) -> certification.
ResultDocument run_pipeline(const PairConfig& config, const PipelineOptions& options = {});

/// Pretty-printed JSON; every rational as "p/q".
std::string serialize(const ResultDocument& doc);
/// Throws FormatError.
ResultDocument parse_document(const std::string& text);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace kss
