#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scw {

/// Rejected experiment configuration (bad scheme, sweep, preset name...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Output file could not be written.
struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    std::string variable;  // "ma" | "mb" | "dphi" | "noise-std"
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    bool active() const { return !variable.empty(); }
};

/// One experiment run. Presets fill these fields with reference settings;
/// individual fields can then be overridden before the run.
struct ExperimentConfig {
    std::string preset;  // empty for plain scheme runs
    std::string scheme = "homodyne";  // homodyne | phase-diversity | heterodyne | classical-compare
    double m_a = 0.09;
    double m_b;  // defaults to the balanced-null drive index (J_0(m_b) = 1/sqrt 2)
    double carrier_power_w = 10e-6;
    double tone_freq_hz = 4.8e9;
    double responsivity = 0.6;
    double gain = 4.0e3;
    double noise_std = 0.0;  // volts
    std::uint64_t seed = 1;
    int samples_per_period = 256;
    SweepSpec sweep;
    std::string output_path;  // empty: "<preset-or-scheme>.<format>"
    std::string format = "csv";

    ExperimentConfig();
};

/// Computed table plus bookkeeping for the output file.
struct RunResult {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::string summary;  // one status line for standard output
    std::string path;     // file written by run()
};

/// Built-in preset names, alphabetical and stable.
std::vector<std::string> list_presets();

/// Reference configuration for one preset name (ConfigError if unknown).
ExperimentConfig preset_config(const std::string& name);

/// Throws ConfigError with a human-readable message on any bad field.
void validate_config(const ExperimentConfig& cfg);

/// Runs the configured experiment in memory. Deterministic: identical
/// config (including seed) gives identical rows.
RunResult compute(const ExperimentConfig& cfg);

/// compute() + atomic file write (temp file, then rename). Returns the
/// result with `path` and `summary` filled in.
RunResult run(const ExperimentConfig& cfg);

/// Serialized forms: CSV is UTF-8, LF endings, header row, 12 significant
/// digits per number.
std::string render_csv(const RunResult& r);
std::string render_json(const RunResult& r, const ExperimentConfig& cfg);

} // namespace scw
