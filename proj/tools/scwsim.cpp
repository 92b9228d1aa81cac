// scwsim — command-line runner for the subcarrier-wave coherent detection
// simulator. Subcommands:
//   presets   list the built-in experiment presets
//   run       run one experiment and write a CSV/JSON table
//
// A run starts from defaults, then applies (in order) the preset, the
// --config JSON file, and finally any explicit flags, so flags always win.
// Exit codes: 0 success, 1 invalid configuration, 2 output not writable.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scw/experiments.hpp"

namespace {

scw::SweepSpec parse_sweep(const std::string& text) {
    // var:start:stop:steps
    std::istringstream in(text);
    std::string var, s_start, s_stop, s_steps;
    if (!std::getline(in, var, ':') || !std::getline(in, s_start, ':') ||
        !std::getline(in, s_stop, ':') || !std::getline(in, s_steps))
        throw scw::ConfigError("sweep must look like var:start:stop:steps");
    scw::SweepSpec sweep;
    sweep.variable = var;
    try {
        sweep.start = std::stod(s_start);
        sweep.stop = std::stod(s_stop);
        sweep.steps = std::stoi(s_steps);
    } catch (const std::exception&) {
        throw scw::ConfigError("sweep bounds/steps are not numbers: " + text);
    }
    return sweep;
}

void apply_config_file(scw::ExperimentConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw scw::ConfigError("cannot read config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw scw::ConfigError("config file is not valid JSON: " + std::string(e.what()));
    }
    try {
        if (j.contains("scheme")) cfg.scheme = j["scheme"].get<std::string>();
        if (j.contains("ma")) cfg.m_a = j["ma"].get<double>();
        if (j.contains("mb")) cfg.m_b = j["mb"].get<double>();
        if (j.contains("carrier_power_w")) cfg.carrier_power_w = j["carrier_power_w"].get<double>();
        if (j.contains("tone_freq_hz")) cfg.tone_freq_hz = j["tone_freq_hz"].get<double>();
        if (j.contains("responsivity")) cfg.responsivity = j["responsivity"].get<double>();
        if (j.contains("gain")) cfg.gain = j["gain"].get<double>();
        if (j.contains("noise_std")) cfg.noise_std = j["noise_std"].get<double>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("samples_per_period"))
            cfg.samples_per_period = j["samples_per_period"].get<int>();
        if (j.contains("sweep")) cfg.sweep = parse_sweep(j["sweep"].get<std::string>());
        if (j.contains("output")) cfg.output_path = j["output"].get<std::string>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw scw::ConfigError("bad config field type: " + std::string(e.what()));
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subcarrier-wave coherent detection simulator"};
    app.require_subcommand(1);

    CLI::App* presets_cmd = app.add_subcommand("presets", "List built-in experiment presets");

    CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment and write its data table");
    std::string config_path, preset, scheme, sweep_text, output, format;
    double ma = 0, mb = 0, carrier_power = 0, tone_freq = 0, responsivity = 0, gain = 0,
           noise_std = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    run_cmd->add_option("--config", config_path, "JSON config file (flags override it)");
    run_cmd->add_option("--preset", preset, "Preset name (see `scwsim presets`)");
    run_cmd->add_option("--scheme", scheme,
                        "homodyne | phase-diversity | heterodyne | classical-compare");
    run_cmd->add_option("--ma", ma, "Sender modulation index");
    run_cmd->add_option("--mb", mb, "Receiver modulation index");
    run_cmd->add_option("--carrier-power-w", carrier_power, "Carrier power before modulation, W");
    run_cmd->add_option("--tone-freq-hz", tone_freq, "Microwave tone frequency, Hz");
    run_cmd->add_option("--responsivity", responsivity, "Photodiode responsivity, A/W");
    run_cmd->add_option("--gain", gain, "Balanced detector gain");
    run_cmd->add_option("--noise-std", noise_std, "Output voltage noise, V");
    run_cmd->add_option("--seed", seed, "Noise seed");
    run_cmd->add_option("--samples-per-period", samples, "Time samples per tone period");
    run_cmd->add_option("--sweep", sweep_text, "var:start:stop:steps (var: ma|mb|dphi|noise-std)");
    run_cmd->add_option("--output", output, "Output file path");
    run_cmd->add_option("--format", format, "csv | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (presets_cmd->parsed()) {
            for (const auto& name : scw::list_presets()) std::cout << name << "\n";
            return 0;
        }

        scw::ExperimentConfig cfg;
        if (!preset.empty()) cfg = scw::preset_config(preset);
        if (!config_path.empty()) apply_config_file(cfg, config_path);
        if (run_cmd->count("--scheme")) cfg.scheme = scheme;
        if (run_cmd->count("--ma")) cfg.m_a = ma;
        if (run_cmd->count("--mb")) cfg.m_b = mb;
        if (run_cmd->count("--carrier-power-w")) cfg.carrier_power_w = carrier_power;
        if (run_cmd->count("--tone-freq-hz")) cfg.tone_freq_hz = tone_freq;
        if (run_cmd->count("--responsivity")) cfg.responsivity = responsivity;
        if (run_cmd->count("--gain")) cfg.gain = gain;
        if (run_cmd->count("--noise-std")) cfg.noise_std = noise_std;
        if (run_cmd->count("--seed")) cfg.seed = seed;
        if (run_cmd->count("--samples-per-period")) cfg.samples_per_period = samples;
        if (run_cmd->count("--sweep")) cfg.sweep = parse_sweep(sweep_text);
        if (run_cmd->count("--output")) cfg.output_path = output;
        if (run_cmd->count("--format")) cfg.format = format;

        const scw::RunResult result = scw::run(cfg);
        std::cout << result.summary << "\n";
        return 0;
    } catch (const scw::OutputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const scw::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
