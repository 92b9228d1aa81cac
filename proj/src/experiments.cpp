#include "scw/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "scw/bessel.hpp"
#include "scw/detection.hpp"
#include "scw/field.hpp"
#include "scw/filtering.hpp"
#include "scw/modulation.hpp"
#include "scw/psk.hpp"

namespace scw {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHomodyneBandwidthHz = 100e6;    // DC-coupled balanced receiver
constexpr double kHeterodyneBandwidthHz = 6.17e9; // fast single-diode receiver

double q0(double x) { return besselj(0, x); }

/// Drive index that puts a target fraction of the optical power into the
/// sidebands: solves 1 - J_0^2(m) = fraction.
double index_for_sideband_fraction(double fraction) {
    return solve_j0_equals(std::sqrt(1.0 - fraction));
}

DetectorParams detector_for(const ExperimentConfig& cfg) {
    DetectorParams d;
    d.responsivity = cfg.responsivity;
    d.gain = cfg.gain;
    d.noise_std = cfg.noise_std;
    d.seed = cfg.seed;
    d.bandwidth_hz =
        cfg.scheme == "heterodyne" ? kHeterodyneBandwidthHz : kHomodyneBandwidthHz;
    return d;
}

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fig10", "fig4", "fig5a", "fig5b", "fig7", "fig_sine", "sweep"};
    return names;
}

ExperimentConfig with_sideband_powers(ExperimentConfig cfg, double p_carrier, double p_side) {
    cfg.carrier_power_w = p_carrier + p_side;  // power before modulation
    cfg.m_a = index_for_sideband_fraction(p_side / (p_carrier + p_side));
    return cfg;
}

// ---- per-preset tables ----------------------------------------------------

RunResult compute_fig4(const ExperimentConfig& cfg) {
    const DetectorParams d = detector_for(cfg);
    const double j0a = q0(cfg.m_a);
    const double p_lo = cfg.carrier_power_w * j0a * j0a;
    const double p_s = cfg.carrier_power_w * (1.0 - j0a * j0a);
    const double swing = 2.0 * d.responsivity * d.gain * std::sqrt(p_s * p_lo);

    RunResult r;
    r.columns = {"phi_a_rad", "scw_I_norm", "scw_Q_norm", "classical_I_norm",
                 "classical_Q_norm"};
    DetectorParams quiet = d;
    quiet.noise_std = 0.0;
    for (int i = 0; i < 360; ++i) {
        const double phi = kTwoPi * i / 360.0;
        r.rows.push_back({phi,
                          homodyne_normalized(cfg.m_a, cfg.m_b, phi),
                          homodyne_normalized(cfg.m_a, cfg.m_b, phi - 0.5 * std::numbers::pi),
                          classical_homodyne(p_s, p_lo, phi, quiet) / swing,
                          classical_homodyne(p_s, p_lo, phi - 0.5 * std::numbers::pi, quiet) / swing});
    }
    return r;
}

RunResult compute_fig5(const ExperimentConfig& cfg) {
    const DetectorParams d = detector_for(cfg);
    const double e0 = std::sqrt(cfg.carrier_power_w);
    constexpr int kSymbols = 8;
    constexpr int kSamplesPerSymbol = 64;
    constexpr double kSymbolPeriodS = 1e-3;

    RunResult r;
    r.columns = {"time_s", "phi_a_rad", "output_v"};
    std::uint64_t counter = 0;
    for (int s = 0; s < kSymbols; ++s) {
        const double phi_a = encode(s % 4);
        for (int i = 0; i < kSamplesPerSymbol; ++i, ++counter) {
            const double t = (s + static_cast<double>(i) / kSamplesPerSymbol) * kSymbolPeriodS;
            r.rows.push_back(
                {t, phi_a, homodyne_output(cfg.m_a, phi_a, cfg.m_b, 0.0, e0, d, counter)});
        }
    }
    return r;
}

RunResult compute_fig7(const ExperimentConfig& cfg) {
    constexpr int kSymbols = 400;
    const TrialResult trial = run_trial(kSymbols, cfg.m_a, cfg.m_b,
                                        std::sqrt(cfg.carrier_power_w),
                                        detector_for(cfg), cfg.seed);
    RunResult r;
    r.columns = {"symbol_index", "sent_symbol", "i_volts", "q_volts", "decided_symbol"};
    for (int i = 0; i < kSymbols; ++i) {
        const SymbolDecision& rec = trial.log[i];
        r.rows.push_back({static_cast<double>(i), static_cast<double>(rec.sent),
                          rec.iq.i_val, rec.iq.q_val, static_cast<double>(rec.decided)});
    }
    return r;
}

RunResult compute_fig10(const ExperimentConfig& cfg) {
    const DetectorParams d = detector_for(cfg);
    const double omega = kTwoPi * cfg.tone_freq_hz;
    const CarrierSpec carrier{std::sqrt(cfg.carrier_power_w), 0.0};
    const MultimodeField modulated =
        phase_modulate(from_carrier(carrier, omega, default_truncation(cfg.m_a)),
                       ModulationTone(cfg.m_a, 0.0, omega));
    const MultimodeField arm = split(modulated, heterodyne_profile()).transmitted;

    RunResult r;
    r.columns = {"t_over_period", "microwave_norm", "output_v"};
    const int n = 2 * cfg.samples_per_period;  // two periods of the beat
    const double period = kTwoPi / omega;
    for (int i = 0; i < n; ++i) {
        const double t = period * i / cfg.samples_per_period;
        const double p_arm = std::norm(evaluate_envelope(arm, t));
        r.rows.push_back({static_cast<double>(i) / cfg.samples_per_period,
                          std::cos(omega * t),
                          d.responsivity * d.gain * d.calibration * p_arm});
    }
    return r;
}

RunResult compute_fig_sine(const ExperimentConfig& cfg) {
    const DetectorParams d = detector_for(cfg);
    const double omega = kTwoPi * cfg.tone_freq_hz;
    const double e0 = std::sqrt(cfg.carrier_power_w);
    const double j0a = q0(cfg.m_a);
    const double p_lo = cfg.carrier_power_w * j0a * j0a;
    const double p_s = cfg.carrier_power_w * (1.0 - j0a * j0a);
    const double swing = 2.0 * d.responsivity * d.gain * std::sqrt(p_s * p_lo);

    const Eigen::VectorXd t = period_grid(omega, cfg.samples_per_period);
    DetectorParams quiet = d;
    quiet.noise_std = 0.0;
    const Eigen::VectorXd scw_v = heterodyne_output_timeseries(cfg.m_a, 0.0, e0, omega, quiet, t);
    // classical beat with the phase convention that lines both curves up on sin
    const Eigen::VectorXd cls_v =
        classical_heterodyne(p_s, p_lo, omega, -0.5 * std::numbers::pi, quiet, t);

    RunResult r;
    r.columns = {"t_over_period", "scw_norm", "classical_norm"};
    for (int i = 0; i < cfg.samples_per_period; ++i)
        r.rows.push_back({static_cast<double>(i) / cfg.samples_per_period,
                          scw_v(i) / swing, cls_v(i) / swing});
    return r;
}

// ---- generic scheme runs ---------------------------------------------------

std::vector<double> sweep_values(const SweepSpec& s) {
    std::vector<double> v(s.steps);
    for (int i = 0; i < s.steps; ++i)
        v[i] = s.start + (s.stop - s.start) * i / (s.steps - 1);
    return v;
}

struct SweepPoint {
    double m_a, m_b, phi_a, noise_std;
};

SweepPoint apply_variable(const ExperimentConfig& cfg, double value) {
    SweepPoint p{cfg.m_a, cfg.m_b, 0.0, cfg.noise_std};
    if (cfg.sweep.variable == "ma")
        p.m_a = value;
    else if (cfg.sweep.variable == "mb")
        p.m_b = value;
    else if (cfg.sweep.variable == "dphi")
        p.phi_a = value;
    else
        p.noise_std = value;
    return p;
}

RunResult compute_generic(const ExperimentConfig& cfg_in) {
    ExperimentConfig cfg = cfg_in;
    if (!cfg.sweep.active() && cfg.scheme != "heterodyne")
        cfg.sweep = {"dphi", 0.0, kTwoPi, 360};

    const double e0 = std::sqrt(cfg.carrier_power_w);
    RunResult r;

    if (cfg.scheme == "heterodyne" && !cfg_in.sweep.active()) {
        // one-period beat trace
        const double omega = kTwoPi * cfg.tone_freq_hz;
        const Eigen::VectorXd t = period_grid(omega, cfg.samples_per_period);
        const Eigen::VectorXd v =
            heterodyne_output_timeseries(cfg.m_a, 0.0, e0, omega, detector_for(cfg), t);
        r.columns = {"t_over_period", "output_v"};
        for (int i = 0; i < cfg.samples_per_period; ++i)
            r.rows.push_back({static_cast<double>(i) / cfg.samples_per_period, v(i)});
        return r;
    }

    const std::vector<double> values = sweep_values(cfg.sweep);
    if (cfg.scheme == "homodyne") {
        r.columns = {cfg.sweep.variable, "output_v", "output_norm"};
        for (std::size_t i = 0; i < values.size(); ++i) {
            const SweepPoint p = apply_variable(cfg, values[i]);
            DetectorParams d = detector_for(cfg);
            d.noise_std = p.noise_std;
            r.rows.push_back({values[i],
                              homodyne_output(p.m_a, p.phi_a, p.m_b, 0.0, e0, d, i),
                              p.m_a > 0.0 ? homodyne_normalized(p.m_a, p.m_b, p.phi_a) : 0.0});
        }
    } else if (cfg.scheme == "phase-diversity") {
        r.columns = {cfg.sweep.variable, "i_volts", "q_volts"};
        for (std::size_t i = 0; i < values.size(); ++i) {
            const SweepPoint p = apply_variable(cfg, values[i]);
            DetectorParams d = detector_for(cfg);
            d.noise_std = p.noise_std;
            const IQSample iq = phase_diversity_measure(p.m_a, p.phi_a, p.m_b, p.m_b, e0, d, i);
            r.rows.push_back({values[i], iq.i_val, iq.q_val});
        }
    } else if (cfg.scheme == "heterodyne") {
        r.columns = {cfg.sweep.variable, "amplitude_v"};
        const DetectorParams d = detector_for(cfg);
        for (double v : values) {
            const SweepPoint p = apply_variable(cfg, v);
            const double amp = d.responsivity * d.gain * 2.0 * std::numbers::sqrt2 * e0 * e0 *
                               besselj(0, p.m_a) * besselj(1, p.m_a);
            r.rows.push_back({v, amp});
        }
    } else {  // classical-compare
        r.columns = {cfg.sweep.variable, "scw_norm", "classical_norm"};
        for (double v : values) {
            const SweepPoint p = apply_variable(cfg, v);
            r.rows.push_back({v, homodyne_normalized(p.m_a, p.m_b, p.phi_a), std::cos(p.phi_a)});
        }
    }
    return r;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

ExperimentConfig::ExperimentConfig() : m_b(solve_j0_equals(1.0 / std::numbers::sqrt2)) {}

std::vector<std::string> list_presets() { return preset_names(); }

ExperimentConfig preset_config(const std::string& name) {
    ExperimentConfig cfg;
    cfg.preset = name;
    if (name == "fig4") {
        cfg.scheme = "homodyne";
    } else if (name == "fig5a") {
        cfg.scheme = "homodyne";
        cfg = with_sideband_powers(std::move(cfg), 9.96e-6, 40e-9);
        cfg.noise_std = 1.5e-3;
    } else if (name == "fig5b") {
        cfg.scheme = "homodyne";
        cfg = with_sideband_powers(std::move(cfg), 9.5e-6, 500e-9);
        cfg.noise_std = 1.5e-3;
    } else if (name == "fig7") {
        cfg.scheme = "phase-diversity";
        cfg = with_sideband_powers(std::move(cfg), 9.5e-6, 500e-9);
        cfg.noise_std = 7.5e-4;
    } else if (name == "fig10") {
        cfg.scheme = "heterodyne";
        cfg = with_sideband_powers(std::move(cfg), 225e-6, 146.5e-6);
    } else if (name == "fig_sine") {
        cfg.scheme = "heterodyne";
    } else if (name == "sweep") {
        cfg.scheme = "homodyne";
        cfg.sweep = {"dphi", 0.0, kTwoPi, 360};
    } else {
        throw ConfigError("unknown preset: " + name);
    }
    return cfg;
}

void validate_config(const ExperimentConfig& cfg) {
    static const std::vector<std::string> schemes = {"homodyne", "phase-diversity",
                                                     "heterodyne", "classical-compare"};
    if (std::find(schemes.begin(), schemes.end(), cfg.scheme) == schemes.end())
        throw ConfigError("unknown scheme: " + cfg.scheme);
    if (!cfg.preset.empty() &&
        std::find(preset_names().begin(), preset_names().end(), cfg.preset) ==
            preset_names().end())
        throw ConfigError("unknown preset: " + cfg.preset);
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("format must be csv or json");
    if (!(cfg.carrier_power_w >= 0.0)) throw ConfigError("carrier power must be >= 0");
    if (!(cfg.m_a >= 0.0) || !(cfg.m_b >= 0.0))
        throw ConfigError("modulation indices must be >= 0");
    if (!(cfg.tone_freq_hz > 0.0)) throw ConfigError("tone frequency must be > 0");
    if (!(cfg.responsivity > 0.0)) throw ConfigError("responsivity must be > 0");
    if (!(cfg.gain > 0.0)) throw ConfigError("gain must be > 0");
    if (!(cfg.noise_std >= 0.0)) throw ConfigError("noise-std must be >= 0");
    if (cfg.samples_per_period < 2) throw ConfigError("samples-per-period must be >= 2");
    if (cfg.sweep.active()) {
        if (cfg.sweep.steps < 2) throw ConfigError("steps must be ≥ 2");
        static const std::vector<std::string> vars = {"ma", "mb", "dphi", "noise-std"};
        if (std::find(vars.begin(), vars.end(), cfg.sweep.variable) == vars.end())
            throw ConfigError("sweep variable must be one of ma, mb, dphi, noise-std");
        if (!std::isfinite(cfg.sweep.start) || !std::isfinite(cfg.sweep.stop))
            throw ConfigError("sweep bounds must be finite");
        if (cfg.sweep.variable != "dphi" && (cfg.sweep.start < 0.0 || cfg.sweep.stop < 0.0))
            throw ConfigError("sweep bounds for " + cfg.sweep.variable + " must be >= 0");
    }
}

RunResult compute(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (cfg.preset == "fig4") return compute_fig4(cfg);
    if (cfg.preset == "fig5a" || cfg.preset == "fig5b") return compute_fig5(cfg);
    if (cfg.preset == "fig7") return compute_fig7(cfg);
    if (cfg.preset == "fig10") return compute_fig10(cfg);
    if (cfg.preset == "fig_sine") return compute_fig_sine(cfg);
    return compute_generic(cfg);
}

std::string render_csv(const RunResult& r) {
    std::string out;
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
        if (c) out += ',';
        out += r.columns[c];
    }
    out += '\n';
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_number(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string render_json(const RunResult& r, const ExperimentConfig& cfg) {
    nlohmann::json j;
    j["preset"] = cfg.preset;
    j["scheme"] = cfg.scheme;
    j["seed"] = cfg.seed;
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    return j.dump(1) + "\n";
}

RunResult run(const ExperimentConfig& cfg) {
    RunResult r = compute(cfg);

    const std::string stem = cfg.preset.empty() ? cfg.scheme : cfg.preset;
    const std::string path =
        cfg.output_path.empty() ? stem + "." + cfg.format : cfg.output_path;
    const std::string payload = cfg.format == "csv" ? render_csv(r) : render_json(r, cfg);

    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp(target);
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw OutputError("cannot open " + tmp.string() + " for writing");
        os << payload;
        os.flush();
        if (!os) throw OutputError("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw OutputError("cannot move output into place at " + path);
    }

    r.path = path;
    r.summary = stem + ": " + std::to_string(r.rows.size()) + " rows x " +
                std::to_string(r.columns.size()) + " cols -> " + path;
    return r;
}

} // namespace scw
