#pragma once

/**
 * Config-driven front end shared by the command-line tool and the tests:
 * JSON config parsing plus the classify / scan / isolate / simulate /
 * selfcheck commands with deterministic table, JSON and CSV rendering.
 */

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "gyrostab/equilibria.hpp"

namespace gyrostab::cli {

enum class Command { Classify, Scan, Isolate, Simulate, Selfcheck };
enum class Format { Table, Json, Csv };

struct SweepSpec {
    double from = 0.0;
    double to = 0.0;
    int count = 0;
};

struct RunConfig {
    std::optional<Command> command;
    std::array<double, 3> inertia{};
    std::array<double, 3> mu{};
    std::optional<std::string> family;
    std::optional<double> parameter;
    std::optional<SweepSpec> sweep;
    std::optional<std::array<double, 3>> initial;
    double dt = 1e-3;
    double t_end = 100.0;
    double residual_tol = 1e-10;
    double spectral_tol = 1e-8;
    std::string out_path;  // empty = stdout
    Format format = Format::Table;
    bool quiet = false;
};

/// Thrown on malformed config text; the message names the offending key.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

RunConfig parse_config(const std::string& text);

GyrostatParams params_from(const RunConfig& cfg);
Equilibrium equilibrium_from(const RunConfig& cfg, const GyrostatParams& params);

/// Deterministic 17-significant-digit rendering used in all CSV/JSON output.
std::string format_double(double v);

/// The scan command's CSV document (header + one row per sweep point).
std::string scan_csv(const RunConfig& cfg);

/// Exit code: 0 success, 1 invalid input, 2 internal inconsistency.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parse + run; maps ConfigError / invalid arguments to exit code 1.
int run_text(const std::string& config_text, std::optional<Command> command_override,
             const std::optional<std::string>& out_override,
             const std::optional<Format>& format_override, bool quiet,
             std::ostream& out, std::ostream& err);

}  // namespace gyrostab::cli
