#include "gyrostab/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "gyrostab/selfcheck.hpp"
#include "gyrostab/simulator.hpp"

namespace gyrostab::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& key, const std::string& what) {
    throw ConfigError("config key \"" + key + "\": " + what);
}

double require_number(const json& j, const std::string& key) {
    if (!j.is_number()) fail(key, "expected a number");
    return j.get<double>();
}

std::array<double, 3> require_vec3(const json& j, const std::string& key) {
    if (!j.is_array() || j.size() != 3) fail(key, "expected an array of 3 numbers");
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) out[i] = require_number(j[i], key);
    return out;
}

Command parse_command(const std::string& s, const std::string& key) {
    if (s == "classify") return Command::Classify;
    if (s == "scan") return Command::Scan;
    if (s == "isolate") return Command::Isolate;
    if (s == "simulate") return Command::Simulate;
    if (s == "selfcheck") return Command::Selfcheck;
    fail(key, "unknown command \"" + s + "\"");
}

Format parse_format(const std::string& s, const std::string& key) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    fail(key, "unknown format \"" + s + "\"");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config root must be a JSON object");

    RunConfig cfg;
    for (const auto& [key, val] : doc.items()) {
        if (key == "inertia") {
            cfg.inertia = require_vec3(val, key);
        } else if (key == "mu") {
            cfg.mu = require_vec3(val, key);
        } else if (key == "command") {
            if (!val.is_string()) fail(key, "expected a string");
            cfg.command = parse_command(val.get<std::string>(), key);
        } else if (key == "family") {
            if (!val.is_string()) fail(key, "expected a string");
            cfg.family = val.get<std::string>();
        } else if (key == "parameter") {
            cfg.parameter = require_number(val, key);
        } else if (key == "initial") {
            cfg.initial = require_vec3(val, key);
        } else if (key == "dt") {
            cfg.dt = require_number(val, key);
            if (!(cfg.dt > 0.0)) fail(key, "must be positive");
        } else if (key == "t_end") {
            cfg.t_end = require_number(val, key);
            if (!(cfg.t_end > 0.0)) fail(key, "must be positive");
        } else if (key == "sweep") {
            if (!val.is_object()) fail(key, "expected an object {from,to,count}");
            SweepSpec sw;
            for (const auto& [k2, v2] : val.items()) {
                if (k2 == "from") sw.from = require_number(v2, "sweep.from");
                else if (k2 == "to") sw.to = require_number(v2, "sweep.to");
                else if (k2 == "count") {
                    if (!v2.is_number_integer()) fail("sweep.count", "expected an integer");
                    sw.count = v2.get<int>();
                } else fail("sweep." + k2, "unknown key");
            }
            if (sw.count < 2) fail("sweep.count", "must be at least 2");
            cfg.sweep = sw;
        } else if (key == "tolerances") {
            if (!val.is_object()) fail(key, "expected an object");
            for (const auto& [k2, v2] : val.items()) {
                if (k2 == "residual") cfg.residual_tol = require_number(v2, "tolerances.residual");
                else if (k2 == "spectral") cfg.spectral_tol = require_number(v2, "tolerances.spectral");
                else fail("tolerances." + k2, "unknown key");
            }
        } else if (key == "output") {
            if (!val.is_object()) fail(key, "expected an object");
            for (const auto& [k2, v2] : val.items()) {
                if (k2 == "path") {
                    if (!v2.is_string()) fail("output.path", "expected a string");
                    cfg.out_path = v2.get<std::string>();
                } else if (k2 == "format") {
                    if (!v2.is_string()) fail("output.format", "expected a string");
                    cfg.format = parse_format(v2.get<std::string>(), "output.format");
                } else fail("output." + k2, "unknown key");
            }
        } else {
            fail(key, "unknown key");
        }
    }
    if (!doc.contains("inertia")) throw ConfigError("config key \"inertia\" is required");
    if (!doc.contains("mu")) throw ConfigError("config key \"mu\" is required");
    if (!(cfg.inertia[0] > cfg.inertia[1] && cfg.inertia[1] > cfg.inertia[2] &&
          cfg.inertia[2] > 0.0))
        throw ConfigError("config key \"inertia\": inertia must be strictly decreasing");
    return cfg;
}

GyrostatParams params_from(const RunConfig& cfg) {
    return GyrostatParams(InertiaSpectrum(cfg.inertia[0], cfg.inertia[1], cfg.inertia[2]),
                          Vec3{cfg.mu[0], cfg.mu[1], cfg.mu[2]});
}

Equilibrium equilibrium_from(const RunConfig& cfg, const GyrostatParams& params) {
    if (!cfg.family) throw ConfigError("config key \"family\" is required for this command");
    const std::string& f = *cfg.family;
    EquilibriumFamily fam;
    if (f == "M1") fam = {FamilyTag::M1};
    else if (f == "M2") fam = {FamilyTag::M2};
    else if (f == "M3") fam = {FamilyTag::M3};
    else if (f == "M4") fam = {FamilyTag::M4};
    else if (f == "M5") fam = {FamilyTag::M5};
    else if (f == "M12") fam = {FamilyTag::M12Axis, params.aligned_axis()};
    else throw ConfigError("config key \"family\": unknown family \"" + f + "\"");

    double p = 0.0;
    if (fam.has_parameter()) {
        if (!cfg.parameter)
            throw ConfigError("config key \"parameter\" is required for family " + f);
        p = *cfg.parameter;
    }
    return family_point(params, fam, p);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string spectral_name(Spectral v) {
    return v == Spectral::SpectrallyUnstable ? "spectrally_unstable" : "inconclusive";
}

std::string vec3_json(const Vec3& v) {
    return "[" + format_double(v.x) + ", " + format_double(v.y) + ", " +
           format_double(v.z) + "]";
}

void render_report_table(const StabilityReport& rep, std::ostream& out) {
    const Equilibrium& e = rep.equilibrium;
    out << "equilibrium   " << family_name(e.family.tag);
    if (e.family.has_parameter()) out << "(" << format_double(e.parameter) << ")";
    out << "  point = (" << format_double(e.point.m.x) << ", "
        << format_double(e.point.m.y) << ", " << format_double(e.point.m.z) << ")\n";
    out << "closed_form   " << closed_form_name(rep.closed_form) << "\n";
    out << "isolation     " << isolation_name(rep.isolation.verdict) << " (case "
        << case_tag_name(rep.isolation.case_tag) << ")\n";
    out << "spectral      " << spectral_name(rep.spectral.verdict)
        << "  max_real_eig = " << format_double(rep.spectral.max_real) << "\n";
    out << "singular      " << (rep.singular_case ? "yes" : "no") << "\n";
    out << "lyapunov      " << lyapunov_name(rep.lyapunov)
        << (rep.singular_case ? " (singular: certified by escape experiment)" : "")
        << "\n";
}

void render_report_json(const StabilityReport& rep, std::ostream& out) {
    const Equilibrium& e = rep.equilibrium;
    out << "{\n";
    out << "  \"family\": \"" << family_name(e.family.tag) << "\",\n";
    if (e.family.has_parameter())
        out << "  \"parameter\": " << format_double(e.parameter) << ",\n";
    out << "  \"point\": " << vec3_json(e.point.m) << ",\n";
    out << "  \"closed_form\": \"" << closed_form_name(rep.closed_form) << "\",\n";
    out << "  \"isolation\": \"" << isolation_name(rep.isolation.verdict) << "\",\n";
    out << "  \"case_tag\": \"" << case_tag_name(rep.isolation.case_tag) << "\",\n";
    if (rep.isolation.witness)
        out << "  \"witness\": " << vec3_json(rep.isolation.witness->m) << ",\n";
    out << "  \"eigenvalues\": [";
    for (int i = 0; i < 3; ++i) {
        const auto& z = rep.spectral.eigenvalues[i];
        out << (i ? ", " : "") << "[" << format_double(z.real()) << ", "
            << format_double(z.imag()) << "]";
    }
    out << "],\n";
    out << "  \"spectral\": \"" << spectral_name(rep.spectral.verdict) << "\",\n";
    out << "  \"max_real_eig\": " << format_double(rep.spectral.max_real) << ",\n";
    out << "  \"singular_case\": " << (rep.singular_case ? "true" : "false") << ",\n";
    out << "  \"lyapunov\": \"" << lyapunov_name(rep.lyapunov) << "\"\n";
    out << "}\n";
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const GyrostatParams params = params_from(cfg);
    const StabilityReport rep = synthesize(params, equilibrium_from(cfg, params));
    if (cfg.format == Format::Json)
        render_report_json(rep, out);
    else
        render_report_table(rep, out);
    return 0;
}

int cmd_isolate(const RunConfig& cfg, std::ostream& out) {
    const GyrostatParams params = params_from(cfg);
    const Equilibrium eq = equilibrium_from(cfg, params);
    const AxisAlignment al = params.axis_alignment();
    const bool aligned = al == AxisAlignment::Axis1 || al == AxisAlignment::Axis2 ||
                         al == AxisAlignment::Axis3;
    std::ostringstream body;
    if (aligned) {
        const ReducedSystem red = reduce_level_system(params, eq);
        const IsolationVerdict v = sign_analysis(red);
        if (cfg.format == Format::Json) {
            body << "{\n";
            body << "  \"axis\": " << (red.axis + 1) << ",\n";
            body << "  \"u_coeffs\": [" << format_double(red.u.a) << ", "
                 << format_double(red.u.b) << ", " << format_double(red.u.c) << "],\n";
            body << "  \"v_coeffs\": [" << format_double(red.v.a) << ", "
                 << format_double(red.v.b) << ", " << format_double(red.v.c) << "],\n";
            body << "  \"case_tag\": \"" << case_tag_name(v.case_tag) << "\",\n";
            body << "  \"verdict\": \"" << isolation_name(v.verdict) << "\"";
            if (v.witness)
                body << ",\n  \"witness_x\": " << format_double(*v.witness_x)
                     << ",\n  \"witness\": " << vec3_json(v.witness->m);
            body << "\n}\n";
        } else {
            body << "axis       " << (red.axis + 1) << "\n";
            body << "u(x)       " << format_double(red.u.a) << " x^2 + "
                 << format_double(red.u.b) << " x + " << format_double(red.u.c) << "\n";
            body << "v(x)       " << format_double(red.v.a) << " x^2 + "
                 << format_double(red.v.b) << " x + " << format_double(red.v.c) << "\n";
            body << "case       " << case_tag_name(v.case_tag) << "\n";
            body << "verdict    " << isolation_name(v.verdict) << "\n";
            if (v.witness)
                body << "witness    x = " << format_double(*v.witness_x) << ", M = ("
                     << format_double(v.witness->m.x) << ", "
                     << format_double(v.witness->m.y) << ", "
                     << format_double(v.witness->m.z) << ")\n";
        }
    } else {
        const LevelSampleReport rep = sample_level_set(params, eq, {1e-1, 1e-2, 1e-3});
        if (cfg.format == Format::Json) {
            body << "{\n  \"case_tag\": \"numeric\",\n  \"verdict\": \""
                 << isolation_name(rep.verdict) << "\",\n  \"per_radius\": [";
            for (size_t i = 0; i < rep.per_radius.size(); ++i)
                body << (i ? ", " : "") << "[" << format_double(rep.per_radius[i].radius)
                     << ", " << format_double(rep.per_radius[i].min_g) << "]";
            body << "]\n}\n";
        } else {
            body << "case       numeric (mu not axis-aligned)\n";
            for (const auto& e : rep.per_radius)
                body << "radius " << format_double(e.radius)
                     << "  min_residual_sq " << format_double(e.min_g) << "\n";
            body << "verdict    " << isolation_name(rep.verdict) << "\n";
        }
    }
    out << body.str();
    return 0;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const GyrostatParams params = params_from(cfg);
    BodyState init;
    if (cfg.initial) {
        init = {Vec3{(*cfg.initial)[0], (*cfg.initial)[1], (*cfg.initial)[2]}};
    } else {
        init = equilibrium_from(cfg, params).point;
    }
    const Trajectory traj = integrate(params, init, cfg.dt, cfg.t_end);
    out << "t,m1,m2,m3,f1,f2\n";
    for (size_t i = 0; i < traj.times.size(); ++i) {
        const BodyState& s = traj.states[i];
        out << format_double(traj.times[i]) << "," << format_double(s.m.x) << ","
            << format_double(s.m.y) << "," << format_double(s.m.z) << ","
            << format_double(f1(params, s)) << "," << format_double(f2(params, s))
            << "\n";
    }
    if (!cfg.quiet)
        err << "drift_f1 " << format_double(traj.drift_f1) << " drift_f2 "
            << format_double(traj.drift_f2) << "\n";
    return 0;
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out) {
    const GyrostatParams params = params_from(cfg);
    const SelfcheckResult res = run_selfcheck(params);
    out << "selfcheck: " << res.passed << " passed, " << res.failed << " failed\n";
    for (const auto& f : res.failures) out << "FAIL " << f << "\n";
    return res.ok() ? 0 : 2;
}

}  // namespace

std::string scan_csv(const RunConfig& cfg) {
    if (!cfg.sweep) throw ConfigError("config key \"sweep\" is required for scan");
    const GyrostatParams params = params_from(cfg);
    const int axis = params.aligned_axis();  // throws unless mu is axis-aligned
    const SweepSpec& sw = *cfg.sweep;

    std::ostringstream out;
    out << "q,closed_form,isolation,case_tag,max_real_eig,lyapunov,boundary_flag\n";
    for (int i = 0; i < sw.count; ++i) {
        const double q = sw.from + i * ((sw.to - sw.from) / (sw.count - 1));
        const Equilibrium eq = family_point(params, {FamilyTag::M12Axis, axis}, q);
        const bool boundary =
            classify_closed_form(params, eq) == ClosedForm::BoundaryWithinTolerance;
        const StabilityReport rep = synthesize(params, eq);
        if (!report_invariants_hold(rep))
            throw std::logic_error("internal inconsistency: report invariants violated");
        out << format_double(q) << "," << closed_form_name(rep.closed_form) << ","
            << isolation_name(rep.isolation.verdict) << ","
            << case_tag_name(rep.isolation.case_tag) << ","
            << format_double(rep.spectral.max_real) << ","
            << lyapunov_name(rep.lyapunov) << "," << (boundary ? 1 : 0) << "\n";
    }
    return out.str();
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (!cfg.command) throw ConfigError("no command given (config key \"command\" or CLI)");

    std::ofstream file;
    std::ostream* target = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary);
        if (!file) throw ConfigError("output.path: cannot open \"" + cfg.out_path + "\"");
        target = &file;
    }

    switch (*cfg.command) {
        case Command::Classify: return cmd_classify(cfg, *target);
        case Command::Scan: *target << scan_csv(cfg); return 0;
        case Command::Isolate: return cmd_isolate(cfg, *target);
        case Command::Simulate: return cmd_simulate(cfg, *target, err);
        case Command::Selfcheck: return cmd_selfcheck(cfg, *target);
    }
    return 1;
}

int run_text(const std::string& config_text, std::optional<Command> command_override,
             const std::optional<std::string>& out_override,
             const std::optional<Format>& format_override, bool quiet,
             std::ostream& out, std::ostream& err) {
    try {
        RunConfig cfg = parse_config(config_text);
        if (command_override) cfg.command = command_override;
        if (out_override) cfg.out_path = *out_override;
        if (format_override) cfg.format = *format_override;
        if (quiet) cfg.quiet = true;
        return run(cfg, out, err);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace gyrostab::cli
