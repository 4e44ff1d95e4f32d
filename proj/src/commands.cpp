#include "omit/commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "omit/csv.hpp"
#include "omit/mean_field.hpp"
#include "omit/response.hpp"
#include "omit/sweep.hpp"

namespace omit {

namespace {

using nlohmann::json;

RunConfig apply_preset(RunConfig cfg, const std::string& preset,
                       const std::string& command) {
    // Presets pin the full hardware/drive set (the RunConfig defaults) plus
    // the window each figure uses; only oracle settings survive from the
    // config file.
    RunConfig fresh;
    fresh.oracle_time_domain = cfg.oracle_time_domain;
    fresh.oracle_probe_scale = cfg.oracle_probe_scale;
    fresh.oracle_t_end = cfg.oracle_t_end;
    fresh.oracle_dt = cfg.oracle_dt;

    if (preset == "fig2" || preset == "fig3") {
        const std::string want = preset == "fig2" ? "response" : "phase";
        if (command != want)
            throw ValidationError("preset '" + preset + "' belongs to the '" +
                                  want + "' command");
        fresh.drive.pump_power = 1e-3;
        fresh.sweep_start = 0.995;  // delta / omega_m
        fresh.sweep_stop = 1.005;
        fresh.sweep_count = 1001;
    } else if (preset == "fig4") {
        if (command != "delay")
            throw ValidationError("preset 'fig4' belongs to the 'delay' command");
        fresh.sweep_start = 10e-6;  // watts
        fresh.sweep_stop = 400e-6;
        fresh.sweep_count = 40;
        fresh.gamma_variants = {hz_to_radps(141.0), hz_to_radps(120.0)};
    } else {
        throw ValidationError("unknown preset '" + preset +
                              "' (expected fig2, fig3 or fig4)");
    }
    return fresh;
}

const char* mode_name(DetuningMode m) {
    return m == DetuningMode::FixedEffective ? "fixed_effective" : "bare";
}

json config_json(const RunConfig& cfg, const std::string& command,
                 const std::string& preset, const std::string& out_csv) {
    const DerivedConstants dc = cfg.derived();
    json j;
    j["command"] = command;
    if (preset.empty())
        j["preset"] = nullptr;
    else
        j["preset"] = preset;
    j["physical"] = {
        {"cavity_length_m", cfg.physical.cavity_length},
        {"pump_wavelength_m", cfg.physical.pump_wavelength},
        {"mirror_mass_kg", cfg.physical.mirror_mass},
        {"cavity_halfwidth_radps", cfg.physical.cavity_halfwidth},
        {"mech_freq_radps", cfg.physical.mech_freq},
        {"mech_damping_radps", cfg.physical.mech_damping},
    };
    j["drive"] = {
        {"pump_power_w", cfg.drive.pump_power},
        {"detuning_mode", mode_name(cfg.drive.detuning_mode)},
        {"detuning_radps", cfg.drive.detuning},
        {"probe_offset_radps", cfg.drive.probe_offset},
    };
    j["coupling_scale"] = cfg.coupling_scale;
    j["probe_power_w"] = cfg.probe_power;
    j["derived"] = {
        {"cavity_freq_radps", dc.cavity_freq},
        {"coupling_newton", dc.coupling},
        {"pump_amplitude", dc.pump_amplitude},
    };
    json sweep = json::object();
    if (cfg.sweep_start) sweep["start"] = *cfg.sweep_start;
    if (cfg.sweep_stop) sweep["stop"] = *cfg.sweep_stop;
    if (cfg.sweep_count) sweep["count"] = *cfg.sweep_count;
    if (!cfg.gamma_variants.empty()) sweep["gamma_variants_radps"] = cfg.gamma_variants;
    j["sweep"] = sweep;
    if (cfg.fd_step)
        j["fd_step_radps"] = *cfg.fd_step;
    else
        j["fd_step_radps"] = nullptr;
    j["output_csv"] = out_csv;
    return j;
}

void write_sidecar(const RunConfig& cfg, const std::string& command,
                   const std::string& preset, const std::string& out_csv) {
    std::filesystem::path p(out_csv);
    p.replace_extension(".json");
    write_text_file(p.string(), config_json(cfg, command, preset, out_csv).dump(2) + "\n");
}

void log_resolved(const RunConfig& cfg, std::ostream& log) {
    std::ostringstream s;
    s.setf(std::ios::scientific);
    s << std::setprecision(6);
    s << "resolved: kappa=" << cfg.physical.cavity_halfwidth
      << " rad/s, omega_m=" << cfg.physical.mech_freq
      << " rad/s, gamma_m=" << cfg.physical.mech_damping
      << " rad/s, m=" << cfg.physical.mirror_mass
      << " kg, P_c=" << cfg.drive.pump_power
      << " W, Delta(" << mode_name(cfg.drive.detuning_mode)
      << ")=" << cfg.drive.detuning << " rad/s";
    log << s.str() << "\n";
    if (cfg.physical.mech_damping == 0.0)
        log << "warning: mech_damping is zero; the mechanical quality factor "
               "is infinite\n";
}

SweepSpec probe_spec(const RunConfig& cfg) {
    SweepSpec spec;
    spec.axis = SweepAxis::ProbeOffset;
    const double wm = cfg.physical.mech_freq;
    spec.start = cfg.sweep_start.value_or(0.995) * wm;
    spec.stop = cfg.sweep_stop.value_or(1.005) * wm;
    spec.count = cfg.sweep_count.value_or(1001);
    spec.physical = cfg.physical;
    spec.drive = cfg.drive;
    return spec;
}

// steady_state with the coupling_scale applied through cfg.derived().
SteadyState scaled_steady_state(const RunConfig& cfg) {
    return steady_state_fixed(cfg.drive.detuning, cfg.derived(), cfg.physical);
}

}  // namespace

RunConfig resolve_config(const CliOverrides& o, const std::string& command) {
    RunConfig cfg;
    if (o.config_path) cfg = load_config(*o.config_path);
    if (o.preset) cfg = apply_preset(cfg, *o.preset, command);
    if (o.pump_power) {
        if (*o.pump_power < 0.0)
            throw ValidationError("--pump-power must be >= 0");
        cfg.drive.pump_power = *o.pump_power;
    }
    if (o.gamma_m_hz) {
        if (*o.gamma_m_hz < 0.0)
            throw ValidationError("--gamma-m must be >= 0");
        cfg.physical.mech_damping = hz_to_radps(*o.gamma_m_hz);
        cfg.gamma_variants = {cfg.physical.mech_damping};
    }
    if (o.fd_step) {
        if (!(*o.fd_step > 0.0))
            throw ValidationError("--fd-step must be > 0");
        cfg.fd_step = *o.fd_step;
    }
    cfg.physical.validate();
    cfg.drive.validate();
    return cfg;
}

void cmd_response(const RunConfig& cfg, const std::string& out_path,
                  const std::string& preset_name, std::ostream& log) {
    log_resolved(cfg, log);
    SweepSpec spec = probe_spec(cfg);
    // coupling_scale folds into the steady state; rebuild the sweep on top of
    // an explicitly scaled working point when it differs from 1.
    Series series;
    if (cfg.coupling_scale == 1.0) {
        series = sweep_probe(spec);
    } else {
        const SteadyState ss = scaled_steady_state(cfg);
        series.gamma_m = cfg.physical.mech_damping;
        series.rows.reserve(spec.count);
        for (int i = 0; i < spec.count; ++i) {
            const double delta = grid_point(spec.start, spec.stop, spec.count, i);
            const ResponsePoint pt = evaluate_point(delta, ss, cfg.physical);
            series.rows.push_back({delta, pt.lambda_response.real(),
                                   pt.lambda_response.imag(), pt.transmission,
                                   pt.phase, pt.phase, pt.group_delay});
        }
        unwrap_phase(series.rows);
    }

    CsvTable table;
    table.header = {"delta_radps", "delta_over_omega_m", "re_2kc", "im_2kc"};
    const double wm = cfg.physical.mech_freq;
    for (const auto& row : series.rows)
        table.rows.push_back(
            {row.axis_value, row.axis_value / wm, row.re_lambda, row.im_lambda});
    write_csv(out_path, table);
    write_sidecar(cfg, "response", preset_name, out_path);
    log << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
}

void cmd_phase(const RunConfig& cfg, const std::string& out_path,
               const std::string& preset_name, std::ostream& log) {
    log_resolved(cfg, log);
    SweepSpec spec = probe_spec(cfg);
    Series series;
    if (cfg.coupling_scale == 1.0) {
        series = sweep_probe(spec);
    } else {
        const SteadyState ss = scaled_steady_state(cfg);
        series.gamma_m = cfg.physical.mech_damping;
        for (int i = 0; i < spec.count; ++i) {
            const double delta = grid_point(spec.start, spec.stop, spec.count, i);
            const ResponsePoint pt = evaluate_point(delta, ss, cfg.physical);
            series.rows.push_back({delta, pt.lambda_response.real(),
                                   pt.lambda_response.imag(), pt.transmission,
                                   pt.phase, pt.phase, pt.group_delay});
        }
        unwrap_phase(series.rows);
    }

    CsvTable table;
    table.header = {"delta_radps", "delta_over_omega_m", "phi_raw_rad",
                    "phi_unwrapped_rad"};
    const double wm = cfg.physical.mech_freq;
    for (const auto& row : series.rows)
        table.rows.push_back({row.axis_value, row.axis_value / wm, row.phase_raw,
                              row.phase_unwrapped});
    write_csv(out_path, table);
    write_sidecar(cfg, "phase", preset_name, out_path);
    log << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
}

void cmd_delay(const RunConfig& cfg, const std::string& out_path,
               const std::string& preset_name, std::ostream& log) {
    log_resolved(cfg, log);

    std::vector<double> gammas = cfg.gamma_variants;
    if (gammas.empty()) gammas.push_back(cfg.physical.mech_damping);

    CsvTable table;
    table.header = {"P_c_W", "P_c_uW", "gamma_m_radps", "tau_s"};

    const bool swept = cfg.sweep_start && cfg.sweep_stop &&
                       cfg.sweep_count.value_or(1) >= 2;

    auto delay_at = [&](const PhysicalParams& phys, double power) {
        RunConfig point = cfg;
        point.physical = phys;
        point.drive.pump_power = power;
        const SteadyState ss = steady_state_fixed(point.drive.detuning,
                                                  point.derived(), phys);
        if (cfg.fd_step)
            return group_delay_numeric(point.drive.probe_offset, ss, phys,
                                       *cfg.fd_step);
        return group_delay_analytic(point.drive.probe_offset, ss, phys);
    };

    if (swept) {
        for (double gamma : gammas) {
            PhysicalParams phys = cfg.physical;
            phys.mech_damping = gamma;
            for (int i = 0; i < *cfg.sweep_count; ++i) {
                const double power =
                    grid_point(*cfg.sweep_start, *cfg.sweep_stop, *cfg.sweep_count, i);
                table.rows.push_back(
                    {power, power * 1e6, gamma, delay_at(phys, power)});
            }
        }
    } else {
        for (double gamma : gammas) {
            PhysicalParams phys = cfg.physical;
            phys.mech_damping = gamma;
            table.rows.push_back({cfg.drive.pump_power, cfg.drive.pump_power * 1e6,
                                  gamma, delay_at(phys, cfg.drive.pump_power)});
        }
    }

    write_csv(out_path, table);
    write_sidecar(cfg, "delay", preset_name, out_path);
    log << "wrote " << out_path << " (" << table.rows.size() << " rows)\n";
}

namespace {

struct Check {
    std::string name;
    std::string status;  // PASS / FAIL / SKIP
    double measured = 0.0;
    double tolerance = 0.0;
    std::string note;
};

void print_check(const Check& c, std::ostream& log) {
    std::ostringstream s;
    s.setf(std::ios::scientific);
    s << std::setprecision(3);
    s << "[" << c.status << "] " << c.name;
    if (c.status != "SKIP")
        s << ": measured " << c.measured << " (tolerance " << c.tolerance << ")";
    if (!c.note.empty()) s << " -- " << c.note;
    log << s.str() << "\n";
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
    log_resolved(cfg, log);
    std::vector<Check> checks;

    const PhysicalParams& phys = cfg.physical;
    const double kappa = phys.cavity_halfwidth;
    const double wm = phys.mech_freq;
    std::mt19937_64 rng(0x6f6d6974u);  // fixed seed: the report is reproducible
    std::uniform_real_distribution<double> span(-10.0 * wm, 10.0 * wm);

    // 1-2: coupling switched off, the closed form must collapse to the bare
    // cavity Lorentzian and the output must be all-pass.
    {
        RunConfig bare = cfg;
        bare.coupling_scale = 0.0;
        double worst_reduction = 0.0;
        double worst_allpass = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double delta = span(rng);
            const double det = span(rng);
            const SteadyState ss =
                steady_state_fixed(det, bare.derived(), phys);
            const std::complex<double> got = probe_response(delta, ss, phys);
            const std::complex<double> want =
                1.0 / std::complex<double>(kappa, det - delta);
            worst_reduction =
                std::max(worst_reduction, std::abs(got - want) / std::abs(want));
            const double mag = std::abs(output_amplitude(got, kappa));
            worst_allpass = std::max(worst_allpass, std::abs(mag - 1.0));
        }
        checks.push_back({"bare-cavity reduction (1000 random points)",
                          worst_reduction < 1e-12 ? "PASS" : "FAIL",
                          worst_reduction, 1e-12, ""});
        checks.push_back({"all-pass output at zero coupling",
                          worst_allpass < 1e-12 ? "PASS" : "FAIL", worst_allpass,
                          1e-12, ""});
    }

    // 3: undriven group delay equals 2/kappa.
    {
        RunConfig undriven = cfg;
        undriven.drive.pump_power = 0.0;
        const SteadyState ss = steady_state_fixed(cfg.drive.detuning,
                                                  undriven.derived(), phys);
        const double tau = group_delay_analytic(cfg.drive.detuning, ss, phys);
        const double rel = std::abs(tau - 2.0 / kappa) / (2.0 / kappa);
        checks.push_back({"undriven delay = 2/kappa",
                          rel < 1e-9 ? "PASS" : "FAIL", rel, 1e-9, ""});
    }

    // 4: analytic vs finite-difference delay at 100 random points.
    {
        std::uniform_real_distribution<double> power(0.0, cfg.drive.pump_power);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            RunConfig pt = cfg;
            pt.drive.pump_power = power(rng);
            const double det = span(rng);
            const double delta = span(rng);
            const SteadyState ss = steady_state_fixed(det, pt.derived(), phys);
            const double analytic = group_delay_analytic(delta, ss, phys);
            const double numeric =
                group_delay_numeric(delta, ss, phys, cfg.fd_step.value_or(wm * 1e-6));
            const double excess = std::abs(analytic - numeric) /
                                  (1e-6 * std::abs(analytic) + 1e-12);
            worst = std::max(worst, excess);
        }
        checks.push_back({"analytic vs numeric delay (100 random points)",
                          worst < 1.0 ? "PASS" : "FAIL", worst, 1.0,
                          "measured / mixed tolerance"});
    }

    // 5: transparency dip structure at the working point.
    {
        const SteadyState ss = scaled_steady_state(cfg);
        if (ss.opto_coupling == 0.0) {
            checks.push_back({"transparency dip at delta = Delta", "SKIP", 0, 0,
                              "coupling is zero"});
        } else {
            const int n = 1001;
            int argmin = 0;
            double best = 1e300;
            for (int i = 0; i < n; ++i) {
                const double delta = grid_point(0.995 * wm, 1.005 * wm, n, i);
                const double re =
                    (2.0 * kappa * probe_response(delta, ss, phys)).real();
                if (re < best) {
                    best = re;
                    argmin = i;
                }
            }
            const bool interior = argmin > 0 && argmin < n - 1;
            const double center_off =
                std::abs(grid_point(0.995 * wm, 1.005 * wm, n, argmin) - wm);
            const double step = 0.01 * wm / (n - 1);
            const bool ok = interior && center_off <= step * 1.5;
            checks.push_back({"transparency dip at delta = omega_m",
                              ok ? "PASS" : "FAIL", center_off / wm, step / wm,
                              "dip offset / grid step (relative to omega_m)"});
        }
    }

    // 6: time-domain mean-field oracle against the closed form.
    if (!cfg.oracle_time_domain) {
        checks.push_back({"time-domain oracle (5 probe offsets)", "SKIP", 0, 0,
                          "disabled by oracle_time_domain"});
    } else if (phys.mech_damping == 0.0 && cfg.coupling_scale != 0.0 &&
               cfg.drive.pump_power > 0.0) {
        checks.push_back({"time-domain oracle (5 probe offsets)", "SKIP", 0, 0,
                          "undamped mirror never settles"});
    } else {
        const DerivedConstants dc = cfg.derived();
        const double fastest =
            std::max({kappa, wm, std::abs(cfg.drive.detuning) +
                                      std::abs(cfg.drive.probe_offset) * 1.001});
        const double dt = cfg.oracle_dt.value_or(0.005 / fastest);
        const double t_end = cfg.oracle_t_end.value_or(
            phys.mech_damping > 0.0 ? 20.0 / phys.mech_damping : 40.0 / kappa);
        double eps_p = cfg.probe_power > 0.0
                           ? std::sqrt(2.0 * kappa * cfg.probe_power /
                                       (kHbar * dc.cavity_freq))
                           : cfg.oracle_probe_scale * dc.pump_amplitude;
        if (eps_p == 0.0) eps_p = cfg.oracle_probe_scale * kappa;

        const SteadyState ss = scaled_steady_state(cfg);
        double worst = 0.0;
        for (double frac : {0.999, 0.9995, 1.0, 1.0005, 1.001}) {
            DriveParams drive = cfg.drive;
            drive.probe_offset = cfg.drive.probe_offset * frac;
            const MeanFieldResult mf =
                integrate_mean_field(phys, dc, drive, eps_p, t_end, dt);
            const std::complex<double> closed =
                probe_response(drive.probe_offset, ss, phys);
            worst = std::max(worst,
                             std::abs(mf.c_plus - closed) / std::abs(closed));
        }
        checks.push_back({"time-domain oracle (5 probe offsets)",
                          worst < 1e-3 ? "PASS" : "FAIL", worst, 1e-3,
                          "max relative disagreement"});
    }

    int failed = 0;
    for (const auto& c : checks) {
        print_check(c, log);
        if (c.status == "FAIL") ++failed;
    }
    log << (failed == 0 ? "verify: all checks passed\n"
                        : "verify: " + std::to_string(failed) + " check(s) failed\n");
    return failed;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"pump-probe response of a one-sided optomechanical cavity"};
    app.require_subcommand(1);

    CliOverrides o;
    std::string preset;
    double pump_power = 0.0, gamma_m = 0.0, fd_step = 0.0;
    std::string config_path;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "config file (key = value)");
        sub->add_option("--preset", preset, "fig2 | fig3 | fig4");
        sub->add_option("--pump-power", pump_power, "pump power [W]");
        sub->add_option("--gamma-m", gamma_m, "mechanical damping [Hz]");
        sub->add_option("--fd-step", fd_step, "numeric derivative step [rad/s]");
        sub->add_option("--out", o.out_path, "output CSV path");
    };

    add_common(app.add_subcommand("response", "probe-offset sweep of 2*kappa*c_plus"));
    add_common(app.add_subcommand("phase", "probe-offset sweep of the output phase"));
    add_common(app.add_subcommand("delay", "group delay (single point or power sweep)"));
    CLI::App* verify = app.add_subcommand("verify", "run the self-consistency checks");
    verify->add_option("--config", config_path, "config file (key = value)");
    verify->add_option("--pump-power", pump_power, "pump power [W]");
    verify->add_option("--gamma-m", gamma_m, "mechanical damping [Hz]");
    verify->add_option("--fd-step", fd_step, "numeric derivative step [rad/s]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (o.out_path.empty()) o.out_path = command + ".csv";
    if (!config_path.empty()) o.config_path = config_path;
    if (!preset.empty()) o.preset = preset;
    if (sub->count("--pump-power")) o.pump_power = pump_power;
    if (sub->count("--gamma-m")) o.gamma_m_hz = gamma_m;
    if (sub->count("--fd-step")) o.fd_step = fd_step;

    try {
        const RunConfig cfg = resolve_config(o, command);
        if (command == "response") {
            cmd_response(cfg, o.out_path, preset, out);
        } else if (command == "phase") {
            cmd_phase(cfg, o.out_path, preset, out);
        } else if (command == "delay") {
            cmd_delay(cfg, o.out_path, preset, out);
        } else {
            const int failed = cmd_verify(cfg, out);
            return failed == 0 ? 0 : 4;
        }
        return 0;
    } catch (const ParseError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const UnknownKey& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const NonPositiveParameter& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "solver error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace omit
