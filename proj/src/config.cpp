#include "omit/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace omit {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& value, const std::string& key, int line) {
    const std::string v = trim(value);
    if (v.empty())
        throw ParseError("empty value for '" + key + "' at line " +
                         std::to_string(line));
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || !std::isfinite(x))
        throw ParseError("cannot parse number '" + v + "' for '" + key +
                         "' at line " + std::to_string(line));
    return x;
}

bool parse_bool(const std::string& value, const std::string& key, int line) {
    const std::string v = trim(value);
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw ParseError("cannot parse boolean '" + v + "' for '" + key +
                     "' at line " + std::to_string(line));
}

void require_positive(double v, const std::string& key) {
    if (!(v > 0.0)) throw ValidationError("'" + key + "' must be > 0");
}

void require_non_negative(double v, const std::string& key) {
    if (v < 0.0 || !std::isfinite(v))
        throw ValidationError("'" + key + "' must be >= 0 and finite");
}

const std::set<std::string> kRequiredKeys = {
    "cavity_length_m",   "pump_wavelength_m", "mirror_mass_kg",
    "cavity_halfwidth_hz", "mech_freq_hz",    "mech_damping_hz",
    "pump_power_w",
};

const std::set<std::string> kOptionalKeys = {
    "probe_power_w",   "detuning_mode",    "detuning_hz",
    "probe_offset_hz", "coupling_scale",   "sweep_start",
    "sweep_stop",      "sweep_count",      "fd_step_radps",
    "gamma_variants_hz", "oracle_time_domain", "oracle_probe_scale",
    "oracle_t_end_s",  "oracle_dt_s",
};

}  // namespace

RunConfig parse_config(const std::string& text) {
    std::map<std::string, std::pair<std::string, int>> entries;  // key -> (value, line)

    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected 'key = value' at line " +
                             std::to_string(line_no));
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ParseError("missing key at line " + std::to_string(line_no));
        if (!kRequiredKeys.count(key) && !kOptionalKeys.count(key))
            throw UnknownKey(key, line_no);
        if (entries.count(key))
            throw ParseError("duplicate key '" + key + "' at line " +
                             std::to_string(line_no) + " (first at line " +
                             std::to_string(entries[key].second) + ")");
        entries[key] = {value, line_no};
    }

    std::string missing;
    for (const auto& key : kRequiredKeys)
        if (!entries.count(key)) missing += (missing.empty() ? "" : ", ") + key;
    if (!missing.empty())
        throw ParseError("missing required keys: " + missing);

    auto number = [&](const std::string& key) {
        const auto& [value, line] = entries.at(key);
        return parse_number(value, key, line);
    };

    RunConfig cfg;
    cfg.physical.cavity_length = number("cavity_length_m");
    cfg.physical.pump_wavelength = number("pump_wavelength_m");
    cfg.physical.mirror_mass = number("mirror_mass_kg");
    cfg.physical.cavity_halfwidth = hz_to_radps(number("cavity_halfwidth_hz"));
    cfg.physical.mech_freq = hz_to_radps(number("mech_freq_hz"));
    cfg.physical.mech_damping = hz_to_radps(number("mech_damping_hz"));
    cfg.drive.pump_power = number("pump_power_w");

    require_positive(cfg.physical.cavity_length, "cavity_length_m");
    require_positive(cfg.physical.pump_wavelength, "pump_wavelength_m");
    require_positive(cfg.physical.mirror_mass, "mirror_mass_kg");
    require_positive(cfg.physical.cavity_halfwidth, "cavity_halfwidth_hz");
    require_positive(cfg.physical.mech_freq, "mech_freq_hz");
    require_non_negative(cfg.physical.mech_damping, "mech_damping_hz");
    require_non_negative(cfg.drive.pump_power, "pump_power_w");

    // Detuning and probe offset default to the mechanical resonance.
    cfg.drive.detuning = cfg.physical.mech_freq;
    cfg.drive.probe_offset = cfg.physical.mech_freq;

    if (entries.count("detuning_mode")) {
        const auto& [value, line] = entries.at("detuning_mode");
        const std::string v = trim(value);
        if (v == "fixed_effective")
            cfg.drive.detuning_mode = DetuningMode::FixedEffective;
        else if (v == "bare")
            cfg.drive.detuning_mode = DetuningMode::Bare;
        else
            throw ParseError("detuning_mode must be 'fixed_effective' or 'bare', "
                             "got '" + v + "' at line " + std::to_string(line));
    }
    if (entries.count("detuning_hz"))
        cfg.drive.detuning = hz_to_radps(number("detuning_hz"));
    if (entries.count("probe_offset_hz"))
        cfg.drive.probe_offset = hz_to_radps(number("probe_offset_hz"));

    if (entries.count("probe_power_w")) {
        cfg.probe_power = number("probe_power_w");
        require_non_negative(cfg.probe_power, "probe_power_w");
    }
    if (entries.count("coupling_scale")) {
        cfg.coupling_scale = number("coupling_scale");
        require_non_negative(cfg.coupling_scale, "coupling_scale");
    }
    if (entries.count("sweep_start")) cfg.sweep_start = number("sweep_start");
    if (entries.count("sweep_stop")) cfg.sweep_stop = number("sweep_stop");
    if (entries.count("sweep_count")) {
        const double n = number("sweep_count");
        if (n < 1.0 || n != std::floor(n) || n > 1e7)
            throw ValidationError("'sweep_count' must be an integer in [1, 1e7]");
        cfg.sweep_count = static_cast<int>(n);
    }
    if (entries.count("fd_step_radps")) {
        cfg.fd_step = number("fd_step_radps");
        require_positive(*cfg.fd_step, "fd_step_radps");
    }
    if (entries.count("gamma_variants_hz")) {
        const auto& [value, line] = entries.at("gamma_variants_hz");
        std::istringstream list(value);
        std::string item;
        while (std::getline(list, item, ',')) {
            const double g = parse_number(item, "gamma_variants_hz", line);
            require_non_negative(g, "gamma_variants_hz");
            cfg.gamma_variants.push_back(hz_to_radps(g));
        }
        if (cfg.gamma_variants.empty())
            throw ParseError("'gamma_variants_hz' is empty at line " +
                             std::to_string(line));
    }
    if (entries.count("oracle_time_domain")) {
        const auto& [value, line] = entries.at("oracle_time_domain");
        cfg.oracle_time_domain = parse_bool(value, "oracle_time_domain", line);
    }
    if (entries.count("oracle_probe_scale")) {
        cfg.oracle_probe_scale = number("oracle_probe_scale");
        require_positive(cfg.oracle_probe_scale, "oracle_probe_scale");
    }
    if (entries.count("oracle_t_end_s")) {
        cfg.oracle_t_end = number("oracle_t_end_s");
        require_positive(*cfg.oracle_t_end, "oracle_t_end_s");
    }
    if (entries.count("oracle_dt_s")) {
        cfg.oracle_dt = number("oracle_dt_s");
        require_positive(*cfg.oracle_dt, "oracle_dt_s");
    }

    if (cfg.sweep_start && cfg.sweep_stop && !(*cfg.sweep_start < *cfg.sweep_stop))
        throw ValidationError("'sweep_start' must be < 'sweep_stop'");

    cfg.physical.validate();
    cfg.drive.validate();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

}  // namespace omit
