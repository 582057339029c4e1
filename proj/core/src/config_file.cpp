#include "quvol/config_file.hpp"

#include <charconv>
#include <cstdint>

#include "quvol/csv.hpp"
#include "quvol/errors.hpp"

namespace quvol {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void bad_value(std::string_view key) {
    throw InvalidArgument(std::string(key) + ": cannot parse value");
}

double parse_double(std::string_view key, std::string_view v) {
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
        bad_value(key);
    }
    return out;
}

std::uint64_t parse_u64(std::string_view key, std::string_view v) {
    std::uint64_t out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
        bad_value(key);
    }
    return out;
}

std::size_t parse_count(std::string_view key, std::string_view v) {
    return static_cast<std::size_t>(parse_u64(key, v));
}

bool parse_bool(std::string_view key, std::string_view v) {
    if (v == "true" || v == "1") {
        return true;
    }
    if (v == "false" || v == "0") {
        return false;
    }
    bad_value(key);
}

} // namespace

RunSpec parse_config_text(std::string_view text) {
    RunSpec spec;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, (eol == std::string_view::npos ? text.size() : eol) - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArgument("config line " + std::to_string(line_no) +
                                  ": expected key=value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));

        if (key == "regime") {
            const auto regime = parse_regime(value);
            if (!regime) {
                throw InvalidArgument(
                    "regime: expected case1-fixed, case1-hamiltonian, or case2-bayes");
            }
            spec.sim.regime = *regime;
        } else if (key == "K") {
            spec.sim.k = parse_count(key, value);
        } else if (key == "sigma_lo") {
            spec.sim.sigma_lo = parse_double(key, value);
        } else if (key == "sigma_hi") {
            spec.sim.sigma_hi = parse_double(key, value);
        } else if (key == "nu") {
            spec.sim.nu = parse_double(key, value);
        } else if (key == "dt") {
            spec.sim.dt = parse_double(key, value);
        } else if (key == "n_steps") {
            spec.sim.n_steps = parse_count(key, value);
        } else if (key == "n_paths") {
            spec.sim.n_paths = parse_count(key, value);
        } else if (key == "epsilon") {
            spec.sim.epsilon = parse_double(key, value);
        } else if (key == "seed") {
            spec.sim.seed = parse_u64(key, value);
        } else if (key == "record_vol_paths") {
            spec.sim.record_vol_paths = parse_bool(key, value);
        } else if (key == "x_nodes") {
            spec.x_nodes = parse_count(key, value);
        } else if (key == "domain_halfwidth") {
            spec.domain_halfwidth = parse_double(key, value);
        } else {
            throw InvalidArgument("unknown config key '" + std::string(key) + "'");
        }
    }
    validate(spec.sim);
    return spec;
}

RunSpec load_config_file(const std::string& path) {
    return parse_config_text(read_text_file(path));
}

std::string serialize_config(const RunSpec& spec) {
    std::string out;
    out += "regime=";
    out += to_string(spec.sim.regime);
    out += "\nK=";
    out += std::to_string(spec.sim.k);
    out += "\nsigma_lo=";
    out += format_double(spec.sim.sigma_lo);
    out += "\nsigma_hi=";
    out += format_double(spec.sim.sigma_hi);
    out += "\nnu=";
    out += format_double(spec.sim.nu);
    out += "\ndt=";
    out += format_double(spec.sim.dt);
    out += "\nn_steps=";
    out += std::to_string(spec.sim.n_steps);
    out += "\nn_paths=";
    out += std::to_string(spec.sim.n_paths);
    out += "\nepsilon=";
    out += format_double(spec.sim.epsilon);
    out += "\nseed=";
    out += std::to_string(spec.sim.seed);
    out += "\nrecord_vol_paths=";
    out += spec.sim.record_vol_paths ? "true" : "false";
    out += "\nx_nodes=";
    out += std::to_string(spec.x_nodes);
    out += "\ndomain_halfwidth=";
    out += format_double(spec.domain_halfwidth);
    out += '\n';
    return out;
}

} // namespace quvol
