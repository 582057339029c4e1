#include "quvol/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "quvol/errors.hpp"

namespace quvol {

namespace {

void append_u64(std::string& out, std::uint64_t v) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, res.ptr);
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_field(double v) {
    if (std::isnan(v)) {
        return std::string();
    }
    return format_double(v);
}

std::string moments_csv(const MomentSet& m) {
    std::string out = "n,mean,variance,m4,rel_excess_kurt,conv_excess_kurt\n";
    append_u64(out, m.n);
    out += ',';
    out += format_field(m.mean);
    out += ',';
    out += format_field(m.m2);
    out += ',';
    out += format_field(m.m4);
    out += ',';
    out += format_field(m.relative_excess_kurtosis);
    out += ',';
    out += format_field(m.conventional_excess_kurtosis);
    out += '\n';
    return out;
}

std::string histogram_csv(const Histogram& h) {
    std::string out = "bin_lo,bin_hi,count\n";
    out.reserve(out.size() + h.bins() * 48);
    for (std::size_t i = 0; i < h.bins(); ++i) {
        out += format_double(h.bin_lo(i));
        out += ',';
        out += format_double(h.bin_hi(i));
        out += ',';
        append_u64(out, h.counts[i]);
        out += '\n';
    }
    return out;
}

std::string compare_csv(const Histogram& h, double vbar, double t) {
    std::string out = "bin_lo,bin_hi,count,mc_density,gauss_density\n";
    out.reserve(out.size() + h.bins() * 80);
    const double norm =
        (h.total > 0) ? 1.0 / (static_cast<double>(h.total) * h.bin_width()) : 0.0;
    for (std::size_t i = 0; i < h.bins(); ++i) {
        const double lo = h.bin_lo(i);
        const double hi = h.bin_hi(i);
        out += format_double(lo);
        out += ',';
        out += format_double(hi);
        out += ',';
        append_u64(out, h.counts[i]);
        out += ',';
        out += format_double(static_cast<double>(h.counts[i]) * norm);
        out += ',';
        out += format_double(gaussian_density(vbar, t, 0.5 * (lo + hi)));
        out += '\n';
    }
    return out;
}

std::string trajectory_csv(const VolTrajectory& traj) {
    std::string out = "step,e_above,e_below\n";
    out.reserve(out.size() + traj.steps() * 48);
    for (std::size_t s = 0; s < traj.steps(); ++s) {
        append_u64(out, s);
        out += ',';
        out += format_field(traj.e_above[s]);
        out += ',';
        out += format_field(traj.e_below[s]);
        out += '\n';
    }
    return out;
}

std::string surface_csv(std::span<const SurfacePoint> points) {
    std::string out = "strike,price,implied_vol,status\n";
    out.reserve(out.size() + points.size() * 64);
    for (const SurfacePoint& pt : points) {
        out += format_double(pt.strike);
        out += ',';
        out += format_double(pt.call_price);
        out += ',';
        out += format_field(pt.implied_normal_vol);
        out += ',';
        out += to_string(pt.status);
        out += '\n';
    }
    return out;
}

std::string pde_slice_csv(const PdeGrid& grid, std::size_t time_index) {
    if (time_index >= grid.t_nodes()) {
        throw InvalidArgument("pde_slice_csv: time index out of range");
    }
    std::string out = "x,u\n";
    out.reserve(out.size() + grid.x_nodes() * 40);
    for (std::size_t i = 0; i < grid.x_nodes(); ++i) {
        out += format_double(grid.x[i]);
        out += ',';
        out += format_double(grid.at(time_index, i));
        out += '\n';
    }
    return out;
}

std::string vol_paths_csv(const PathEnsemble& ensemble) {
    if (!ensemble.has_vol_paths()) {
        throw InvalidArgument("vol_paths_csv: ensemble has no recorded vol paths");
    }
    std::string out = "path,step,sigma\n";
    out.reserve(out.size() + ensemble.vol_paths.size() * 32);
    for (std::size_t p = 0; p < ensemble.n_paths(); ++p) {
        for (std::size_t s = 0; s < ensemble.config.n_steps; ++s) {
            append_u64(out, p);
            out += ',';
            append_u64(out, s);
            out += ',';
            out += format_double(ensemble.vol_at(p, s));
            out += '\n';
        }
    }
    return out;
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error("cannot open for writing: " + path);
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
        throw Error("write failed: " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error("cannot open for reading: " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    if (f.bad()) {
        throw Error("read failed: " + path);
    }
    return ss.str();
}

} // namespace quvol
