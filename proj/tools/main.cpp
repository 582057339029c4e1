// quvol — command-line front end for the uncertain-volatility simulation
// engine.  Subcommands parse a key=value config, run the requested
// computation, and write CSV artifacts plus a manifest into a fresh run
// directory.  Exit codes: 0 success, 2 configuration/usage error (message
// names the offending key or flag), 1 runtime failure.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quvol/analysis.hpp"
#include "quvol/bachelier.hpp"
#include "quvol/config_file.hpp"
#include "quvol/csv.hpp"
#include "quvol/engine.hpp"
#include "quvol/errors.hpp"
#include "quvol/histogram.hpp"
#include "quvol/kbe.hpp"
#include "quvol/manifest.hpp"
#include "quvol/sigma_grid.hpp"
#include "quvol/version.hpp"
#include "quvol/vol_state.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    std::size_t threads = 1;
    bool force = false;
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "key=value config file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out_dir,
                    "run directory (default: $QUVOL_OUT_ROOT/<command>, QUVOL_OUT_ROOT "
                    "defaulting to ./runs)");
    cmd->add_option("--threads", opts.threads, "worker threads (never affects output bytes)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    cmd->add_flag("--force", opts.force, "overwrite existing outputs");
}

fs::path resolve_out_dir(const CommonOpts& opts, const std::string& command) {
    if (!opts.out_dir.empty()) {
        return fs::path(opts.out_dir);
    }
    const char* root = std::getenv("QUVOL_OUT_ROOT");
    return fs::path(root != nullptr ? root : "runs") / command;
}

/// Refuses to clobber a previous run unless --force was given.
void check_overwrite(const fs::path& dir, const std::vector<std::string>& files, bool force) {
    if (force) {
        return;
    }
    for (const std::string& f : files) {
        const fs::path p = dir / f;
        if (fs::exists(p)) {
            throw quvol::InvalidArgument("refusing to overwrite " + p.string() +
                                         " (pass --force to allow)");
        }
    }
}

/// Parses "lo:step:hi" into an inclusive strike ladder.
std::vector<double> parse_strike_range(const std::string& text) {
    const auto first = text.find(':');
    const auto second = (first == std::string::npos) ? std::string::npos
                                                     : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos) {
        throw quvol::InvalidArgument("--strikes: expected lo:step:hi");
    }
    double lo = 0.0;
    double step = 0.0;
    double hi = 0.0;
    try {
        lo = std::stod(text.substr(0, first));
        step = std::stod(text.substr(first + 1, second - first - 1));
        hi = std::stod(text.substr(second + 1));
    } catch (const std::exception&) {
        throw quvol::InvalidArgument("--strikes: cannot parse lo:step:hi numbers");
    }
    if (!(step > 0.0)) {
        throw quvol::InvalidArgument("--strikes: step must be positive");
    }
    if (hi < lo) {
        throw quvol::InvalidArgument("--strikes: hi must be >= lo");
    }
    std::vector<double> strikes;
    const double slack = step * 1e-9;
    for (std::size_t i = 0;; ++i) {
        const double k = lo + step * static_cast<double>(i);
        if (k > hi + slack) {
            break;
        }
        strikes.push_back(k);
    }
    return strikes;
}

/// Writes the collected outputs' digests plus run metadata.  Called last so
/// the manifest always describes what is actually on disk.
void write_manifest(const fs::path& dir, const std::string& command,
                    const quvol::RunSpec& spec, double wall_seconds,
                    const std::vector<std::string>& files) {
    quvol::RunManifest manifest;
    manifest.command = command;
    manifest.tool_version = quvol::kVersion;
    manifest.spec = spec;
    manifest.wall_seconds = wall_seconds;
    for (const std::string& f : files) {
        manifest.outputs.push_back(quvol::make_manifest_entry(f, (dir / f).string()));
    }
    quvol::write_text_file((dir / "manifest.json").string(), quvol::manifest_json(manifest));
}

class RunTimer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_simulate(const CommonOpts& opts, std::size_t bins) {
    const RunTimer timer;
    const quvol::RunSpec spec = quvol::load_config_file(opts.config_path);
    const fs::path dir = resolve_out_dir(opts, "simulate");

    std::vector<std::string> files = {"histogram.csv", "moments.csv"};
    if (spec.sim.record_vol_paths) {
        files.push_back("vol_paths.csv");
    }
    std::vector<std::string> all = files;
    all.push_back("manifest.json");
    check_overwrite(dir, all, opts.force);
    fs::create_directories(dir);

    const quvol::PathEnsemble ens = quvol::simulate(spec.sim, opts.threads);
    quvol::write_text_file((dir / "histogram.csv").string(),
                           quvol::histogram_csv(quvol::make_histogram(ens.terminal, bins)));
    quvol::write_text_file((dir / "moments.csv").string(),
                           quvol::moments_csv(quvol::ensemble_stats(ens)));
    if (spec.sim.record_vol_paths) {
        quvol::write_text_file((dir / "vol_paths.csv").string(), quvol::vol_paths_csv(ens));
    }
    write_manifest(dir, "simulate", spec, timer.seconds(), files);
    return 0;
}

int run_pde(const CommonOpts& opts, double strike) {
    const RunTimer timer;
    const quvol::RunSpec spec = quvol::load_config_file(opts.config_path);
    const fs::path dir = resolve_out_dir(opts, "pde");

    const std::vector<std::string> files = {"pde_slice.csv"};
    check_overwrite(dir, {"pde_slice.csv", "manifest.json"}, opts.force);
    fs::create_directories(dir);

    const quvol::SigmaGrid grid =
        quvol::make_sigma_grid(spec.sim.sigma_lo, spec.sim.sigma_hi, spec.sim.k);
    const quvol::VolState state = quvol::max_entropy_state(grid);
    quvol::PdeGridSpec grid_spec;
    grid_spec.x_nodes = spec.x_nodes;
    grid_spec.t_nodes = spec.x_nodes;
    grid_spec.halfwidth = spec.domain_halfwidth;
    const quvol::PdeGrid solution = quvol::solve_kbe(
        state, [strike](double x) { return std::max(x - strike, 0.0); }, spec.sim.horizon(),
        grid_spec);
    quvol::write_text_file((dir / "pde_slice.csv").string(),
                           quvol::pde_slice_csv(solution, 0));
    write_manifest(dir, "pde", spec, timer.seconds(), files);
    return 0;
}

int run_compare(const CommonOpts& opts, std::size_t bins) {
    const RunTimer timer;
    const quvol::RunSpec spec = quvol::load_config_file(opts.config_path);
    const fs::path dir = resolve_out_dir(opts, "compare");

    const std::vector<std::string> files = {"compare.csv"};
    check_overwrite(dir, {"compare.csv", "manifest.json"}, opts.force);
    fs::create_directories(dir);

    const quvol::PathEnsemble ens = quvol::simulate(spec.sim, opts.threads);
    const quvol::SigmaGrid grid =
        quvol::make_sigma_grid(spec.sim.sigma_lo, spec.sim.sigma_hi, spec.sim.k);
    const double vbar = quvol::mean_square_vol(quvol::max_entropy_state(grid));
    const quvol::Histogram hist = quvol::make_histogram(ens.terminal, bins);
    quvol::write_text_file((dir / "compare.csv").string(),
                           quvol::compare_csv(hist, vbar, spec.sim.horizon()));
    write_manifest(dir, "compare", spec, timer.seconds(), files);
    return 0;
}

int run_analyze(const CommonOpts& opts, double threshold) {
    const RunTimer timer;
    quvol::RunSpec spec = quvol::load_config_file(opts.config_path);
    const fs::path dir = resolve_out_dir(opts, "analyze");

    const std::vector<std::string> files = {"trajectory.csv"};
    check_overwrite(dir, {"trajectory.csv", "manifest.json"}, opts.force);
    fs::create_directories(dir);

    // The conditional series needs the per-step levels regardless of what
    // the config asks for.
    spec.sim.record_vol_paths = true;
    const quvol::PathEnsemble ens = quvol::simulate(spec.sim, opts.threads);
    const quvol::VolTrajectory traj = quvol::conditional_vol_trajectory(ens, threshold);
    quvol::write_text_file((dir / "trajectory.csv").string(), quvol::trajectory_csv(traj));
    write_manifest(dir, "analyze", spec, timer.seconds(), files);
    return 0;
}

int run_surface(const CommonOpts& opts, const std::string& strikes_text) {
    const RunTimer timer;
    const quvol::RunSpec spec = quvol::load_config_file(opts.config_path);
    const std::vector<double> strikes = parse_strike_range(strikes_text);
    const fs::path dir = resolve_out_dir(opts, "surface");

    const std::vector<std::string> files = {"surface.csv"};
    check_overwrite(dir, {"surface.csv", "manifest.json"}, opts.force);
    fs::create_directories(dir);

    const quvol::PathEnsemble ens = quvol::simulate(spec.sim, opts.threads);
    const std::vector<quvol::SurfacePoint> points = quvol::surface(ens, strikes);
    quvol::write_text_file((dir / "surface.csv").string(), quvol::surface_csv(points));
    write_manifest(dir, "surface", spec, timer.seconds(), files);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte-Carlo engine for Brownian prices with uncertain volatility"};
    app.set_version_flag("--version", std::string(quvol::kToolName) + " " + quvol::kVersion);
    app.require_subcommand(1);

    CommonOpts sim_opts;
    std::size_t sim_bins = 101;
    CLI::App* sim = app.add_subcommand(
        "simulate", "run one regime; write terminal histogram + moments");
    add_common_options(sim, sim_opts);
    sim->add_option("--bins", sim_bins, "histogram bin count")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

    CommonOpts pde_opts;
    double pde_strike = 0.0;
    CLI::App* pde = app.add_subcommand(
        "pde", "solve the averaged backward equation for a call payoff");
    add_common_options(pde, pde_opts);
    pde->add_option("--strike", pde_strike, "call strike (price offset)");

    CommonOpts cmp_opts;
    std::size_t cmp_bins = 101;
    CLI::App* cmp = app.add_subcommand(
        "compare", "MC terminal histogram against the Gaussian reference density");
    add_common_options(cmp, cmp_opts);
    cmp->add_option("--bins", cmp_bins, "histogram bin count")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));

    CommonOpts ana_opts;
    double threshold = 0.2;
    CLI::App* ana = app.add_subcommand(
        "analyze", "conditional expected-volatility series from recorded vol paths");
    add_common_options(ana, ana_opts);
    ana->add_option("--threshold", threshold, "volatility threshold splitting the classes");

    CommonOpts srf_opts;
    std::string strikes_text;
    CLI::App* srf = app.add_subcommand(
        "surface", "implied normal-vol surface from simulated terminals");
    add_common_options(srf, srf_opts);
    srf->add_option("--strikes", strikes_text, "strike ladder as lo:step:hi")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) {
            return run_simulate(sim_opts, sim_bins);
        }
        if (pde->parsed()) {
            return run_pde(pde_opts, pde_strike);
        }
        if (cmp->parsed()) {
            return run_compare(cmp_opts, cmp_bins);
        }
        if (ana->parsed()) {
            return run_analyze(ana_opts, threshold);
        }
        if (srf->parsed()) {
            return run_surface(srf_opts, strikes_text);
        }
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const quvol::InvalidArgument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
