#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "quvol/analysis.hpp"
#include "quvol/errors.hpp"
#include "quvol/path_ensemble.hpp"
#include "quvol/rng.hpp"
#include "quvol/sigma_grid.hpp"
#include "quvol/vol_state.hpp"

using namespace quvol;

namespace {

// Hand-assembled recorded ensemble: `vols[p][s]` becomes the path-major
// record the analysis routines consume.
PathEnsemble make_recorded(const std::vector<std::vector<double>>& vols) {
    PathEnsemble ens;
    ens.config.n_steps = vols.front().size();
    ens.config.n_paths = vols.size();
    ens.config.record_vol_paths = true;
    ens.terminal.assign(vols.size(), 0.0);
    for (const auto& path : vols) {
        ens.vol_paths.insert(ens.vol_paths.end(), path.begin(), path.end());
    }
    return ens;
}

} // namespace

TEST_SUITE("analysis") {

TEST_CASE("mixture kurtosis closed form on two levels") {
    SigmaGrid g;
    g.levels = {0.1, 0.2};
    const VolState uniform = max_entropy_state(g);
    // E[s^2] = 0.025, E[s^4] = 8.5e-4, ratio 1.36.
    CHECK(mixture_kurtosis_oracle(uniform) == doctest::Approx(0.36).epsilon(1e-13));

    VolState weighted;
    weighted.grid = g;
    weighted.weights = {0.25, 0.75};
    // E[s^2] = 0.0325, E[s^4] = 1.225e-3 -> 1.225e-3 / 0.0325^2 - 1.
    CHECK(mixture_kurtosis_oracle(weighted) ==
          doctest::Approx(0.15976331360946745).epsilon(1e-13));
}

TEST_CASE("mixture kurtosis on the default grid") {
    const SigmaGrid g = make_sigma_grid(0.05, 0.35, 31);
    const VolState s = max_entropy_state(g);
    // Integer arithmetic: sum of m^2 over m=5..35 is 14880, sum of m^4 is
    // 11268624, so E[s^2] = 0.048 and E[s^4] = 0.00363504 exactly, giving
    // 0.00363504 / 0.048^2 - 1 = 0.57770833...
    CHECK(mixture_kurtosis_oracle(s) ==
          doctest::Approx(0.5777083333333333).epsilon(1e-12));
}

TEST_CASE("mixture kurtosis of a point mass is zero") {
    SigmaGrid g;
    g.levels = {0.1, 0.2, 0.3};
    VolState delta;
    delta.grid = g;
    delta.weights = {0.0, 1.0, 0.0};
    CHECK(mixture_kurtosis_oracle(delta) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("mixture kurtosis validates the state") {
    VolState bad;
    bad.grid.levels = {0.1, 0.2};
    bad.weights = {1.0};
    CHECK_THROWS_AS(mixture_kurtosis_oracle(bad), InvalidArgument);
}

TEST_CASE("ks statistic on hand samples") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    const std::vector<double> b{1.5};
    // After 1.5 the first CDF is at 1/3 and the second at 1: gap 2/3.
    CHECK(ks_statistic(a, b) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

    const std::vector<double> c{1.0, 2.0, 3.0, 4.0};
    const std::vector<double> d{2.0, 3.0, 4.0, 5.0};
    CHECK(ks_statistic(c, d) == doctest::Approx(0.25).epsilon(1e-14));

    CHECK(ks_statistic(a, a) == 0.0);
}

TEST_CASE("ks statistic handles ties across samples") {
    const std::vector<double> a{1.0, 1.0, 2.0};
    const std::vector<double> b{1.0, 3.0};
    // At value 1 both CDFs jump together (to 2/3 and 1/2, gap 1/6); the tie
    // must be consumed on both sides before comparing.  Max gap is after 2.
    CHECK(ks_statistic(a, b) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("ks statistic is symmetric and bounded") {
    std::vector<double> a(1500), b(2500);
    PathRng ra(17, 0), rb(17, 1);
    for (double& x : a) {
        x = ra.normal();
    }
    for (double& x : b) {
        x = rb.normal();
    }
    const double dab = ks_statistic(a, b);
    const double dba = ks_statistic(b, a);
    CHECK(dab == dba);
    CHECK(dab >= 0.0);
    CHECK(dab <= 1.0);
    // Same distribution: the statistic should be comfortably below the
    // 0.1% critical value 1.949 * sqrt((na+nb)/(na*nb)) ~ 0.0636.
    CHECK(dab < 0.0636);

    // Shifting one sample by a full unit forces a gap near 0.38.
    for (double& x : b) {
        x += 1.0;
    }
    CHECK(ks_statistic(a, b) > 0.25);
}

TEST_CASE("ks statistic rejects empty samples") {
    const std::vector<double> a{1.0};
    const std::vector<double> empty;
    CHECK_THROWS_AS(ks_statistic(a, empty), InvalidArgument);
    CHECK_THROWS_AS(ks_statistic(empty, a), InvalidArgument);
}

TEST_CASE("conditional trajectory on a hand ensemble") {
    const PathEnsemble ens = make_recorded({
        {0.3, 0.1, 0.3},
        {0.3, 0.3, 0.1},
        {0.1, 0.1, 0.1},
        {0.2, 0.3, 0.3}, // sits exactly on the threshold at step 0
    });
    const VolTrajectory traj = conditional_vol_trajectory(ens, 0.2);
    REQUIRE(traj.steps() == 3);

    // Step 0 has no previous level to condition on.
    CHECK(std::isnan(traj.e_above[0]));
    CHECK(std::isnan(traj.e_below[0]));

    // Step 1: above-class paths are 0 and 1 (previous 0.3), mean of their
    // step-1 levels is (0.1 + 0.3) / 2; below-class is path 2 alone; path 3
    // is dropped because its previous level equals the threshold.
    CHECK(traj.e_above[1] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(traj.e_below[1] == doctest::Approx(0.1).epsilon(1e-15));

    // Step 2: above class is paths 1 and 3 (previous 0.3), below class is
    // paths 0 and 2 (previous 0.1).
    CHECK(traj.e_above[2] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(traj.e_below[2] == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("conditional trajectory emits NaN for an empty class") {
    const PathEnsemble ens = make_recorded({
        {0.3, 0.3},
        {0.3, 0.1},
    });
    const VolTrajectory traj = conditional_vol_trajectory(ens, 0.2);
    CHECK(traj.e_above[1] == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(std::isnan(traj.e_below[1]));
}

TEST_CASE("conditional trajectory validation") {
    PathEnsemble bare;
    bare.config.n_steps = 2;
    bare.terminal = {0.0, 0.0};
    CHECK_THROWS_AS(conditional_vol_trajectory(bare, 0.2), InvalidArgument);

    const PathEnsemble ens = make_recorded({{0.3, 0.3}});
    CHECK_THROWS_AS(conditional_vol_trajectory(ens, 0.0), InvalidArgument);
    CHECK_THROWS_AS(conditional_vol_trajectory(ens, -1.0), InvalidArgument);
    CHECK_THROWS_AS(
        conditional_vol_trajectory(ens, std::numeric_limits<double>::quiet_NaN()),
        InvalidArgument);
    CHECK_THROWS_AS(
        conditional_vol_trajectory(ens, std::numeric_limits<double>::infinity()),
        InvalidArgument);
}

} // TEST_SUITE
