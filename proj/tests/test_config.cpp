#include <doctest.h>

#include <cmath>
#include <string>

#include "quvol/config_file.hpp"
#include "quvol/errors.hpp"
#include "quvol/sim_config.hpp"

using namespace quvol;

TEST_SUITE("config") {

TEST_CASE("regime names round-trip") {
    CHECK(to_string(Regime::Case1Fixed) == "case1-fixed");
    CHECK(to_string(Regime::Case1Hamiltonian) == "case1-hamiltonian");
    CHECK(to_string(Regime::Case2Bayes) == "case2-bayes");
    CHECK(parse_regime("case1-fixed") == Regime::Case1Fixed);
    CHECK(parse_regime("case1-hamiltonian") == Regime::Case1Hamiltonian);
    CHECK(parse_regime("case2-bayes") == Regime::Case2Bayes);
    CHECK(!parse_regime("case3").has_value());
    CHECK(!parse_regime("").has_value());
}

TEST_CASE("defaults validate and describe the standard experiment") {
    SimConfig c;
    CHECK_NOTHROW(validate(c));
    CHECK(c.k == 31);
    CHECK(c.sigma_lo == 0.05);
    CHECK(c.sigma_hi == 0.35);
    CHECK(c.dt == 0.004);
    CHECK(c.n_steps == 20);
    CHECK(c.horizon() == doctest::Approx(0.08).epsilon(1e-15));
    CHECK(c.sigma_median() == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("median of an even grid averages the middle levels") {
    SimConfig c;
    c.k = 4;
    c.sigma_lo = 0.1;
    c.sigma_hi = 0.4;
    CHECK(c.sigma_median() == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("effective epsilon applies the default rule only when unset") {
    SimConfig c;
    c.regime = Regime::Case2Bayes;
    // 0.1 * 0.2 * sqrt(0.004)
    const double auto_eps = 0.1 * 0.2 * std::sqrt(0.004);
    CHECK(c.effective_epsilon() == doctest::Approx(auto_eps).epsilon(1e-15));
    c.epsilon = 0.005;
    CHECK(c.effective_epsilon() == 0.005);
}

TEST_CASE("validate names the offending key") {
    SimConfig c;

    c.k = 0;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("K:"), InvalidArgument);
    c.k = 31;

    c.sigma_lo = -0.1;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("sigma_lo"), InvalidArgument);
    c.sigma_lo = 0.05;

    c.sigma_hi = 0.01;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("sigma_hi"), InvalidArgument);
    c.sigma_hi = 0.35;

    c.dt = 0.0;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("dt"), InvalidArgument);
    c.dt = 0.004;

    c.n_steps = 0;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("n_steps"), InvalidArgument);
    c.n_steps = 20;

    c.n_paths = 0;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("n_paths"), InvalidArgument);
    c.n_paths = 100;

    c.regime = Regime::Case1Hamiltonian;
    c.nu = -1.0;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("nu"), InvalidArgument);
    c.nu = 0.0;

    c.regime = Regime::Case2Bayes;
    c.epsilon = -0.001;
    CHECK_THROWS_WITH_AS(validate(c), doctest::Contains("epsilon"), InvalidArgument);
    c.epsilon = 0.0;
    CHECK_NOTHROW(validate(c));
}

TEST_CASE("negative epsilon is accepted outside the bayes regime") {
    SimConfig c;
    c.regime = Regime::Case1Fixed;
    c.epsilon = -1.0; // unused by this regime
    CHECK_NOTHROW(validate(c));
}

TEST_CASE("parse, serialize, parse round-trips every field") {
    RunSpec spec;
    spec.sim.regime = Regime::Case2Bayes;
    spec.sim.k = 7;
    spec.sim.sigma_lo = 0.01;
    spec.sim.sigma_hi = 0.44;
    spec.sim.nu = 1.25;
    spec.sim.dt = 0.002;
    spec.sim.n_steps = 33;
    spec.sim.n_paths = 4321;
    spec.sim.epsilon = 0.00125;
    spec.sim.seed = 18446744073709551615ull; // largest u64
    spec.sim.record_vol_paths = true;
    spec.x_nodes = 501;
    spec.domain_halfwidth = 0.5;

    const std::string text = serialize_config(spec);
    const RunSpec back = parse_config_text(text);
    CHECK(back.sim.regime == spec.sim.regime);
    CHECK(back.sim.k == spec.sim.k);
    CHECK(back.sim.sigma_lo == spec.sim.sigma_lo);
    CHECK(back.sim.sigma_hi == spec.sim.sigma_hi);
    CHECK(back.sim.nu == spec.sim.nu);
    CHECK(back.sim.dt == spec.sim.dt);
    CHECK(back.sim.n_steps == spec.sim.n_steps);
    CHECK(back.sim.n_paths == spec.sim.n_paths);
    CHECK(back.sim.epsilon == spec.sim.epsilon);
    CHECK(back.sim.seed == spec.sim.seed);
    CHECK(back.sim.record_vol_paths == spec.sim.record_vol_paths);
    CHECK(back.x_nodes == spec.x_nodes);
    CHECK(back.domain_halfwidth == spec.domain_halfwidth);

    // Canonical form is stable under a second round trip.
    CHECK(serialize_config(back) == text);
}

TEST_CASE("parser skips comments and blank lines, trims whitespace") {
    const RunSpec spec = parse_config_text("# experiment\n"
                                           "\n"
                                           "  regime = case1-hamiltonian  \n"
                                           "\tnu\t=\t0.3\n"
                                           "seed=42\r\n");
    CHECK(spec.sim.regime == Regime::Case1Hamiltonian);
    CHECK(spec.sim.nu == 0.3);
    CHECK(spec.sim.seed == 42);
    // Untouched keys keep their defaults.
    CHECK(spec.sim.k == 31);
    CHECK(spec.sim.n_paths == 100000);
}

TEST_CASE("parser errors name the problem") {
    CHECK_THROWS_WITH_AS(parse_config_text("volatility=0.2\n"),
                         doctest::Contains("unknown config key 'volatility'"),
                         InvalidArgument);
    CHECK_THROWS_WITH_AS(parse_config_text("dt=fast\n"),
                         doctest::Contains("dt: cannot parse value"), InvalidArgument);
    CHECK_THROWS_WITH_AS(parse_config_text("regime=case9\n"),
                         doctest::Contains("regime"), InvalidArgument);
    CHECK_THROWS_WITH_AS(parse_config_text("just a line\n"),
                         doctest::Contains("config line 1"), InvalidArgument);
    CHECK_THROWS_WITH_AS(parse_config_text("record_vol_paths=maybe\n"),
                         doctest::Contains("record_vol_paths"), InvalidArgument);
    // Structurally fine but semantically invalid: validation runs on load.
    CHECK_THROWS_WITH_AS(parse_config_text("n_paths=0\n"),
                         doctest::Contains("n_paths"), InvalidArgument);
}

TEST_CASE("load_config_file reports missing files with the path") {
    CHECK_THROWS_WITH_AS(load_config_file("/nonexistent/quvol.cfg"),
                         doctest::Contains("/nonexistent/quvol.cfg"), Error);
}

} // TEST_SUITE
