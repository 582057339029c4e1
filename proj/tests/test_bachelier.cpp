#include <doctest.h>

#include <cmath>
#include <vector>

#include "quvol/bachelier.hpp"
#include "quvol/engine.hpp"
#include "quvol/errors.hpp"
#include "quvol/normal.hpp"
#include "quvol/rng.hpp"

using namespace quvol;

namespace {

// Trapezoid quadrature of E[(X - K)+] for X ~ N(F, sigma^2 T): an oracle
// for the closed-form call that shares no code with it.
double call_quadrature(double forward, double strike, double sigma_n, double t) {
    const double sd = sigma_n * std::sqrt(t);
    const double lo = strike;
    const double hi = forward + 12.0 * sd;
    if (hi <= lo) {
        return 0.0;
    }
    const std::size_t n = 200000;
    const double h = (hi - lo) / static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = lo + h * static_cast<double>(i);
        const double f = (x - strike) * norm_pdf((x - forward) / sd) / sd;
        acc += (i == 0 || i == n) ? 0.5 * f : f;
    }
    return acc * h;
}

} // namespace

TEST_SUITE("bachelier") {

TEST_CASE("at-the-money closed form") {
    // F == K: price reduces to sigma * sqrt(T) * phi(0).
    const double sigma = 0.2;
    const double t = 0.08;
    const double expected = sigma * std::sqrt(t) * norm_pdf(0.0);
    CHECK(bachelier_call(0.0, 0.0, sigma, t) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(bachelier_call(5.0, 5.0, sigma, t) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("price matches independent quadrature") {
    const double cases[][4] = {
        {0.0, 0.01, 0.2, 0.0833},
        {0.0, -0.05, 0.2, 0.08},
        {0.0, 0.05, 0.1, 0.25},
        {1.0, 1.02, 0.3, 0.5},
    };
    for (const auto& c : cases) {
        const double closed = bachelier_call(c[0], c[1], c[2], c[3]);
        const double quad = call_quadrature(c[0], c[1], c[2], c[3]);
        CHECK(closed == doctest::Approx(quad).epsilon(1e-6));
    }
}

TEST_CASE("price limits and bounds") {
    // Deep in the money: price approaches intrinsic value.
    CHECK(bachelier_call(1.0, 0.0, 0.01, 0.01) == doctest::Approx(1.0).epsilon(1e-9));
    // Deep out of the money: price vanishes.
    CHECK(bachelier_call(0.0, 1.0, 0.01, 0.01) <= 1e-12);
    // Always above intrinsic, increasing in vol.
    CHECK(bachelier_call(0.0, -0.02, 0.2, 0.08) > 0.02);
    CHECK(bachelier_call(0.0, 0.01, 0.3, 0.08) > bachelier_call(0.0, 0.01, 0.2, 0.08));
    CHECK_THROWS_AS(bachelier_call(0.0, 0.0, 0.0, 0.08), InvalidArgument);
    CHECK_THROWS_AS(bachelier_call(0.0, 0.0, 0.2, 0.0), InvalidArgument);
}

TEST_CASE("implied vol round-trips the closed form") {
    const double t = 0.08;
    // Strikes are kept within a few standard deviations of the forward:
    // tens of sd in the money the price collapses onto intrinsic value in
    // double precision and no solver could recover the vol.
    for (double sigma : {0.01, 0.05, 0.2, 0.35, 1.0, 5.0}) {
        for (double strike : {-0.01, 0.0, 0.01}) {
            const double price = bachelier_call(0.0, strike, sigma, t);
            const double back = implied_normal_vol(price, 0.0, strike, t);
            CHECK(back == doctest::Approx(sigma).epsilon(1e-7));
        }
    }
    for (double sigma : {0.2, 0.35, 1.0}) {
        for (double strike : {-0.1, 0.1}) {
            const double price = bachelier_call(0.0, strike, sigma, t);
            const double back = implied_normal_vol(price, 0.0, strike, t);
            CHECK(back == doctest::Approx(sigma).epsilon(1e-7));
        }
    }
}

TEST_CASE("implied vol failure modes") {
    const double t = 0.08;
    // At or below intrinsic value there is no vol to recover.
    CHECK_THROWS_AS(implied_normal_vol(0.0, 0.0, 0.01, t), NoSolutionError);
    CHECK_THROWS_AS(implied_normal_vol(0.05, 0.1, 0.0, t), NoSolutionError); // == intrinsic
    CHECK_THROWS_AS(implied_normal_vol(-0.01, 0.0, 0.01, t), NoSolutionError);
    // Above the ceiling price at vol 10 the bracket cannot close.
    const double ceiling = bachelier_call(0.0, 0.01, 10.0, t);
    CHECK_THROWS_AS(implied_normal_vol(ceiling * 1.01, 0.0, 0.01, t), BracketError);
    CHECK_THROWS_AS(implied_normal_vol(0.05, 0.0, 0.01, 0.0), InvalidArgument);
}

TEST_CASE("empirical call price on hand samples") {
    const std::vector<double> xs{-0.2, -0.1, 0.0, 0.1, 0.2};
    // Strike 0.05: payoffs are 0, 0, 0, 0.05, 0.15 -> mean 0.04.
    CHECK(empirical_call_price(xs, 0.05) == doctest::Approx(0.04).epsilon(1e-15));
    // Strike below every sample: price is mean(x) - K.
    CHECK(empirical_call_price(xs, -0.3) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(empirical_call_price(xs, 0.3) == 0.0);
    CHECK_THROWS_AS(empirical_call_price(std::vector<double>{}, 0.0), InvalidArgument);
}

TEST_CASE("empirical price of a gaussian sample approaches the closed form") {
    const double sigma = 0.2;
    const double t = 0.08;
    const double sd = sigma * std::sqrt(t);
    std::vector<double> xs(200000);
    PathRng rng(1234, 0);
    for (double& x : xs) {
        x = sd * rng.normal();
    }
    for (double strike : {-0.05, 0.0, 0.05}) {
        const double mc = empirical_call_price(xs, strike);
        const double exact = bachelier_call(0.0, strike, sigma, t);
        // MC standard error of the payoff mean is below 6e-5/sqrt(2e5)*...;
        // allow 4 sigma.
        CHECK(std::abs(mc - exact) <= 4.0 * sd / std::sqrt(200000.0));
    }
}

TEST_CASE("surface prices every strike and records failures") {
    SimConfig c;
    c.regime = Regime::Case1Fixed;
    c.seed = 7;
    c.n_paths = 50000;
    c.n_steps = 20;
    const PathEnsemble ens = simulate(c);

    // Far-right strike prices to zero: no implied vol exists there.
    const std::vector<double> strikes{-0.08, -0.02, 0.0, 0.02, 0.08, 10.0};
    const auto pts = surface(ens, strikes);
    REQUIRE(pts.size() == strikes.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(pts[i].strike == strikes[i]);
        CHECK(pts[i].horizon == doctest::Approx(0.08).epsilon(1e-15));
    }
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        CHECK(pts[i].call_price >= pts[i + 1].call_price); // decreasing in strike
    }
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(pts[i].status == InversionStatus::Ok);
        // Implied vols must sit inside the level range of the mixture.
        CHECK(pts[i].implied_normal_vol > 0.05);
        CHECK(pts[i].implied_normal_vol < 0.35);
    }
    CHECK(pts[5].status == InversionStatus::NoSolution);
    CHECK(std::isnan(pts[5].implied_normal_vol));

    // Mixture smile: levels mixed across paths raise the wings relative to
    // the money.  ATM vol should be below the wing vols.
    CHECK(pts[2].implied_normal_vol < pts[0].implied_normal_vol);
    CHECK(pts[2].implied_normal_vol < pts[4].implied_normal_vol);

    CHECK_THROWS_AS(surface(ens, std::vector<double>{}), InvalidArgument);
}

TEST_CASE("inversion status names") {
    CHECK(to_string(InversionStatus::Ok) == "ok");
    CHECK(to_string(InversionStatus::NoSolution) == "no_solution");
    CHECK(to_string(InversionStatus::BracketError) == "bracket_error");
}

} // TEST_SUITE
