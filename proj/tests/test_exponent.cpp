#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "levyarea/errors.hpp"
#include "levyarea/exponent.hpp"
#include "levyarea/numdiff.hpp"

using namespace levyarea;
using doctest::Approx;

TEST_CASE("jump laws: moments and transforms") {
    const auto e = JumpDistribution::exponential(2.0);
    CHECK(e.moment(1) == Approx(0.5));
    CHECK(e.moment(3) == Approx(6.0 / 8.0));
    CHECK(e.laplace_minus_one(1.0) == Approx(2.0 / 3.0 - 1.0));

    const auto g = JumpDistribution::gamma(2.0, 0.5);
    CHECK(g.moment(1) == Approx(1.0));
    CHECK(g.moment(2) == Approx(1.5));

    const auto u = JumpDistribution::uniform(0.6);
    CHECK(u.moment(2) == Approx(0.12));
    // no cancellation near 0
    CHECK(u.laplace_minus_one(1e-9) == Approx(-0.3e-9).epsilon(1e-9));
    CHECK(e.laplace_minus_one(1e-12) == Approx(-0.5e-12).epsilon(1e-9));

    const auto d = JumpDistribution::deterministic(0.5);
    CHECK(d.tilted_mean(2.0) == Approx(0.5 * std::exp(-1.0)));

    CHECK_THROWS_AS(JumpDistribution::exponential(0.0), InvalidParameter);
    CHECK_THROWS_AS(JumpDistribution::uniform(-1.0), InvalidParameter);
}

TEST_CASE("build_exponent validates the spec") {
    ProcessSpec s = fixtures::mm1();
    s.jumps.reset();
    CHECK_THROWS_AS(LaplaceExponent{s}, MissingJumpDist);

    s = fixtures::mm1();
    s.drift = -0.5; // d + rate E J = 0
    CHECK_THROWS_AS(LaplaceExponent{s}, MeanDriftViolation);
    s.drift = 0.3;
    CHECK_THROWS_AS(LaplaceExponent{s}, MeanDriftViolation);

    s = fixtures::brownian();
    s.sigma2 = -1.0;
    CHECK_THROWS_AS(LaplaceExponent{s}, InvalidParameter);

    CHECK_THROWS_AS(LaplaceExponent(fixtures::mm1(), 0), InvalidParameter);
    CHECK_THROWS_AS(LaplaceExponent(fixtures::mm1(), LaplaceExponent::kMaxOrders + 1), InvalidParameter);
}

TEST_CASE("phi on the reference specs") {
    const LaplaceExponent bm(fixtures::brownian());
    CHECK(bm(0.0) == 0.0);
    CHECK(bm(1.0) == Approx(1.5));
    CHECK(bm(2.0) == Approx(4.0));
    CHECK_THROWS_AS(bm(-1e-3), DomainError);

    const LaplaceExponent mm1(fixtures::mm1());
    CHECK(mm1(2.0) == Approx(1.5));
    CHECK(mm1.deriv0(1) == Approx(0.5));
    CHECK(mm1.deriv0(2) == Approx(0.5));
    // phi^{(n)}(0) = (-1)^n rate E J^n for n >= 3
    CHECK(mm1.deriv0(3) == Approx(-0.75));
    CHECK(mm1.deriv0(4) == Approx(1.5));

    const LaplaceExponent drift(fixtures::drift_only());
    for (double a : {0.0, 0.3, 7.0}) CHECK(drift(a) == Approx(a));

    const LaplaceExponent gam(fixtures::gamma_jumps());
    CHECK(gam(1.3) == Approx(1.9673094582185491276).epsilon(1e-14));

    const LaplaceExponent uni(fixtures::uniform_jumps());
    CHECK(uni(1e-3) == Approx(0.00040011998200215980621).epsilon(1e-12));
    CHECK(uni(2.5) == Approx(1.5358264531354269166).epsilon(1e-14));
}

TEST_CASE("phi inverse") {
    const LaplaceExponent bm(fixtures::brownian());
    CHECK(bm.inverse(0.0) == 0.0);
    CHECK(bm.inverse(1.5) == Approx(1.0).epsilon(1e-12));
    for (double t : {1e-8, 0.01, 3.0, 1e6}) CHECK(bm.inverse(t) == Approx(std::sqrt(1.0 + 2.0 * t) - 1.0).epsilon(1e-12));

    const LaplaceExponent mm1(fixtures::mm1());
    CHECK(mm1.inverse(1.5) == Approx(2.0).epsilon(1e-12));
    CHECK_THROWS_AS(mm1.inverse(-1.0), DomainError);

    const LaplaceExponent det(fixtures::deterministic());
    CHECK(det.inverse(1.0) == Approx(1.5360780940269311305).epsilon(1e-12));
}

TEST_CASE("phi inverse reports a bracketing failure") {
    const LaplaceExponent tight(fixtures::drift_only(-1e-300), 2, InverseOptions{1e-10, 20});
    CHECK_THROWS_AS(tight.inverse(1.0), ConvergenceFailure);
}

TEST_CASE("hitting-time moments") {
    const LaplaceExponent mm1(fixtures::mm1());
    CHECK(mm1.hitting_time_mean(1.0) == Approx(2.0));
    CHECK(mm1.hitting_time_mean(0.0) == 0.0);
    CHECK(mm1.hitting_time_variance_rate() == Approx(4.0));
    const LaplaceExponent bm(fixtures::brownian());
    CHECK(bm.hitting_time_mean(3.0) == Approx(3.0));
}

TEST_CASE("properties over the catalog") {
    for (const auto& spec : fixtures::catalog()) {
        const LaplaceExponent e(spec);
        CAPTURE(spec.drift);
        CAPTURE(spec.jump_rate);
        CHECK(e(0.0) == 0.0);
        CHECK(e.deriv0(1) == Approx(-spec.mean_increment()));
        CHECK(e.deriv0(2) >= 0.0);

        // convexity: second divided differences on a random grid
        double prev_a = 0.0;
        double prev_slope = -1.0;
        for (int i = 1; i <= 200; ++i) {
            const double a = 1e3 * std::pow(i / 200.0, 3.0);
            const double slope = (e(a) - e(prev_a)) / (a - prev_a);
            CHECK(slope >= prev_slope - 1e-9 * std::max(1.0, std::abs(slope)));
            prev_slope = slope;
            prev_a = a;
        }

        // round trip phi(phi^{-1}(theta)) = theta
        for (int i = 0; i <= 24; ++i) {
            const double theta = e.slope_at_zero() * std::pow(10.0, -6.0 + 0.5 * i);
            CHECK(e(e.inverse(theta)) == Approx(theta).epsilon(1e-10));
        }

        // closed-form derivative against finite differences
        for (double a : {0.1, 1.0, 4.0}) {
            const double fd = forward_derivative([&](double t) { return e(t); }, 1, a, 1e-3, 4);
            CHECK(e.derivative(a) == Approx(fd).epsilon(1e-7));
        }
    }
}
