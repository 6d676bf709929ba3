#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "levyarea/errors.hpp"
#include "levyarea/inventory.hpp"

using namespace levyarea;
using doctest::Approx;

namespace {
const HoldingFunction kLinear = HoldingFunction::linear(1.0);
}

TEST_CASE("average cost and g") {
    const CostModel eoq(4.0, kLinear, 0.5);
    CHECK(eoq.scaled_setup() == 2.0);
    CHECK(average_cost(eoq, 2.0) == Approx(2.0));
    CHECK(g_function(eoq, 3.0) == Approx(4.5));
    CHECK(g_function(CostModel(1.0, HoldingFunction::linear(2.5), 1.0), 2.0) == Approx(2.5 * 4.0 / 2.0));

    const CostModel flat(4.0, HoldingFunction::constant(0.0), 0.5);
    CHECK(average_cost(flat, 1e6) == Approx(2.0 / 1e6));
    const CostModel c(4.0, HoldingFunction::constant(3.0), 0.5);
    for (double x : {0.5, 1.0, 10.0}) {
        CHECK(g_function(c, x) == 0.0);
        CHECK(average_cost(c, x) == Approx(2.0 / x + 3.0));
    }
    CHECK(g_function(CostModel(1.0, HoldingFunction::power(1.0, 2.0), 1.0), 1.0) == Approx(2.0 / 3.0));

    CHECK_THROWS_AS(CostModel(0.0, kLinear, 0.5), InvalidParameter);
    CHECK_THROWS_AS(CostModel(1.0, HoldingFunction::piecewise_linear({{0.0, 2.0}, {1.0, 1.0}}), 0.5), InvalidParameter);
    CHECK_THROWS_AS(average_cost(eoq, 0.0), DomainError);
}

TEST_CASE("EOQ closed forms") {
    const CostModel eoq(4.0, kLinear, 0.5);
    const OptimalOrder o = optimal_order(eoq);
    REQUIRE(o.bounded);
    CHECK(std::abs(o.x_star - 2.0) <= 1e-10);
    CHECK(std::abs(o.cost - 2.0) <= 1e-10);
    CHECK(o.unimodal);
    CHECK(std::abs(break_even_penalty(eoq) - 4.0) <= 1e-10);

    const CostModel rewarded(4.0, kLinear, 0.5, 4.0);
    CHECK(std::abs(break_even_penalty(rewarded)) <= 1e-10);
    const CostModel doubled(4.0, kLinear, 0.5, 8.0);
    CHECK(break_even_penalty(doubled) == Approx(break_even_penalty(rewarded) - 4.0));

    // built from an exponent
    const LaplaceExponent mm1(fixtures::mm1());
    const OptimalOrder m = optimal_order(CostModel(4.0, HoldingFunction::linear(2.0), mm1));
    CHECK(m.x_star == Approx(std::sqrt(2.0 * 0.5 * 4.0 / 2.0)).epsilon(1e-12));
}

TEST_CASE("EOQ property over random parameters") {
    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(0.1, 10.0);
    for (int i = 0; i < 100; ++i) {
        const double k = u(gen), c = u(gen), s = u(gen);
        const OptimalOrder o = optimal_order(CostModel(k, HoldingFunction::linear(c), s));
        CHECK(o.x_star == Approx(std::sqrt(2.0 * s * k / c)).epsilon(1e-12));
        CHECK(o.cost == Approx(std::sqrt(2.0 * s * k * c)).epsilon(1e-12));
    }
}

TEST_CASE("unbounded and concave holding costs") {
    const OptimalOrder c = optimal_order(CostModel(4.0, HoldingFunction::constant(1.0), 0.5));
    CHECK_FALSE(c.bounded);
    CHECK(c.cap > 0.0);
    CHECK_THROWS_AS(break_even_penalty(CostModel(4.0, HoldingFunction::constant(1.0), 0.5)), UnboundedUpstream);

    // saturating cost: g(x) tends to 1 < K'
    const auto sat = HoldingFunction::piecewise_linear({{0.0, 0.0}, {1.0, 2.0}});
    CHECK_FALSE(optimal_order(CostModel(4.0, sat, 0.5)).bounded);
    // ... but is bounded once K' < 1
    const OptimalOrder s = optimal_order(CostModel(0.5, sat, 0.5));
    REQUIRE(s.bounded);
    CHECK(s.unimodal);

    // sqrt holding cost: g(x) = x^{3/2} / 3
    for (double k : {0.1, 1.0, 50.0}) {
        const OptimalOrder p = optimal_order(CostModel(k, HoldingFunction::power(1.0, 0.5), 0.5));
        REQUIRE(p.bounded);
        CHECK(p.unimodal);
        CHECK(p.x_star == Approx(std::pow(3.0 * 0.5 * k, 2.0 / 3.0)).epsilon(1e-12));
    }
}

TEST_CASE("multiclass linear") {
    const std::vector<double> c{1.0, 3.0};
    const MulticlassSolution s = multiclass_linear(c, 4.0, 0.5);
    CHECK(s.x == Approx(2.0));
    CHECK(s.proportions == std::vector<double>{1.0, 0.0});
    CHECK(s.objective == Approx(2.0));
    CHECK(s.unique);

    const std::vector<double> ties{2.0, 2.0, 2.0};
    const MulticlassSolution t = multiclass_linear(ties, 4.0, 0.5);
    CHECK_FALSE(t.unique);
    for (double p : t.proportions) CHECK(p == Approx(1.0 / 3.0));

    const std::vector<double> one{1.0};
    const MulticlassSolution m1 = multiclass_linear(one, 4.0, 0.5);
    const OptimalOrder o = optimal_order(CostModel(4.0, kLinear, 0.5));
    CHECK(m1.x == Approx(o.x_star));
    CHECK(m1.objective == Approx(o.cost));
}

TEST_CASE("multiclass cost") {
    const std::vector<HoldingFunction> single{HoldingFunction::power(2.0, 1.5)};
    const std::vector<double> whole{1.0};
    const CostModel model(3.0, single[0], 0.7);
    CHECK(multiclass_cost(single, whole, 1.7, 3.0, 0.7) == Approx(average_cost(model, 1.7)));

    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> u(0.05, 5.0);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + trial % 4;
        std::vector<double> c(m), p(m);
        std::vector<HoldingFunction> hs;
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            c[i] = u(gen);
            p[i] = u(gen);
            sum += p[i];
            hs.push_back(HoldingFunction::linear(c[i]));
        }
        double acc = 0.0;
        for (int i = 0; i + 1 < m; ++i) {
            p[i] /= sum;
            acc += p[i];
        }
        p[m - 1] = 1.0 - acc;
        const double x = u(gen);
        const double general = multiclass_cost(hs, p, x, 2.0, 0.5);
        const double linear = multiclass_linear_cost(c, p, x, 2.0, 0.5);
        CHECK(general == Approx(linear).epsilon(1e-10));
        const double cmin = *std::min_element(c.begin(), c.end());
        CHECK(general >= 0.5 * 2.0 / x + x * cmin / 2.0 - 1e-12);
    }

    const std::vector<double> bad{0.6, 0.5};
    const std::vector<HoldingFunction> two{kLinear, kLinear};
    CHECK_THROWS_AS(multiclass_cost(two, bad, 1.0, 1.0, 1.0), BadProportions);
    const std::vector<double> negative{1.5, -0.5};
    CHECK_THROWS_AS(multiclass_cost(two, negative, 1.0, 1.0, 1.0), BadProportions);
}

TEST_CASE("fixed proportions") {
    const std::vector<HoldingFunction> hs{HoldingFunction::linear(1.0), HoldingFunction::linear(3.0)};
    const std::vector<double> p{0.25, 0.75};
    const FixedProportionOrder f = optimal_order_fixed_proportions(hs, p, 4.0, 0.5);
    REQUIRE(f.convex);
    REQUIRE(f.order.bounded);
    // H(x) = x^2 / 2 * sum c_i (F_i^2 - F_{i-1}^2)
    const double q = 1.0 * 0.0625 + 3.0 * (1.0 - 0.0625);
    CHECK(f.order.x_star == Approx(std::sqrt(2.0 * 0.5 * 4.0 / q)).epsilon(1e-12));
    CHECK(f.order.cost == Approx(multiclass_linear_cost(std::vector<double>{1.0, 3.0}, p, f.order.x_star, 4.0, 0.5)));

    // a saturating second class puts a concave kink in H at x = 2
    const std::vector<HoldingFunction> kinked{HoldingFunction::constant(0.0),
                                              HoldingFunction::piecewise_linear({{0.0, 0.0}, {1.0, 1.0}})};
    const std::vector<double> half{0.5, 0.5};
    const FixedProportionOrder k = optimal_order_fixed_proportions(kinked, half, 4.0, 0.5);
    CHECK_FALSE(k.convex);
    CHECK_FALSE(k.order.bounded);
}
