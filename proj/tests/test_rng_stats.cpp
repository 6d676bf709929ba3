#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "levyarea/rng.hpp"
#include "levyarea/stats.hpp"

using namespace levyarea;
using doctest::Approx;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    using B = Philox4x32::Block;
    using K = Philox4x32::Key;
    CHECK(Philox4x32::encrypt(B{0, 0, 0, 0}, K{0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::encrypt(B{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, K{0xffffffff, 0xffffffff}) ==
          B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::encrypt(B{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, K{0xa4093822, 0x299f31d0}) ==
          B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are reproducible and distinct") {
    Philox4x32 a(42, 7);
    Philox4x32 b(42, 7);
    Philox4x32 c(42, 8);
    Philox4x32 d(43, 7);
    std::set<std::uint64_t> firsts;
    for (int i = 0; i < 100; ++i) {
        const auto va = a();
        CHECK(va == b());
        firsts.insert(va);
        CHECK(va != c());
        CHECK(va != d());
    }
    CHECK(firsts.size() == 100);
}

TEST_CASE("uniform variates lie in (0, 1) with the right moments") {
    Philox4x32 g(1, 0);
    const int n = 200000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = g.uniform();
        REQUIRE(u > 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum2 += u * u;
    }
    const double mean = sum / n;
    CHECK(std::abs(mean - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::abs(sum2 / n - 1.0 / 3.0) < 0.005);

    // works as a standard URBG
    std::exponential_distribution<double> e(2.0);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += e(g);
    CHECK(std::abs(s / n - 0.5) < 4.0 * 0.5 / std::sqrt(n));
}

TEST_CASE("summary statistics") {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    CHECK(sample_mean(xs) == Approx(2.5));
    CHECK(sample_variance(xs) == Approx(5.0 / 3.0));
    const SimEstimate m = mean_estimate(xs);
    CHECK(m.value == Approx(2.5));
    CHECK(m.std_error == Approx(std::sqrt(5.0 / 3.0 / 4.0)));
    CHECK(m.n == 4);

    const std::vector<double> ys{2.0, 4.0, 6.0, 8.0};
    CHECK(correlation_estimate(xs, ys).value == Approx(1.0));
    const std::vector<double> zs{8.0, 6.0, 4.0, 2.0};
    CHECK(correlation_estimate(xs, zs).value == Approx(-1.0));
    CHECK(ratio_estimate(xs, ys).value == Approx(0.5));
}

TEST_CASE("variance standard error is calibrated") {
    // Var of the sample variance of N(0,1) data is about 2 / n.
    Philox4x32 g(3, 0);
    std::normal_distribution<double> z;
    std::vector<double> xs(20000);
    for (auto& x : xs) x = z(g);
    const SimEstimate v = variance_estimate(xs);
    CHECK(v.std_error == Approx(std::sqrt(2.0 / xs.size())).epsilon(0.05));
    CHECK(std::abs(v.value - 1.0) < 4.0 * v.std_error);
}

TEST_CASE("Kolmogorov-Smirnov") {
    Philox4x32 g(5, 0);
    std::normal_distribution<double> z(0.0, 2.0);
    std::vector<double> xs(20000);
    for (auto& x : xs) x = z(g);
    CHECK(ks_distance_normal(xs, 2.0) < 0.015);
    CHECK(ks_distance_normal(xs, 1.0) > 0.1);

    const std::vector<double> zeros(10, 0.0);
    CHECK(ks_distance_normal(zeros, 0.0) == 0.0);

    std::vector<double> ys(20000);
    for (auto& y : ys) y = z(g);
    const TwoSampleKs same = ks_two_sample(xs, ys);
    CHECK(same.p_value > 0.001);
    for (auto& y : ys) y += 0.2;
    const TwoSampleKs shifted = ks_two_sample(xs, ys);
    CHECK(shifted.p_value < 1e-6);
    CHECK(shifted.statistic > same.statistic);
}
