#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "conga/relax.hpp"

using namespace conga;

TEST_CASE("heaviside steps at zero, tie to zero") {
    CHECK(heaviside(-0.2) == 0);
    CHECK(heaviside(0.0) == 0);
    CHECK(heaviside(1e-9) == 1);
    CHECK(heaviside(5.0) == 1);
}

TEST_CASE("soft_sigmoid reference values") {
    CHECK(soft_sigmoid(0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(soft_sigmoid(0.0, 30.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(soft_sigmoid(2.0, 1.0) ==
          doctest::Approx(0.880797077977882444).epsilon(1e-12));
    // Temperature just rescales the input: sigma(1/2) = sigma(0.5).
    CHECK(soft_sigmoid(1.0, 2.0) ==
          doctest::Approx(0.622459331201854565).epsilon(1e-12));
    CHECK(soft_sigmoid(1.0, 1.0) ==
          doctest::Approx(0.731058578630004879).epsilon(1e-12));
}

TEST_CASE("soft_sigmoid symmetry and monotonicity") {
    for (double t : {0.1, 0.7, 2.0, 9.0})
        for (double tau : {0.1, 1.0, 30.0})
            CHECK(soft_sigmoid(-t, tau) ==
                  doctest::Approx(1.0 - soft_sigmoid(t, tau)).epsilon(1e-12));
    double prev = 0.0;
    for (double t = -20.0; t <= 20.0; t += 0.25) {
        double s = soft_sigmoid(t, 3.0);
        CHECK(s > prev);
        prev = s;
    }
}

TEST_CASE("sigmoid_grad reference values") {
    CHECK(sigmoid_grad(2.0, 1.0) ==
          doctest::Approx(0.104993585403506517).epsilon(1e-12));
    // tau = 0.2: sigma'(5)/0.2.
    CHECK(sigmoid_grad(1.0, 0.2) ==
          doctest::Approx(0.006648056670790155 / 0.2).epsilon(1e-12));
    CHECK(sigmoid_grad(0.0, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(sigmoid_grad(0.0, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sigmoid_grad positive, even, and peaked at zero") {
    for (double t : {-8.0, -1.0, 0.0, 0.3, 2.0, 15.0}) {
        CHECK(sigmoid_grad(t, 1.0) > 0.0);
        CHECK(sigmoid_grad(t, 1.0) ==
              doctest::Approx(sigmoid_grad(-t, 1.0)).epsilon(1e-12));
        CHECK(sigmoid_grad(t, 1.0) <= 0.25);
    }
}

TEST_CASE("sigmoid_grad matches a finite difference") {
    const double h = 1e-6;
    for (double t : {-3.0, -0.5, 0.0, 0.9, 4.0}) {
        for (double tau : {0.1, 1.0, 30.0}) {
            double fd =
                (soft_sigmoid(t + h, tau) - soft_sigmoid(t - h, tau)) / (2 * h);
            CHECK(sigmoid_grad(t, tau) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("sample_logistic quantiles") {
    CHECK(sample_logistic(0.5, 1.0) == doctest::Approx(0.0).epsilon(1e-7));
    // u = sigma(1) inverts to ~1.
    CHECK(sample_logistic(0.731058578630004879, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-6));
    CHECK(sample_logistic(0.268941421369995121, 1.0) ==
          doctest::Approx(-1.0).epsilon(1e-6));
    // Scale is a plain multiplier.
    CHECK(sample_logistic(0.9, 2.0) ==
          doctest::Approx(2.0 * sample_logistic(0.9, 1.0)).epsilon(1e-12));
    CHECK(sample_logistic(0.3, 0.0) == 0.0);
}

TEST_CASE("sample_logistic is finite at extreme u and monotone") {
    CHECK(std::isfinite(sample_logistic(1e-300, 1.0)));
    CHECK(std::isfinite(sample_logistic(1.0 - 1e-16, 1.0)));
    double prev = sample_logistic(0.01, 1.0);
    for (double u = 0.02; u < 1.0; u += 0.01) {
        double x = sample_logistic(u, 1.0);
        CHECK(x > prev);
        prev = x;
    }
}

TEST_CASE("hot_sigmoid deterministic hard mode") {
    SplitMix64 rng(1);
    RelaxOutput r = hot_sigmoid(2.0, 1.0, 1.0, true, false, rng);
    CHECK(r.x == 1.0);
    CHECK(r.dxdt == doctest::Approx(0.104993585403506517).epsilon(1e-12));
    r = hot_sigmoid(-0.2, 1.0, 1.0, true, false, rng);
    CHECK(r.x == 0.0);
    // The 0.5 tie rounds down.
    r = hot_sigmoid(0.0, 7.0, 1.0, true, false, rng);
    CHECK(r.x == 0.0);
    CHECK(r.dxdt == doctest::Approx(0.25 / 7.0).epsilon(1e-12));
}

TEST_CASE("hot_sigmoid deterministic soft mode") {
    SplitMix64 rng(1);
    RelaxOutput r = hot_sigmoid(1.0, 2.0, 1.0, false, false, rng);
    CHECK(r.x == doctest::Approx(0.622459331201854565).epsilon(1e-12));
    CHECK(r.dxdt ==
          doctest::Approx(0.622459331201854565 * (1 - 0.622459331201854565) / 2)
              .epsilon(1e-12));
}

TEST_CASE("hot_sigmoid stream discipline") {
    // rand=false must not touch the stream.
    SplitMix64 a(42), b(42);
    (void)hot_sigmoid(1.0, 1.0, 1.0, true, false, a);
    (void)hot_sigmoid(-2.0, 0.1, 1.0, false, false, a);
    CHECK(a.next_u64() == b.next_u64());

    // rand=true consumes exactly one uniform per call.
    SplitMix64 c(7), d(7);
    (void)hot_sigmoid(1.0, 1.0, 1.0, true, true, c);
    (void)d.next_open01();
    CHECK(c.next_u64() == d.next_u64());
}

TEST_CASE("hot_sigmoid stochastic law: P(x=1) = sigma(t/s), tau-free") {
    const int n = 20000;
    for (double t : {-1.0, 0.0, 1.5}) {
        for (double s : {0.5, 1.0, 2.0}) {
            SplitMix64 rng(1234);
            int ones = 0;
            for (int i = 0; i < n; ++i)
                ones += hot_sigmoid(t, 0.37, s, true, true, rng).x > 0.5;
            double p = soft_sigmoid(t, s);
            double band = 4.0 * std::sqrt(p * (1 - p) / n);
            CHECK(std::abs(static_cast<double>(ones) / n - p) <= band);
        }
    }
    // Same seed, different tau: identical hard outputs bit for bit.
    SplitMix64 r1(99), r2(99);
    for (int i = 0; i < 1000; ++i) {
        double x1 = hot_sigmoid(0.8, 0.1, 1.0, true, true, r1).x;
        double x2 = hot_sigmoid(0.8, 30.0, 1.0, true, true, r2).x;
        CHECK(x1 == x2);
    }
}

TEST_CASE("tau_at default schedule") {
    TemperatureSchedule sched;  // 30 -> 30 -> 0.01 over 2000 epochs
    CHECK(tau_at(0, sched) == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(tau_at(1, sched) == doctest::Approx(30.0).epsilon(1e-12));
    CHECK(tau_at(1000, sched) ==
          doctest::Approx(0.548820521989178115).epsilon(1e-9));
    CHECK(tau_at(2000, sched) == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(tau_at(5000, sched) == doctest::Approx(0.01).epsilon(1e-12));
    for (int e = 1; e < 2000; ++e)
        CHECK(tau_at(e + 1, sched) < tau_at(e, sched));
    CHECK_THROWS_AS((void)tau_at(-1, sched), std::invalid_argument);
}

TEST_CASE("tau_at warmup ramp") {
    TemperatureSchedule sched{1.0, 10.0, 0.1, 4, 100};
    CHECK(tau_at(0, sched) == doctest::Approx(1.0));
    CHECK(tau_at(1, sched) == doctest::Approx(3.25));
    CHECK(tau_at(2, sched) == doctest::Approx(5.5));
    CHECK(tau_at(4, sched) == doctest::Approx(10.0));
    CHECK(tau_at(100, sched) == doctest::Approx(0.1));

    TemperatureSchedule no_warmup{5.0, 10.0, 0.1, 0, 100};
    CHECK(tau_at(0, no_warmup) == doctest::Approx(10.0));
}

TEST_CASE("s_at constant and heat modes") {
    NoiseSchedule constant;
    CHECK(s_at(0, constant) == 1.0);
    CHECK(s_at(12345, constant) == 1.0);

    NoiseSchedule heat{NoiseSchedule::Mode::heat, 0.3, 3.0, 100, 1000};
    CHECK(s_at(0, heat) == doctest::Approx(0.3));
    CHECK(s_at(50, heat) == doctest::Approx(1.65));
    CHECK(s_at(100, heat) == doctest::Approx(3.0));
    CHECK(s_at(550, heat) == doctest::Approx(1.65));
    CHECK(s_at(1000, heat) == doctest::Approx(0.3));
    CHECK(s_at(5000, heat) == doctest::Approx(0.3));
    CHECK_THROWS_AS((void)s_at(-3, heat), std::invalid_argument);
}
