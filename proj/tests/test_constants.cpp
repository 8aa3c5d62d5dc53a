#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hsg/constants.hpp"
#include "hsg/quadrature.hpp"
#include "hsg/rng.hpp"

using namespace hsg;

TEST_CASE("dawson basic values") {
    CHECK(dawson(1.0, 0.0) == 0.0);
    CHECK(dawson(3.5, 0.0) == 0.0);
    CHECK(dawson(1.0, 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-13));
    // classical Dawson function at 1 (series oracle frozen to 17 digits)
    CHECK(dawson(2.0, 1.0) == doctest::Approx(0.53807950691276841).epsilon(1e-12));
    // Remark-level bound at (p, x) = (2, 2)
    CHECK(dawson(2.0, 2.0) < 0.5 * (1.0 - std::exp(-4.0)));
}

TEST_CASE("dawson p=1 closed form on a dense range") {
    for (int i = 0; i <= 200; ++i) {
        double x = 20.0 * i / 200.0;
        CHECK(std::abs(dawson(1.0, x) - (-std::expm1(-x))) < 1e-12);
    }
}

TEST_CASE("dawson maclaurin inequality sampled densely") {
    for (double p : {1.3, 2.0, 3.0, 5.0}) {
        for (int i = 0; i < 60; ++i) {
            double x = std::pow(10.0, -2.0 + 3.0 * i / 59.0);
            double rhs = std::pow(x, 1.0 - p) * (-std::expm1(-std::pow(x, p)));
            CHECK(dawson(p, x) < rhs);
        }
    }
}

TEST_CASE("kappa flagship value") {
    KappaResult k = kappa({1.0, 1.0, 1.0, 1.0});
    CHECK(std::abs(k.kappa - 6.42686) < 5e-4);
    CHECK(k.kappa < k.closed_bound);
    double lit = 2.0 * std::pow(3.0 * std::exp(0.25) - 2.0, 2);
    CHECK(k.kappa < lit);
    CHECK(k.closed_bound <= lit + 1e-12);  // closed-form inf is attained near b = 1/4
    CHECK(k.b_star > 0.0);
}

TEST_CASE("kappa input validation and K constants") {
    KappaInput in{1.0, 1.0, 1.0, 1.0};
    CHECK(in.K1() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(in.K2() == doctest::Approx(std::sqrt(2.0)));
    CHECK(in.K3() == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS(kappa({1.0, 0.5, 1.0, 1.0}));
    CHECK_THROWS(kappa({1.0, 1.0, -1.0, 1.0}));
    CHECK_THROWS(kappa({1.0, 1.0, 1.0, 0.5}));
}

TEST_CASE("kappa ordering against the closed bound") {
    for (double s : {1.0, 0.75}) {
        for (double mu : {1.0, 0.75}) {
            KappaResult k = kappa({1.0, 1.0, s, mu});
            CHECK(k.kappa < k.closed_bound);
            CHECK(k.kappa > 0.0);
        }
    }
}

TEST_CASE("remark operator bounds") {
    double base = 2.0 * std::pow(3.0 * std::exp(0.25) - 2.0, 2);
    CHECK(remark_operator_bound(OperatorNormCase::W1, 1) ==
          doctest::Approx(base * 64.0).epsilon(1e-14));
    CHECK(remark_operator_bound(OperatorNormCase::W1, 1) == doctest::Approx(439.06).epsilon(1e-4));
    CHECK(remark_operator_bound(OperatorNormCase::W4N, 2) ==
          doctest::Approx(base * 4.0).epsilon(1e-14));
    CHECK(remark_operator_bound(OperatorNormCase::W4N, 2) == doctest::Approx(27.44).epsilon(1e-3));
    CHECK_THROWS_AS(remark_operator_bound(OperatorNormCase::W2, 1), std::domain_error);

    // monotone decrease toward the d -> infinity limits
    for (int d = 1; d < 12; ++d)
        CHECK(remark_operator_bound(OperatorNormCase::W1, d + 1) <
              remark_operator_bound(OperatorNormCase::W1, d));
    CHECK(remark_operator_bound(OperatorNormCase::W1, 100000) ==
          doctest::Approx(base * 25.0).epsilon(1e-3));
}

TEST_CASE("radial bounds") {
    KappaResult k = kappa({1.0, 1.0, 1.0, 1.0});
    double w4 = radial_bound(RadialBoundCase::W4, 1, 1.0, 1.0);
    double want = k.kappa * std::pow((1.0 + std::sqrt(2.0)) * 5.0, 2);
    CHECK(w4 == doctest::Approx(want).epsilon(1e-12));
    CHECK(w4 == doctest::Approx(936.6).epsilon(1e-3));
    double w3 = radial_bound(RadialBoundCase::W3, 1, 1.0, 1.0);
    CHECK(w3 == doctest::Approx(k.kappa * 25.0).epsilon(1e-12));
    CHECK(w3 == doctest::Approx(160.67).epsilon(1e-4));
    // monotone in the weighted-operator factor via d
    CHECK(radial_bound(RadialBoundCase::W4, 2, 1.0, 1.0) < w4);
}

TEST_CASE("stability thresholds") {
    CHECK(stability_threshold(StabilityCase::I, 1) == doctest::Approx(2.277e-3).epsilon(1e-3));
    double c = 3.0 * std::exp(0.25) - 2.0;
    CHECK(stability_threshold(StabilityCase::II, 2) ==
          doctest::Approx(0.5 / (c * c * 81.0)).epsilon(1e-14));
    CHECK_THROWS_AS(stability_threshold(StabilityCase::II, 1), std::domain_error);
    // exact reciprocal pairing with the operator-norm bounds
    for (int d : {1, 2, 3, 7}) {
        CHECK(stability_threshold(StabilityCase::I, d) *
                  remark_operator_bound(OperatorNormCase::W1, d) ==
              doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("gronwall envelope degenerate cases") {
    // u2 = 0: classical Gronwall A e^{u1 (b-eps)}
    auto zero = [](double) { return 0.0; };
    CHECK(gronwall_envelope(2.0, 0.7, zero, 0.1, 1.5) ==
          doctest::Approx(2.0 * std::exp(0.7 * 1.4)).epsilon(1e-12));
    // A = 0, u1 = 0: (1/2 int u2)^2
    auto u2 = [](double r) { return 3.0 * r; };
    double integral = 0.5 * 3.0 * (1.0 - 0.04);  // int_0.2^1 3r dr = 1.44
    CHECK(gronwall_envelope(0.0, 0.0, u2, 0.2, 1.0) ==
          doctest::Approx(0.25 * integral * integral).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature sanity") {
    double v = adaptive_gk([](double x) { return std::exp(-x * x); }, 0.0, 10.0, 1e-13);
    CHECK(v == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-13));
    MinResult m = golden_min([](double x) { return (x - 0.3) * (x - 0.3) + 1.0; }, -2.0, 2.0);
    CHECK(m.x == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(!m.on_boundary);
}
