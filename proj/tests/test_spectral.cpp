#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hsg/coefficients.hpp"
#include "hsg/field.hpp"
#include "hsg/operator_spec.hpp"

using namespace hsg;

TEST_CASE("eigenvalues") {
    CHECK(eig_L(0, 1.0, 1) == 4.0);
    CHECK(eig_L(1, -0.5, 2) == doctest::Approx(8.0));
    CHECK_THROWS_AS(eig_L(0, 0.0, 1), std::domain_error);
    for (int k = 0; k < 20; ++k) CHECK(eig_L(k + 1, 0.7, 2) > eig_L(k, 0.7, 2));
}

TEST_CASE("conformal multiplier") {
    // s = 1 collapses to the sublaplacian eigenvalue: Gamma(rho+1)/Gamma(rho) = rho
    OperatorSpec c1 = OperatorSpec::conformal(1.0, 1);
    for (int k : {0, 3, 17, 48})
        for (double lam : {0.01, 1.0, 100.0})
            CHECK(c1.multiplier(k, lam, 1).real() ==
                  doctest::Approx(eig_L(k, lam, 1)).epsilon(1e-13));

    // s -> 0+ tends to 1
    OperatorSpec c0 = OperatorSpec::conformal(1e-9, 1);
    CHECK(c0.multiplier(5, 2.0, 1).real() == doctest::Approx(1.0).epsilon(1e-6));

    // s = 1/2, k = 0, d = 1, lambda = 1: sqrt(2) Gamma(2.75)/Gamma(2.25)
    OperatorSpec ch = OperatorSpec::conformal(0.5, 1);
    double want = std::sqrt(2.0) * std::exp(std::lgamma(2.75) - std::lgamma(2.25));
    CHECK(ch.multiplier(0, 1.0, 1).real() == doctest::Approx(want).epsilon(1e-14));

    CHECK_THROWS(OperatorSpec::conformal(2.0, 1));  // s < d+1 required
    CHECK_NOTHROW(OperatorSpec::conformal(2.0, 2));
}

TEST_CASE("multiplier variants") {
    OperatorSpec br = OperatorSpec::sobolev_bracket(-0.5);
    double m = eig_L(2, 1.5, 1);
    CHECK(br.multiplier(2, 1.5, 1).real() == doctest::Approx(std::pow(1.0 + m * m, -0.25)));
    OperatorSpec pw = OperatorSpec::power_of_L(0.5);
    CHECK(pw.multiplier(2, 1.5, 1).real() == doctest::Approx(std::sqrt(m)));
    OperatorSpec at = OperatorSpec::abs_T(1.0);
    CHECK(at.multiplier(2, -1.5, 1).real() == doctest::Approx(1.5));
    OperatorSpec vt = OperatorSpec::vertical_T();
    CHECK(vt.multiplier(0, 2.0, 1) == Complex(0.0, -2.0));
    CHECK_THROWS(OperatorSpec::resolvent(OperatorSpec::sublaplacian(), {1.0, 0.0}));
}

namespace {
SpectralCoefficients test_field(int d, int kmax) {
    auto modes = FieldFamily::random_modes(42, 6);
    return FieldFamily::build(d, kmax, LambdaGrid::make_default(), modes);
}
}  // namespace

TEST_CASE("apply: resolvent inverse relation") {
    SpectralCoefficients c = test_field(1, 24);
    Complex sigma{0.4, 0.9};
    OperatorSpec H = OperatorSpec::pure_fractional(0.75);
    SpectralCoefficients r = c.apply(OperatorSpec::resolvent(H, sigma));
    // multiply back by (H - sigma) as a product with a constant shift folded in
    MatrixC back = r.values();
    const LambdaGrid& g = c.grid();
    for (int j = 0; j < g.size(); ++j)
        for (int k = 0; k <= c.kmax(); ++k)
            back(k, j) *= (H.multiplier(k, g.point(j), 1) - sigma);
    double err = (SpectralCoefficients(1, c.kmax(), g, back) - c).l2_norm() / c.l2_norm();
    CHECK(err < 1e-12);
}

TEST_CASE("apply: propagator preserves the norm") {
    SpectralCoefficients c = test_field(1, 24);
    SpectralCoefficients p =
        c.apply(OperatorSpec::propagator(OperatorSpec::sublaplacian(), 0.37));
    CHECK(std::abs(p.l2_norm() - c.l2_norm()) / c.l2_norm() < 1e-14);
}

TEST_CASE("apply: trivial resolvent bound") {
    SpectralCoefficients c = test_field(2, 24);
    for (Complex sigma : {Complex{0.0, 0.05}, Complex{3.0, -0.7}, Complex{-2.0, 1.0}}) {
        SpectralCoefficients r =
            c.apply(OperatorSpec::resolvent(OperatorSpec::sublaplacian(), sigma));
        CHECK(r.l2_norm() <= c.l2_norm() / std::abs(sigma.imag()) * (1.0 + 1e-14));
    }
}

TEST_CASE("apply: overflow guard") {
    SpectralCoefficients c = test_field(1, 24);
    CHECK_THROWS_AS(c.apply(OperatorSpec::power_of_L(200.0)), std::overflow_error);
}

TEST_CASE("dilate: unitary index shift") {
    SpectralCoefficients c = test_field(1, 24);
    SpectralCoefficients d0 = c.dilate(0);
    CHECK((d0 - c).l2_norm() == 0.0);
    for (int steps : {-16, 8, 32}) {
        SpectralCoefficients ds = c.dilate(steps);
        CHECK(std::abs(ds.l2_norm() - c.l2_norm()) / c.l2_norm() < 1e-13);
    }
    // pushing the support past the grid edge must throw
    CHECK_THROWS_AS(c.dilate(3000), std::out_of_range);
}

TEST_CASE("lambda grid structure") {
    LambdaGrid g = LambdaGrid::make_default();
    CHECK(g.size() == 2 * g.count_per_sign());
    CHECK(g.count_per_sign() == 14 * 32 + 1);
    CHECK(g.point(0) == -g.point(g.size() - 1));
    CHECK(g.point(g.count_per_sign()) == doctest::Approx(std::exp2(-7.0)));
    CHECK(g.point(g.size() - 1) == doctest::Approx(std::exp2(7.0)));
    // geometric within each sign
    for (int i = g.count_per_sign() + 1; i < g.size(); ++i)
        CHECK(g.point(i) / g.point(i - 1) == doctest::Approx(g.ratio()).epsilon(1e-14));
    CHECK(g.nearest_index(1.0) == g.count_per_sign() + 7 * 32);
    CHECK(g.nearest_index(-1.0) == g.count_per_sign() - 1 - 7 * 32);
}

TEST_CASE("lemma 4.3 multiplier inequality |lambda| <= eig/2") {
    LambdaGrid g = LambdaGrid::make_default();
    for (int d : {1, 2, 3})
        for (int k : {0, 1, 5, 48})
            for (int j = 0; j < g.size(); j += 13)
                CHECK(std::abs(g.point(j)) <= 0.5 * eig_L(k, g.point(j), d));
}

TEST_CASE("comparability range") {
    ComparabilityRange cr = comparability_range(1.0, 1, 64, {0.5, 1.0, 2.0});
    CHECK(cr.c_s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cr.C_s == doctest::Approx(1.0).epsilon(1e-12));

    ComparabilityRange c6 = comparability_range(0.6, 1, 256, {0.25, 1.0, 4.0});
    CHECK(c6.c_s > 0.0);
    CHECK(c6.C_s >= c6.c_s);
    CHECK(c6.C_s / c6.c_s < 2.0);
    CHECK(c6.stirling_gap < 1e-5);

    // ratio approaches 1 along k
    OperatorSpec conf = OperatorSpec::conformal(0.6, 1);
    OperatorSpec pure = OperatorSpec::pure_fractional(0.6);
    double r16 = conf.multiplier(16, 1.0, 1).real() / pure.multiplier(16, 1.0, 1).real();
    double r256 = conf.multiplier(256, 1.0, 1).real() / pure.multiplier(256, 1.0, 1).real();
    CHECK(std::abs(r256 - 1.0) < std::abs(r16 - 1.0));
}
