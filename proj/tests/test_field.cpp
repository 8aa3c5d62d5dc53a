#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hsg/field.hpp"
#include "hsg/laguerre.hpp"
#include "hsg/quadrature.hpp"

using namespace hsg;

namespace {

struct Setup {
    LambdaGrid grid = LambdaGrid::make_default();
    int kmax = 48;
};

SpectralCoefficients seeded_field(const Setup& s, int d, unsigned long long seed) {
    return FieldFamily::build(d, s.kmax, s.grid, FieldFamily::random_modes(seed, 6));
}

}  // namespace

TEST_CASE("synthesize: single coefficient and linearity") {
    Setup s;
    int d = 1;
    SpectralCoefficients c(d, s.kmax, s.grid);
    int j0 = s.grid.nearest_index(2.0);
    c.raw()(0, j0) = 1.0;
    double r = 0.8;
    MatrixC v = synthesize(c, {r}, {0.0});
    double want = s.grid.quad_weight(j0) / (2.0 * M_PI) * basis_eval(0, d, s.grid.point(j0), r);
    CHECK(v(0, 0).real() == doctest::Approx(want).epsilon(1e-14));
    CHECK(v(0, 0).imag() == 0.0);

    SpectralCoefficients f1 = seeded_field(s, d, 1), f2 = seeded_field(s, d, 2);
    Complex a{1.3, -0.2}, b{0.4, 2.2};
    MatrixC lhs = synthesize(f1.scaled(a) + f2.scaled(b), {0.5, 1.5}, {-0.3, 0.9});
    MatrixC rhs = a * synthesize(f1, {0.5, 1.5}, {-0.3, 0.9}) +
                  b * synthesize(f2, {0.5, 1.5}, {-0.3, 0.9});
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13 * rhs.cwiseAbs().maxCoeff());
}

TEST_CASE("zero field analyzes to zero") {
    Setup s;
    SpectralCoefficients c(1, s.kmax, s.grid);
    AnalyzeOptions opt;
    opt.t_box = 10.0;
    opt.targets = fibers_in_band(s.grid, 0.5, 8.0);
    opt.residual_gate = 0.0;
    PhysicalGrid ng = PhysicalGrid::fast(10.0, 8.0);
    AnalyzeResult res = analyze(ClosureField::from_coefficients(c), 1, s.kmax, s.grid, ng, opt);
    CHECK(res.coeffs.l2_norm() == 0.0);
}

TEST_CASE("roundtrip on band-limited fields") {
    Setup s;
    for (int d : {1, 2, 3}) {
        auto modes = FieldFamily::random_modes(100 + d, 6);
        SpectralCoefficients c = FieldFamily::build(d, s.kmax, s.grid, modes);
        double T = FieldFamily::t_window(modes);
        double top = FieldFamily::lambda_top(modes);
        AnalyzeOptions opt;
        opt.t_box = T;
        opt.targets = fibers_in_band(s.grid, 0.01, top * 3.0);
        opt.content_lambda_max = top;
        opt.residual_gate = 1e-6;
        PhysicalGrid ng = PhysicalGrid::fine(T, top);
        AnalyzeResult res =
            analyze(ClosureField::from_coefficients(c), d, s.kmax, s.grid, ng, opt);
        double err = (res.coeffs - c).l2_norm() / c.l2_norm();
        CHECK(err < 1e-8);
        CHECK(res.residual < 1e-6);
    }
}

TEST_CASE("plancherel: coefficient norm vs physical norm") {
    Setup s;
    int d = 1;
    auto modes = FieldFamily::random_modes(55, 6);
    SpectralCoefficients c = FieldFamily::build(d, s.kmax, s.grid, modes);
    double T = FieldFamily::t_window(modes);
    double top = FieldFamily::lambda_top(modes);
    PhysicalGrid ng = PhysicalGrid::fine(T, top);
    double pn = physical_l2_norm(ClosureField::from_coefficients(c), d, ng);
    double cn = c.l2_norm();
    CHECK(std::abs(pn * pn - cn * cn) / (cn * cn) < 1e-6);
}

TEST_CASE("l2 norm basics") {
    Setup s;
    SpectralCoefficients c(1, s.kmax, s.grid);
    int j0 = s.grid.nearest_index(-3.0);
    c.raw()(4, j0) = 1.0;
    CHECK(c.l2_norm() ==
          doctest::Approx(std::sqrt(s.grid.quad_weight(j0) / (2.0 * M_PI))).epsilon(1e-14));
    SpectralCoefficients c3 = c.scaled({0.0, -3.0});
    CHECK(c3.l2_norm() == doctest::Approx(3.0 * c.l2_norm()).epsilon(1e-14));
}

TEST_CASE("weighted norms: trivial weight and monotone weights") {
    Setup s;
    int d = 1;
    auto modes = FieldFamily::random_modes(7, 6);
    SpectralCoefficients c = FieldFamily::build(d, s.kmax, s.grid, modes);
    double T = FieldFamily::t_window(modes);
    double top = FieldFamily::lambda_top(modes);
    PhysicalGrid ng = PhysicalGrid::fine(T, top);
    ClosureField f = ClosureField::from_coefficients(c);

    double n_plain = physical_l2_norm(f, d, ng);
    double n_one = weighted_l2_norm(f, {WeightBase::One, 1.0}, d, ng);
    CHECK(n_one == doctest::Approx(n_plain).epsilon(1e-14));

    double n2 = weighted_l2_norm(f, {WeightBase::W2, 1.0}, d, ng);
    CHECK(n2 <= n_plain);
    double n1 = weighted_l2_norm(f, {WeightBase::W1, 1.0}, d, ng);
    double n3 = weighted_l2_norm(f, {WeightBase::W3, 1.0}, d, ng);
    double n4 = weighted_l2_norm(f, {WeightBase::W4, 1.0}, d, ng);
    CHECK(n1 <= n3 * (1.0 + 1e-12));
    CHECK(n3 <= n4 * (1.0 + 1e-12));

    double gemm = weighted_norm_of_coefficients(c, {WeightBase::W3, 1.0}, ng);
    CHECK(gemm == doctest::Approx(n3).epsilon(1e-12));
}

TEST_CASE("w4 norm against the closed-form reduction") {
    // f = e^{-r^2 - t^2}, d = 1:
    // ||w4 f||^2 = pi^2 int_0^inf e^{-2u + 2u^2} erfc(sqrt(2) u) du
    ClosureField f([](const std::vector<double>& r, const std::vector<double>& t) {
        MatrixC out(r.size(), t.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t m = 0; m < t.size(); ++m)
                out(i, m) = std::exp(-r[i] * r[i] - t[m] * t[m]);
        return out;
    });
    double oracle = M_PI * M_PI *
                    adaptive_gk(
                        [](double u) {
                            return std::exp(-2.0 * u + 2.0 * u * u) *
                                   std::erfc(std::sqrt(2.0) * u);
                        },
                        0.0, 40.0, 1e-14);
    PhysicalGrid ng = PhysicalGrid::fine(8.0, 4.0);
    double got = weighted_l2_norm(f, {WeightBase::W4, 1.0}, 1, ng);
    CHECK(std::abs(got * got - oracle) / oracle < 1e-6);
}

TEST_CASE("fd sublaplacian on analytic fields") {
    // t-independent gaussian, d = 1: L f = (4 - 4 r^2) e^{-r^2}
    ClosureField f([](const std::vector<double>& r, const std::vector<double>& t) {
        MatrixC out(r.size(), t.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t m = 0; m < t.size(); ++m) out(i, m) = std::exp(-r[i] * r[i]);
        return out;
    });
    for (double r : {0.5, 1.0, 2.0}) {
        double want = (4.0 - 4.0 * r * r) * std::exp(-r * r);
        Complex got = fd_sublaplacian(f, 1, r, 0.3, 1e-3);
        CHECK(std::abs(got - want) < 1e-5 * std::max(1.0, std::abs(want)));
        CHECK(std::abs(fd_T(f, r, 0.3, 1e-3)) < 1e-12);
    }
    CHECK_THROWS_AS(fd_sublaplacian(f, 1, 1e-5, 0.0, 1e-3), std::domain_error);

    // ground state e^{i t l0} e^{-l0 r^2}: L f = 4 d l0 f pointwise
    double l0 = 1.3;
    int d = 2;
    ClosureField g([l0](const std::vector<double>& r, const std::vector<double>& t) {
        MatrixC out(r.size(), t.size());
        for (std::size_t i = 0; i < r.size(); ++i)
            for (std::size_t m = 0; m < t.size(); ++m)
                out(i, m) = std::exp(Complex(0.0, l0 * t[m])) * std::exp(-l0 * r[i] * r[i]);
        return out;
    });
    for (double r : {0.4, 1.1}) {
        Complex fv = g.eval_point(r, -0.7);
        Complex got = fd_sublaplacian(g, d, r, -0.7, 1e-3);
        Complex want = 4.0 * d * l0 * fv;
        CHECK(std::abs(got - want) / std::abs(want) < 1e-5);
    }

    // second-order convergence: error drops by ~4x when h halves
    double r0 = 0.9, t0 = 0.2;
    Complex exact = 4.0 * d * l0 * g.eval_point(r0, t0);
    double e1 = std::abs(fd_sublaplacian(g, d, r0, t0, 4e-3) - exact);
    double e2 = std::abs(fd_sublaplacian(g, d, r0, t0, 2e-3) - exact);
    CHECK(std::log2(e1 / e2) > 1.8);
}

TEST_CASE("horizontal gradient energy matches the spectral form") {
    Setup s;
    int d = 1;
    auto modes = FieldFamily::random_modes(9, 4, 3.5, 8.0, 6);
    SpectralCoefficients c = FieldFamily::build(d, s.kmax, s.grid, modes);
    double T = FieldFamily::t_window(modes);
    double top = FieldFamily::lambda_top(modes);
    PhysicalGrid::Options o;
    o.t_box = T;
    o.t_core = std::max(600, int(2 * T * (2.2 * top + 24.0) / (2 * M_PI)));
    o.r_per_decade = 48;
    o.r_min = 1e-4;
    o.t_panels = false;
    PhysicalGrid ng = PhysicalGrid::make(o);
    ClosureField f = ClosureField::from_coefficients(c);
    double grad2 = fd_hgrad_normsq(f, d, ng, 2e-4);
    double lf = c.apply(OperatorSpec::pure_fractional(0.5)).l2_norm();
    CHECK(std::abs(grad2 - lf * lf) / (lf * lf) < 1e-4);

    // ground-branch identity: energy ratio tends to 4 d l0
    SpectralCoefficients g0(d, s.kmax, s.grid);
    int j0 = s.grid.nearest_index(-2.0);
    g0.raw()(0, j0) = 1.0;
    double lam = std::abs(s.grid.point(j0));
    double num = g0.apply(OperatorSpec::pure_fractional(0.5)).l2_norm();
    double den = g0.l2_norm();
    CHECK(num * num / (den * den) == doctest::Approx(4.0 * d * lam).epsilon(1e-14));
}

TEST_CASE("soliton coefficients synthesize the defining integral") {
    Setup s;
    int d = 1;
    SpectralCoefficients c = soliton_coefficients(d, s.kmax, s.grid, 2.0, 0.35);
    for (double r : {0.0, 0.7, 1.6}) {
        for (double t : {-1.0, 0.0, 2.0}) {
            Complex got = synthesize(c, {r}, {t})(0, 0);
            Complex want = soliton_exact(r, t, 2.0, 0.35);
            CHECK(std::abs(got - want) < 1e-7 * std::abs(soliton_exact(0.0, 0.0, 2.0, 0.35)));
        }
    }
}

TEST_CASE("analyze residual gate raises on under-resolved input") {
    Setup s;
    int d = 1;
    auto modes = FieldFamily::random_modes(301, 6);
    SpectralCoefficients c = FieldFamily::build(d, s.kmax, s.grid, modes);
    AnalyzeOptions opt;
    opt.t_box = 1.0;  // far too small for the field's decay
    opt.targets = fibers_in_band(s.grid, 0.1, 40.0);
    opt.residual_gate = 1e-6;
    PhysicalGrid ng = PhysicalGrid::fast(FieldFamily::t_window(modes),
                                         FieldFamily::lambda_top(modes));
    CHECK_THROWS_AS(
        analyze(ClosureField::from_coefficients(c), d, s.kmax, s.grid, ng, opt),
        ResolutionError);
}
