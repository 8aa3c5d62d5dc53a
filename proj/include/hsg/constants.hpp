#pragma once

#include <functional>

namespace hsg {

// Generalized Dawson integral D(p, x) = e^{-x^p} int_0^x e^{tau^p} dtau,
// evaluated as int_0^x e^{tau^p - x^p} dtau (integrand in (0,1], no overflow).
// Absolute accuracy ~1e-12; series fallback for small x.
double dawson(double p, double x, double quad_tol = 1e-13);

struct KappaInput {
    double C1 = 1.0;  // lower form constant, 0 < C1 <= C2
    double C2 = 1.0;
    double s = 1.0;   // homogeneity order, > 0
    double mu = 1.0;  // weight power, in (1/2, 1]

    double K1() const;
    double K2() const;
    double K3() const;
};

struct KappaResult {
    double kappa;         // inf_b e^{2b} { K1 b^-1/2 + K2 b^1/2 D(2,b^1/2)
                          //               + K3 b^{mu-1/2} D(1/(mu-1/2), b^{mu-1/2}) }^2
    double b_star;        // minimizer
    double closed_bound;  // inf_b { K1 b^-1/2 e^b + (K2 + K3 b^{2mu-2})(e^b - 1) }^2
};

// Multistart golden-section over log b in [-12, 4]. Throws std::runtime_error
// if the minimum pins at the search boundary. `x_tol`/`quad_tol` control the
// optimizer and Dawson quadrature; the result is stable under refining both.
KappaResult kappa(const KappaInput& in, double x_tol = 1e-11, double quad_tol = 1e-13);

enum class OperatorNormCase { W1, W2, W3N, W4N };

// Explicit resolvent operator-norm bounds, base factor 2 (3 e^{1/4} - 2)^2:
//   W1 : (5 + 3/d)^2            (d >= 1)
//   W2 : (5 + 4/(d-1))^2        (d >= 2)
//   W3N: (4 + 1/d + 1/(d-1))^2  (d >= 2)
//   W4N: (3 + 1/(d-1))          (d >= 2)
double remark_operator_bound(OperatorNormCase which, int d);

enum class RadialBoundCase { W3, W4 };

// Cylindrical-data resolvent bounds: kappa(C1,C2,s,mu) times the squared
// weighted-operator factor (4 + 1/d)^mu (W3) or (1+sqrt(2) mu)(3+2/d)^mu (W4).
double radial_bound(RadialBoundCase which, int d, double s, double mu,
                    double C1 = 1.0, double C2 = 1.0);

enum class StabilityCase { I, II };

// Largest admissible coupling for |V| <= C w^2 keeping the spectrum stable:
//   I : 1/2 (3e^{1/4}-2)^{-2} (5 + 3/d)^{-2}      (d >= 1, w = w1)
//   II: 1/2 (3e^{1/4}-2)^{-2} (5 + 4/(d-1))^{-2}  (d >= 2, w = w2)
double stability_threshold(StabilityCase which, int d);

// Envelope of f(eps) <= A + int_eps^b (u1 f + u2 sqrt(f)) dr with constant u1:
// { sqrt(A) + 1/2 int_eps^b u2(r) e^{-u1 (b-r)/2} dr }^2 e^{u1 (b-eps)}.
double gronwall_envelope(double A, double u1, const std::function<double(double)>& u2,
                         double eps, double b);

}  // namespace hsg
