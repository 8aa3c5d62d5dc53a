#include "hsg/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace hsg {

namespace {

// ln |L_{n}^{alpha}(x)| via the three-term recurrence with exponent
// renormalization, so huge polynomial values at large x stay representable.
double log_abs_laguerre(int n, double alpha, double x) {
    if (n == 0) return 0.0;
    double lm1 = 1.0, l = 1.0 + alpha - x;
    long long e2 = 0;  // extracted binary exponent shared by lm1, l
    for (int m = 1; m < n; ++m) {
        double lp1 = ((2.0 * m + 1.0 + alpha - x) * l - (m + alpha) * lm1) / (m + 1.0);
        lm1 = l;
        l = lp1;
        double mag = std::max(std::abs(l), std::abs(lm1));
        if (mag > 0x1p512) {
            lm1 *= 0x1p-512;
            l *= 0x1p-512;
            e2 += 512;
        } else if (mag > 0.0 && mag < 0x1p-512) {
            lm1 *= 0x1p512;
            l *= 0x1p512;
            e2 -= 512;
        }
    }
    return std::log(std::abs(l)) + e2 * std::log(2.0);
}

}  // namespace

QuadRule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n must be >= 1");
    if (alpha <= -1.0) throw std::invalid_argument("gauss_laguerre: alpha must be > -1");

    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = 2.0 * i + alpha + 1.0;
        if (i + 1 < n) {
            double b = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
            J(i, i + 1) = b;
            J(i + 1, i) = b;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_laguerre: eigenvalue iteration did not converge");

    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.log_weights.resize(n);
    const double lead = std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0) -
                        2.0 * std::log(n + 1.0);
    for (int i = 0; i < n; ++i) {
        double x = es.eigenvalues()(i);
        rule.nodes[i] = x;
        double lw = lead + std::log(x) - 2.0 * log_abs_laguerre(n + 1, alpha, x);
        rule.log_weights[i] = lw;
        rule.weights[i] = std::exp(lw);
    }
    return rule;
}

namespace {

// Kronrod 15 / Gauss 7 pair on [-1,1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

void gk15(const std::function<double(double)>& f, double a, double b,
          double& result, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        double x = h * kXgk[j];
        double fsum = f(c - x) + f(c + x);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double tol, int depth, int max_depth) {
    double v, e;
    gk15(f, a, b, v, e);
    if (e <= tol || depth >= max_depth) return v;
    double m = 0.5 * (a + b);
    return adaptive_rec(f, a, m, 0.5 * tol, depth + 1, max_depth) +
           adaptive_rec(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    return adaptive_rec(f, a, b, abs_tol, 0, max_depth);
}

MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     int n_start, double x_tol) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    MinResult best{lo, f(lo), true};
    double span = (hi - lo) / n_start;
    for (int s = 0; s < n_start; ++s) {
        double a = lo + s * span, b = a + span;
        double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
        double f1 = f(x1), f2 = f(x2);
        while (b - a > x_tol) {
            if (f1 < f2) {
                b = x2; x2 = x1; f2 = f1;
                x1 = b - gr * (b - a); f1 = f(x1);
            } else {
                a = x1; x1 = x2; f1 = f2;
                x2 = a + gr * (b - a); f2 = f(x2);
            }
        }
        double xm = 0.5 * (a + b), fm = f(xm);
        if (fm < best.value) best = {xm, fm, false};
    }
    // boundary pinning: minimum in the first/last resolution cell of the range
    best.on_boundary = (best.x - lo < 2.0 * x_tol) || (hi - best.x < 2.0 * x_tol);
    return best;
}

}  // namespace hsg
