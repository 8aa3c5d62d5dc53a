#include "hsg/laguerre.hpp"

#include <cmath>
#include <stdexcept>

namespace hsg {

double laguerre_poly(int k, double alpha, double x) {
    if (alpha <= -1.0) throw std::domain_error("laguerre_poly: alpha must be > -1");
    if (k < 0) throw std::domain_error("laguerre_poly: k must be >= 0");
    if (k == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + alpha - x;
    for (int n = 1; n < k; ++n) {
        double lp1 = ((2.0 * n + 1.0 + alpha - x) * l - (n + alpha) * lm1) / (n + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

Eigen::MatrixXd laguerre_all(int kmax, double alpha, const std::vector<double>& x) {
    if (alpha <= -1.0) throw std::domain_error("laguerre_all: alpha must be > -1");
    const int m = static_cast<int>(x.size());
    Eigen::MatrixXd out(kmax + 1, m);
    for (int j = 0; j < m; ++j) out(0, j) = 1.0;
    if (kmax >= 1)
        for (int j = 0; j < m; ++j) out(1, j) = 1.0 + alpha - x[j];
    for (int n = 1; n < kmax; ++n)
        for (int j = 0; j < m; ++j)
            out(n + 1, j) =
                ((2.0 * n + 1.0 + alpha - x[j]) * out(n, j) - (n + alpha) * out(n - 1, j)) /
                (n + 1.0);
    return out;
}

double sphere_measure(int d) {
    return 2.0 * std::pow(M_PI, d) / std::tgamma(static_cast<double>(d));
}

double basis_norm(int k, int d, double lambda) {
    if (lambda == 0.0) throw std::domain_error("basis_norm: lambda must be nonzero");
    if (k < 0 || d < 1) throw std::domain_error("basis_norm: bad k or d");
    // n^2 = (2|l|/pi)^d * Gamma(d) k! / Gamma(k+d)
    double lg = std::lgamma(static_cast<double>(d)) + std::lgamma(k + 1.0) -
                std::lgamma(static_cast<double>(k + d));
    return std::pow(2.0 * std::abs(lambda) / M_PI, 0.5 * d) * std::exp(0.5 * lg);
}

double basis_eval(int k, int d, double lambda, double r) {
    if (lambda == 0.0) throw std::domain_error("basis_eval: lambda must be nonzero");
    double u = 2.0 * std::abs(lambda) * r * r;
    return basis_norm(k, d, lambda) * laguerre_poly(k, d - 1.0, u) * std::exp(-0.5 * u);
}

Eigen::MatrixXd basis_eval_all(int kmax, int d, double lambda, const std::vector<double>& r) {
    if (lambda == 0.0) throw std::domain_error("basis_eval_all: lambda must be nonzero");
    const int m = static_cast<int>(r.size());
    std::vector<double> u(m);
    for (int j = 0; j < m; ++j) u[j] = 2.0 * std::abs(lambda) * r[j] * r[j];
    Eigen::MatrixXd out = laguerre_all(kmax, d - 1.0, u);
    for (int j = 0; j < m; ++j) {
        double e = std::exp(-0.5 * u[j]);
        for (int k = 0; k <= kmax; ++k) out(k, j) *= e;
    }
    for (int k = 0; k <= kmax; ++k) out.row(k) *= basis_norm(k, d, lambda);
    return out;
}

}  // namespace hsg
