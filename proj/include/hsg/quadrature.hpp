#pragma once

#include <functional>
#include <vector>

namespace hsg {

// Generalized Gauss-Laguerre rule: exact for p(u) e^{-u} u^alpha, deg p <= 2n-1.
// Weights at extreme nodes underflow double precision, so ln(w) is carried
// alongside; products like w_i e^{u_i/2} must be formed through log_weights.
struct QuadRule {
    std::vector<double> nodes;        // strictly increasing, positive
    std::vector<double> weights;      // positive (0 where exp(ln w) underflows)
    std::vector<double> log_weights;  // ln of the exact weights
};

// Nodes from the Laguerre Jacobi matrix; weights from the derivative-free
// formula w_i = Gamma(n+a+1) x_i / (n! (n+1)^2 L_{n+1}^a(x_i)^2) evaluated in
// log space (the eigenvector route loses the small weights to roundoff).
// Throws std::invalid_argument for n < 1 or alpha <= -1, std::runtime_error
// if the eigensolve fails.
QuadRule gauss_laguerre(int n, double alpha);

// Adaptive Gauss-Kronrod (G7,K15) on [a,b] to absolute tolerance.
double adaptive_gk(const std::function<double(double)>& f, double a, double b,
                   double abs_tol, int max_depth = 48);

struct MinResult {
    double x;
    double value;
    bool on_boundary;  // minimum pinned at a search-interval edge
};

// Multistart golden-section minimum of f over [lo, hi] (n_start windows).
MinResult golden_min(const std::function<double(double)>& f, double lo, double hi,
                     int n_start = 16, double x_tol = 1e-11);

}  // namespace hsg
