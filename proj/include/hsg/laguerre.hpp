#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hsg/quadrature.hpp"

namespace hsg {

struct BasisParams {
    int k;          // Laguerre index, >= 0
    int d;          // Heisenberg dimension, >= 1 (type index alpha = d-1)
    double lambda;  // dual vertical frequency, != 0
};

// L_k^alpha(x) by the three-term recurrence; stable for k up to ~64.
double laguerre_poly(int k, double alpha, double x);

// L_k^alpha(x) for all k = 0..kmax at once, one column per x.
Eigen::MatrixXd laguerre_all(int kmax, double alpha, const std::vector<double>& x);

// Surface measure of the unit sphere S^{2d-1}: 2 pi^d / Gamma(d).
double sphere_measure(int d);

// Normalization n_{k,d,lambda} making r -> n L_k^{d-1}(2|l|r^2) e^{-|l|r^2}
// a unit vector in L^2(Omega_{2d-1} r^{2d-1} dr).
double basis_norm(int k, int d, double lambda);

// Scaled Laguerre basis function value at radius r.
double basis_eval(int k, int d, double lambda, double r);

// Rows k = 0..kmax of the normalized basis at the given radii.
Eigen::MatrixXd basis_eval_all(int kmax, int d, double lambda, const std::vector<double>& r);

}  // namespace hsg
