#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>

#include "hsg/lambda_grid.hpp"
#include "hsg/operator_spec.hpp"

namespace hsg {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;

// Fourier-Laguerre coefficients c[k][j] over k = 0..kmax and the lambda grid.
//
// Diagonal operators are accumulated in a pending multiplier and only folded
// into the amplitudes when values are read. The fold is a single elementwise
// product, so two operator applications commute bit-for-bit (complex multiply
// of the two symbols is IEEE-commutative).
class SpectralCoefficients {
public:
    SpectralCoefficients(int d, int kmax, LambdaGrid grid);
    SpectralCoefficients(int d, int kmax, LambdaGrid grid, MatrixC data);

    int d() const { return d_; }
    int kmax() const { return kmax_; }
    const LambdaGrid& grid() const { return grid_; }

    // amplitudes with the pending multiplier folded in
    MatrixC values() const;
    Complex value(int k, int j) const;

    // raw accessors for construction-time writes (pending must be identity)
    MatrixC& raw();
    const MatrixC& raw_data() const { return *data_; }
    bool has_pending() const { return pending_ != nullptr; }

    // diagonal application: composes op's symbol into the pending multiplier.
    // Throws on symbol overflow (|m| > 1e300 anywhere on the grid).
    SpectralCoefficients apply(const OperatorSpec& op) const;

    // e^{i tau A} with e^{2 tau} = ratio^steps: index shift by `steps` with the
    // unitary amplitude factor ratio^{-steps/2}. Throws std::out_of_range if a
    // nonzero column would leave the grid.
    SpectralCoefficients dilate(int steps) const;
    static double dilation_tau(const LambdaGrid& g, int steps);

    // Plancherel norm sqrt((2pi)^{-1} sum_j w_j sum_k |c_kj|^2)
    double l2_norm() const;

    SpectralCoefficients scaled(Complex a) const;
    SpectralCoefficients operator+(const SpectralCoefficients& o) const;
    SpectralCoefficients operator-(const SpectralCoefficients& o) const;

    // columns with any nonzero amplitude; empty if the field is zero
    std::pair<int, int> support_columns() const;

private:
    int d_;
    int kmax_;
    LambdaGrid grid_;
    std::shared_ptr<const MatrixC> data_;
    std::shared_ptr<const MatrixC> pending_;  // null means identity
};

}  // namespace hsg
