#include "hsg/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace hsg {

SpectralCoefficients::SpectralCoefficients(int d, int kmax, LambdaGrid grid)
    : d_(d), kmax_(kmax), grid_(std::move(grid)) {
    if (d < 1 || kmax < 0) throw std::invalid_argument("SpectralCoefficients: bad d or kmax");
    data_ = std::make_shared<MatrixC>(MatrixC::Zero(kmax_ + 1, grid_.size()));
}

SpectralCoefficients::SpectralCoefficients(int d, int kmax, LambdaGrid grid, MatrixC data)
    : d_(d), kmax_(kmax), grid_(std::move(grid)) {
    if (data.rows() != kmax_ + 1 || data.cols() != grid_.size())
        throw std::invalid_argument("SpectralCoefficients: data shape mismatch");
    data_ = std::make_shared<MatrixC>(std::move(data));
}

MatrixC SpectralCoefficients::values() const {
    if (!pending_) return *data_;
    return data_->cwiseProduct(*pending_);
}

Complex SpectralCoefficients::value(int k, int j) const {
    Complex v = (*data_)(k, j);
    if (pending_) v *= (*pending_)(k, j);
    return v;
}

MatrixC& SpectralCoefficients::raw() {
    if (pending_) throw std::logic_error("raw(): pending multiplier present");
    if (data_.use_count() > 1) data_ = std::make_shared<MatrixC>(*data_);
    return const_cast<MatrixC&>(*data_);
}

SpectralCoefficients SpectralCoefficients::apply(const OperatorSpec& op) const {
    auto sym = std::make_shared<MatrixC>(kmax_ + 1, grid_.size());
    for (int j = 0; j < grid_.size(); ++j) {
        double lam = grid_.point(j);
        for (int k = 0; k <= kmax_; ++k) {
            Complex m = op.multiplier(k, lam, d_);
            if (std::abs(m) > 1e300)
                throw std::overflow_error("apply: multiplier exceeds 1e300 on the grid");
            (*sym)(k, j) = m;
        }
    }
    SpectralCoefficients out = *this;
    if (pending_) {
        auto composed = std::make_shared<MatrixC>(pending_->cwiseProduct(*sym));
        out.pending_ = std::move(composed);
    } else {
        out.pending_ = std::move(sym);
    }
    return out;
}

double SpectralCoefficients::dilation_tau(const LambdaGrid& g, int steps) {
    return 0.5 * steps * g.log_step();
}

SpectralCoefficients SpectralCoefficients::dilate(int steps) const {
    MatrixC v = values();
    const int n = grid_.size();
    const int nps = grid_.count_per_sign();
    MatrixC out = MatrixC::Zero(kmax_ + 1, n);
    // per sign, index i -> i + steps; amplitude ratio^{-steps/2}
    double amp = std::exp2(-0.5 * steps / static_cast<double>(grid_.steps_per_octave()));
    for (int j = 0; j < n; ++j) {
        bool pos = j >= nps;
        int i = pos ? j - nps : nps - 1 - j;  // per-sign geometric index
        int i2 = i + steps;
        if (i2 < 0 || i2 >= nps) {
            if (v.col(j).cwiseAbs().maxCoeff() != 0.0)
                throw std::out_of_range("dilate: support would leave the grid");
            continue;
        }
        int j2 = pos ? nps + i2 : nps - 1 - i2;
        out.col(j2) = amp * v.col(j);
    }
    return SpectralCoefficients(d_, kmax_, grid_, std::move(out));
}

double SpectralCoefficients::l2_norm() const {
    MatrixC v = values();
    double s = 0.0;
    for (int j = 0; j < grid_.size(); ++j)
        s += grid_.quad_weight(j) * v.col(j).squaredNorm();
    return std::sqrt(s / (2.0 * M_PI));
}

SpectralCoefficients SpectralCoefficients::scaled(Complex a) const {
    return SpectralCoefficients(d_, kmax_, grid_, a * values());
}

SpectralCoefficients SpectralCoefficients::operator+(const SpectralCoefficients& o) const {
    if (!(grid_ == o.grid_) || kmax_ != o.kmax_ || d_ != o.d_)
        throw std::invalid_argument("coefficients mismatch in +");
    return SpectralCoefficients(d_, kmax_, grid_, values() + o.values());
}

SpectralCoefficients SpectralCoefficients::operator-(const SpectralCoefficients& o) const {
    if (!(grid_ == o.grid_) || kmax_ != o.kmax_ || d_ != o.d_)
        throw std::invalid_argument("coefficients mismatch in -");
    return SpectralCoefficients(d_, kmax_, grid_, values() - o.values());
}

std::pair<int, int> SpectralCoefficients::support_columns() const {
    MatrixC v = values();
    int lo = -1, hi = -1;
    for (int j = 0; j < grid_.size(); ++j) {
        if (v.col(j).cwiseAbs().maxCoeff() != 0.0) {
            if (lo < 0) lo = j;
            hi = j;
        }
    }
    return {lo, hi};
}

}  // namespace hsg
