#include "hsg/lambda_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace hsg {

LambdaGrid LambdaGrid::make_geometric(double lambda_min, double lambda_max,
                                      int steps_per_octave) {
    if (!(lambda_min > 0.0) || !(lambda_max > lambda_min) || steps_per_octave < 1)
        throw std::invalid_argument("LambdaGrid: bad geometric-grid parameters");

    LambdaGrid g;
    g.steps_per_octave_ = steps_per_octave;
    double octaves = std::log2(lambda_max / lambda_min);
    int n = static_cast<int>(std::lround(octaves * steps_per_octave)) + 1;
    g.count_per_sign_ = n;
    g.ratio_ = std::exp2(1.0 / steps_per_octave);
    g.log_step_ = std::log(2.0) / steps_per_octave;

    double l2min = std::log2(lambda_min);
    std::vector<double> pos(n);
    for (int i = 0; i < n; ++i)
        pos[i] = std::exp2(l2min + static_cast<double>(i) / steps_per_octave);

    g.points_.resize(2 * n);
    g.weights_.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        g.points_[n - 1 - i] = -pos[i];
        g.points_[n + i] = pos[i];
    }
    for (int j = 0; j < 2 * n; ++j)
        g.weights_[j] = std::abs(g.points_[j]) * g.log_step_;
    return g;
}

LambdaGrid LambdaGrid::make_default() {
    return make_geometric(std::exp2(-7.0), std::exp2(7.0), 32);
}

int LambdaGrid::nearest_index(double lambda) const {
    if (lambda == 0.0) return -1;
    int n = count_per_sign_;
    double l0 = std::abs(points_[n]);  // lambda_min
    double idx = std::log2(std::abs(lambda) / l0) * steps_per_octave_;
    int i = static_cast<int>(std::lround(idx));
    if (i < 0) i = 0;
    if (i >= n) i = n - 1;
    return lambda > 0 ? n + i : n - 1 - i;
}

}  // namespace hsg
