#pragma once

#include <memory>
#include <vector>

namespace hsg {

// Sign-symmetric geometric grid of dual vertical frequencies.
// Per sign: |lambda| = lambda_min * ratio^i, i = 0..count_per_sign-1.
// Quadrature weight |lambda_j| * ln(ratio) at every point (uniform trapezoid in
// log |lambda|; no endpoint halving so that w_{j+s} = w_j * ratio^s exactly,
// which makes dilation unitary on the nose).
class LambdaGrid {
public:
    // log2_ratio = 1/steps_per_octave; default grid spans [2^-7, 2^7].
    static LambdaGrid make_geometric(double lambda_min, double lambda_max,
                                     int steps_per_octave);
    static LambdaGrid make_default();  // [2^-7, 2^7], 32 steps/octave

    int size() const { return static_cast<int>(points_.size()); }
    int count_per_sign() const { return count_per_sign_; }
    double ratio() const { return ratio_; }
    double log_step() const { return log_step_; }  // ln(ratio)
    int steps_per_octave() const { return steps_per_octave_; }

    double point(int j) const { return points_[j]; }
    double quad_weight(int j) const { return weights_[j]; }
    const std::vector<double>& points() const { return points_; }
    const std::vector<double>& quad_weights() const { return weights_; }

    // index of the grid point closest to lambda (same sign); -1 if sign mismatch
    int nearest_index(double lambda) const;

    bool operator==(const LambdaGrid& o) const {
        return points_ == o.points_;  // weights are derived
    }

private:
    std::vector<double> points_;   // ascending: negatives then positives
    std::vector<double> weights_;  // positive
    double ratio_ = 0.0;
    double log_step_ = 0.0;
    int steps_per_octave_ = 0;
    int count_per_sign_ = 0;
};

}  // namespace hsg
