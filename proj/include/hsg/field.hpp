#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hsg/coefficients.hpp"
#include "hsg/physical_grid.hpp"
#include "hsg/weights.hpp"

namespace hsg {

// Evaluable cylindrical function f(r, t). The batch evaluator fills a
// (len(r) x len(t)) matrix; evaluation is deterministic.
class ClosureField {
public:
    using BatchEval = std::function<MatrixC(const std::vector<double>& r,
                                            const std::vector<double>& t)>;

    explicit ClosureField(BatchEval eval) : eval_(std::move(eval)) {}

    // coefficient-backed field (synthesized on demand)
    static ClosureField from_coefficients(const SpectralCoefficients& c);

    // pointwise product w(r,t)^mu * f(r,t)
    ClosureField weighted(const WeightSpec& w) const;

    MatrixC eval(const std::vector<double>& r, const std::vector<double>& t) const {
        return eval_(r, t);
    }
    Complex eval_point(double r, double t) const;

    const std::optional<SpectralCoefficients>& coefficients() const { return coeffs_; }

private:
    BatchEval eval_;
    std::optional<SpectralCoefficients> coeffs_;
};

// f(r,t) = (2pi)^{-1} sum_j w_j e^{-i lambda_j t} sum_k c_kj phi_k^{lambda_j}(r)
MatrixC synthesize(const SpectralCoefficients& c, const std::vector<double>& r,
                   const std::vector<double>& t);
std::vector<Complex> synthesize_points(const SpectralCoefficients& c,
                                       const std::vector<std::pair<double, double>>& pts);

struct AnalyzeOptions {
    double t_box = 20.0;          // fiber-transform window
    int n_quad = 96;              // Gauss-Laguerre radial nodes per fiber
    std::vector<int> targets;     // fiber indices to project; empty = all
    double content_lambda_max = 0.0;  // |lambda| extent of the field's content
    double residual_gate = 1e-6;      // projection residual gate; <=0 disables
};

// fiber indices with |lambda| in [lo, hi], on both signs, ascending
std::vector<int> fibers_in_band(const LambdaGrid& grid, double lo, double hi);

struct AnalyzeResult {
    SpectralCoefficients coeffs;
    double residual;       // |phys_norm^2 - coef_norm^2| / phys_norm^2
    double phys_norm;      // physical L2 norm used for the residual
    bool gate_passed;
};

// Projection c_kj = <f^{lambda_j}, phi_k^{lambda_j}> over the t-window and a
// fiber-scaled Gauss-Laguerre radial rule. `norm_grid` supplies the physical
// norm for the truncation residual. Throws hsg::ResolutionError if the gate
// fails and opt.residual_gate > 0.
AnalyzeResult analyze(const ClosureField& f, int d, int kmax, const LambdaGrid& grid,
                      const PhysicalGrid& norm_grid, const AnalyzeOptions& opt);

struct NormTails {
    double t_tail;  // boundary-row density / total, at |t| = t_box
    double r_tail;  // boundary-column density / total, at r = r_max
};

double physical_l2_norm(const ClosureField& f, int d, const PhysicalGrid& g,
                        NormTails* tails = nullptr);
double weighted_l2_norm(const ClosureField& f, const WeightSpec& w, int d,
                        const PhysicalGrid& g, NormTails* tails = nullptr);

// Weighted norm of a coefficient-backed field, organized as one GEMM against
// the active columns. Equivalent to weighted_l2_norm(from_coefficients(c),..).
double weighted_norm_of_coefficients(const SpectralCoefficients& c, const WeightSpec& w,
                                     const PhysicalGrid& g, NormTails* tails = nullptr,
                                     double column_threshold = 0.0);

// Finite-difference oracles (second-order central stencils).
// L f = -(d_rr + (2d-1)/r d_r) f - 4 r^2 d_tt f on cylindrical data.
Complex fd_sublaplacian(const ClosureField& f, int d, double r, double t, double h);
Complex fd_T(const ClosureField& f, double r, double t, double h);
// quadrature of |d_r f|^2 + 4 r^2 |d_t f|^2 (cylindrical |grad_H f|^2 on Ker N)
double fd_hgrad_normsq(const ClosureField& f, int d, const PhysicalGrid& g, double h);

class ResolutionError : public std::runtime_error {
public:
    explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

// -------- seeded analytic test fields --------

struct FieldModeSpec {
    int k;
    double center;  // signed lambda center
    double width;   // gaussian width in lambda
    Complex amp;
    double cut = 6.5;  // truncate the profile at cut * width
};

// Single-scale random family: modes at k <= 12 sharing one lambda scale
// lambda0 in [3.5, 12] (log-uniform), per-mode center jitter e^{+-0.15},
// width = center/7. Band-limited by construction so transforms round-trip
// inside the t-window.
struct FieldFamily {
    static std::vector<FieldModeSpec> random_modes(unsigned long long seed, int n_modes,
                                                   double l0_lo = 3.5, double l0_hi = 12.0,
                                                   int kmode_max = 12, bool real_amps = false);
    static SpectralCoefficients build(int d, int kmax, const LambdaGrid& grid,
                                      const std::vector<FieldModeSpec>& modes);
    // window covering the modes' t-decay: 80 / min mode |center|
    static double t_window(const std::vector<FieldModeSpec>& modes);
    static double lambda_top(const std::vector<FieldModeSpec>& modes);
};

// Soliton profile g(lambda) (gaussian bump in (0, inf)) placed on the ground
// Laguerre branch: coefficients c_{0,j} = 2 pi g(-lambda_j) / n_{0,d,lambda_j}
// for lambda_j < 0, matching f_*(r,t) = int e^{i t l} e^{-l r^2} g(l) dl.
SpectralCoefficients soliton_coefficients(int d, int kmax, const LambdaGrid& grid,
                                          double g_center, double g_width,
                                          double g_cut = 7.0);
// dense-quadrature oracle for f_*(r, t), independent of the grid machinery
Complex soliton_exact(double r, double t, double g_center, double g_width,
                      double g_cut = 7.0);

}  // namespace hsg
