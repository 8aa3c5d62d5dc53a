#pragma once

#include <complex>
#include <memory>
#include <vector>

namespace hsg {

// L eigenvalue on the (k, lambda) fiber: 4 (2k+d) |lambda|.
double eig_L(int k, double lambda, int d);

// Joint spectral multipliers of (L, -iT) on the Fourier-Laguerre ladder.
// All variants are diagonal in (k, lambda).
class OperatorSpec {
public:
    static OperatorSpec sublaplacian();
    static OperatorSpec pure_fractional(double s);           // L^s, s > 0
    static OperatorSpec conformal(double s, int d);          // L_s, 0 < s < d+1
    static OperatorSpec sobolev_bracket(double a);           // <L>^a = (1+L^2)^{a/2}
    static OperatorSpec power_of_L(double beta);             // L^beta
    static OperatorSpec abs_T(double power);                 // |T|^power
    static OperatorSpec vertical_T();                        // T = d/dt, multiplier -i*lambda
    static OperatorSpec resolvent(OperatorSpec base, std::complex<double> sigma);
    static OperatorSpec propagator(OperatorSpec base, double tau);  // e^{-i tau base}
    static OperatorSpec product(std::vector<OperatorSpec> factors);

    std::complex<double> multiplier(int k, double lambda, int d) const;

    // true when the multiplier is real on the whole ladder (self-adjoint symbol)
    bool real_symbol() const;

private:
    enum class Kind {
        SubLaplacian, PureFractional, Conformal, SobolevBracket, PowerOfL,
        AbsT, VerticalT, Resolvent, Propagator, Product
    };
    Kind kind_ = Kind::SubLaplacian;
    double a_ = 0.0;                 // s / bracket power / beta / tau / |T| power
    int conformal_d_ = 0;            // admissibility dimension for Conformal
    std::complex<double> sigma_{};   // resolvent shift
    std::vector<OperatorSpec> children_;

    OperatorSpec() = default;
};

// min/max over the sampled ladder of multiplier(L_s)/multiplier(L^s); the
// ratio m(rho) = Gamma(rho+(1+s)/2) / (rho^s Gamma(rho+(1-s)/2)) with
// rho = 2(2k+d) is lambda-independent and tends to 1 as rho -> infinity.
struct ComparabilityRange {
    double c_s;          // lower form constant
    double C_s;          // upper form constant
    double stirling_gap; // |m(rho_large) - 1| at the asymptotic probe
};

ComparabilityRange comparability_range(double s, int d, int k_max,
                                       const std::vector<double>& lambda_samples);

}  // namespace hsg
