#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "hsg/coefficients.hpp"
#include "hsg/constants.hpp"
#include "hsg/field.hpp"
#include "hsg/weights.hpp"

namespace hsg {

struct VerificationReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    double measured = 0.0;
    double bound = 0.0;  // NaN for oracle-equality / residual-type checks
    double margin = 0.0;
    bool pass = false;
    std::vector<std::pair<std::string, double>> residuals;
    long long runtime_ms = 0;

    static VerificationReport bound_check(std::string name, double measured, double bound,
                                          double tolerance = 0.0);
    static VerificationReport residual_check(std::string name, double measured,
                                             double tolerance);
    void add_param(const std::string& k, const std::string& v) { params.emplace_back(k, v); }
    void add_param(const std::string& k, double v);
    void add_residual(const std::string& k, double v) { residuals.emplace_back(k, v); }
};

// The weighted operator G of the resolvent estimates, restricted to Ker N
// where <N>^{-mu} acts as the identity:
//   I  : w1^s <L>^{(s-1)/2}          (d >= 1, 1/2 < s <= 1)
//   II : w2^s <L>^{(s-1)/2}          (d >= 2, 1/2 < s <= 1)
//   III: w3^mu L^{s/2} <L>^{-1/4}    (s > 0, 1/2 < mu <= 1)
//   IV : w4^mu L^{(s-mu)/2}          (s > 0, 1/2 < mu <= 1)
enum class GCase { I, II, III, IV };

struct GWeightSpec {
    GCase g_case = GCase::IV;
    double s = 1.0;
    double mu = 1.0;

    WeightSpec weight() const;
    // a(m): the scalar Sobolev factor of G at L-eigenvalue m
    double a_of_m(double m) const;
    void validate(int d) const;
};

enum class HKind { SubLaplacian, PureFractional, Conformal };

struct HSpec {
    HKind kind = HKind::SubLaplacian;
    double s = 1.0;  // ignored for SubLaplacian (s = 1)

    double order() const { return kind == HKind::SubLaplacian ? 1.0 : s; }
    double m_of(int k, double lambda, int d) const;
    std::string label() const;
    // (C1, C2) of the comparability hypothesis for this operator
    std::pair<double, double> form_constants(int d, int kmax) const;
};

// sup-probe grid: 25 log-spaced magnitudes in [1e-2, 1e2] x 8 arguments
// {+-1e-2, +-pi/6, +-pi/2, +-5pi/6} (near-real rays probe the spectrum edge)
std::vector<std::complex<double>> sigma_grid();

struct VerifyConfig {
    int kmax = 48;
    unsigned long long seed = 0;
    double projection_gate_regular = 1e-4;   // regular-weight sandwich projections
    double projection_gate_singular = 5e-2;  // w4-type sandwiches (slow Laguerre tails)
    double projection_gate_plain = 1e-6;     // unweighted round trips
    double tail_gate = 1e-9;
    int threads = 0;  // 0 = library default
};

// ---- checks; each returns one or more reports ----

std::vector<VerificationReport> run_dawson_checks();
std::vector<VerificationReport> run_kappa_checks();
VerificationReport run_gronwall(int count, unsigned long long seed);
std::vector<VerificationReport> run_bounds(int d);
std::vector<VerificationReport> run_thresholds(int d_max);

VerificationReport run_roundtrip(const std::vector<int>& dims, int count_per_d,
                                 const VerifyConfig& cfg);
VerificationReport run_soliton(int d, const std::vector<double>& tau_list,
                               const VerifyConfig& cfg);
std::vector<VerificationReport> run_convention(int d, int count, double h,
                                               const VerifyConfig& cfg);
VerificationReport run_hardy(int d, WeightBase which, int count, const VerifyConfig& cfg);
std::vector<VerificationReport> run_lemma43(int d, int count, const VerifyConfig& cfg);
VerificationReport run_conformal_identity(int d_max, int kmax);
VerificationReport run_homogeneity(int d, const std::vector<HSpec>& ops,
                                   const VerifyConfig& cfg);
VerificationReport run_comparability(int d, double s, int kmax);
VerificationReport run_commutation_bitexact(int d, const VerifyConfig& cfg);

VerificationReport run_resolvent_sup(const HSpec& H, const GWeightSpec& G, int d,
                                     int n_fields, const VerifyConfig& cfg);
VerificationReport run_smoothing(const HSpec& H, const GWeightSpec& G, int d,
                                 double tau_max, int n_tau, const VerifyConfig& cfg);
std::vector<VerificationReport> run_birman_schwinger(int d, StabilityCase sc,
                                                     double c_factor,
                                                     std::complex<double> sigma,
                                                     int power_iters,
                                                     const VerifyConfig& cfg);

// the full suite in dependency order (constants -> transforms -> soliton ->
// inequalities -> resolvents -> smoothing -> stability)
struct SuiteOptions {
    int roundtrip_count = 6;   // per dimension
    int field_count = 30;      // hardy / lemma43 / convention
    int resolvent_fields = 12; // per resolvent configuration
    bool full_resolvent = false;  // all 11 acceptance configurations vs a short list
};
std::vector<VerificationReport> run_all(const VerifyConfig& cfg, const SuiteOptions& opt);

}  // namespace hsg
