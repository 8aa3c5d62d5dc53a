#include "hsg/field.hpp"

#include <algorithm>
#include <cmath>

#include "hsg/laguerre.hpp"
#include "hsg/quadrature.hpp"
#include "hsg/rng.hpp"

namespace hsg {

namespace {

std::vector<int> active_columns(const MatrixC& v) {
    std::vector<int> act;
    for (int j = 0; j < v.cols(); ++j)
        if (v.col(j).cwiseAbs().maxCoeff() != 0.0) act.push_back(j);
    return act;
}

// U(act x Nr): radial profiles per active fiber, including the (2pi)^{-1} w_j factor
MatrixC fiber_profiles(const SpectralCoefficients& c, const MatrixC& v,
                       const std::vector<int>& act, const std::vector<double>& r) {
    const auto& g = c.grid();
    MatrixC U(static_cast<int>(act.size()), static_cast<int>(r.size()));
    for (std::size_t i = 0; i < act.size(); ++i) {
        int j = act[i];
        Eigen::MatrixXd phi = basis_eval_all(c.kmax(), c.d(), g.point(j), r);
        U.row(static_cast<int>(i)) =
            (v.col(j).transpose() * phi.cast<Complex>()) * (g.quad_weight(j) / (2.0 * M_PI));
    }
    return U;
}

MatrixC tone_matrix(const LambdaGrid& g, const std::vector<int>& act,
                    const std::vector<double>& t, double phase_sign) {
    MatrixC E(static_cast<int>(act.size()), static_cast<int>(t.size()));
    for (std::size_t i = 0; i < act.size(); ++i) {
        double lam = g.point(act[i]);
        for (std::size_t m = 0; m < t.size(); ++m)
            E(static_cast<int>(i), static_cast<int>(m)) =
                std::exp(Complex(0.0, phase_sign * lam * t[m]));
    }
    return E;
}

}  // namespace

MatrixC synthesize(const SpectralCoefficients& c, const std::vector<double>& r,
                   const std::vector<double>& t) {
    MatrixC v = c.values();
    auto act = active_columns(v);
    if (act.empty()) return MatrixC::Zero(static_cast<int>(r.size()), static_cast<int>(t.size()));
    MatrixC U = fiber_profiles(c, v, act, r);
    MatrixC E = tone_matrix(c.grid(), act, t, -1.0);
    return U.transpose() * E;  // (Nr x Nt)
}

std::vector<Complex> synthesize_points(const SpectralCoefficients& c,
                                       const std::vector<std::pair<double, double>>& pts) {
    std::vector<Complex> out(pts.size());
    // group by r for efficiency is unnecessary at test scale; evaluate directly
    MatrixC v = c.values();
    auto act = active_columns(v);
    if (act.empty()) return out;
    for (std::size_t p = 0; p < pts.size(); ++p) {
        std::vector<double> r1{pts[p].first}, t1{pts[p].second};
        MatrixC U = fiber_profiles(c, v, act, r1);
        MatrixC E = tone_matrix(c.grid(), act, t1, -1.0);
        out[p] = (U.transpose() * E)(0, 0);
    }
    return out;
}

ClosureField ClosureField::from_coefficients(const SpectralCoefficients& c) {
    ClosureField f([c](const std::vector<double>& r, const std::vector<double>& t) {
        return synthesize(c, r, t);
    });
    f.coeffs_ = c;
    return f;
}

ClosureField ClosureField::weighted(const WeightSpec& w) const {
    BatchEval base = eval_;
    WeightSpec spec = w;
    return ClosureField([base, spec](const std::vector<double>& r,
                                     const std::vector<double>& t) {
        MatrixC v = base(r, t);
        for (int i = 0; i < v.rows(); ++i)
            for (int m = 0; m < v.cols(); ++m)
                v(i, m) *= weight_eval(spec, r[i], t[m]);
        return v;
    });
}

Complex ClosureField::eval_point(double r, double t) const {
    return eval_({r}, {t})(0, 0);
}

std::vector<int> fibers_in_band(const LambdaGrid& grid, double lo, double hi) {
    std::vector<int> out;
    for (int j = 0; j < grid.size(); ++j) {
        double al = std::abs(grid.point(j));
        if (al >= lo && al <= hi) out.push_back(j);
    }
    return out;
}

AnalyzeResult analyze(const ClosureField& f, int d, int kmax, const LambdaGrid& grid,
                      const PhysicalGrid& norm_grid, const AnalyzeOptions& opt) {
    const int n = grid.size();
    std::vector<int> tgt = opt.targets;
    if (tgt.empty()) {
        tgt.resize(n);
        for (int j = 0; j < n; ++j) tgt[j] = j;
    }
    const int ntg = static_cast<int>(tgt.size());

    // fiber-transform t rule: uniform midpoint, alias-safe for the stated content
    double target_lmax = 0.0;
    for (int j : tgt) target_lmax = std::max(target_lmax, std::abs(grid.point(j)));
    double content = opt.content_lambda_max > 0 ? opt.content_lambda_max : target_lmax;
    double sampling = 1.15 * (target_lmax + content) + 12.0;
    int nt = std::max(64, static_cast<int>(std::lround(2.0 * opt.t_box * sampling / (2.0 * M_PI))));
    std::vector<double> t(nt), wt(nt, 2.0 * opt.t_box / nt);
    for (int m = 0; m < nt; ++m) t[m] = -opt.t_box + (m + 0.5) * (2.0 * opt.t_box / nt);

    QuadRule gl = gauss_laguerre(opt.n_quad, d - 1.0);
    const double om = sphere_measure(d);

    // all target-fiber radial nodes, stacked
    const int nu = opt.n_quad;
    std::vector<double> rall;
    rall.reserve(static_cast<std::size_t>(ntg) * nu);
    for (int j : tgt) {
        double al = std::abs(grid.point(j));
        for (int q = 0; q < nu; ++q) rall.push_back(std::sqrt(gl.nodes[q] / (2.0 * al)));
    }

    MatrixC F = f.eval(rall, t);  // (ntg*nu x nt)

    MatrixC out = MatrixC::Zero(kmax + 1, n);
    Eigen::MatrixXd lag = laguerre_all(kmax, d - 1.0, gl.nodes);
    for (int i = 0; i < ntg; ++i) {
        int j = tgt[i];
        double lam = grid.point(j);
        double al = std::abs(lam);
        // f^lambda at this fiber's nodes
        Eigen::VectorXcd tone(nt);
        for (int m = 0; m < nt; ++m) tone(m) = std::exp(Complex(0.0, lam * t[m])) * wt[m];
        Eigen::VectorXcd fl = F.middleRows(i * nu, nu) * tone;
        // u-substituted projection; w_q e^{u_q/2} formed in log space (the
        // product decays like e^{-u/2} while each factor would over/underflow)
        double pref = om / (std::pow(2.0 * al, d - 1.0) * 4.0 * al);
        Eigen::VectorXcd gvec(nu);
        for (int q = 0; q < nu; ++q)
            gvec(q) = fl(q) * std::exp(gl.log_weights[q] + 0.5 * gl.nodes[q]) * pref;
        Eigen::VectorXcd ck = lag.cast<Complex>() * gvec;
        for (int k = 0; k <= kmax; ++k) ck(k) *= basis_norm(k, d, lam);
        out.col(j) = ck;
    }

    AnalyzeResult res{SpectralCoefficients(d, kmax, grid, std::move(out)), 0.0, 0.0, true};
    res.phys_norm = physical_l2_norm(f, d, norm_grid);
    double cn = res.coeffs.l2_norm();
    double p2 = res.phys_norm * res.phys_norm;
    res.residual = p2 > 0.0 ? std::abs(p2 - cn * cn) / p2 : 0.0;
    if (opt.residual_gate > 0.0 && res.residual > opt.residual_gate) {
        res.gate_passed = false;
        throw ResolutionError("analyze: projection residual " + std::to_string(res.residual) +
                              " exceeds gate " + std::to_string(opt.residual_gate));
    }
    return res;
}

namespace {

double grid_norm2(const MatrixC& F, const WeightSpec* w, int d, const PhysicalGrid& g,
                  NormTails* tails) {
    const int nr = static_cast<int>(g.r_nodes.size());
    const int nt = static_cast<int>(g.t_nodes.size());
    const double om = sphere_measure(d);
    double total = 0.0;
    double t_edge = 0.0, r_edge = 0.0;
    // find boundary node indices (largest |t|, largest r)
    int mt = 0;
    for (int m = 1; m < nt; ++m)
        if (std::abs(g.t_nodes[m]) > std::abs(g.t_nodes[mt])) mt = m;
    int ir_max = 0;
    for (int i = 1; i < nr; ++i)
        if (g.r_nodes[i] > g.r_nodes[ir_max]) ir_max = i;

    for (int i = 0; i < nr; ++i) {
        double r = g.r_nodes[i];
        double meas = om * g.r_weights[i] * std::pow(r, 2 * d - 1);
        for (int m = 0; m < nt; ++m) {
            double ww = 1.0;
            if (w) ww = weight_eval(*w, r, g.t_nodes[m]);
            double dens = ww * ww * std::norm(F(i, m));
            double cell = meas * g.t_weights[m] * dens;
            total += cell;
            if (m == mt) t_edge += cell / g.t_weights[m];
            if (i == ir_max) r_edge += cell / g.r_weights[i];
        }
    }
    if (tails) {
        // boundary densities scaled by a tenth of the box, as a tail indicator
        tails->t_tail = total > 0 ? t_edge * (0.1 * g.t_box) / total : 0.0;
        tails->r_tail = total > 0 ? r_edge * (0.1 * g.r_max) / total : 0.0;
    }
    return total;
}

}  // namespace

double physical_l2_norm(const ClosureField& f, int d, const PhysicalGrid& g, NormTails* tails) {
    MatrixC F = f.eval(g.r_nodes, g.t_nodes);
    return std::sqrt(grid_norm2(F, nullptr, d, g, tails));
}

double weighted_l2_norm(const ClosureField& f, const WeightSpec& w, int d,
                        const PhysicalGrid& g, NormTails* tails) {
    MatrixC F = f.eval(g.r_nodes, g.t_nodes);
    return std::sqrt(grid_norm2(F, &w, d, g, tails));
}

double weighted_norm_of_coefficients(const SpectralCoefficients& c, const WeightSpec& w,
                                     const PhysicalGrid& g, NormTails* tails,
                                     double column_threshold) {
    MatrixC v = c.values();
    std::vector<int> act;
    if (column_threshold > 0.0) {
        double cmax = 0.0;
        Eigen::VectorXd colmass(v.cols());
        for (int j = 0; j < v.cols(); ++j) {
            colmass(j) = v.col(j).norm();
            cmax = std::max(cmax, colmass(j));
        }
        for (int j = 0; j < v.cols(); ++j)
            if (colmass(j) > column_threshold * cmax) act.push_back(j);
    } else {
        act = active_columns(v);
    }
    if (act.empty()) {
        if (tails) *tails = {0.0, 0.0};
        return 0.0;
    }
    MatrixC U = fiber_profiles(c, v, act, g.r_nodes);
    MatrixC E = tone_matrix(c.grid(), act, g.t_nodes, -1.0);
    MatrixC F = U.transpose() * E;
    return std::sqrt(grid_norm2(F, &w, c.d(), g, tails));
}

Complex fd_sublaplacian(const ClosureField& f, int d, double r, double t, double h) {
    if (!(r > h)) throw std::domain_error("fd_sublaplacian: need r > h");
    std::vector<double> rs{r - h, r, r + h};
    std::vector<double> ts{t - h, t, t + h};
    MatrixC F = f.eval(rs, ts);
    Complex frr = (F(2, 1) - 2.0 * F(1, 1) + F(0, 1)) / (h * h);
    Complex fr = (F(2, 1) - F(0, 1)) / (2.0 * h);
    Complex ftt = (F(1, 2) - 2.0 * F(1, 1) + F(1, 0)) / (h * h);
    return -(frr + (2.0 * d - 1.0) / r * fr) - 4.0 * r * r * ftt;
}

Complex fd_T(const ClosureField& f, double r, double t, double h) {
    if (!(r > h)) throw std::domain_error("fd_T: need r > h");
    MatrixC F = f.eval({r}, {t - h, t + h});
    return (F(0, 1) - F(0, 0)) / (2.0 * h);
}

double fd_hgrad_normsq(const ClosureField& f, int d, const PhysicalGrid& g, double h) {
    const double om = sphere_measure(d);
    double total = 0.0;
    std::vector<double> rs;
    rs.reserve(g.r_nodes.size() * 2);
    for (double r : g.r_nodes) {
        rs.push_back(r - h);
        rs.push_back(r + h);
    }
    std::vector<double> ts;
    ts.reserve(g.t_nodes.size() * 2);
    for (double t : g.t_nodes) {
        ts.push_back(t - h);
        ts.push_back(t + h);
    }
    MatrixC Fr = f.eval(rs, g.t_nodes);
    MatrixC Ft = f.eval(g.r_nodes, ts);
    const int nr = static_cast<int>(g.r_nodes.size());
    const int nt = static_cast<int>(g.t_nodes.size());
    for (int i = 0; i < nr; ++i) {
        double r = g.r_nodes[i];
        if (!(r > h)) continue;
        double meas = om * g.r_weights[i] * std::pow(r, 2 * d - 1);
        for (int m = 0; m < nt; ++m) {
            Complex dr = (Fr(2 * i + 1, m) - Fr(2 * i, m)) / (2.0 * h);
            Complex dt = (Ft(i, 2 * m + 1) - Ft(i, 2 * m)) / (2.0 * h);
            total += meas * g.t_weights[m] * (std::norm(dr) + 4.0 * r * r * std::norm(dt));
        }
    }
    return total;
}

std::vector<FieldModeSpec> FieldFamily::random_modes(unsigned long long seed, int n_modes,
                                                     double l0_lo, double l0_hi,
                                                     int kmode_max, bool real_amps) {
    Rng rng(seed);
    double l0 = std::exp(rng.uniform(std::log(l0_lo), std::log(l0_hi)));
    std::vector<FieldModeSpec> modes(n_modes);
    for (auto& m : modes) {
        m.k = rng.uniform_int(0, kmode_max);
        double sgn = rng.uniform() < 0.5 ? 1.0 : -1.0;
        double lm = l0 * std::exp(rng.uniform(-0.15, 0.15));
        m.center = sgn * lm;
        m.width = lm / 7.0;
        double re = rng.normal(), im = rng.normal();
        m.amp = real_amps ? Complex(re, 0.0) : Complex(re, im);
    }
    return modes;
}

SpectralCoefficients FieldFamily::build(int d, int kmax, const LambdaGrid& grid,
                                        const std::vector<FieldModeSpec>& modes) {
    SpectralCoefficients c(d, kmax, grid);
    MatrixC& v = c.raw();
    for (const auto& m : modes) {
        for (int j = 0; j < grid.size(); ++j) {
            double lam = grid.point(j);
            if ((lam > 0) != (m.center > 0)) continue;
            double x = (std::abs(lam) - std::abs(m.center)) / m.width;
            if (std::abs(x) >= m.cut) continue;
            v(m.k, j) += m.amp * std::exp(-0.5 * x * x);
        }
    }
    return c;
}

double FieldFamily::t_window(const std::vector<FieldModeSpec>& modes) {
    double lmin = 1e300;
    for (const auto& m : modes) lmin = std::min(lmin, std::abs(m.center));
    return 80.0 / lmin;
}

double FieldFamily::lambda_top(const std::vector<FieldModeSpec>& modes) {
    double top = 0.0;
    for (const auto& m : modes)
        top = std::max(top, std::abs(m.center) + m.cut * m.width);
    return top;
}

SpectralCoefficients soliton_coefficients(int d, int kmax, const LambdaGrid& grid,
                                          double g_center, double g_width, double g_cut) {
    SpectralCoefficients c(d, kmax, grid);
    MatrixC& v = c.raw();
    for (int j = 0; j < grid.size(); ++j) {
        double lam = grid.point(j);
        if (lam >= 0.0) continue;  // support sits at lambda < 0 with this Fourier convention
        double l = -lam;
        double x = (l - g_center) / g_width;
        if (std::abs(x) >= g_cut) continue;
        v(0, j) = 2.0 * M_PI * std::exp(-0.5 * x * x) / basis_norm(0, d, lam);
    }
    return c;
}

Complex soliton_exact(double r, double t, double g_center, double g_width, double g_cut) {
    double a = std::max(0.0, g_center - g_cut * g_width);
    double b = g_center + g_cut * g_width;
    auto gfun = [&](double l) { return std::exp(-0.5 * std::pow((l - g_center) / g_width, 2)); };
    double re = adaptive_gk(
        [&](double l) { return gfun(l) * std::exp(-l * r * r) * std::cos(l * t); }, a, b, 1e-13);
    double im = adaptive_gk(
        [&](double l) { return gfun(l) * std::exp(-l * r * r) * std::sin(l * t); }, a, b, 1e-13);
    return {re, im};
}

}  // namespace hsg
