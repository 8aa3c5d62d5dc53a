#include "hsg/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "hsg/quadrature.hpp"

namespace hsg {

double dawson(double p, double x, double quad_tol) {
    if (!(p >= 1.0)) throw std::domain_error("dawson: p must be >= 1");
    if (!(x >= 0.0)) throw std::domain_error("dawson: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < 1e-8) {
        // D(p,x) = x - x^{p+1} p/(p+1) + O(x^{2p+1})
        return x - std::pow(x, p + 1.0) * p / (p + 1.0);
    }
    const double xp = std::pow(x, p);
    return adaptive_gk([p, xp](double tau) { return std::exp(std::pow(tau, p) - xp); },
                       0.0, x, quad_tol);
}

double KappaInput::K1() const { return 1.0 / std::sqrt(2.0 * C1 * C1 / C2); }

double KappaInput::K2() const {
    return std::sqrt(2.0 * s / C1) * std::max(s, 2.0 * std::exp(-(1.0 + 0.5 * s)));
}

double KappaInput::K3() const {
    return (2.0 - mu) / (mu - 0.5) / std::sqrt(2.0 * C1 * s);
}

KappaResult kappa(const KappaInput& in, double x_tol, double quad_tol) {
    if (!(in.C1 > 0.0) || !(in.C2 >= in.C1))
        throw std::invalid_argument("kappa: need 0 < C1 <= C2");
    if (!(in.s > 0.0)) throw std::invalid_argument("kappa: need s > 0");
    if (!(in.mu > 0.5) || !(in.mu <= 1.0))
        throw std::invalid_argument("kappa: need mu in (1/2, 1]");

    const double k1 = in.K1(), k2 = in.K2(), k3 = in.K3();
    const double p3 = 1.0 / (in.mu - 0.5);
    const double e3 = in.mu - 0.5;

    auto objective = [&](double lnb) {
        double b = std::exp(lnb);
        double br = k1 / std::sqrt(b) +
                    k2 * std::sqrt(b) * dawson(2.0, std::sqrt(b), quad_tol) +
                    k3 * std::pow(b, e3) * dawson(p3, std::pow(b, e3), quad_tol);
        return std::exp(2.0 * b) * br * br;
    };
    MinResult m = golden_min(objective, -12.0, 4.0, 16, x_tol);
    if (m.on_boundary)
        throw std::runtime_error("kappa: minimizer pinned at the search boundary");

    auto closed = [&](double lnb) {
        double b = std::exp(lnb);
        double br = k1 / std::sqrt(b) * std::exp(b) +
                    (k2 + k3 * std::pow(b, 2.0 * in.mu - 2.0)) * std::expm1(b);
        return br * br;
    };
    MinResult mc = golden_min(closed, -12.0, 4.0, 16, x_tol);

    return {m.value, std::exp(m.x), mc.value};
}

namespace {
double base_factor() {
    double c = 3.0 * std::exp(0.25) - 2.0;
    return 2.0 * c * c;
}
}  // namespace

double remark_operator_bound(OperatorNormCase which, int d) {
    switch (which) {
        case OperatorNormCase::W1: {
            if (d < 1) throw std::domain_error("remark_operator_bound: W1 needs d >= 1");
            double f = 5.0 + 3.0 / d;
            return base_factor() * f * f;
        }
        case OperatorNormCase::W2: {
            if (d < 2) throw std::domain_error("remark_operator_bound: W2 needs d >= 2");
            double f = 5.0 + 4.0 / (d - 1.0);
            return base_factor() * f * f;
        }
        case OperatorNormCase::W3N: {
            if (d < 2) throw std::domain_error("remark_operator_bound: W3N needs d >= 2");
            double f = 4.0 + 1.0 / d + 1.0 / (d - 1.0);
            return base_factor() * f * f;
        }
        case OperatorNormCase::W4N: {
            if (d < 2) throw std::domain_error("remark_operator_bound: W4N needs d >= 2");
            return base_factor() * (3.0 + 1.0 / (d - 1.0));
        }
    }
    throw std::logic_error("remark_operator_bound: unknown case");
}

double radial_bound(RadialBoundCase which, int d, double s, double mu, double C1, double C2) {
    if (d < 1) throw std::domain_error("radial_bound: need d >= 1");
    KappaResult kr = kappa({C1, C2, s, mu});
    double factor;
    if (which == RadialBoundCase::W3) {
        factor = std::pow(4.0 + 1.0 / d, mu);
    } else {
        factor = (1.0 + std::sqrt(2.0) * mu) * std::pow(3.0 + 2.0 / d, mu);
    }
    return kr.kappa * factor * factor;
}

double stability_threshold(StabilityCase which, int d) {
    double c = 3.0 * std::exp(0.25) - 2.0;
    if (which == StabilityCase::I) {
        if (d < 1) throw std::domain_error("stability_threshold: case I needs d >= 1");
        double f = 5.0 + 3.0 / d;
        return 0.5 / (c * c * f * f);
    }
    if (d < 2) throw std::domain_error("stability_threshold: case II needs d >= 2");
    double f = 5.0 + 4.0 / (d - 1.0);
    return 0.5 / (c * c * f * f);
}

double gronwall_envelope(double A, double u1, const std::function<double(double)>& u2,
                         double eps, double b) {
    if (!(eps > 0.0) || !(b > eps)) throw std::invalid_argument("gronwall_envelope: need 0 < eps < b");
    if (!(A >= 0.0) || !(u1 >= 0.0)) throw std::invalid_argument("gronwall_envelope: need A, u1 >= 0");
    double inner = adaptive_gk(
        [&](double r) { return u2(r) * std::exp(-0.5 * u1 * (b - r)); }, eps, b, 1e-12);
    double base = std::sqrt(A) + 0.5 * inner;
    return base * base * std::exp(u1 * (b - eps));
}

}  // namespace hsg
