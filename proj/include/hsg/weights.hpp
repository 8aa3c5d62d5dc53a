#pragma once

namespace hsg {

enum class WeightBase { One, W1, W2, W3, W4, Koranyi, AbsZ, InvAbsZ };

// Pointwise weight w(r,t)^exponent on cylindrical coordinates (r = |z|, t).
// W4 and InvAbsZ are singular near r = 0; quadrature against them must use a
// grid with the refined radial panel and graded t panels (see PhysicalGrid).
struct WeightSpec {
    WeightBase base = WeightBase::One;
    double exponent = 1.0;

    bool singular() const {
        return base == WeightBase::W4 || base == WeightBase::InvAbsZ;
    }
};

double koranyi(double r, double t);  // (r^4 + t^2)^{1/4}

// Evaluates the base weight (exponent 1). Throws std::domain_error at
// excluded points (W4 at the origin, InvAbsZ at r = 0).
double weight_base_eval(WeightBase base, double r, double t);

double weight_eval(const WeightSpec& spec, double r, double t);

}  // namespace hsg
