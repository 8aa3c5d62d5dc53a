#include "hsg/weights.hpp"

#include <cmath>
#include <stdexcept>

namespace hsg {

double koranyi(double r, double t) {
    return std::pow(r * r * r * r + t * t, 0.25);
}

double weight_base_eval(WeightBase base, double r, double t) {
    switch (base) {
        case WeightBase::One:
            return 1.0;
        case WeightBase::W1: {
            // <z>^-1 <|(z,t)|_H>^-2 |z|,  <x> = sqrt(1+x^2)
            double kor2 = std::sqrt(r * r * r * r + t * t);
            return r / (std::sqrt(1.0 + r * r) * (1.0 + kor2));
        }
        case WeightBase::W2:
            return 1.0 / std::sqrt(1.0 + r * r + t * t);
        case WeightBase::W3: {
            double kor2 = std::sqrt(r * r * r * r + t * t);
            return r / (1.0 + kor2);
        }
        case WeightBase::W4: {
            double kor2 = std::sqrt(r * r * r * r + t * t);
            if (kor2 == 0.0) throw std::domain_error("w4 is singular at the origin");
            return r / kor2;
        }
        case WeightBase::Koranyi:
            return koranyi(r, t);
        case WeightBase::AbsZ:
            return r;
        case WeightBase::InvAbsZ:
            if (r == 0.0) throw std::domain_error("|z|^-1 is singular at r = 0");
            return 1.0 / r;
    }
    throw std::logic_error("weight_base_eval: unknown base");
}

double weight_eval(const WeightSpec& spec, double r, double t) {
    double v = weight_base_eval(spec.base, r, t);
    if (spec.exponent == 1.0) return v;
    return std::pow(v, spec.exponent);
}

}  // namespace hsg
