#include "fracwave/types.hpp"

#include <cmath>

namespace fracwave {

FractionalOrder::FractionalOrder(double sigma) : sigma_(sigma) {
    if (!(sigma > 0.0 && sigma < 1.0)) {
        throw std::invalid_argument(
            "FractionalOrder: sigma must lie strictly in (0,1)");
    }
}

cdouble FractionalOrder::i_pow(double alpha) {
    // Integer powers of i are exact; this keeps e.g. i^(2*0.5) = i
    // free of rounding so that dtn_constant() is exactly -i at sigma = 1/2.
    double rounded = std::round(alpha);
    if (rounded == alpha) {
        long k = static_cast<long>(rounded) % 4;
        if (k < 0) k += 4;
        switch (k) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    const double half_pi = 1.57079632679489661923;
    return {std::cos(half_pi * alpha), std::sin(half_pi * alpha)};
}

cdouble FractionalOrder::dtn_constant() const {
    double ratio = std::tgamma(1.0 - sigma_) /
                   (sigma_ * std::pow(4.0, sigma_) * std::tgamma(sigma_));
    return -i_two_sigma() * ratio;
}

} // namespace fracwave
