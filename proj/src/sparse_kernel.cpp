#include "mlmap/sparse_kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlmap {

void KernelParams::validate() const {
    if (!(length_scale > 0.0)) throw std::invalid_argument("kernel: length_scale must be > 0");
    if (!(scale > 0.0)) throw std::invalid_argument("kernel: scale must be > 0");
}

double sparse_kernel_value(double d, const KernelParams& params) {
    if (d < 0.0) throw std::invalid_argument("sparse_kernel_value: negative distance");
    const double l = params.length_scale;
    if (d >= l) return 0.0;
    const double r = d / l;
    const double two_pi_r = 2.0 * std::numbers::pi * r;
    const double term1 = (2.0 + std::cos(two_pi_r)) / 3.0 * (1.0 - r);
    const double term2 = std::sin(two_pi_r) / (2.0 * std::numbers::pi);
    return params.scale * (term1 + term2);
}

}  // namespace mlmap
