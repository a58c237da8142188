#pragma once

namespace mlmap {

struct KernelParams {
    double length_scale = 0.3;  // l, meters; also the compact support radius
    double scale = 10.0;        // sigma0, value at d = 0

    void validate() const;  // throws unless both are positive
};

// Compactly supported sparse kernel:
//   k(d) = sigma0 * [ (2 + cos(2*pi*d/l)) / 3 * (1 - d/l) + sin(2*pi*d/l) / (2*pi) ]
// for d < l, exactly 0 for d >= l. Monotone non-increasing on [0, l].
// Throws on negative d.
double sparse_kernel_value(double d, const KernelParams& params);

}  // namespace mlmap
