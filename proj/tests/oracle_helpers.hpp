#pragma once

// Independent naive O(M*N) reference updates: full kernel evaluation over
// every (cell, point) pair, no spatial index. Kept free of the library's
// update path so the two can be compared.

#include <algorithm>
#include <numeric>
#include <vector>

#include "mlmap/gaussian_layer.hpp"
#include "mlmap/semantic_layer.hpp"
#include "mlmap/sparse_kernel.hpp"
#include "mlmap/traversability_layer.hpp"

namespace mlmap::testing {

// scan positions ordered by ascending intrinsic point id
inline std::vector<std::size_t> id_order(std::span<const TrainingPoint> scan) {
    std::vector<std::size_t> order(scan.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scan[a].id < scan[b].id; });
    return order;
}

inline std::vector<double> naive_semantic_alpha(const CellCoord& cell,
                                                std::span<const TrainingPoint> scan,
                                                const KernelParams& kernel,
                                                const GridGeometry& geom,
                                                const std::vector<double>& prior) {
    std::vector<double> alpha = prior;
    const Point3 center = geom.center_of(cell);
    for (const std::size_t i : id_order(scan)) {
        const double k = sparse_kernel_value(center.distance_to(scan[i].position), kernel);
        const auto& bits = std::get<OneHotLabel>(scan[i].payload).bits;
        for (std::size_t c = 0; c < bits.size(); ++c) alpha[c] += k * bits[c];
    }
    return alpha;
}

inline BetaCell naive_trav_cell(const CellCoord& cell, std::span<const TrainingPoint> scan,
                                std::span<const int> pseudo, const KernelParams& kernel,
                                const GridGeometry& geom, const BetaCell& prior) {
    BetaCell out = prior;
    const Point3 center = geom.center_of(cell);
    for (const std::size_t i : id_order(scan)) {
        const double k = sparse_kernel_value(center.distance_to(scan[i].position), kernel);
        const int z = std::get<BinaryLabel>(scan[i].payload).value;
        if (pseudo.empty()) {
            out.alpha += k * z;
            out.beta += k * (1 - z);
        } else {
            out.alpha += k * (pseudo[i] + z);
            out.beta += k * (2 - pseudo[i] - z);
        }
    }
    return out;
}

inline GaussianCell naive_gaussian_cell(const CellCoord& cell, std::span<const TrainingPoint> scan,
                                        const KernelParams& kernel, const GridGeometry& geom) {
    GaussianCell out;
    const Point3 center = geom.center_of(cell);
    for (const std::size_t i : id_order(scan)) {
        const double k = sparse_kernel_value(center.distance_to(scan[i].position), kernel);
        out.weighted_sum += k * std::get<ScalarSample>(scan[i].payload).value;
        out.weight_sum += k;
    }
    return out;
}

}  // namespace mlmap::testing
