#pragma once

#include <span>

#include "mlmap/traversability_layer.hpp"

namespace mlmap {

struct GaussianLayerConfig {
    double prior_mean = 0.5;       // mu0
    double obs_variance = 0.04;    // sigma^2, known observation variance
    double prior_confidence = 1.0; // lambda; prior variance is sigma^2 / lambda
    double d_low = 0.3;            // Bernoulli conversion thresholds
    double d_high = 0.7;

    void validate() const;
};

// Kernel-weighted sufficient statistics of one cell.
struct GaussianCell {
    double weighted_sum = 0.0;  // sum_i k(x_cell, x_i) * f_i
    double weight_sum = 0.0;    // sum_i k(x_cell, x_i)
};

struct GaussianEstimate {
    double mean = 0.0;      // (lambda*mu0 + weighted_sum) / (lambda + weight_sum)
    double variance = 0.0;  // sigma^2 / (lambda + weight_sum)
};

// Pr(d_low <= mu <= d_high) under N(mean, variance). Throws when
// d_low >= d_high or variance <= 0.
double gaussian_to_bernoulli(double mean, double variance, double d_low, double d_high);

// Scalar attribute layer (friction-coefficient style) with conjugate
// Gaussian closed form.
class GaussianLayer {
public:
    GaussianLayer(GaussianLayerConfig cfg, const GridGeometry& geom);

    const GaussianLayerConfig& config() const { return cfg_; }
    const VoxelGrid<GaussianCell>& grid() const { return grid_; }
    VoxelGrid<GaussianCell>& grid() { return grid_; }

    // Payloads must be finite scalars.
    void update(std::span<const TrainingPoint> scan, const KernelParams& kernel,
                const PointIndex& index);

    GaussianEstimate query(const GaussianCell& cell) const;
    // Untouched cells return the prior exactly: (mu0, sigma^2 / lambda).
    GaussianEstimate query_at(const CellCoord& c) const;

    // Bernoulli parameter of a cell's posterior under the config thresholds.
    double bernoulli_parameter(const CellCoord& c) const;

private:
    GaussianLayerConfig cfg_;
    VoxelGrid<GaussianCell> grid_;
};

// Three-source traversability update: per point,
//   alpha += k * (y' + f' + z),  beta += k * (3 - y' - f' - z),
// with y' deduced from the semantic layer and f' from the friction layer
// (both memoized per cell per scan through the keyed rng).
void update_traversability_threeway(TraversabilityLayer& trav, const SemanticLayer& semantic,
                                    const GaussianLayer& friction,
                                    std::span<const TrainingPoint> scan,
                                    const KernelParams& kernel, const PointIndex& index,
                                    const ScanRng& rng);

// f' draws for a scan, exposed for oracle replay.
std::vector<int> friction_pseudo_measurements(const GaussianLayer& friction,
                                              std::span<const TrainingPoint> scan,
                                              const ScanRng& rng);

// Accumulation core with both pseudo-measurement streams injected.
void update_threeway_with_pseudo(TraversabilityLayer& trav, std::span<const TrainingPoint> scan,
                                 std::span<const int> semantic_pseudo,
                                 std::span<const int> friction_pseudo,
                                 const KernelParams& kernel, const PointIndex& index);

}  // namespace mlmap
