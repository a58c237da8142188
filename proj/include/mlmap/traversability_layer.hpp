#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mlmap/rng.hpp"
#include "mlmap/semantic_layer.hpp"

namespace mlmap {

struct TravConfig {
    double prior_alpha = 0.001;
    double prior_beta = 0.001;
    // Baseline mode when false: direct measurements only, no semantic fusion.
    bool use_pseudo_measurements = true;

    void validate() const;
};

struct BetaCell {
    double alpha = 0.0;
    double beta = 0.0;
};

struct BetaEstimate {
    std::optional<double> map;  // (a-1)/(a+b-2), defined only when a, b > 1
    double mean = 0.0;          // a/(a+b)
    double variance = 0.0;      // ab/((a+b)^2 (a+b+1))
};

// Bernoulli parameter deduced from Beta(a, b): the MAP mode when both
// parameters exceed 1, else the mean.
double deduced_bernoulli_parameter(double alpha, double beta);

// One Bernoulli sample given a uniform draw u in [0, 1): 1 iff u <= p.
int deduce_pseudo_measurement(double alpha, double beta, double u);

// Semantic-traversability Bayesian inference: fuses pseudo-measurements
// deduced from the semantic layer with direct binary measurements into a
// kernelized Beta posterior per cell. Single writer per scan; the semantic
// grid is read-only during an update.
class TraversabilityLayer {
public:
    TraversabilityLayer(TravConfig cfg, const GridGeometry& geom);

    const TravConfig& config() const { return cfg_; }
    const VoxelGrid<BetaCell>& grid() const { return grid_; }
    VoxelGrid<BetaCell>& grid() { return grid_; }

    // Draws one y' per semantic cell per scan (keyed rng, memoized) and runs
    //   alpha += sum_i k * (y'_i + z_i),  beta += sum_i k * (2 - y'_i - z_i).
    // The semantic grid must already hold the current scan. With
    // use_pseudo_measurements = false this reduces to
    //   alpha += sum_i k * z_i,  beta += sum_i k * (1 - z_i).
    void update(std::span<const TrainingPoint> scan, const KernelParams& kernel,
                const PointIndex& index, const SemanticLayer& semantic, const ScanRng& rng);

    // The pseudo-measurement each scan point would receive; exposed so
    // independent oracles can replay the exact same draws.
    std::vector<int> pseudo_measurements(std::span<const TrainingPoint> scan,
                                         const SemanticLayer& semantic, const ScanRng& rng) const;

    // Accumulation core with injected per-point pseudo-measurements
    // (empty span = direct measurements only).
    void update_with_pseudo(std::span<const TrainingPoint> scan, std::span<const int> pseudo,
                            const KernelParams& kernel, const PointIndex& index);

    static BetaEstimate query(const BetaCell& cell);

    BetaCell prior_cell() const { return {cfg_.prior_alpha, cfg_.prior_beta}; }

private:
    static std::vector<int> extract_binary(std::span<const TrainingPoint> scan);

    TravConfig cfg_;
    VoxelGrid<BetaCell> grid_;
};

}  // namespace mlmap
