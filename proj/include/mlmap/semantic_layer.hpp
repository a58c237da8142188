#pragma once

#include <span>
#include <vector>

#include "mlmap/point_index.hpp"
#include "mlmap/sparse_kernel.hpp"
#include "mlmap/voxel_grid.hpp"

namespace mlmap {

struct SemanticConfig {
    int num_classes = 0;
    std::vector<double> prior_alpha;      // per class, positive; 0.001 each by default
    std::vector<int> traversable_classes; // nonempty proper subset of {0..K-1}

    static SemanticConfig uniform(int num_classes, double prior,
                                  std::vector<int> traversable_classes);

    void validate() const;
    bool is_traversable(int class_index) const;
};

// Dirichlet posterior state of one cell.
struct DirichletCell {
    std::vector<double> alpha;
};

struct SemanticEstimate {
    std::vector<double> probs;     // expected class probabilities, sums to 1
    std::vector<double> variance;  // per-class posterior variance
    int map_class = 0;             // argmax alpha, ties broken by lowest index
};

// Aggregated Beta parameterization of a Dirichlet cell.
struct BetaParams {
    double alpha = 0.0;
    double beta = 0.0;
};

// Continuous semantic mapping: kernel-weighted Dirichlet updates per cell,
// cell centers as query points. Single writer per scan; queries need a
// quiescent grid.
class SemanticLayer {
public:
    SemanticLayer(SemanticConfig cfg, const GridGeometry& geom);

    const SemanticConfig& config() const { return cfg_; }
    const VoxelGrid<DirichletCell>& grid() const { return grid_; }
    VoxelGrid<DirichletCell>& grid() { return grid_; }

    // alpha_k += sum_i k(x_cell, x_i) * y_i^k over neighbors within kernel
    // support, accumulated in ascending point id order. Payloads must be
    // one-hot vectors of length K.
    void update(std::span<const TrainingPoint> scan, const KernelParams& kernel,
                const PointIndex& index);

    SemanticEstimate query(const DirichletCell& cell) const;

    // (alpha', beta') = (sum of traversable alpha, sum of the rest).
    BetaParams shrink_to_beta(const DirichletCell& cell) const;
    // Shrink of an untouched cell; the fallback for points outside the map.
    BetaParams prior_beta_params() const;

    DirichletCell prior_cell() const { return DirichletCell{cfg_.prior_alpha}; }

private:
    SemanticConfig cfg_;
    VoxelGrid<DirichletCell> grid_;
};

}  // namespace mlmap
