#pragma once

#include <span>
#include <unordered_map>

#include "mlmap/elevation_map.hpp"
#include "mlmap/raster.hpp"

namespace mlmap {

// 2D traversability score grid; cells without a score are absent.
class ScoreMap {
public:
    ScoreMap(double resolution, double origin_x = 0.0, double origin_y = 0.0);

    double resolution() const { return resolution_; }
    std::size_t size() const { return scores_.size(); }

    Cell2D coord_of(double x, double y) const;
    void set(const Cell2D& c, double score) { scores_[c] = score; }
    const double* find(const Cell2D& c) const;

    auto begin() const { return scores_.begin(); }
    auto end() const { return scores_.end(); }

private:
    double resolution_;
    double origin_x_, origin_y_;
    std::unordered_map<Cell2D, double, Cell2DHash> scores_;
};

// Scores every elevation cell with enough neighborhood support.
ScoreMap score_elevation_map(const ElevationMap& map, const TraversabilityLabelConfig& cfg);

// Backprojects each valid-depth pixel, looks up its ground cell's score and
// thresholds at tau (traversable iff score >= tau). Pixels with invalid
// depth or no scored cell come back invalid.
Raster project_labels_to_image(const ScoreMap& scores, const Raster& depth, const Pose& camera_pose,
                               const CameraIntrinsics& intr, double tau);

// Relabels traversable pixels whose semantic class is in the untraversable
// set. Never creates traversable pixels; idempotent.
Raster semantic_noise_filter(const Raster& labels, const Raster& semantics,
                             std::span<const int> untraversable_classes);

}  // namespace mlmap
