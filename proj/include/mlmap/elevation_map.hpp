#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "mlmap/geometry.hpp"

namespace mlmap {

struct Cell2D {
    std::int32_t i = 0;
    std::int32_t j = 0;

    friend bool operator==(const Cell2D&, const Cell2D&) = default;
    friend auto operator<=>(const Cell2D&, const Cell2D&) = default;
};

struct Cell2DHash {
    std::size_t operator()(const Cell2D& c) const;
};

// 2.5D grid of per-cell height statistics, accumulated with a single-pass
// Welford update. Variance is the unbiased sample variance.
class ElevationMap {
public:
    struct HeightStats {
        double mean = 0.0;
        double m2 = 0.0;  // sum of squared deviations
        std::uint32_t count = 0;

        double variance() const { return count > 1 ? m2 / (count - 1) : 0.0; }
    };

    ElevationMap(double resolution, double origin_x = 0.0, double origin_y = 0.0);

    double resolution() const { return resolution_; }
    std::size_t size() const { return cells_.size(); }

    Cell2D coord_of(double x, double y) const;
    double center_x(const Cell2D& c) const { return origin_x_ + (c.i + 0.5) * resolution_; }
    double center_y(const Cell2D& c) const { return origin_y_ + (c.j + 0.5) * resolution_; }

    void add_point(const Point3& world);
    const HeightStats* find(const Cell2D& c) const;

    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }

private:
    double resolution_;
    double origin_x_, origin_y_;
    std::unordered_map<Cell2D, HeightStats, Cell2DHash> cells_;
};

struct TerrainFeatures {
    double slope = 0.0;        // radians, angle of the fitted plane normal to vertical
    double roughness = 0.0;    // meters, RMS residual about the plane
    double step_height = 0.0;  // meters, max |height difference| to the center cell
};

struct TraversabilityLabelConfig {
    double w_slope = 1.0 / 3.0;
    double w_roughness = 1.0 / 3.0;
    double w_step = 1.0 / 3.0;
    double slope_critical = 1.0;      // radians
    double roughness_critical = 0.05; // meters
    double step_critical = 0.12;      // meters
    double score_threshold = 0.5;     // tau
    int time_window = 1;              // frames fused into one local elevation map
    double feature_window_radius = 0.3;  // meters
    std::vector<int> untraversable_classes;
    double resolution = 0.1;          // elevation map resolution, meters

    void validate() const;
};

// Accumulates every cloud point, transformed by its pose, into per-cell
// height statistics. Throws on mismatched cloud/pose counts.
ElevationMap build_elevation_map(std::span<const std::vector<Point3>> clouds,
                                 std::span<const Pose> poses,
                                 const TraversabilityLabelConfig& cfg);

// Least-squares plane fit over the non-empty cells within the window
// radius of the center cell. nullopt when fewer than 3 non-empty cells or
// the center cell itself is empty.
std::optional<TerrainFeatures> terrain_features(const ElevationMap& map, const Cell2D& center,
                                                double window_radius);

// t = 1 - w1*s/s_crit - w2*r/r_crit - w3*h/h_crit, clamped to [0, 1];
// exactly 0 whenever a feature exceeds its critical value.
double traversability_score(double slope, double roughness, double step_height,
                            const TraversabilityLabelConfig& cfg);

}  // namespace mlmap
