#include "mlmap/trav_labeling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlmap {

ScoreMap::ScoreMap(double resolution, double origin_x, double origin_y)
    : resolution_(resolution), origin_x_(origin_x), origin_y_(origin_y) {
    if (!(resolution > 0.0)) throw std::invalid_argument("score map: resolution must be > 0");
}

Cell2D ScoreMap::coord_of(double x, double y) const {
    return {static_cast<std::int32_t>(std::floor((x - origin_x_) / resolution_)),
            static_cast<std::int32_t>(std::floor((y - origin_y_) / resolution_))};
}

const double* ScoreMap::find(const Cell2D& c) const {
    auto it = scores_.find(c);
    return it == scores_.end() ? nullptr : &it->second;
}

ScoreMap score_elevation_map(const ElevationMap& map, const TraversabilityLabelConfig& cfg) {
    cfg.validate();
    ScoreMap out(map.resolution());
    for (const auto& [coord, stats] : map) {
        if (stats.count == 0) continue;
        const auto features = terrain_features(map, coord, cfg.feature_window_radius);
        if (!features) continue;
        out.set(coord,
                traversability_score(features->slope, features->roughness, features->step_height, cfg));
    }
    return out;
}

Raster project_labels_to_image(const ScoreMap& scores, const Raster& depth, const Pose& camera_pose,
                               const CameraIntrinsics& intr, double tau) {
    intr.validate();
    if (depth.kind() != RasterKind::depth)
        throw std::invalid_argument("project_labels_to_image: raster is not a depth image");
    Raster labels(depth.width(), depth.height(), RasterKind::binary, 0.0f, false);
    for (int y = 0; y < depth.height(); ++y) {
        for (int x = 0; x < depth.width(); ++x) {
            if (!depth.valid(x, y)) continue;
            const Point3 world = backproject_pixel(x + 0.5, y + 0.5, depth.at(x, y), camera_pose, intr);
            const double* score = scores.find(scores.coord_of(world.x, world.y));
            if (!score) continue;
            labels.set(x, y, *score >= tau ? 1.0f : 0.0f);
            labels.set_valid(x, y, true);
        }
    }
    return labels;
}

Raster semantic_noise_filter(const Raster& labels, const Raster& semantics,
                             std::span<const int> untraversable_classes) {
    if (labels.width() != semantics.width() || labels.height() != semantics.height())
        throw std::invalid_argument("semantic_noise_filter: raster dimensions differ");
    Raster out = labels;
    for (int y = 0; y < labels.height(); ++y) {
        for (int x = 0; x < labels.width(); ++x) {
            if (!out.valid(x, y) || out.label_at(x, y) != 1) continue;
            if (!semantics.valid(x, y)) continue;
            const int cls = semantics.label_at(x, y);
            if (std::find(untraversable_classes.begin(), untraversable_classes.end(), cls) !=
                untraversable_classes.end())
                out.set(x, y, 0.0f);
        }
    }
    return out;
}

}  // namespace mlmap
