#include "mlmap/elevation_map.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace mlmap {

std::size_t Cell2DHash::operator()(const Cell2D& c) const {
    std::uint64_t h = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.i)) << 32) ^
                      static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.j));
    h += 0x9E3779B97F4A7C15ull;
    h = (h ^ (h >> 30)) * 0xBF58476D1CE4E5B9ull;
    h = (h ^ (h >> 27)) * 0x94D049BB133111EBull;
    return static_cast<std::size_t>(h ^ (h >> 31));
}

ElevationMap::ElevationMap(double resolution, double origin_x, double origin_y)
    : resolution_(resolution), origin_x_(origin_x), origin_y_(origin_y) {
    if (!(resolution > 0.0)) throw std::invalid_argument("elevation map: resolution must be > 0");
}

Cell2D ElevationMap::coord_of(double x, double y) const {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("elevation map: non-finite coordinate");
    return {static_cast<std::int32_t>(std::floor((x - origin_x_) / resolution_)),
            static_cast<std::int32_t>(std::floor((y - origin_y_) / resolution_))};
}

void ElevationMap::add_point(const Point3& world) {
    if (!world.finite()) throw std::invalid_argument("elevation map: non-finite point");
    HeightStats& s = cells_[coord_of(world.x, world.y)];
    s.count += 1;
    const double delta = world.z - s.mean;
    s.mean += delta / s.count;
    s.m2 += delta * (world.z - s.mean);
}

const ElevationMap::HeightStats* ElevationMap::find(const Cell2D& c) const {
    auto it = cells_.find(c);
    return it == cells_.end() ? nullptr : &it->second;
}

void TraversabilityLabelConfig::validate() const {
    if (std::abs(w_slope + w_roughness + w_step - 1.0) > 1e-9)
        throw std::invalid_argument("labeling config: weights must sum to 1");
    if (!(slope_critical > 0.0) || !(roughness_critical > 0.0) || !(step_critical > 0.0))
        throw std::invalid_argument("labeling config: critical values must be > 0");
    if (!(score_threshold > 0.0 && score_threshold < 1.0))
        throw std::invalid_argument("labeling config: score threshold must be in (0, 1)");
    if (time_window < 1)
        throw std::invalid_argument("labeling config: time window must be >= 1");
    if (!(feature_window_radius > 0.0))
        throw std::invalid_argument("labeling config: feature window radius must be > 0");
    if (!(resolution > 0.0))
        throw std::invalid_argument("labeling config: resolution must be > 0");
}

ElevationMap build_elevation_map(std::span<const std::vector<Point3>> clouds,
                                 std::span<const Pose> poses,
                                 const TraversabilityLabelConfig& cfg) {
    if (clouds.size() != poses.size())
        throw std::invalid_argument("build_elevation_map: cloud/pose count mismatch");
    ElevationMap map(cfg.resolution);
    for (std::size_t f = 0; f < clouds.size(); ++f) {
        for (const Point3& p : clouds[f]) map.add_point(poses[f].apply(p));
    }
    return map;
}

std::optional<TerrainFeatures> terrain_features(const ElevationMap& map, const Cell2D& center,
                                                double window_radius) {
    const ElevationMap::HeightStats* center_stats = map.find(center);
    if (!center_stats || center_stats->count == 0) return std::nullopt;

    const double cx = map.center_x(center);
    const double cy = map.center_y(center);
    const int reach = static_cast<int>(std::ceil(window_radius / map.resolution()));

    std::vector<Eigen::Vector3d> samples;  // (x, y, height) of non-empty window cells
    for (int di = -reach; di <= reach; ++di) {
        for (int dj = -reach; dj <= reach; ++dj) {
            const Cell2D c{center.i + di, center.j + dj};
            const double x = map.center_x(c);
            const double y = map.center_y(c);
            if (std::hypot(x - cx, y - cy) > window_radius) continue;
            const auto* stats = map.find(c);
            if (!stats || stats->count == 0) continue;
            samples.emplace_back(x, y, stats->mean);
        }
    }
    if (samples.size() < 3) return std::nullopt;

    // Fit h = a*x + b*y + c, minimum-norm solution for degenerate layouts.
    Eigen::MatrixXd design(samples.size(), 3);
    Eigen::VectorXd heights(samples.size());
    for (std::size_t s = 0; s < samples.size(); ++s) {
        design(static_cast<Eigen::Index>(s), 0) = samples[s].x() - cx;
        design(static_cast<Eigen::Index>(s), 1) = samples[s].y() - cy;
        design(static_cast<Eigen::Index>(s), 2) = 1.0;
        heights(static_cast<Eigen::Index>(s)) = samples[s].z();
    }
    const Eigen::Vector3d coeff =
        design.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(heights);

    TerrainFeatures out;
    out.slope = std::atan(std::hypot(coeff.x(), coeff.y()));
    const Eigen::VectorXd residual = design * coeff - heights;
    out.roughness = std::sqrt(residual.squaredNorm() / static_cast<double>(samples.size()));
    double max_step = 0.0;
    for (const auto& s : samples) max_step = std::max(max_step, std::abs(s.z() - center_stats->mean));
    out.step_height = max_step;
    return out;
}

double traversability_score(double slope, double roughness, double step_height,
                            const TraversabilityLabelConfig& cfg) {
    if (slope < 0.0 || roughness < 0.0 || step_height < 0.0)
        throw std::invalid_argument("traversability_score: features must be non-negative");
    if (slope > cfg.slope_critical || roughness > cfg.roughness_critical ||
        step_height > cfg.step_critical)
        return 0.0;
    const double t = 1.0 - cfg.w_slope * slope / cfg.slope_critical -
                     cfg.w_roughness * roughness / cfg.roughness_critical -
                     cfg.w_step * step_height / cfg.step_critical;
    return std::clamp(t, 0.0, 1.0);
}

}  // namespace mlmap
