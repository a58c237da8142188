#include "mlmap/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mlmap/errors.hpp"
#include "mlmap/rng.hpp"

namespace mlmap {

namespace fs = std::filesystem;

namespace {

struct RayHit {
    double t = std::numeric_limits<double>::infinity();
    int surface = kSynthSky;
};

// Forward-facing camera: +X world is the optical axis, +Z world is up.
Pose camera_pose(const SynthConfig& cfg, int frame) {
    Pose pose;
    pose.rotation << 0, 0, 1, -1, 0, 0, 0, -1, 0;
    pose.translation << cfg.camera_start + cfg.camera_step * frame, 0.0, cfg.camera_height;
    return pose;
}

bool inside_step(const SynthConfig& cfg, double x, double y) {
    return x >= cfg.step_x0 && x <= cfg.step_x1 && y >= cfg.step_y0 && y <= cfg.step_y1;
}

void consider(RayHit& best, double t, int surface) {
    if (t > 1e-9 && t < best.t) best = {t, surface};
}

// Analytic intersection of a world ray with the corridor geometry.
RayHit cast_ray(const SynthConfig& cfg, const Eigen::Vector3d& origin, const Eigen::Vector3d& dir) {
    RayHit best;

    // ground plane z = 0 between the walls
    if (dir.z() < 0.0) {
        const double t = -origin.z() / dir.z();
        const double x = origin.x() + t * dir.x();
        const double y = origin.y() + t * dir.y();
        if (x >= 0.0 && x <= cfg.corridor_length && std::abs(y) <= cfg.half_width &&
            !inside_step(cfg, x, y))
            consider(best, t, kSynthGround);
    }

    // walls y = +-half_width, 0 <= z <= wall_height
    for (const double wall_y : {-cfg.half_width, cfg.half_width}) {
        if (dir.y() == 0.0) continue;
        const double t = (wall_y - origin.y()) / dir.y();
        const double x = origin.x() + t * dir.x();
        const double z = origin.z() + t * dir.z();
        if (x >= 0.0 && x <= cfg.corridor_length && z >= 0.0 && z <= cfg.wall_height)
            consider(best, t, kSynthWall);
    }

    // step obstacle: axis-aligned box [x0,x1] x [y0,y1] x [0,h]
    {
        const Eigen::Vector3d lo(cfg.step_x0, cfg.step_y0, 0.0);
        const Eigen::Vector3d hi(cfg.step_x1, cfg.step_y1, cfg.step_height);
        double t_enter = 0.0, t_exit = std::numeric_limits<double>::infinity();
        bool miss = false;
        for (int a = 0; a < 3 && !miss; ++a) {
            if (dir[a] == 0.0) {
                if (origin[a] < lo[a] || origin[a] > hi[a]) miss = true;
                continue;
            }
            double t0 = (lo[a] - origin[a]) / dir[a];
            double t1 = (hi[a] - origin[a]) / dir[a];
            if (t0 > t1) std::swap(t0, t1);
            t_enter = std::max(t_enter, t0);
            t_exit = std::min(t_exit, t1);
        }
        if (!miss && t_enter <= t_exit && t_enter > 1e-9) consider(best, t_enter, kSynthObstacle);
    }

    return best;
}

int corrupt_class(SequenceRng& rng, int true_class, double accuracy) {
    if (rng.uniform() < accuracy) return true_class;
    // uniformly among the wrong classes
    int wrong = static_cast<int>(rng.below(kSynthNumClasses - 1));
    if (wrong >= true_class) ++wrong;
    return wrong;
}

double gaussian_draw(SequenceRng& rng, double sigma) {
    // Box-Muller; u1 in (0,1]
    const double u1 = 1.0 - rng.uniform();
    const double u2 = rng.uniform();
    return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

CameraIntrinsics SynthConfig::intrinsics() const {
    CameraIntrinsics intr;
    intr.fx = focal;
    intr.fy = focal;
    intr.cx = width / 2.0;
    intr.cy = height / 2.0;
    intr.width = width;
    intr.height = height;
    return intr;
}

SynthSequence generate_synth_sequence(const SynthConfig& cfg) {
    if (cfg.frames < 1) throw std::invalid_argument("synth: need at least one frame");
    const CameraIntrinsics intr = cfg.intrinsics();
    intr.validate();

    SynthSequence seq;
    seq.records.reserve(static_cast<std::size_t>(cfg.frames));
    seq.gt_labels.reserve(static_cast<std::size_t>(cfg.frames));

    for (int f = 0; f < cfg.frames; ++f) {
        SequenceRng rng(mix64(cfg.seed) ^ static_cast<std::uint64_t>(f));
        const Pose pose = camera_pose(cfg, f);
        const Eigen::Vector3d cam_origin = pose.translation;

        ScanRecord rec;
        rec.frame_id = f;
        rec.pose = pose;
        rec.intrinsics = intr;
        Raster depth(cfg.width, cfg.height, RasterKind::depth, 0.0f, false);
        Raster semantic(cfg.width, cfg.height, RasterKind::class_index);
        Raster labels(cfg.width, cfg.height, RasterKind::binary, 0.0f, false);
        Raster gt(cfg.width, cfg.height, RasterKind::binary, 0.0f, false);
        std::vector<ScalarMeasurement> scalars;

        for (int y = 0; y < cfg.height; ++y) {
            for (int x = 0; x < cfg.width; ++x) {
                const Eigen::Vector3d dir_cam((x + 0.5 - intr.cx) / intr.fx,
                                              (y + 0.5 - intr.cy) / intr.fy, 1.0);
                const RayHit hit = cast_ray(cfg, cam_origin, pose.rotation * dir_cam);
                const bool in_range = std::isfinite(hit.t) && hit.t <= cfg.max_range;

                const int true_class = in_range ? hit.surface : kSynthSky;
                semantic.set(x, y, static_cast<float>(corrupt_class(rng, true_class,
                                                                    cfg.semantic_accuracy)));
                if (!in_range) continue;

                // dir_cam.z == 1, so t is the camera-frame forward coordinate
                depth.set(x, y, static_cast<float>(hit.t));
                depth.set_valid(x, y, true);

                const int traversable = hit.surface == kSynthGround ? 1 : 0;
                gt.set(x, y, static_cast<float>(traversable));
                gt.set_valid(x, y, true);
                const int noisy = rng.uniform() < cfg.trav_accuracy ? traversable : 1 - traversable;
                labels.set(x, y, static_cast<float>(noisy));
                labels.set_valid(x, y, true);

                const bool on_cloud_grid = x % cfg.cloud_stride == 0 && y % cfg.cloud_stride == 0;
                if (on_cloud_grid) {
                    // sensor-frame point for the cloud file
                    rec.cloud.push_back(Point3::from_vec(dir_cam * hit.t));
                    if (cfg.with_scalars) {
                        const double base = hit.surface == kSynthGround ? cfg.scalar_ground
                                                                        : cfg.scalar_obstacle;
                        const double v = std::clamp(base + gaussian_draw(rng, cfg.scalar_noise),
                                                    0.0, 1.0);
                        const Point3 world =
                            backproject_pixel(x + 0.5, y + 0.5, hit.t, pose, intr);
                        scalars.push_back({world, v});
                    }
                }
            }
        }

        rec.depth = std::move(depth);
        rec.semantic = std::move(semantic);
        rec.labels = std::move(labels);
        if (cfg.with_scalars) rec.scalars = std::move(scalars);
        seq.records.push_back(std::move(rec));
        seq.gt_labels.push_back(std::move(gt));
    }
    return seq;
}

void write_synth_dataset(const SynthConfig& cfg, const fs::path& root) {
    const SynthSequence seq = generate_synth_sequence(cfg);
    std::error_code ec;
    fs::create_directories(root / "clouds", ec);
    fs::create_directories(root / "semantic", ec);
    fs::create_directories(root / "depth", ec);
    fs::create_directories(root / "labels", ec);
    fs::create_directories(root / "gt_labels", ec);
    if (cfg.with_scalars) fs::create_directories(root / "scalars", ec);

    std::vector<Pose> poses;
    for (std::size_t f = 0; f < seq.records.size(); ++f) {
        const ScanRecord& rec = seq.records[f];
        const std::string name = frame_name(rec.frame_id);
        save_cloud_xyz(rec.cloud, root / "clouds" / (name + ".xyz"));
        save_pgm(*rec.semantic, root / "semantic" / (name + ".pgm"));
        save_depth(*rec.depth, root / "depth" / (name + ".depth"));
        save_pgm(*rec.labels, root / "labels" / (name + ".pgm"));
        save_pgm(seq.gt_labels[f], root / "gt_labels" / (name + ".pgm"));
        if (rec.scalars) save_scalars(*rec.scalars, root / "scalars" / (name + ".txt"));
        poses.push_back(rec.pose);
    }
    save_poses(poses, root / "poses.txt");
    save_intrinsics(cfg.intrinsics(), root / "camera.txt");
    save_config(synth_run_config(cfg), root / "run.cfg");
}

RunConfig synth_run_config(const SynthConfig& cfg) {
    RunConfig run;
    run.semantic = SemanticConfig::uniform(kSynthNumClasses, 0.001, {kSynthGround});
    run.labeling.untraversable_classes = {kSynthWall, kSynthObstacle, kSynthSky};
    run.gaussian_enabled = cfg.with_scalars;
    run.max_depth = cfg.max_range;
    run.seed = cfg.seed;
    run.validate();
    return run;
}

}  // namespace mlmap
