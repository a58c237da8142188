#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "mlmap/dataset.hpp"

namespace mlmap {

// Parameters of the generated corridor scene: flat ground, two walls and a
// step obstacle, observed by a forward-facing camera travelling along the
// corridor axis.
struct SynthConfig {
    int frames = 30;
    int width = 64;
    int height = 48;
    double focal = 40.0;

    double corridor_length = 14.0;  // meters
    double half_width = 2.0;
    double wall_height = 2.5;
    double camera_height = 1.2;
    double camera_start = 0.5;
    double camera_step = 0.15;      // advance per frame
    double max_range = 8.0;         // depth beyond this is invalid

    // Step obstacle footprint and height.
    double step_x0 = 6.0, step_x1 = 6.6;
    double step_y0 = -2.0, step_y1 = 0.0;
    double step_height = 0.3;

    double semantic_accuracy = 0.95;  // fraction of correct semantic pixels
    double trav_accuracy = 0.75;      // fraction of correct traversability pixels

    int cloud_stride = 2;     // pixel stride for the synthetic point cloud
    bool with_scalars = true; // synthesize friction-style scalar samples
    double scalar_ground = 0.8;
    double scalar_obstacle = 0.2;
    double scalar_noise = 0.05;

    std::uint64_t seed = 1;

    CameraIntrinsics intrinsics() const;
};

// Classes of the synthetic world.
inline constexpr int kSynthGround = 0;
inline constexpr int kSynthWall = 1;
inline constexpr int kSynthObstacle = 2;
inline constexpr int kSynthSky = 3;
inline constexpr int kSynthNumClasses = 4;

struct SynthSequence {
    std::vector<ScanRecord> records;
    std::vector<Raster> gt_labels;  // clean traversability, aligned with records
};

SynthSequence generate_synth_sequence(const SynthConfig& cfg);

// Writes a full dataset directory (poses, camera, clouds, rasters, ground
// truth, scalars) that load_dataset reads back.
void write_synth_dataset(const SynthConfig& cfg, const std::filesystem::path& root);

// RunConfig matching the synthetic world's class layout.
RunConfig synth_run_config(const SynthConfig& cfg);

}  // namespace mlmap
