#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "mlmap/config.hpp"
#include "mlmap/geometry.hpp"
#include "mlmap/raster.hpp"

namespace mlmap {

struct ScalarMeasurement {
    Point3 position{};
    double value = 0.0;
};

// Per-frame inputs of one sequence entry.
struct ScanRecord {
    int frame_id = 0;
    Pose pose{};                       // world-from-sensor
    std::vector<Point3> cloud;         // sensor frame
    CameraIntrinsics intrinsics{};
    std::optional<Raster> semantic;    // class indices
    std::optional<Raster> depth;       // meters
    std::optional<Raster> labels;      // binary traversability
    std::optional<std::vector<ScalarMeasurement>> scalars;  // world frame
};

// --- pose files (KITTI odometry convention) ---------------------------------
// One frame per line: 12 reals, row-major 3x4 world-from-sensor matrix.
std::vector<Pose> load_poses(const std::filesystem::path& path);
void save_poses(const std::vector<Pose>& poses, const std::filesystem::path& path);

// --- point clouds ------------------------------------------------------------
// Text: three reals per line. Binary: 16-byte header (8-byte magic
// "MLCLOUD1", u32 count, u32 reserved) + count * 3 float32 little-endian.
std::vector<Point3> load_cloud_xyz(const std::filesystem::path& path);
void save_cloud_xyz(const std::vector<Point3>& cloud, const std::filesystem::path& path);
std::vector<Point3> load_cloud_xyzb(const std::filesystem::path& path);
void save_cloud_xyzb(const std::vector<Point3>& cloud, const std::filesystem::path& path);

// --- rasters -----------------------------------------------------------------
// Class/binary rasters: binary PGM (P5, maxval 255); value 255 encodes an
// invalid pixel and becomes a mask entry in memory.
Raster load_pgm(const std::filesystem::path& path, RasterKind kind);
void save_pgm(const Raster& raster, const std::filesystem::path& path);

// Depth: one text header line "DEPTH <width> <height>" + float32
// little-endian row-major payload; non-positive or non-finite values are
// invalid pixels.
Raster load_depth(const std::filesystem::path& path);
void save_depth(const Raster& raster, const std::filesystem::path& path);

// --- scalar measurements -------------------------------------------------------
// Text: "x y z value" per line.
std::vector<ScalarMeasurement> load_scalars(const std::filesystem::path& path);
void save_scalars(const std::vector<ScalarMeasurement>& scalars,
                  const std::filesystem::path& path);

// --- camera intrinsics ---------------------------------------------------------
// Text: "fx fy cx cy width height" on one line.
CameraIntrinsics load_intrinsics(const std::filesystem::path& path);
void save_intrinsics(const CameraIntrinsics& intr, const std::filesystem::path& path);

// --- sequences ------------------------------------------------------------------
// Layout under root:
//   poses.txt, camera.txt, clouds/NNNNNN.xyz[b],
//   semantic/NNNNNN.pgm, depth/NNNNNN.depth, labels/NNNNNN.pgm,
//   gt_labels/NNNNNN.pgm (evaluation only), scalars/NNNNNN.txt
// Frames are discovered from clouds/; optional per-frame files may be
// missing. Throws IoError with file context on malformed input.
std::vector<ScanRecord> load_dataset(const std::filesystem::path& root, const RunConfig& cfg);

// Ground-truth label rasters for evaluation, keyed by frame id.
std::optional<Raster> load_gt_labels(const std::filesystem::path& root, int frame_id);

std::string frame_name(int frame_id);  // zero-padded six digits

}  // namespace mlmap
