#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mlmap/dataset.hpp"
#include "mlmap/eval_metrics.hpp"
#include "mlmap/gaussian_layer.hpp"
#include "mlmap/semantic_layer.hpp"
#include "mlmap/trav_labeling.hpp"
#include "mlmap/traversability_layer.hpp"

namespace mlmap {

// Raster pixels turned into per-layer training scans for one frame.
struct FrameTrainingData {
    std::vector<TrainingPoint> semantic_points;
    std::vector<TrainingPoint> binary_points;
    std::vector<TrainingPoint> scalar_points;
};

FrameTrainingData extract_training_data(const ScanRecord& record, const RunConfig& cfg);

struct FrameStats {
    int frame_id = 0;
    std::size_t semantic_points = 0;
    std::size_t binary_points = 0;
    std::size_t scalar_points = 0;
    double wall_ms = 0.0;  // excluded from the deterministic report
};

struct MappingResult {
    SemanticLayer semantic;
    TraversabilityLayer trav;
    std::optional<GaussianLayer> gaussian;
    std::vector<FrameStats> frames;

    // Deterministic run summary (no timings).
    std::string summary_text() const;
};

// Per frame: build index -> semantic update -> traversability update ->
// gaussian update (each only when its measurements are present). Frames
// are processed strictly in order; the rng is keyed by frame position.
// `log` receives one progress line per frame (timings included) when set.
MappingResult run_mapping(std::span<const ScanRecord> records, const RunConfig& cfg,
                          std::ostream* log = nullptr);

// Self-supervised labeling: per frame with a depth raster, builds the
// windowed elevation map, scores it, projects into the image and applies
// the semantic noise filter when semantics are available. Frames without
// depth yield nullopt.
std::vector<std::optional<Raster>> run_labeling(std::span<const ScanRecord> records,
                                                const RunConfig& cfg);

struct EvalReport {
    IouResult iou;
    int num_classes = 0;
    std::uint64_t evaluated_pixels = 0;
    std::uint64_t ignored_pixels = 0;
    int frames_evaluated = 0;

    std::string to_text() const;  // key=value lines
    std::string to_csv() const;
};

// Projects the traversability grid into every frame with depth + ground
// truth and accumulates a single confusion matrix.
EvalReport evaluate_map_projection(const TraversabilityLayer& trav,
                                   std::span<const ScanRecord> records,
                                   std::span<const std::optional<Raster>> gt_labels,
                                   const RunConfig& cfg);

// Accumulated IoU of per-frame label rasters against ground truth.
EvalReport evaluate_rasters(std::span<const std::optional<Raster>> pred,
                            std::span<const std::optional<Raster>> gt_labels, int num_classes);

}  // namespace mlmap
