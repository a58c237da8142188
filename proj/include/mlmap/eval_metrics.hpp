#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mlmap/raster.hpp"
#include "mlmap/traversability_layer.hpp"

namespace mlmap {

class ConfusionMatrix {
public:
    explicit ConfusionMatrix(int num_classes);

    int num_classes() const { return num_classes_; }
    std::uint64_t at(int pred, int gt) const;
    void add(int pred, int gt, std::uint64_t count = 1);
    void add_ignored(std::uint64_t count = 1) { ignored_ += count; }

    std::uint64_t total() const;
    std::uint64_t ignored() const { return ignored_; }

    void merge(const ConfusionMatrix& other);

private:
    int num_classes_;
    std::vector<std::uint64_t> counts_;  // row-major [pred][gt]
    std::uint64_t ignored_ = 0;
};

struct IouResult {
    std::vector<double> per_class;  // NaN for classes excluded from the mean
    double mean = 0.0;
};

// Thresholds each valid-depth pixel's cell posterior (mean by default, MAP
// where defined when use_map_estimate) at tau. Pixels hitting unmapped
// cells are invalid.
Raster project_map_to_image_labels(const TraversabilityLayer& trav, const Raster& depth,
                                   const Pose& camera_pose, const CameraIntrinsics& intr,
                                   double tau, bool use_map_estimate = false);

// Pixels invalid in either raster are excluded. Throws when nothing is
// evaluable.
ConfusionMatrix confusion_matrix(const Raster& pred, const Raster& gt, int num_classes);

// IoU_c = TP / (TP + FP + FN); the mean runs over classes present in gt.
IouResult iou_from_confusion(const ConfusionMatrix& cm);

IouResult confusion_and_iou(const Raster& pred, const Raster& gt, int num_classes);

struct TaskScore {
    double value = 0.0;
    bool higher_is_better = true;
};

// Average relative improvement of multi-task over single-task scores,
// returned as a fraction (0.0464 = +4.64%). Throws on shape mismatch or a
// zero single-task score.
double mtl_delta(std::span<const TaskScore> mtl, std::span<const TaskScore> stl);

}  // namespace mlmap
