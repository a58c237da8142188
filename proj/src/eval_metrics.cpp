#include "mlmap/eval_metrics.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mlmap {

ConfusionMatrix::ConfusionMatrix(int num_classes) : num_classes_(num_classes) {
    if (num_classes < 2) throw std::invalid_argument("confusion matrix: need at least 2 classes");
    counts_.assign(static_cast<std::size_t>(num_classes) * num_classes, 0);
}

std::uint64_t ConfusionMatrix::at(int pred, int gt) const {
    return counts_[static_cast<std::size_t>(pred) * num_classes_ + gt];
}

void ConfusionMatrix::add(int pred, int gt, std::uint64_t count) {
    if (pred < 0 || pred >= num_classes_ || gt < 0 || gt >= num_classes_)
        throw std::invalid_argument("confusion matrix: class index out of range");
    counts_[static_cast<std::size_t>(pred) * num_classes_ + gt] += count;
}

std::uint64_t ConfusionMatrix::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

void ConfusionMatrix::merge(const ConfusionMatrix& other) {
    if (other.num_classes_ != num_classes_)
        throw std::invalid_argument("confusion matrix: class count mismatch in merge");
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    ignored_ += other.ignored_;
}

Raster project_map_to_image_labels(const TraversabilityLayer& trav, const Raster& depth,
                                   const Pose& camera_pose, const CameraIntrinsics& intr,
                                   double tau, bool use_map_estimate) {
    intr.validate();
    if (depth.kind() != RasterKind::depth)
        throw std::invalid_argument("project_map_to_image_labels: raster is not a depth image");
    const auto& grid = trav.grid();
    Raster labels(depth.width(), depth.height(), RasterKind::binary, 0.0f, false);
    for (int y = 0; y < depth.height(); ++y) {
        for (int x = 0; x < depth.width(); ++x) {
            if (!depth.valid(x, y)) continue;
            const Point3 world =
                backproject_pixel(x + 0.5, y + 0.5, depth.at(x, y), camera_pose, intr);
            const BetaCell* cell = grid.find(grid.coord_of(world));
            if (!cell) continue;
            const BetaEstimate est = TraversabilityLayer::query(*cell);
            const double p = (use_map_estimate && est.map) ? *est.map : est.mean;
            labels.set(x, y, p >= tau ? 1.0f : 0.0f);
            labels.set_valid(x, y, true);
        }
    }
    return labels;
}

ConfusionMatrix confusion_matrix(const Raster& pred, const Raster& gt, int num_classes) {
    if (pred.width() != gt.width() || pred.height() != gt.height())
        throw std::invalid_argument("confusion matrix: raster dimensions differ");
    ConfusionMatrix cm(num_classes);
    for (int y = 0; y < pred.height(); ++y) {
        for (int x = 0; x < pred.width(); ++x) {
            if (!pred.valid(x, y) || !gt.valid(x, y)) {
                cm.add_ignored();
                continue;
            }
            cm.add(pred.label_at(x, y), gt.label_at(x, y));
        }
    }
    if (cm.total() == 0) throw std::invalid_argument("confusion matrix: zero evaluable pixels");
    return cm;
}

IouResult iou_from_confusion(const ConfusionMatrix& cm) {
    const int K = cm.num_classes();
    IouResult out;
    out.per_class.assign(static_cast<std::size_t>(K),
                         std::numeric_limits<double>::quiet_NaN());
    double sum = 0.0;
    int counted = 0;
    for (int c = 0; c < K; ++c) {
        std::uint64_t tp = cm.at(c, c);
        std::uint64_t fp = 0, fn = 0;
        for (int o = 0; o < K; ++o) {
            if (o == c) continue;
            fp += cm.at(c, o);
            fn += cm.at(o, c);
        }
        if (tp + fn == 0) continue;  // class absent from ground truth
        out.per_class[static_cast<std::size_t>(c)] =
            static_cast<double>(tp) / static_cast<double>(tp + fp + fn);
        sum += out.per_class[static_cast<std::size_t>(c)];
        ++counted;
    }
    if (counted == 0) throw std::invalid_argument("iou: no class present in ground truth");
    out.mean = sum / counted;
    return out;
}

IouResult confusion_and_iou(const Raster& pred, const Raster& gt, int num_classes) {
    return iou_from_confusion(confusion_matrix(pred, gt, num_classes));
}

double mtl_delta(std::span<const TaskScore> mtl, std::span<const TaskScore> stl) {
    if (mtl.size() != stl.size() || mtl.empty())
        throw std::invalid_argument("mtl_delta: score lists must be nonempty and equal length");
    double sum = 0.0;
    for (std::size_t i = 0; i < mtl.size(); ++i) {
        if (stl[i].value == 0.0) throw std::invalid_argument("mtl_delta: zero single-task score");
        if (mtl[i].higher_is_better != stl[i].higher_is_better)
            throw std::invalid_argument("mtl_delta: task direction flags differ");
        const double sign = stl[i].higher_is_better ? 1.0 : -1.0;
        sum += sign * (mtl[i].value - stl[i].value) / stl[i].value;
    }
    return sum / static_cast<double>(mtl.size());
}

}  // namespace mlmap
