#include "mlmap/pipeline.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include "mlmap/errors.hpp"
#include "mlmap/point_index.hpp"
#include "mlmap/rng.hpp"

namespace mlmap {

FrameTrainingData extract_training_data(const ScanRecord& record, const RunConfig& cfg) {
    FrameTrainingData out;
    const bool has_depth = record.depth.has_value();
    if (has_depth && (record.semantic || record.labels)) {
        const Raster& depth = *record.depth;
        for (int y = 0; y < depth.height(); y += cfg.pixel_stride) {
            for (int x = 0; x < depth.width(); x += cfg.pixel_stride) {
                if (!depth.valid(x, y)) continue;
                const double d = depth.at(x, y);
                if (cfg.max_depth > 0.0 && d > cfg.max_depth) continue;
                const Point3 world =
                    backproject_pixel(x + 0.5, y + 0.5, d, record.pose, record.intrinsics);
                if (record.semantic && record.semantic->valid(x, y)) {
                    const int cls = record.semantic->label_at(x, y);
                    if (cls < 0 || cls >= cfg.semantic.num_classes)
                        throw IoError("frame " + std::to_string(record.frame_id) +
                                      ": semantic class " + std::to_string(cls) +
                                      " outside configured range");
                    out.semantic_points.push_back(
                        make_semantic_point(world, cls, cfg.semantic.num_classes,
                                            static_cast<std::uint32_t>(out.semantic_points.size())));
                }
                if (record.labels && record.labels->valid(x, y)) {
                    const int z = record.labels->label_at(x, y);
                    if (z != 0 && z != 1)
                        throw IoError("frame " + std::to_string(record.frame_id) +
                                      ": traversability label must be 0 or 1");
                    out.binary_points.push_back(make_binary_point(
                        world, z, static_cast<std::uint32_t>(out.binary_points.size())));
                }
            }
        }
    }
    if (record.scalars) {
        for (const ScalarMeasurement& m : *record.scalars)
            out.scalar_points.push_back(make_scalar_point(
                m.position, m.value, static_cast<std::uint32_t>(out.scalar_points.size())));
    }
    return out;
}

MappingResult run_mapping(std::span<const ScanRecord> records, const RunConfig& cfg,
                          std::ostream* log) {
    cfg.validate();
    const GridGeometry geom = cfg.map_geometry();
    MappingResult result{
        SemanticLayer(cfg.semantic, geom),
        TraversabilityLayer(cfg.trav, geom),
        cfg.gaussian_enabled ? std::optional<GaussianLayer>(GaussianLayer(cfg.gaussian, geom))
                             : std::nullopt,
        {}};

    for (std::size_t f = 0; f < records.size(); ++f) {
        const auto start = std::chrono::steady_clock::now();
        const ScanRecord& record = records[f];
        const FrameTrainingData data = extract_training_data(record, cfg);
        const ScanRng rng{cfg.seed, static_cast<std::uint64_t>(f)};

        if (!data.semantic_points.empty()) {
            const PointIndex index(std::span<const TrainingPoint>(data.semantic_points));
            result.semantic.update(data.semantic_points, cfg.kernel, index);
        }
        if (!data.binary_points.empty()) {
            const PointIndex index(std::span<const TrainingPoint>(data.binary_points));
            result.trav.update(data.binary_points, cfg.kernel, index, result.semantic, rng);
        }
        if (result.gaussian && !data.scalar_points.empty()) {
            const PointIndex index(std::span<const TrainingPoint>(data.scalar_points));
            result.gaussian->update(data.scalar_points, cfg.kernel, index);
        }

        FrameStats stats;
        stats.frame_id = record.frame_id;
        stats.semantic_points = data.semantic_points.size();
        stats.binary_points = data.binary_points.size();
        stats.scalar_points = data.scalar_points.size();
        stats.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        if (log) {
            *log << "frame " << record.frame_id << ": semantic=" << stats.semantic_points
                 << " binary=" << stats.binary_points << " scalar=" << stats.scalar_points
                 << " wall_ms=" << stats.wall_ms << "\n";
        }
        result.frames.push_back(stats);
    }
    return result;
}

std::string MappingResult::summary_text() const {
    std::size_t sem = 0, bin = 0, sca = 0;
    for (const FrameStats& s : frames) {
        sem += s.semantic_points;
        bin += s.binary_points;
        sca += s.scalar_points;
    }
    std::ostringstream out;
    out << "frames = " << frames.size() << "\n";
    out << "semantic_points = " << sem << "\n";
    out << "binary_points = " << bin << "\n";
    out << "scalar_points = " << sca << "\n";
    out << "semantic_cells = " << semantic.grid().size() << "\n";
    out << "traversability_cells = " << trav.grid().size() << "\n";
    out << "gaussian_cells = " << (gaussian ? gaussian->grid().size() : 0) << "\n";
    return out.str();
}

std::vector<std::optional<Raster>> run_labeling(std::span<const ScanRecord> records,
                                                const RunConfig& cfg) {
    cfg.validate();
    std::vector<std::optional<Raster>> out(records.size());
    for (std::size_t f = 0; f < records.size(); ++f) {
        const ScanRecord& record = records[f];
        if (!record.depth) continue;

        const std::size_t last = std::min(records.size(), f + cfg.labeling.time_window);
        std::vector<std::vector<Point3>> clouds;
        std::vector<Pose> poses;
        for (std::size_t g = f; g < last; ++g) {
            clouds.push_back(records[g].cloud);
            poses.push_back(records[g].pose);
        }
        const ElevationMap elevation = build_elevation_map(clouds, poses, cfg.labeling);
        const ScoreMap scores = score_elevation_map(elevation, cfg.labeling);
        Raster labels = project_labels_to_image(scores, *record.depth, record.pose,
                                                record.intrinsics, cfg.labeling.score_threshold);
        if (record.semantic)
            labels = semantic_noise_filter(labels, *record.semantic,
                                           cfg.labeling.untraversable_classes);
        out[f] = std::move(labels);
    }
    return out;
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    out.precision(10);
    out << "frames_evaluated = " << frames_evaluated << "\n";
    out << "evaluated_pixels = " << evaluated_pixels << "\n";
    out << "ignored_pixels = " << ignored_pixels << "\n";
    for (std::size_t c = 0; c < iou.per_class.size(); ++c) {
        out << "iou_class_" << c << " = ";
        if (std::isnan(iou.per_class[c]))
            out << "excluded";
        else
            out << 100.0 * iou.per_class[c];
        out << "\n";
    }
    out << "mean_iou = " << 100.0 * iou.mean << "\n";
    return out.str();
}

std::string EvalReport::to_csv() const {
    std::ostringstream out;
    out.precision(10);
    out << "class,iou_percent\n";
    for (std::size_t c = 0; c < iou.per_class.size(); ++c) {
        out << c << ",";
        if (std::isnan(iou.per_class[c]))
            out << "";
        else
            out << 100.0 * iou.per_class[c];
        out << "\n";
    }
    out << "mean," << 100.0 * iou.mean << "\n";
    return out.str();
}

EvalReport evaluate_map_projection(const TraversabilityLayer& trav,
                                   std::span<const ScanRecord> records,
                                   std::span<const std::optional<Raster>> gt_labels,
                                   const RunConfig& cfg) {
    if (records.size() != gt_labels.size())
        throw std::invalid_argument("evaluate_map_projection: record/ground-truth count mismatch");
    ConfusionMatrix cm(2);
    int frames_evaluated = 0;
    for (std::size_t f = 0; f < records.size(); ++f) {
        if (!records[f].depth || !gt_labels[f]) continue;
        const Raster pred =
            project_map_to_image_labels(trav, *records[f].depth, records[f].pose,
                                        records[f].intrinsics, cfg.trav_threshold,
                                        cfg.eval_use_map_estimate);
        cm.merge(confusion_matrix(pred, *gt_labels[f], 2));
        ++frames_evaluated;
    }
    if (frames_evaluated == 0)
        throw std::invalid_argument("evaluate_map_projection: nothing to evaluate");
    EvalReport report;
    report.iou = iou_from_confusion(cm);
    report.num_classes = 2;
    report.evaluated_pixels = cm.total();
    report.ignored_pixels = cm.ignored();
    report.frames_evaluated = frames_evaluated;
    return report;
}

EvalReport evaluate_rasters(std::span<const std::optional<Raster>> pred,
                            std::span<const std::optional<Raster>> gt_labels, int num_classes) {
    if (pred.size() != gt_labels.size())
        throw std::invalid_argument("evaluate_rasters: prediction/ground-truth count mismatch");
    ConfusionMatrix cm(num_classes);
    int frames_evaluated = 0;
    for (std::size_t f = 0; f < pred.size(); ++f) {
        if (!pred[f] || !gt_labels[f]) continue;
        cm.merge(confusion_matrix(*pred[f], *gt_labels[f], num_classes));
        ++frames_evaluated;
    }
    if (frames_evaluated == 0) throw std::invalid_argument("evaluate_rasters: nothing to evaluate");
    EvalReport report;
    report.iou = iou_from_confusion(cm);
    report.num_classes = num_classes;
    report.evaluated_pixels = cm.total();
    report.ignored_pixels = cm.ignored();
    report.frames_evaluated = frames_evaluated;
    return report;
}

}  // namespace mlmap
