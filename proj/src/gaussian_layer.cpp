#include "mlmap/gaussian_layer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace mlmap {

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

void GaussianLayerConfig::validate() const {
    if (!(obs_variance > 0.0))
        throw std::invalid_argument("gaussian config: observation variance must be > 0");
    if (!(prior_confidence > 0.0))
        throw std::invalid_argument("gaussian config: prior confidence must be > 0");
    if (!(d_low < d_high))
        throw std::invalid_argument("gaussian config: d_low must be below d_high");
    if (!std::isfinite(prior_mean))
        throw std::invalid_argument("gaussian config: prior mean must be finite");
}

double gaussian_to_bernoulli(double mean, double variance, double d_low, double d_high) {
    if (!(d_low < d_high)) throw std::invalid_argument("gaussian_to_bernoulli: d_low >= d_high");
    if (!(variance > 0.0)) throw std::invalid_argument("gaussian_to_bernoulli: variance <= 0");
    const double sd = std::sqrt(variance);
    return normal_cdf((d_high - mean) / sd) - normal_cdf((d_low - mean) / sd);
}

GaussianLayer::GaussianLayer(GaussianLayerConfig cfg, const GridGeometry& geom)
    : cfg_(cfg), grid_(geom) {
    cfg_.validate();
}

void GaussianLayer::update(std::span<const TrainingPoint> scan, const KernelParams& kernel,
                           const PointIndex& index) {
    kernel.validate();
    validate_unique_ids(scan);
    std::vector<double> values(scan.size());
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const auto* sample = std::get_if<ScalarSample>(&scan[i].payload);
        if (!sample) throw std::invalid_argument("gaussian update: payload is not scalar");
        sample->validate();
        values[i] = sample->value;
    }

    std::vector<PointIndex::Neighbor> neighbors;
    for (const CellCoord& c : support_cells(scan, kernel.length_scale, grid_.geometry())) {
        index.neighbors_within(grid_.center_of(c), kernel.length_scale, neighbors);
        if (neighbors.empty()) continue;
        sort_neighbors_by_point_id(neighbors, scan);
        GaussianCell& cell = grid_.at_or_create(c, GaussianCell{});
        for (const auto& n : neighbors) {
            const double k = sparse_kernel_value(n.distance, kernel);
            cell.weighted_sum += k * values[n.id];
            cell.weight_sum += k;
        }
    }
}

GaussianEstimate GaussianLayer::query(const GaussianCell& cell) const {
    const double denom = cfg_.prior_confidence + cell.weight_sum;
    return {(cfg_.prior_confidence * cfg_.prior_mean + cell.weighted_sum) / denom,
            cfg_.obs_variance / denom};
}

GaussianEstimate GaussianLayer::query_at(const CellCoord& c) const {
    const GaussianCell* cell = grid_.find(c);
    return query(cell ? *cell : GaussianCell{});
}

double GaussianLayer::bernoulli_parameter(const CellCoord& c) const {
    const GaussianEstimate est = query_at(c);
    return gaussian_to_bernoulli(est.mean, est.variance, cfg_.d_low, cfg_.d_high);
}

std::vector<int> friction_pseudo_measurements(const GaussianLayer& friction,
                                              std::span<const TrainingPoint> scan,
                                              const ScanRng& rng) {
    std::unordered_map<CellCoord, int, CellCoordHash> memo;
    std::vector<int> pseudo(scan.size());
    const auto& geom = friction.grid().geometry();
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const CellCoord c = geom.coord_of(scan[i].position);
        auto it = memo.find(c);
        if (it == memo.end()) {
            const double p = friction.bernoulli_parameter(c);
            const double u = rng.uniform(c, ScanRng::kFrictionStream);
            it = memo.emplace(c, u <= p ? 1 : 0).first;
        }
        pseudo[i] = it->second;
    }
    return pseudo;
}

void update_threeway_with_pseudo(TraversabilityLayer& trav, std::span<const TrainingPoint> scan,
                                 std::span<const int> semantic_pseudo,
                                 std::span<const int> friction_pseudo,
                                 const KernelParams& kernel, const PointIndex& index) {
    kernel.validate();
    validate_unique_ids(scan);
    if (semantic_pseudo.size() != scan.size() || friction_pseudo.size() != scan.size())
        throw std::invalid_argument("threeway update: pseudo-measurement count mismatch");
    std::vector<int> z(scan.size());
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const auto* label = std::get_if<BinaryLabel>(&scan[i].payload);
        if (!label) throw std::invalid_argument("threeway update: payload is not binary");
        label->validate();
        z[i] = label->value;
    }

    auto& grid = trav.grid();
    const BetaCell prior = trav.prior_cell();
    std::vector<PointIndex::Neighbor> neighbors;
    for (const CellCoord& c : support_cells(scan, kernel.length_scale, grid.geometry())) {
        index.neighbors_within(grid.center_of(c), kernel.length_scale, neighbors);
        if (neighbors.empty()) continue;
        sort_neighbors_by_point_id(neighbors, scan);
        BetaCell& cell = grid.at_or_create(c, prior);
        for (const auto& n : neighbors) {
            const double k = sparse_kernel_value(n.distance, kernel);
            const int votes = semantic_pseudo[n.id] + friction_pseudo[n.id] + z[n.id];
            cell.alpha += k * votes;
            cell.beta += k * (3 - votes);
        }
    }
}

void update_traversability_threeway(TraversabilityLayer& trav, const SemanticLayer& semantic,
                                    const GaussianLayer& friction,
                                    std::span<const TrainingPoint> scan,
                                    const KernelParams& kernel, const PointIndex& index,
                                    const ScanRng& rng) {
    const std::vector<int> sem_pseudo = trav.pseudo_measurements(scan, semantic, rng);
    const std::vector<int> fri_pseudo = friction_pseudo_measurements(friction, scan, rng);
    update_threeway_with_pseudo(trav, scan, sem_pseudo, fri_pseudo, kernel, index);
}

}  // namespace mlmap
