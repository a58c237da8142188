#include "mlmap/traversability_layer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace mlmap {

void TravConfig::validate() const {
    if (!(prior_alpha > 0.0) || !(prior_beta > 0.0))
        throw std::invalid_argument("traversability config: priors must be positive");
}

double deduced_bernoulli_parameter(double alpha, double beta) {
    if (alpha > 1.0 && beta > 1.0) return (alpha - 1.0) / (alpha + beta - 2.0);
    return alpha / (alpha + beta);  // mode undefined, fall back to the mean
}

int deduce_pseudo_measurement(double alpha, double beta, double u) {
    return u <= deduced_bernoulli_parameter(alpha, beta) ? 1 : 0;
}

TraversabilityLayer::TraversabilityLayer(TravConfig cfg, const GridGeometry& geom)
    : cfg_(cfg), grid_(geom) {
    cfg_.validate();
}

std::vector<int> TraversabilityLayer::extract_binary(std::span<const TrainingPoint> scan) {
    std::vector<int> z(scan.size());
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const auto* label = std::get_if<BinaryLabel>(&scan[i].payload);
        if (!label) throw std::invalid_argument("traversability update: payload is not binary");
        label->validate();
        z[i] = label->value;
    }
    return z;
}

std::vector<int> TraversabilityLayer::pseudo_measurements(std::span<const TrainingPoint> scan,
                                                          const SemanticLayer& semantic,
                                                          const ScanRng& rng) const {
    // One draw per semantic cell per scan; every point in that cell reuses
    // it. Each draw is a pure function of (seed, scan, cell), so the memo is
    // a speedup only.
    std::unordered_map<CellCoord, int, CellCoordHash> memo;
    std::vector<int> pseudo(scan.size());
    const auto& sem_grid = semantic.grid();
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const CellCoord c = sem_grid.coord_of(scan[i].position);
        auto it = memo.find(c);
        if (it == memo.end()) {
            const DirichletCell* cell = sem_grid.find(c);
            const BetaParams shrunk =
                cell ? semantic.shrink_to_beta(*cell) : semantic.prior_beta_params();
            const double u = rng.uniform(c, ScanRng::kSemanticStream);
            it = memo.emplace(c, deduce_pseudo_measurement(shrunk.alpha, shrunk.beta, u)).first;
        }
        pseudo[i] = it->second;
    }
    return pseudo;
}

void TraversabilityLayer::update(std::span<const TrainingPoint> scan, const KernelParams& kernel,
                                 const PointIndex& index, const SemanticLayer& semantic,
                                 const ScanRng& rng) {
    if (cfg_.use_pseudo_measurements) {
        const std::vector<int> pseudo = pseudo_measurements(scan, semantic, rng);
        update_with_pseudo(scan, pseudo, kernel, index);
    } else {
        update_with_pseudo(scan, {}, kernel, index);
    }
}

void TraversabilityLayer::update_with_pseudo(std::span<const TrainingPoint> scan,
                                             std::span<const int> pseudo,
                                             const KernelParams& kernel,
                                             const PointIndex& index) {
    kernel.validate();
    validate_unique_ids(scan);
    if (!pseudo.empty() && pseudo.size() != scan.size())
        throw std::invalid_argument("traversability update: pseudo-measurement count mismatch");
    const std::vector<int> z = extract_binary(scan);

    const BetaCell prior = prior_cell();
    std::vector<PointIndex::Neighbor> neighbors;
    for (const CellCoord& c : support_cells(scan, kernel.length_scale, grid_.geometry())) {
        index.neighbors_within(grid_.center_of(c), kernel.length_scale, neighbors);
        if (neighbors.empty()) continue;
        sort_neighbors_by_point_id(neighbors, scan);
        BetaCell& cell = grid_.at_or_create(c, prior);
        for (const auto& n : neighbors) {
            const double k = sparse_kernel_value(n.distance, kernel);
            if (pseudo.empty()) {
                cell.alpha += k * z[n.id];
                cell.beta += k * (1 - z[n.id]);
            } else {
                // Per point, alpha and beta gain exactly 2k in total.
                cell.alpha += k * (pseudo[n.id] + z[n.id]);
                cell.beta += k * (2 - pseudo[n.id] - z[n.id]);
            }
        }
    }
}

BetaEstimate TraversabilityLayer::query(const BetaCell& cell) {
    BetaEstimate est;
    const double total = cell.alpha + cell.beta;
    if (cell.alpha > 1.0 && cell.beta > 1.0) est.map = (cell.alpha - 1.0) / (total - 2.0);
    est.mean = cell.alpha / total;
    est.variance = cell.alpha * cell.beta / (total * total * (total + 1.0));
    return est;
}

}  // namespace mlmap
