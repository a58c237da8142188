#include "mlmap/semantic_layer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlmap {

SemanticConfig SemanticConfig::uniform(int num_classes, double prior,
                                       std::vector<int> traversable_classes) {
    SemanticConfig cfg;
    cfg.num_classes = num_classes;
    cfg.prior_alpha.assign(static_cast<std::size_t>(num_classes), prior);
    cfg.traversable_classes = std::move(traversable_classes);
    cfg.validate();
    return cfg;
}

void SemanticConfig::validate() const {
    if (num_classes < 2) throw std::invalid_argument("semantic config: need at least 2 classes");
    if (static_cast<int>(prior_alpha.size()) != num_classes)
        throw std::invalid_argument("semantic config: prior length does not match class count");
    for (double a : prior_alpha) {
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("semantic config: priors must be positive finite");
    }
    if (traversable_classes.empty() ||
        static_cast<int>(traversable_classes.size()) >= num_classes)
        throw std::invalid_argument(
            "semantic config: traversable classes must be a nonempty proper subset");
    for (int k : traversable_classes) {
        if (k < 0 || k >= num_classes)
            throw std::invalid_argument("semantic config: traversable class out of range");
    }
}

bool SemanticConfig::is_traversable(int class_index) const {
    return std::find(traversable_classes.begin(), traversable_classes.end(), class_index) !=
           traversable_classes.end();
}

SemanticLayer::SemanticLayer(SemanticConfig cfg, const GridGeometry& geom)
    : cfg_(std::move(cfg)), grid_(geom) {
    cfg_.validate();
}

void SemanticLayer::update(std::span<const TrainingPoint> scan, const KernelParams& kernel,
                           const PointIndex& index) {
    kernel.validate();
    validate_unique_ids(scan);
    std::vector<int> classes(scan.size());
    for (std::size_t i = 0; i < scan.size(); ++i) {
        const auto* label = std::get_if<OneHotLabel>(&scan[i].payload);
        if (!label) throw std::invalid_argument("semantic update: payload is not one-hot");
        label->validate(cfg_.num_classes);
        classes[i] = label->class_index();
    }

    const DirichletCell prior = prior_cell();
    std::vector<PointIndex::Neighbor> neighbors;
    for (const CellCoord& c : support_cells(scan, kernel.length_scale, grid_.geometry())) {
        index.neighbors_within(grid_.center_of(c), kernel.length_scale, neighbors);
        if (neighbors.empty()) continue;
        // Fixed summation order keeps batch splits and permutations exact.
        sort_neighbors_by_point_id(neighbors, scan);
        DirichletCell& cell = grid_.at_or_create(c, prior);
        for (const auto& n : neighbors)
            cell.alpha[static_cast<std::size_t>(classes[n.id])] +=
                sparse_kernel_value(n.distance, kernel);
    }
}

SemanticEstimate SemanticLayer::query(const DirichletCell& cell) const {
    SemanticEstimate est;
    const std::size_t K = cell.alpha.size();
    est.probs.resize(K);
    est.variance.resize(K);
    double total = 0.0;
    for (double a : cell.alpha) total += a;
    for (std::size_t k = 0; k < K; ++k) {
        est.probs[k] = cell.alpha[k] / total;
        est.variance[k] = cell.alpha[k] * (total - cell.alpha[k]) / (total * total * (total + 1.0));
    }
    est.map_class = static_cast<int>(
        std::max_element(cell.alpha.begin(), cell.alpha.end()) - cell.alpha.begin());
    return est;
}

BetaParams SemanticLayer::shrink_to_beta(const DirichletCell& cell) const {
    BetaParams out;
    for (std::size_t k = 0; k < cell.alpha.size(); ++k) {
        if (cfg_.is_traversable(static_cast<int>(k)))
            out.alpha += cell.alpha[k];
        else
            out.beta += cell.alpha[k];
    }
    return out;
}

BetaParams SemanticLayer::prior_beta_params() const {
    const DirichletCell prior{cfg_.prior_alpha};
    return shrink_to_beta(prior);
}

}  // namespace mlmap
