#include "mlmap/training_point.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mlmap {

int OneHotLabel::class_index() const {
    int idx = -1;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == 1) {
            if (idx >= 0) throw std::invalid_argument("one-hot payload: multiple bits set");
            idx = static_cast<int>(k);
        } else if (bits[k] != 0) {
            throw std::invalid_argument("one-hot payload: entries must be 0 or 1");
        }
    }
    if (idx < 0) throw std::invalid_argument("one-hot payload: no bit set");
    return idx;
}

void OneHotLabel::validate(int num_classes) const {
    if (static_cast<int>(bits.size()) != num_classes)
        throw std::invalid_argument("one-hot payload: length does not match class count");
    (void)class_index();
}

void BinaryLabel::validate() const {
    if (value != 0 && value != 1)
        throw std::invalid_argument("binary payload: value must be 0 or 1");
}

void ScalarSample::validate() const {
    if (!std::isfinite(value)) throw std::invalid_argument("scalar payload: non-finite value");
}

TrainingPoint make_semantic_point(const Point3& pos, int class_index, int num_classes,
                                  std::uint32_t id) {
    if (class_index < 0 || class_index >= num_classes)
        throw std::invalid_argument("make_semantic_point: class index out of range");
    OneHotLabel label;
    label.bits.assign(static_cast<std::size_t>(num_classes), 0);
    label.bits[static_cast<std::size_t>(class_index)] = 1;
    return {pos, std::move(label), id};
}

TrainingPoint make_binary_point(const Point3& pos, int value, std::uint32_t id) {
    BinaryLabel label{static_cast<std::uint8_t>(value)};
    label.validate();
    return {pos, label, id};
}

TrainingPoint make_scalar_point(const Point3& pos, double value, std::uint32_t id) {
    ScalarSample sample{value};
    sample.validate();
    return {pos, sample, id};
}

void validate_unique_ids(std::span<const TrainingPoint> scan) {
    std::vector<std::uint32_t> ids;
    ids.reserve(scan.size());
    for (const TrainingPoint& tp : scan) ids.push_back(tp.id);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw std::invalid_argument("scan: point ids must be unique");
}

}  // namespace mlmap
