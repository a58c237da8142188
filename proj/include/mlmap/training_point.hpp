#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "mlmap/geometry.hpp"

namespace mlmap {

// One-hot class measurement y_i.
struct OneHotLabel {
    std::vector<std::uint8_t> bits;

    int class_index() const;  // index of the single set bit; throws if not one-hot
    // Exactly one entry equal to 1, all others 0, length == num_classes.
    void validate(int num_classes) const;
};

// Binary traversability measurement z_i.
struct BinaryLabel {
    std::uint8_t value = 0;

    void validate() const;  // throws unless value is 0 or 1
};

// Scalar measurement f_i (e.g. friction coefficient).
struct ScalarSample {
    double value = 0.0;

    void validate() const;  // throws on non-finite value
};

using MeasurementPayload = std::variant<OneHotLabel, BinaryLabel, ScalarSample>;

struct TrainingPoint {
    Point3 position{};
    MeasurementPayload payload{};
    // Identity within a scan; layer updates accumulate in ascending id order
    // so permutations and batch splits reproduce posteriors exactly. Must be
    // unique within one scan.
    std::uint32_t id = 0;
};

TrainingPoint make_semantic_point(const Point3& pos, int class_index, int num_classes,
                                  std::uint32_t id = 0);
TrainingPoint make_binary_point(const Point3& pos, int value, std::uint32_t id = 0);
TrainingPoint make_scalar_point(const Point3& pos, double value, std::uint32_t id = 0);

// Throws when two points share an id.
void validate_unique_ids(std::span<const TrainingPoint> scan);

}  // namespace mlmap
