#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mlmap/geometry.hpp"
#include "mlmap/training_point.hpp"

namespace mlmap {

// Balanced k-d tree over an immutable set of positions. Radius queries are
// exact; ids refer to positions in the input order. Immutable after build,
// so concurrent queries from many threads are safe.
class PointIndex {
public:
    struct Neighbor {
        std::uint32_t id = 0;
        double distance = 0.0;
    };

    PointIndex() = default;
    explicit PointIndex(std::span<const Point3> points);
    explicit PointIndex(std::span<const TrainingPoint> points);

    std::size_t size() const { return points_.size(); }
    const Point3& point(std::size_t id) const { return points_[id]; }

    // All stored points with Euclidean distance strictly below radius.
    // Order unspecified. Throws unless radius > 0.
    std::vector<Neighbor> neighbors_within(const Point3& center, double radius) const;

    // Allocation-free variant for hot loops; clears `out` first.
    void neighbors_within(const Point3& center, double radius, std::vector<Neighbor>& out) const;

private:
    void build(std::size_t lo, std::size_t hi, int depth);
    void query(std::size_t lo, std::size_t hi, int depth, const Point3& center, double radius,
               std::vector<Neighbor>& out) const;

    std::vector<Point3> points_;         // input order
    std::vector<std::uint32_t> order_;   // tree order: node of [lo,hi) is the midpoint
};

PointIndex build_index(std::span<const TrainingPoint> points);

// Orders a neighbor list by the scan points' intrinsic ids (neighbor ids
// are positions in the indexed array).
void sort_neighbors_by_point_id(std::vector<PointIndex::Neighbor>& neighbors,
                                std::span<const TrainingPoint> scan);

}  // namespace mlmap
