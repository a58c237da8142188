#include "mlmap/point_index.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mlmap {

namespace {

double axis_value(const Point3& p, int axis) {
    switch (axis) {
        case 0: return p.x;
        case 1: return p.y;
        default: return p.z;
    }
}

}  // namespace

PointIndex::PointIndex(std::span<const Point3> points) : points_(points.begin(), points.end()) {
    for (const Point3& p : points_) {
        if (!p.finite()) throw std::invalid_argument("point index: non-finite coordinate");
    }
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), 0u);
    if (!points_.empty()) build(0, points_.size(), 0);
}

PointIndex::PointIndex(std::span<const TrainingPoint> points) {
    std::vector<Point3> positions;
    positions.reserve(points.size());
    for (const TrainingPoint& tp : points) positions.push_back(tp.position);
    *this = PointIndex(positions);
}

void PointIndex::build(std::size_t lo, std::size_t hi, int depth) {
    if (hi - lo <= 1) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    const int axis = depth % 3;
    std::nth_element(order_.begin() + lo, order_.begin() + mid, order_.begin() + hi,
                     [&](std::uint32_t a, std::uint32_t b) {
                         return axis_value(points_[a], axis) < axis_value(points_[b], axis);
                     });
    build(lo, mid, depth + 1);
    build(mid + 1, hi, depth + 1);
}

std::vector<PointIndex::Neighbor> PointIndex::neighbors_within(const Point3& center,
                                                               double radius) const {
    std::vector<Neighbor> out;
    neighbors_within(center, radius, out);
    return out;
}

void PointIndex::neighbors_within(const Point3& center, double radius,
                                  std::vector<Neighbor>& out) const {
    if (!(radius > 0.0)) throw std::invalid_argument("neighbors_within: radius must be > 0");
    out.clear();
    if (!points_.empty()) query(0, points_.size(), 0, center, radius, out);
}

void PointIndex::query(std::size_t lo, std::size_t hi, int depth, const Point3& center,
                       double radius, std::vector<Neighbor>& out) const {
    const std::size_t mid = lo + (hi - lo) / 2;
    const Point3& p = points_[order_[mid]];
    const double d = center.distance_to(p);
    if (d < radius) out.push_back({order_[mid], d});

    const int axis = depth % 3;
    const double delta = axis_value(center, axis) - axis_value(p, axis);
    // Left subtree holds coordinates <= split, right >= split; a subtree can
    // contain hits only if the slab distance to the split is below radius.
    if (mid > lo && delta < radius) query(lo, mid, depth + 1, center, radius, out);
    if (mid + 1 < hi && -delta < radius) query(mid + 1, hi, depth + 1, center, radius, out);
}

PointIndex build_index(std::span<const TrainingPoint> points) { return PointIndex(points); }

void sort_neighbors_by_point_id(std::vector<PointIndex::Neighbor>& neighbors,
                                std::span<const TrainingPoint> scan) {
    std::sort(neighbors.begin(), neighbors.end(),
              [&](const PointIndex::Neighbor& a, const PointIndex::Neighbor& b) {
                  return scan[a.id].id < scan[b.id].id;
              });
}

}  // namespace mlmap
