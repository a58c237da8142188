#pragma once

#include <algorithm>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mlmap/geometry.hpp"
#include "mlmap/training_point.hpp"

namespace mlmap {

// Sparse voxel storage: cells materialize on first touch, untouched space
// costs nothing. Cell state type is layer-specific.
template <typename Cell>
class VoxelGrid {
public:
    using Map = std::unordered_map<CellCoord, Cell, CellCoordHash>;

    VoxelGrid() = default;
    VoxelGrid(double resolution, const Point3& origin) : geom_{resolution, origin} {}
    explicit VoxelGrid(const GridGeometry& geom) : geom_(geom) {}

    const GridGeometry& geometry() const { return geom_; }
    double resolution() const { return geom_.resolution; }
    const Point3& origin() const { return geom_.origin; }

    CellCoord coord_of(const Point3& p) const { return geom_.coord_of(p); }
    Point3 center_of(const CellCoord& c) const { return geom_.center_of(c); }

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    const Cell* find(const CellCoord& c) const {
        auto it = cells_.find(c);
        return it == cells_.end() ? nullptr : &it->second;
    }

    Cell& at_or_create(const CellCoord& c, const Cell& init) {
        return cells_.try_emplace(c, init).first->second;
    }

    void insert(const CellCoord& c, Cell cell) { cells_[c] = std::move(cell); }

    typename Map::const_iterator begin() const { return cells_.begin(); }
    typename Map::const_iterator end() const { return cells_.end(); }

    // Deterministic cell order for serialization and diffs.
    std::vector<CellCoord> sorted_coords() const {
        std::vector<CellCoord> coords;
        coords.reserve(cells_.size());
        for (const auto& [c, _] : cells_) coords.push_back(c);
        std::sort(coords.begin(), coords.end());
        return coords;
    }

private:
    GridGeometry geom_{};
    Map cells_;
};

// Cells whose center lies strictly within `radius` of at least one scan
// point: exactly the cells a compact-support kernel update can touch.
std::vector<CellCoord> support_cells(std::span<const TrainingPoint> scan, double radius,
                                     const GridGeometry& geom);

}  // namespace mlmap
