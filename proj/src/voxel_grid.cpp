#include "mlmap/voxel_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace mlmap {

std::vector<CellCoord> support_cells(std::span<const TrainingPoint> scan, double radius,
                                     const GridGeometry& geom) {
    if (!(radius > 0.0)) throw std::invalid_argument("support_cells: radius must be > 0");
    // A center offset by n cells from the point's own cell is at least
    // (n - 0.5) * resolution away, so offsets beyond this bound cannot hit.
    const int reach = static_cast<int>(std::ceil(radius / geom.resolution + 0.5));
    std::unordered_set<CellCoord, CellCoordHash> seen;
    for (const TrainingPoint& tp : scan) {
        const CellCoord base = geom.coord_of(tp.position);
        for (int di = -reach; di <= reach; ++di) {
            for (int dj = -reach; dj <= reach; ++dj) {
                for (int dk = -reach; dk <= reach; ++dk) {
                    const CellCoord c{base.i + di, base.j + dj, base.k + dk};
                    if (geom.center_of(c).distance_to(tp.position) < radius) seen.insert(c);
                }
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace mlmap
