#pragma once

#include <filesystem>
#include <variant>

#include "mlmap/gaussian_layer.hpp"
#include "mlmap/semantic_layer.hpp"
#include "mlmap/traversability_layer.hpp"

namespace mlmap {

enum class LayerKind : std::uint16_t {
    semantic = 1,
    traversability = 2,
    gaussian = 3,
};

// Versioned binary grid file: header (magic "MLMAP1", layer kind, payload
// width K, resolution, origin, cell count) then one record per cell
// (i, j, k as int32 + K float64 values), sorted by coordinate. Round-trips
// bit-exactly.
void save_grid(const VoxelGrid<DirichletCell>& grid, const std::filesystem::path& path);
void save_grid(const VoxelGrid<BetaCell>& grid, const std::filesystem::path& path);
void save_grid(const VoxelGrid<GaussianCell>& grid, const std::filesystem::path& path);

struct LoadedGrid {
    LayerKind kind{};
    std::variant<VoxelGrid<DirichletCell>, VoxelGrid<BetaCell>, VoxelGrid<GaussianCell>> grid;

    const VoxelGrid<DirichletCell>& semantic() const {
        return std::get<VoxelGrid<DirichletCell>>(grid);
    }
    const VoxelGrid<BetaCell>& traversability() const { return std::get<VoxelGrid<BetaCell>>(grid); }
    const VoxelGrid<GaussianCell>& gaussian() const { return std::get<VoxelGrid<GaussianCell>>(grid); }
};

LoadedGrid load_grid(const std::filesystem::path& path);

}  // namespace mlmap
