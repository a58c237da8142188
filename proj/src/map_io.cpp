#include "mlmap/map_io.hpp"

#include <cstring>
#include <fstream>

#include "mlmap/errors.hpp"

namespace mlmap {

namespace {

constexpr char kMagic[6] = {'M', 'L', 'M', 'A', 'P', '1'};

struct Header {
    std::uint16_t kind = 0;
    std::uint16_t payload_width = 0;
    double resolution = 0.0;
    double origin[3] = {0.0, 0.0, 0.0};
    std::uint64_t cell_count = 0;
};

void write_header(std::ofstream& out, const Header& h) {
    out.write(kMagic, sizeof(kMagic));
    out.write(reinterpret_cast<const char*>(&h.kind), 2);
    out.write(reinterpret_cast<const char*>(&h.payload_width), 2);
    out.write(reinterpret_cast<const char*>(&h.resolution), 8);
    out.write(reinterpret_cast<const char*>(h.origin), 24);
    out.write(reinterpret_cast<const char*>(&h.cell_count), 8);
}

Header read_header(std::ifstream& in, const std::filesystem::path& path) {
    char magic[6];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(magic)) != 0)
        throw IoError(path.string() + ": not a map file (bad magic)");
    Header h;
    in.read(reinterpret_cast<char*>(&h.kind), 2);
    in.read(reinterpret_cast<char*>(&h.payload_width), 2);
    in.read(reinterpret_cast<char*>(&h.resolution), 8);
    in.read(reinterpret_cast<char*>(h.origin), 24);
    in.read(reinterpret_cast<char*>(&h.cell_count), 8);
    if (!in) throw IoError(path.string() + ": truncated map header");
    return h;
}

template <typename Cell, typename PayloadWriter>
void save_impl(const VoxelGrid<Cell>& grid, LayerKind kind, std::uint16_t payload_width,
               const std::filesystem::path& path, PayloadWriter&& write_payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write map file: " + path.string());
    Header h;
    h.kind = static_cast<std::uint16_t>(kind);
    h.payload_width = payload_width;
    h.resolution = grid.resolution();
    h.origin[0] = grid.origin().x;
    h.origin[1] = grid.origin().y;
    h.origin[2] = grid.origin().z;
    h.cell_count = grid.size();
    write_header(out, h);
    for (const CellCoord& c : grid.sorted_coords()) {
        out.write(reinterpret_cast<const char*>(&c.i), 4);
        out.write(reinterpret_cast<const char*>(&c.j), 4);
        out.write(reinterpret_cast<const char*>(&c.k), 4);
        write_payload(out, *grid.find(c));
    }
    if (!out) throw IoError("failed writing map file: " + path.string());
}

void write_doubles(std::ofstream& out, const double* values, std::size_t n) {
    out.write(reinterpret_cast<const char*>(values), static_cast<std::streamsize>(n * 8));
}

}  // namespace

void save_grid(const VoxelGrid<DirichletCell>& grid, const std::filesystem::path& path) {
    std::uint16_t width = 0;
    for (const auto& [c, cell] : grid) {
        width = static_cast<std::uint16_t>(cell.alpha.size());
        break;
    }
    save_impl(grid, LayerKind::semantic, width, path,
              [](std::ofstream& out, const DirichletCell& cell) {
                  write_doubles(out, cell.alpha.data(), cell.alpha.size());
              });
}

void save_grid(const VoxelGrid<BetaCell>& grid, const std::filesystem::path& path) {
    save_impl(grid, LayerKind::traversability, 2, path,
              [](std::ofstream& out, const BetaCell& cell) {
                  write_doubles(out, &cell.alpha, 1);
                  write_doubles(out, &cell.beta, 1);
              });
}

void save_grid(const VoxelGrid<GaussianCell>& grid, const std::filesystem::path& path) {
    save_impl(grid, LayerKind::gaussian, 2, path,
              [](std::ofstream& out, const GaussianCell& cell) {
                  write_doubles(out, &cell.weighted_sum, 1);
                  write_doubles(out, &cell.weight_sum, 1);
              });
}

LoadedGrid load_grid(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open map file: " + path.string());
    const Header h = read_header(in, path);
    const GridGeometry geom{h.resolution, {h.origin[0], h.origin[1], h.origin[2]}};

    LoadedGrid loaded;
    loaded.kind = static_cast<LayerKind>(h.kind);

    auto read_cell = [&](auto& grid, auto make_cell) {
        for (std::uint64_t n = 0; n < h.cell_count; ++n) {
            CellCoord c;
            in.read(reinterpret_cast<char*>(&c.i), 4);
            in.read(reinterpret_cast<char*>(&c.j), 4);
            in.read(reinterpret_cast<char*>(&c.k), 4);
            std::vector<double> payload(h.payload_width);
            in.read(reinterpret_cast<char*>(payload.data()),
                    static_cast<std::streamsize>(payload.size() * 8));
            if (!in) throw IoError(path.string() + ": truncated map payload");
            grid.insert(c, make_cell(payload));
        }
    };

    switch (loaded.kind) {
        case LayerKind::semantic: {
            VoxelGrid<DirichletCell> grid(geom);
            read_cell(grid, [](std::vector<double>& p) { return DirichletCell{std::move(p)}; });
            loaded.grid = std::move(grid);
            break;
        }
        case LayerKind::traversability: {
            if (h.payload_width != 2)
                throw IoError(path.string() + ": traversability payload must have width 2");
            VoxelGrid<BetaCell> grid(geom);
            read_cell(grid, [](const std::vector<double>& p) { return BetaCell{p[0], p[1]}; });
            loaded.grid = std::move(grid);
            break;
        }
        case LayerKind::gaussian: {
            if (h.payload_width != 2)
                throw IoError(path.string() + ": gaussian payload must have width 2");
            VoxelGrid<GaussianCell> grid(geom);
            read_cell(grid, [](const std::vector<double>& p) { return GaussianCell{p[0], p[1]}; });
            loaded.grid = std::move(grid);
            break;
        }
        default:
            throw IoError(path.string() + ": unknown layer kind " + std::to_string(h.kind));
    }
    return loaded;
}

}  // namespace mlmap
