#include "mlmap/raster.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mlmap {

Raster::Raster(int width, int height, RasterKind kind, float fill, bool valid)
    : width_(width), height_(height), kind_(kind) {
    if (width <= 0 || height <= 0) throw std::invalid_argument("raster: size must be positive");
    data_.assign(static_cast<std::size_t>(width) * height, fill);
    valid_.assign(data_.size(), valid ? 1 : 0);
}

std::size_t Raster::valid_count() const {
    return static_cast<std::size_t>(
        std::accumulate(valid_.begin(), valid_.end(), std::uint64_t{0}));
}

void Raster::validate() const {
    if (data_.size() != static_cast<std::size_t>(width_) * height_ ||
        valid_.size() != data_.size())
        throw std::invalid_argument("raster: data length != width * height");
    if (kind_ == RasterKind::depth) {
        for (std::size_t p = 0; p < data_.size(); ++p) {
            if (valid_[p] && (!(data_[p] > 0.0f) || !std::isfinite(data_[p])))
                throw std::invalid_argument("raster: valid depth pixel must be positive finite");
        }
    }
}

}  // namespace mlmap
