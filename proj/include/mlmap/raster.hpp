#pragma once

#include <cstdint>
#include <vector>

namespace mlmap {

enum class RasterKind : std::uint8_t {
    class_index,  // semantic class ids
    binary,       // 0 = untraversable, 1 = traversable
    depth,        // meters, camera-frame forward coordinate
    score,        // real-valued, e.g. traversability score
};

// Single-channel image with an explicit per-pixel validity mask.
class Raster {
public:
    Raster() = default;
    Raster(int width, int height, RasterKind kind, float fill = 0.0f, bool valid = true);

    int width() const { return width_; }
    int height() const { return height_; }
    RasterKind kind() const { return kind_; }
    std::size_t pixel_count() const { return data_.size(); }

    float at(int x, int y) const { return data_[index(x, y)]; }
    bool valid(int x, int y) const { return valid_[index(x, y)] != 0; }
    int label_at(int x, int y) const { return static_cast<int>(at(x, y)); }

    void set(int x, int y, float value) { data_[index(x, y)] = value; }
    void set_valid(int x, int y, bool v) { valid_[index(x, y)] = v ? 1 : 0; }
    void set_invalid(int x, int y) { set_valid(x, y, false); }

    const std::vector<float>& data() const { return data_; }
    const std::vector<std::uint8_t>& mask() const { return valid_; }

    std::size_t valid_count() const;

    // Depth rasters must hold positive finite values on valid pixels.
    // Throws std::invalid_argument on violation.
    void validate() const;

private:
    std::size_t index(int x, int y) const { return static_cast<std::size_t>(y) * width_ + x; }

    int width_ = 0;
    int height_ = 0;
    RasterKind kind_ = RasterKind::class_index;
    std::vector<float> data_;
    std::vector<std::uint8_t> valid_;
};

}  // namespace mlmap
