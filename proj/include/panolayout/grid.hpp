#pragma once

#include <cstdint>
#include <vector>

namespace panolayout {

// Per-pixel validity flags, row-major, 1 = valid.
using Mask = std::vector<std::uint8_t>;

// Scalar or vector field on the equirectangular pixel grid. Row-major with
// interleaved channels; column u and u mod W address the same meridian.
struct EquirectGrid {
    int width = 0;
    int height = 0;
    int channels = 1;
    std::vector<float> data;

    EquirectGrid() = default;
    EquirectGrid(int w, int h, int c, float fill = 0.0f);

    float& at(int u, int v, int c = 0) { return data[std::size_t(v * width + u) * channels + c]; }
    float at(int u, int v, int c = 0) const {
        return data[std::size_t(v * width + u) * channels + c];
    }
    // Column access with azimuthal wrap-around.
    float at_wrapped(int u, int v, int c = 0) const;

    std::size_t pixel_count() const { return std::size_t(width) * height; }
    bool same_shape(const EquirectGrid& o) const {
        return width == o.width && height == o.height && channels == o.channels;
    }
};

// Layout class ids used throughout the extraction pipeline.
enum LayoutClass : std::uint8_t {
    kCeiling = 0,
    kWall = 1,
    kFloor = 2,
    kNotLayout = 3,
};
inline constexpr int kLayoutClassCount = 4;

// Per-pixel class assignment (generic label maps use the same container).
struct ClassMap {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> ids;

    ClassMap() = default;
    ClassMap(int w, int h, std::uint8_t fill = 0);

    std::uint8_t& at(int u, int v) { return ids[std::size_t(v) * width + u]; }
    std::uint8_t at(int u, int v) const { return ids[std::size_t(v) * width + u]; }
};

// Resamples to a new resolution by averaging the source area covered by each
// target cell (box filter with fractional overlap). Mass-preserving in the
// pixel domain; channels handled independently.
EquirectGrid resample_area(const EquirectGrid& src, int new_width, int new_height);

// Bilinear resampling with azimuthal wrap; rows clamped at the poles.
EquirectGrid resample_bilinear(const EquirectGrid& src, int new_width, int new_height);

// True where the depth value encodes a hole (NaN or <= 0).
bool is_depth_hole(float d);

// Validity mask of a 1-channel depth map.
Mask depth_validity(const EquirectGrid& depth);

} // namespace panolayout
