#include "panolayout/grid.hpp"

#include "panolayout/common.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace panolayout {

EquirectGrid::EquirectGrid(int w, int h, int c, float fill) : width(w), height(h), channels(c) {
    if (w < 2 || h < 1 || c < 1) {
        throw validation_error("EquirectGrid: invalid shape " + std::to_string(w) + "x" +
                               std::to_string(h) + "x" + std::to_string(c));
    }
    data.assign(std::size_t(w) * h * c, fill);
}

float EquirectGrid::at_wrapped(int u, int v, int c) const {
    u %= width;
    if (u < 0) u += width;
    return at(u, v, c);
}

ClassMap::ClassMap(int w, int h, std::uint8_t fill) : width(w), height(h) {
    if (w < 1 || h < 1) {
        throw validation_error("ClassMap: invalid shape " + std::to_string(w) + "x" +
                               std::to_string(h));
    }
    ids.assign(std::size_t(w) * h, fill);
}

namespace {

// Fractional overlap of target cell i (of n_dst) with source cell j (of
// n_src) along one axis, accumulated into per-target (index, weight) spans.
struct AxisSpan {
    int begin = 0;
    std::vector<double> weights;
};

std::vector<AxisSpan> box_spans(int n_src, int n_dst) {
    std::vector<AxisSpan> spans(n_dst);
    const double scale = double(n_src) / n_dst;
    for (int i = 0; i < n_dst; ++i) {
        const double lo = i * scale;
        const double hi = (i + 1) * scale;
        const int j0 = int(std::floor(lo));
        const int j1 = std::min(n_src - 1, int(std::ceil(hi)) - 1);
        spans[i].begin = j0;
        spans[i].weights.resize(j1 - j0 + 1);
        for (int j = j0; j <= j1; ++j) {
            const double cover = std::min(hi, double(j + 1)) - std::max(lo, double(j));
            spans[i].weights[j - j0] = std::max(0.0, cover) / scale;
        }
    }
    return spans;
}

} // namespace

EquirectGrid resample_area(const EquirectGrid& src, int new_width, int new_height) {
    EquirectGrid dst(new_width, new_height, src.channels);
    const auto us = box_spans(src.width, new_width);
    const auto vs = box_spans(src.height, new_height);
    for (int v = 0; v < new_height; ++v) {
        for (int u = 0; u < new_width; ++u) {
            for (int c = 0; c < src.channels; ++c) {
                double acc = 0.0;
                for (std::size_t jv = 0; jv < vs[v].weights.size(); ++jv) {
                    for (std::size_t ju = 0; ju < us[u].weights.size(); ++ju) {
                        acc += vs[v].weights[jv] * us[u].weights[ju] *
                               src.at(us[u].begin + int(ju), vs[v].begin + int(jv), c);
                    }
                }
                dst.at(u, v, c) = float(acc);
            }
        }
    }
    return dst;
}

EquirectGrid resample_bilinear(const EquirectGrid& src, int new_width, int new_height) {
    EquirectGrid dst(new_width, new_height, src.channels);
    for (int v = 0; v < new_height; ++v) {
        // Map through pixel centers of both grids.
        double sv = (v + 0.5) * double(src.height) / new_height - 0.5;
        sv = std::clamp(sv, 0.0, double(src.height - 1));
        const int v0 = int(std::floor(sv));
        const int v1 = std::min(src.height - 1, v0 + 1);
        const double fv = sv - v0;
        for (int u = 0; u < new_width; ++u) {
            double su = (u + 0.5) * double(src.width) / new_width - 0.5;
            const int u0f = int(std::floor(su));
            const double fu = su - u0f;
            const int u0 = ((u0f % src.width) + src.width) % src.width;
            const int u1 = (u0 + 1) % src.width;
            for (int c = 0; c < src.channels; ++c) {
                const double top = (1.0 - fu) * src.at(u0, v0, c) + fu * src.at(u1, v0, c);
                const double bot = (1.0 - fu) * src.at(u0, v1, c) + fu * src.at(u1, v1, c);
                dst.at(u, v, c) = float((1.0 - fv) * top + fv * bot);
            }
        }
    }
    return dst;
}

bool is_depth_hole(float d) { return std::isnan(d) || d <= 0.0f; }

Mask depth_validity(const EquirectGrid& depth) {
    if (depth.channels != 1) {
        throw validation_error("depth_validity: expected a 1-channel depth map, got " +
                               std::to_string(depth.channels) + " channels");
    }
    Mask m(depth.pixel_count());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = is_depth_hole(depth.data[i]) ? 0 : 1;
    return m;
}

} // namespace panolayout
