#include "panolayout/boundary.hpp"

#include "panolayout/common.hpp"
#include "panolayout/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace panolayout {

int BoundaryVector::valid_count() const {
    int n = 0;
    for (auto f : valid) n += f ? 1 : 0;
    return n;
}

void greedy_vertical_edges(const ClassMap& layout, BoundaryVector& top, BoundaryVector& bottom) {
    const int W = layout.width, H = layout.height;
    top = BoundaryVector(BoundaryVector::Kind::Top, W);
    bottom = BoundaryVector(BoundaryVector::Kind::Bottom, W);
    for (int u = 0; u < W; ++u) {
        for (int v = 0; v + 1 < H; ++v) {
            if (layout.at(u, v) == kCeiling && layout.at(u, v + 1) != kCeiling) {
                // Midpoint between rows v and v+1.
                const double theta = double(v + 1) * kPi / H;
                if (theta < kPi / 2.0) {
                    top.latitudes[u] = theta;
                    top.valid[u] = 1;
                }
                break;
            }
        }
        for (int v = H - 1; v > 0; --v) {
            if (layout.at(u, v) == kFloor && layout.at(u, v - 1) != kFloor) {
                const double theta = double(v) * kPi / H;
                if (theta > kPi / 2.0) {
                    bottom.latitudes[u] = theta;
                    bottom.valid[u] = 1;
                }
                break;
            }
        }
    }
}

BoundaryVector median_filter_boundary(const BoundaryVector& b, int window) {
    if (window < 1 || window % 2 == 0) {
        throw config_error("median_filter_boundary: window must be odd and >= 1, got " +
                           std::to_string(window));
    }
    const int W = b.width();
    BoundaryVector out(b.kind, W);
    const int half = window / 2;
    std::vector<double> vals;
    vals.reserve(window);
    for (int u = 0; u < W; ++u) {
        vals.clear();
        for (int d = -half; d <= half; ++d) {
            const int j = ((u + d) % W + W) % W;
            if (b.valid[j]) vals.push_back(b.latitudes[j]);
        }
        if (vals.empty()) {
            out.latitudes[u] = b.latitudes[u];
            continue;
        }
        std::sort(vals.begin(), vals.end());
        const std::size_t n = vals.size();
        out.latitudes[u] = (n % 2 == 1) ? vals[n / 2] : 0.5 * (vals[n / 2 - 1] + vals[n / 2]);
        out.valid[u] = 1;
    }
    return out;
}

namespace {

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return (n % 2 == 1) ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

MadResult mad_reject(const BoundaryVector& b, double z_threshold) {
    MadResult res;
    res.boundary = b;
    std::vector<double> vals;
    vals.reserve(b.latitudes.size());
    for (int u = 0; u < b.width(); ++u) {
        if (b.valid[u]) vals.push_back(b.latitudes[u]);
    }
    if (vals.size() < 8) return res; // too few samples to characterize
    const double med = median_of(vals);
    std::vector<double> dev(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) dev[i] = std::abs(vals[i] - med);
    const double mad = median_of(std::move(dev));
    res.applied = true;
    if (mad == 0.0) return res;
    for (int u = 0; u < b.width(); ++u) {
        if (!b.valid[u]) continue;
        const double z = 0.6745 * std::abs(b.latitudes[u] - med) / mad;
        if (z > z_threshold) res.boundary.valid[u] = 0;
    }
    return res;
}

std::vector<double> to_normalized(const BoundaryVector& top) {
    if (top.kind != BoundaryVector::Kind::Top) {
        throw validation_error("to_normalized: only top boundaries have a normalized encoding");
    }
    std::vector<double> l(top.latitudes.size());
    for (std::size_t u = 0; u < l.size(); ++u) {
        if (top.valid[u] && top.latitudes[u] > kPi / 2.0) {
            throw validation_error("to_normalized: valid meridian " + std::to_string(u) +
                                   " lies below the horizon");
        }
        l[u] = 1.0 - top.latitudes[u] / (kPi / 2.0);
    }
    return l;
}

BoundaryVector from_normalized(const std::vector<double>& l) {
    BoundaryVector top(BoundaryVector::Kind::Top, int(l.size()));
    for (std::size_t u = 0; u < l.size(); ++u) {
        if (!(l[u] >= 0.0 && l[u] <= 1.0)) {
            throw validation_error("from_normalized: value " + std::to_string(l[u]) +
                                   " at meridian " + std::to_string(u) + " outside [0, 1]");
        }
        top.latitudes[u] = (kPi / 2.0) * (1.0 - l[u]);
        top.valid[u] = 1;
    }
    return top;
}

} // namespace panolayout
