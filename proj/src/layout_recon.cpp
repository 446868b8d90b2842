#include "panolayout/layout_recon.hpp"

#include "panolayout/common.hpp"
#include "panolayout/pointcloud.hpp"
#include "panolayout/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace panolayout {

void ReconParams::validate() const {
    if (k < 1) throw validation_error("ReconParams: k must be >= 1, got " + std::to_string(k));
    if (w < 1 || w % 2 == 0) {
        throw validation_error("ReconParams: w must be odd and >= 1, got " + std::to_string(w));
    }
}

namespace {

// Mean of the vertical components of the valid lifted points in rows
// [v0, v1). Sorted before summation so the estimate does not depend on
// where the azimuth origin sits.
double pole_height_mean(const EquirectGrid& depth, int v0, int v1, const char* which) {
    std::vector<double> ys;
    for (int v = v0; v < v1; ++v) {
        const double ct = std::cos(row_to_theta(v, depth.height));
        for (int u = 0; u < depth.width; ++u) {
            const float d = depth.at(u, v);
            if (!is_depth_hole(d)) ys.push_back(double(d) * ct);
        }
    }
    if (ys.empty()) {
        throw unreconstructable_error(std::string("estimate_plane_heights: the ") + which +
                                      " pole rows contain no valid depth");
    }
    std::sort(ys.begin(), ys.end());
    double sum = 0.0;
    for (double y : ys) sum += y;
    return sum / double(ys.size());
}

} // namespace

PlaneHeights estimate_plane_heights(const EquirectGrid& depth, const ReconParams& params) {
    params.validate();
    if (depth.channels != 1) {
        throw validation_error("estimate_plane_heights: expected a 1-channel depth map");
    }
    const int k = std::min(params.k, depth.height);
    PlaneHeights ph;
    ph.y_ceil_mean = pole_height_mean(depth, 0, k, "zenith");
    ph.y_floor_mean = pole_height_mean(depth, depth.height - k, depth.height, "nadir");
    ph.h = ph.y_ceil_mean - ph.y_floor_mean;
    ph.y_mid = 0.5 * (ph.y_ceil_mean + ph.y_floor_mean);
    ph.y_d = -ph.y_mid;
    if (!(ph.h > 0.0)) {
        throw unreconstructable_error("estimate_plane_heights: non-positive room height " +
                                      std::to_string(ph.h));
    }
    return ph;
}

BoundaryRadii sample_depth_at_boundary(const EquirectGrid& depth, const BoundaryVector& top,
                                       int w) {
    if (w < 1 || w % 2 == 0) {
        throw validation_error("sample_depth_at_boundary: w must be odd and >= 1, got " +
                               std::to_string(w));
    }
    if (top.width() != depth.width) {
        throw validation_error("sample_depth_at_boundary: boundary width " +
                               std::to_string(top.width()) + " does not match depth width " +
                               std::to_string(depth.width));
    }
    BoundaryRadii out;
    out.radii.assign(depth.width, std::numeric_limits<double>::quiet_NaN());
    out.valid.assign(depth.width, 0);
    const int half = w / 2;
    for (int u = 0; u < depth.width; ++u) {
        if (!top.valid[u]) continue;
        const int vc = std::clamp(int(std::lround(theta_to_row(top.latitudes[u], depth.height))),
                                  0, depth.height - 1);
        double sum = 0.0;
        int n = 0;
        for (int v = std::max(0, vc - half); v <= std::min(depth.height - 1, vc + half); ++v) {
            const float d = depth.at(u, v);
            if (!is_depth_hole(d)) {
                sum += d;
                ++n;
            }
        }
        if (n > 0) {
            out.radii[u] = sum / n;
            out.valid[u] = 1;
        }
    }
    return out;
}

namespace {

void check_recon_inputs(const BoundaryVector& top, const BoundaryRadii& radii) {
    if (top.kind != BoundaryVector::Kind::Top) {
        throw validation_error("reconstruct_bottom: expected a top boundary");
    }
    if (radii.radii.size() != top.latitudes.size()) {
        throw validation_error("reconstruct_bottom: radii length " +
                               std::to_string(radii.radii.size()) +
                               " does not match boundary width " +
                               std::to_string(top.latitudes.size()));
    }
}

} // namespace

BoundaryVector reconstruct_bottom(const BoundaryVector& top, const BoundaryRadii& radii,
                                  const PlaneHeights& heights) {
    check_recon_inputs(top, radii);
    const int W = top.width();
    BoundaryVector bottom(BoundaryVector::Kind::Bottom, W);
    for (int u = 0; u < W; ++u) {
        if (!top.valid[u] || !radii.valid[u]) continue;
        const double theta_t = top.latitudes[u];
        const double r_t = radii.radii[u];
        if (!(r_t > 0.0)) continue;
        const double phi = col_to_phi(u, W);
        const Cart3 pt = sph_to_cart(r_t, {phi, theta_t});
        // Midpoint frame: translate vertically by y_d, re-derive the latitude.
        const double y_o = pt.y + heights.y_d;
        const double r_o = std::sqrt(pt.x * pt.x + y_o * y_o + pt.z * pt.z);
        if (!(r_o > 0.0)) continue;
        const double theta_t_mid = std::acos(std::clamp(y_o / r_o, -1.0, 1.0));
        // The top and bottom edges shift by the same latitude under a
        // vertical camera move, so mirror at the midpoint and add the shift
        // the top edge experienced between the two frames.
        const double gamma = theta_t - theta_t_mid;
        const double theta_b = (kPi - theta_t_mid) + gamma;
        if (theta_b <= kPi / 2.0 || theta_b > kPi) continue;
        bottom.latitudes[u] = theta_b;
        bottom.valid[u] = 1;
    }
    return bottom;
}

BoundaryVector reconstruct_bottom_exact(const BoundaryVector& top, const BoundaryRadii& radii,
                                        const PlaneHeights& heights) {
    check_recon_inputs(top, radii);
    const int W = top.width();
    BoundaryVector bottom(BoundaryVector::Kind::Bottom, W);
    for (int u = 0; u < W; ++u) {
        if (!top.valid[u] || !radii.valid[u]) continue;
        const double r_t = radii.radii[u];
        if (!(r_t > 0.0)) continue;
        const double phi = col_to_phi(u, W);
        const Cart3 pt = sph_to_cart(r_t, {phi, top.latitudes[u]});
        // Walls are vertical: the bottom edge sits directly below the top
        // edge at the floor height.
        const Cart3 pb{pt.x, heights.y_floor_mean, pt.z};
        const double r_b = norm(pb);
        if (!(r_b > 0.0)) continue;
        const double theta_b = std::acos(std::clamp(pb.y / r_b, -1.0, 1.0));
        if (theta_b <= kPi / 2.0 || theta_b > kPi) continue;
        bottom.latitudes[u] = theta_b;
        bottom.valid[u] = 1;
    }
    return bottom;
}

LayoutValidity layout_validity(const BoundaryVector& top, const BoundaryRadii& radii,
                               bool heights_ok, double min_valid_fraction) {
    LayoutValidity out;
    const int W = top.width();
    out.meridian.assign(W, 0);
    int n_valid = 0;
    if (heights_ok) {
        for (int u = 0; u < W; ++u) {
            if (top.valid[u] && u < int(radii.valid.size()) && radii.valid[u]) {
                out.meridian[u] = 1;
                ++n_valid;
            }
        }
    }
    out.scene = heights_ok && W > 0 && double(n_valid) / W >= min_valid_fraction;
    return out;
}

} // namespace panolayout
