#pragma once

#include "panolayout/boundary.hpp"
#include "panolayout/grid.hpp"

namespace panolayout {

// Vertical plane statistics estimated from the depth map poles. y_ceil_mean
// and y_floor_mean are the mean lifted heights of the top/bottom pole rows;
// y_mid is the room's vertical midpoint in the camera frame and y_d the
// translation that moves points into the midpoint frame (y_d = -y_mid, so a
// camera already at the midpoint gives y_d = 0).
struct PlaneHeights {
    double y_ceil_mean = 0.0;
    double y_floor_mean = 0.0;
    double h = 0.0;
    double y_mid = 0.0;
    double y_d = 0.0;
};

struct ReconParams {
    int k = 3; // pole rows sampled for the heights
    int w = 3; // boundary sampling window rows (odd)

    void validate() const;
};

// Samples the k zenith rows and k nadir rows of the lifted depth map and
// averages the vertical coordinates of the valid points. Rows that are
// entirely holes are skipped without substitution. Values are summed in
// sorted order so the result is independent of the meridian origin.
// Throws unreconstructable_error when either pole has no valid pixel.
PlaneHeights estimate_plane_heights(const EquirectGrid& depth, const ReconParams& params = {});

// Per-meridian mean of the valid depth values over the w rows centered on
// the boundary latitude. `radii[u]` is NaN and `valid[u]` 0 when the
// meridian is invalid or the window holds no valid depth.
struct BoundaryRadii {
    std::vector<double> radii;
    std::vector<std::uint8_t> valid;
};

BoundaryRadii sample_depth_at_boundary(const EquirectGrid& depth, const BoundaryVector& top,
                                       int w = 3);

// Midpoint-translation reconstruction of the bottom boundary: lift the top
// boundary point, translate it by y_d into the midpoint frame, mirror its
// latitude across the equator and shift it back by the latitude displacement
// the top edge experienced. Exact when y_d = 0 (pure mirror), first-order
// accurate otherwise.
BoundaryVector reconstruct_bottom(const BoundaryVector& top, const BoundaryRadii& radii,
                                  const PlaneHeights& heights);

// Exact vertical-projection form: the bottom wall edge shares the top
// edge's horizontal position, so the bottom point is (x_t, y_floor_mean,
// z_t) and its latitude follows directly.
BoundaryVector reconstruct_bottom_exact(const BoundaryVector& top, const BoundaryRadii& radii,
                                        const PlaneHeights& heights);

// Per-meridian and scene-level validity of a reconstruction. A meridian is
// valid when the top boundary, its sampled radius, and the heights are all
// usable; the scene flag drops when fewer than min_valid_fraction of the
// meridians survive.
struct LayoutValidity {
    std::vector<std::uint8_t> meridian;
    bool scene = false;
};

LayoutValidity layout_validity(const BoundaryVector& top, const BoundaryRadii& radii,
                               bool heights_ok, double min_valid_fraction = 0.25);

} // namespace panolayout
