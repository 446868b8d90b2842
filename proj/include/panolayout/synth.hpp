#pragma once

#include "panolayout/boundary.hpp"
#include "panolayout/grid.hpp"

#include <cstdint>

namespace panolayout {

// Axis-aligned cuboid room described in the camera frame (camera at the
// origin, strictly inside the room).
struct CuboidScene {
    double x_min = -2.0, x_max = 2.0;
    double z_min = -2.0, z_max = 2.0;
    double y_floor = -1.3, y_ceil = 1.3;
    int width = 512;
    int height = 256;

    void validate() const;

    // Horizontal distance from the camera to the wall rectangle along the
    // horizontal direction (sin(phi), cos(phi)).
    double wall_distance(double phi) const;
    // Exact boundary latitudes of the wall edges at a meridian.
    double top_boundary_theta(double phi) const;
    double bottom_boundary_theta(double phi) const;
    // Distance to the top wall edge (wall line extended to ceiling height).
    double top_edge_radius(double phi) const;
};

// Ground-truth render of a cuboid scene: per-pixel depth (ray length),
// inward plane normals, layout classes, and the exact per-meridian boundary
// latitudes evaluated at pixel-center azimuths.
struct SceneRender {
    EquirectGrid depth;     // 1 channel
    EquirectGrid normals;   // 3 channels
    ClassMap labels;        // ceiling / wall / floor
    BoundaryVector top_boundary;
    BoundaryVector bottom_boundary;
};

SceneRender render_cuboid(const CuboidScene& scene);

// Stamps seeded rectangles of the not-layout class over roughly
// hole_fraction of the map. Non-hole pixels are untouched.
ClassMap perturb_labels(const ClassMap& labels, double hole_fraction, std::uint64_t seed);

} // namespace panolayout
