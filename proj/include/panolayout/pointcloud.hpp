#pragma once

#include "panolayout/grid.hpp"
#include "panolayout/sphere.hpp"

namespace panolayout {

// Depth map lifted to Cartesian coordinates, aligned with the source grid.
// Invalid entries (depth holes) hold the zero vector.
struct StructuredPointCloud {
    int width = 0;
    int height = 0;
    std::vector<Cart3> points;
    Mask valid;

    const Cart3& at(int u, int v) const { return points[std::size_t(v) * width + u]; }
    Cart3& at(int u, int v) { return points[std::size_t(v) * width + u]; }
    bool is_valid(int u, int v) const { return valid[std::size_t(v) * width + u] != 0; }
};

// V(p) = sph_to_cart(D(p), pix_to_ang(p)). Holes (NaN or <= 0) are flagged
// invalid instead of raising.
StructuredPointCloud lift_depth(const EquirectGrid& depth);

// Surface orientation from central finite differences of the lifted cloud,
// n = normalize(cross(dV/dv, dV/du)), oriented to face the camera
// (dot(n, -V) >= 0). The horizontal stencil wraps across the azimuth seam;
// pixels whose stencil touches a hole or an image border row are invalid and
// hold the zero vector.
struct NormalMap {
    EquirectGrid normals; // 3 channels
    Mask valid;
};

NormalMap normals_from_depth(const EquirectGrid& depth);

} // namespace panolayout
