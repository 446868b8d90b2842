#include "panolayout/pointcloud.hpp"

#include "panolayout/common.hpp"

#include <cmath>
#include <string>

namespace panolayout {

StructuredPointCloud lift_depth(const EquirectGrid& depth) {
    if (depth.channels != 1) {
        throw validation_error("lift_depth: expected a 1-channel depth map, got " +
                               std::to_string(depth.channels) + " channels");
    }
    StructuredPointCloud cloud;
    cloud.width = depth.width;
    cloud.height = depth.height;
    cloud.points.assign(depth.pixel_count(), Cart3{});
    cloud.valid.assign(depth.pixel_count(), 0);
    for (int v = 0; v < depth.height; ++v) {
        const double theta = row_to_theta(v, depth.height);
        const double st = std::sin(theta), ct = std::cos(theta);
        for (int u = 0; u < depth.width; ++u) {
            const float d = depth.at(u, v);
            if (is_depth_hole(d)) continue;
            const double phi = col_to_phi(u, depth.width);
            cloud.at(u, v) = {d * std::sin(phi) * st, d * ct, d * std::cos(phi) * st};
            cloud.valid[std::size_t(v) * depth.width + u] = 1;
        }
    }
    return cloud;
}

NormalMap normals_from_depth(const EquirectGrid& depth) {
    const StructuredPointCloud cloud = lift_depth(depth);
    const int W = depth.width, H = depth.height;
    NormalMap out;
    out.normals = EquirectGrid(W, H, 3, 0.0f);
    out.valid.assign(std::size_t(W) * H, 0);
    for (int v = 1; v + 1 < H; ++v) {
        for (int u = 0; u < W; ++u) {
            const int ul = (u + W - 1) % W, ur = (u + 1) % W;
            if (!cloud.is_valid(u, v) || !cloud.is_valid(ul, v) || !cloud.is_valid(ur, v) ||
                !cloud.is_valid(u, v - 1) || !cloud.is_valid(u, v + 1)) {
                continue;
            }
            const Cart3 dv = (cloud.at(u, v + 1) - cloud.at(u, v - 1)) * 0.5;
            const Cart3 du = (cloud.at(ur, v) - cloud.at(ul, v)) * 0.5;
            Cart3 n = cross(dv, du);
            const double len = norm(n);
            if (!(len > 1e-12)) continue; // degenerate stencil
            n = n * (1.0 / len);
            if (dot(n, cloud.at(u, v)) > 0.0) n = n * -1.0; // face the camera
            out.normals.at(u, v, 0) = float(n.x);
            out.normals.at(u, v, 1) = float(n.y);
            out.normals.at(u, v, 2) = float(n.z);
            out.valid[std::size_t(v) * W + u] = 1;
        }
    }
    return out;
}

} // namespace panolayout
