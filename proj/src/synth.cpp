#include "panolayout/synth.hpp"

#include "panolayout/common.hpp"
#include "panolayout/rng.hpp"
#include "panolayout/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace panolayout {

void CuboidScene::validate() const {
    if (!(x_min < 0.0 && 0.0 < x_max && z_min < 0.0 && 0.0 < z_max && y_floor < 0.0 &&
          0.0 < y_ceil)) {
        throw validation_error("CuboidScene: camera must lie strictly inside the room");
    }
    if (width < 2 || height < 1) {
        throw validation_error("CuboidScene: invalid render resolution " + std::to_string(width) +
                               "x" + std::to_string(height));
    }
}

double CuboidScene::wall_distance(double phi) const {
    const double dx = std::sin(phi), dz = std::cos(phi);
    double t = std::numeric_limits<double>::infinity();
    if (dx > 0.0) t = std::min(t, x_max / dx);
    if (dx < 0.0) t = std::min(t, x_min / dx);
    if (dz > 0.0) t = std::min(t, z_max / dz);
    if (dz < 0.0) t = std::min(t, z_min / dz);
    return t;
}

double CuboidScene::top_boundary_theta(double phi) const {
    const double rho = wall_distance(phi);
    return std::atan2(rho, y_ceil);
}

double CuboidScene::bottom_boundary_theta(double phi) const {
    const double rho = wall_distance(phi);
    return std::atan2(rho, y_floor);
}

double CuboidScene::top_edge_radius(double phi) const {
    const double rho = wall_distance(phi);
    return std::sqrt(rho * rho + y_ceil * y_ceil);
}

SceneRender render_cuboid(const CuboidScene& scene) {
    scene.validate();
    const int W = scene.width, H = scene.height;

    // Plane order fixes the nearest-hit tie break: x_min, x_max, z_min,
    // z_max, floor, ceiling.
    const double offsets[6] = {scene.x_min, scene.x_max, scene.z_min,
                               scene.z_max, scene.y_floor, scene.y_ceil};
    const Cart3 inward[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 0, 1},
                             {0, 0, -1}, {0, 1, 0},  {0, -1, 0}};
    const std::uint8_t plane_class[6] = {kWall, kWall, kWall, kWall, kFloor, kCeiling};

    SceneRender out;
    out.depth = EquirectGrid(W, H, 1);
    out.normals = EquirectGrid(W, H, 3);
    out.labels = ClassMap(W, H, kWall);

    for (int v = 0; v < H; ++v) {
        const double theta = row_to_theta(v, H);
        const double st = std::sin(theta), ct = std::cos(theta);
        for (int u = 0; u < W; ++u) {
            const double phi = col_to_phi(u, W);
            const double d[3] = {std::sin(phi) * st, ct, std::cos(phi) * st};
            double best_t = std::numeric_limits<double>::infinity();
            int best_plane = -1;
            for (int p = 0; p < 6; ++p) {
                const double comp = (p < 2) ? d[0] : (p < 4) ? d[2] : d[1];
                if (comp == 0.0) continue;
                const double t = offsets[p] / comp;
                if (t > 0.0 && t < best_t) {
                    best_t = t;
                    best_plane = p;
                }
            }
            out.depth.at(u, v) = float(best_t);
            out.labels.at(u, v) = plane_class[best_plane];
            out.normals.at(u, v, 0) = float(inward[best_plane].x);
            out.normals.at(u, v, 1) = float(inward[best_plane].y);
            out.normals.at(u, v, 2) = float(inward[best_plane].z);
        }
    }

    out.top_boundary = BoundaryVector(BoundaryVector::Kind::Top, W);
    out.bottom_boundary = BoundaryVector(BoundaryVector::Kind::Bottom, W);
    for (int u = 0; u < W; ++u) {
        const double phi = col_to_phi(u, W);
        out.top_boundary.latitudes[u] = scene.top_boundary_theta(phi);
        out.top_boundary.valid[u] = 1;
        out.bottom_boundary.latitudes[u] = scene.bottom_boundary_theta(phi);
        out.bottom_boundary.valid[u] = 1;
    }
    return out;
}

ClassMap perturb_labels(const ClassMap& labels, double hole_fraction, std::uint64_t seed) {
    if (!(hole_fraction >= 0.0 && hole_fraction <= 0.5)) {
        throw validation_error("perturb_labels: hole_fraction must lie in [0, 0.5], got " +
                               std::to_string(hole_fraction));
    }
    ClassMap out = labels;
    if (hole_fraction == 0.0) return out;

    const int W = labels.width, H = labels.height;
    const std::size_t target = std::size_t(hole_fraction * double(W) * double(H));
    std::size_t covered = 0;
    SeededStream rng(seed);
    const int max_rects = 10000;
    for (int i = 0; i < max_rects && covered < target; ++i) {
        const int rw = 2 + int(rng.next_below(std::max(2, W / 6)));
        const int rh = 2 + int(rng.next_below(std::max(2, H / 6)));
        const int u0 = int(rng.next_below(W));
        const int v0 = int(rng.next_below(std::max(1, H - rh)));
        for (int v = v0; v < std::min(H, v0 + rh); ++v) {
            for (int du = 0; du < rw; ++du) {
                const int u = (u0 + du) % W;
                if (out.at(u, v) != kNotLayout) {
                    out.at(u, v) = kNotLayout;
                    ++covered;
                }
            }
        }
    }
    return out;
}

} // namespace panolayout
