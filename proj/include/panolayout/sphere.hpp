#pragma once

#include <cmath>
#include <vector>

namespace panolayout {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Longitude/latitude pair on the unit sphere. phi is the azimuth in
// [0, 2*pi), theta the polar angle in [0, pi] with theta = 0 at the zenith,
// pi/2 at the equator and pi at the nadir.
struct AngularCoord {
    double phi = 0.0;
    double theta = 0.0;
};

// Cartesian point in meters. y is the vertical (gravity-aligned) axis.
struct Cart3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Cart3 operator+(const Cart3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Cart3 operator-(const Cart3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Cart3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

inline double dot(const Cart3& a, const Cart3& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Cart3 cross(const Cart3& a, const Cart3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Cart3& a) { return std::sqrt(dot(a, a)); }

// Wraps an azimuth into [0, 2*pi).
double wrap_phi(double phi);

// Angular coordinate of the center of pixel (u, v) on a W x H grid:
// phi = (u + 0.5) * 2*pi / W, theta = (v + 0.5) * pi / H.
// Throws validation_error for out-of-range indices.
AngularCoord pix_to_ang(int u, int v, int width, int height);

// Continuous pixel coordinates of an angular position. u is wrapped into
// [0, W), v clamped to [0, H-1]. Inverse of pix_to_ang on pixel centers.
void ang_to_pix(const AngularCoord& rho, int width, int height, double& u, double& v);

// Azimuth / polar angle of a fractional column / row center.
double col_to_phi(double u, int width);
double row_to_theta(double v, int height);
// Continuous column / row of an azimuth / polar angle (unwrapped, unclamped).
double phi_to_col(double phi, int width);
double theta_to_row(double theta, int height);

// x = r sin(phi) sin(theta), y = r cos(theta), z = r cos(phi) sin(theta).
// Throws validation_error for r <= 0 or theta outside [0, pi].
Cart3 sph_to_cart(double r, const AngularCoord& rho);

// Inverse of sph_to_cart; phi resolved over the full quadrant range and
// wrapped to [0, 2*pi). Throws validation_error for the zero vector.
void cart_to_sph(const Cart3& p, double& r, AngularCoord& rho);

// Great-circle distance between two latitudes on a shared meridian,
// h = 2 asin(sin((theta2 - theta1) / 2)). Signed, in [-pi, pi], periodic in
// the latitude difference.
double haversine_lat(double theta1, double theta2);

// First-order latitude change for a purely vertical displacement dy of a
// point at polar angle theta and radius r: d_theta = (-sin(theta) / r) * dy.
// Throws validation_error for r <= 0.
double vertical_latitude_shift(double theta, double r, double dy);

// Per-row solid-angle weights w(v) = sin(theta(v)) at pixel-center latitudes.
std::vector<double> spherical_row_weights(int height);

} // namespace panolayout
