#include "panolayout/sphere.hpp"

#include "panolayout/common.hpp"

#include <algorithm>
#include <string>

namespace panolayout {

double wrap_phi(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0; // fmod can land exactly on 2*pi after the add
    return w;
}

AngularCoord pix_to_ang(int u, int v, int width, int height) {
    if (u < 0 || u >= width || v < 0 || v >= height) {
        throw validation_error("pix_to_ang: pixel (" + std::to_string(u) + ", " +
                               std::to_string(v) + ") outside " + std::to_string(width) +
                               "x" + std::to_string(height) + " grid");
    }
    return {col_to_phi(u, width), row_to_theta(v, height)};
}

void ang_to_pix(const AngularCoord& rho, int width, int height, double& u, double& v) {
    u = phi_to_col(wrap_phi(rho.phi), width);
    if (u < 0.0) u += width;
    if (u >= width) u -= width;
    v = std::clamp(theta_to_row(rho.theta, height), 0.0, double(height - 1));
}

double col_to_phi(double u, int width) { return (u + 0.5) * kTwoPi / width; }
double row_to_theta(double v, int height) { return (v + 0.5) * kPi / height; }
double phi_to_col(double phi, int width) { return phi * width / kTwoPi - 0.5; }
double theta_to_row(double theta, int height) { return theta * height / kPi - 0.5; }

Cart3 sph_to_cart(double r, const AngularCoord& rho) {
    if (!(r > 0.0)) {
        throw validation_error("sph_to_cart: radius must be positive, got " + std::to_string(r));
    }
    if (!(rho.theta >= 0.0 && rho.theta <= kPi)) {
        throw validation_error("sph_to_cart: theta outside [0, pi]: " + std::to_string(rho.theta));
    }
    const double st = std::sin(rho.theta);
    return {r * std::sin(rho.phi) * st, r * std::cos(rho.theta), r * std::cos(rho.phi) * st};
}

void cart_to_sph(const Cart3& p, double& r, AngularCoord& rho) {
    r = norm(p);
    if (!(r > 0.0)) {
        throw validation_error("cart_to_sph: zero vector has no angular coordinates");
    }
    // atan2 rather than the quadrant-ambiguous tan^-1(x/z); phi = 0 at +z.
    rho.phi = (p.x == 0.0 && p.z == 0.0) ? 0.0 : wrap_phi(std::atan2(p.x, p.z));
    rho.theta = std::acos(std::clamp(p.y / r, -1.0, 1.0));
}

double haversine_lat(double theta1, double theta2) {
    return 2.0 * std::asin(std::sin(0.5 * (theta2 - theta1)));
}

double vertical_latitude_shift(double theta, double r, double dy) {
    if (!(r > 0.0)) {
        throw validation_error("vertical_latitude_shift: radius must be positive, got " +
                               std::to_string(r));
    }
    return -std::sin(theta) / r * dy;
}

std::vector<double> spherical_row_weights(int height) {
    if (height < 1) throw validation_error("spherical_row_weights: height must be >= 1");
    std::vector<double> w(height);
    for (int v = 0; v < height; ++v) w[v] = std::sin(row_to_theta(v, height));
    return w;
}

} // namespace panolayout
