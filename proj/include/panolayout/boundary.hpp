#pragma once

#include "panolayout/grid.hpp"

#include <cstdint>
#include <vector>

namespace panolayout {

// Per-meridian layout boundary latitude with validity flags. Top boundaries
// live above the horizon (theta < pi/2), bottom boundaries below it; indices
// wrap around the azimuth.
struct BoundaryVector {
    enum class Kind { Top, Bottom };

    Kind kind = Kind::Top;
    std::vector<double> latitudes;
    std::vector<std::uint8_t> valid;

    BoundaryVector() = default;
    BoundaryVector(Kind k, int width, double fill = 0.0)
        : kind(k), latitudes(width, fill), valid(width, 0) {}

    int width() const { return int(latitudes.size()); }
    int valid_count() const;
};

// Greedy vertical edge extraction from a 4-class layout map: per meridian,
// the first ceiling-to-non-ceiling transition scanning down from the zenith
// (top) and the first floor-to-non-floor transition scanning up from the
// nadir (bottom). Boundary latitude recorded at the row midpoint of the
// transition. Meridians without a transition, or whose transition falls on
// the wrong side of the horizon, are flagged invalid.
void greedy_vertical_edges(const ClassMap& layout, BoundaryVector& top, BoundaryVector& bottom);

// Circular median over the valid neighbors inside an odd window. Meridians
// with no valid neighbor in the window stay invalid; ones with valid
// neighbors are (re)validated, so small gaps get filled.
BoundaryVector median_filter_boundary(const BoundaryVector& b, int window = 5);

// Median-absolute-deviation outlier rejection: meridians whose modified
// z-score 0.6745 |theta - median| / MAD exceeds the threshold are
// invalidated. MAD = 0 rejects nothing. `applied` is false (and the vector
// returned unchanged) when fewer than 8 meridians are valid.
struct MadResult {
    BoundaryVector boundary;
    bool applied = false;
};

MadResult mad_reject(const BoundaryVector& b, double z_threshold = 3.5);

// Normalized-height encoding of top boundaries: l = 1 - theta / (pi/2),
// so l = 1 at the zenith and l = 0 at the horizon.
std::vector<double> to_normalized(const BoundaryVector& top);
BoundaryVector from_normalized(const std::vector<double>& l);

} // namespace panolayout
