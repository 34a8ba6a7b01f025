#pragma once

#include <cstdint>
#include <vector>

#include "santalo/geometry.hpp"
#include "santalo/linalg.hpp"

namespace santalo {

inline constexpr double kBoundaryBand = 1e-12;

enum class Side { plus, minus };

// Finite weighted atoms; the universal internal measure format.
class WeightedPointCloud {
public:
    WeightedPointCloud(std::vector<Vec> points, std::vector<double> weights);

    const std::vector<Vec>& points() const { return points_; }
    const std::vector<double>& weights() const { return weights_; }
    double total_mass() const { return total_mass_; }
    int dim() const { return static_cast<int>(points_.front().size()); }
    std::size_t size() const { return points_.size(); }
    double max_weight() const { return max_weight_; }

    WeightedPointCloud translated(const Vec& shift) const;

private:
    std::vector<Vec> points_;
    std::vector<double> weights_;
    double total_mass_ = 0.0;
    double max_weight_ = 0.0;
};

// Non-negative density sampled at the cell centers of a regular grid over an
// axis-aligned box. Values are stored row-major, last axis fastest.
struct GridDensity {
    Vec lo;
    Vec hi;
    std::vector<int> shape;
    std::vector<double> values;

    int dim() const { return static_cast<int>(shape.size()); }
    std::size_t cell_count() const;
    double cell_volume() const;
    Vec cell_center(std::size_t flat_index) const;
};

// One atom per cell with positive value, at the cell center, with weight
// value * cell volume.
WeightedPointCloud cloud_from_grid(const GridDensity& density);

// Mass on one side of { x : normal . x = offset }. Atoms within kBoundaryBand
// of the hyperplane contribute half their weight to each side.
double halfspace_mass(const WeightedPointCloud& cloud, const Vec& normal, double offset,
                      Side side);

// Weighted median of the projections normal . x, midpoint of the median
// interval when the median is not unique.
double bisecting_offset(const WeightedPointCloud& cloud, const Vec& normal);

// Midpoint-rule weighted median of (value, weight) samples; sorts in place.
// All mass queries and the equipartition solver share this convention.
double weighted_median(std::vector<std::pair<double, double>>& samples, double total_mass);

// Maps atoms on the chosen side of the frame's hyperplane along v onto the
// hyperplane and expresses them in frame coordinates. Boundary atoms carry
// half weight; weights are otherwise preserved.
WeightedPointCloud project_along(const WeightedPointCloud& cloud, const Vec& v,
                                 const AffineFrame& frame, Side side);

// Unit normal of the hyperplane described by an (n-1)-axis frame, oriented so
// that its largest-magnitude component is positive.
Vec frame_normal(const AffineFrame& frame);

double cone_mass(const WeightedPointCloud& cloud, const SimplicialCone& cone,
                 double tol = kMembershipTol);

// Seeded symbolic jitter of magnitude 1e-9 times the bounding radius, applied
// once at load time when general position is requested; stands in for the
// mu(F) = 0 condition on discrete data.
WeightedPointCloud general_position_jitter(const WeightedPointCloud& cloud, std::uint64_t seed);

Vec barycenter(const WeightedPointCloud& cloud);

} // namespace santalo
