#pragma once

#include <cstdint>

#include "santalo/bodies.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/measures.hpp"

namespace santalo {
namespace fixtures {

// The barycenter counterexample: f = 1 on (-2,0) plus 4 on (0,1),
// g = 1 on (-0.5,0] plus 1/4 on (0,1), weight = unit-interval indicator.
ScalarField counterexample_f(int cells = 3000);
ScalarField counterexample_g(int cells = 3000);

// e^{-|x|^2/2} sampled on [-radius, radius]^n.
ScalarField gaussian_field(int n, int cells_per_axis = 96, double radius = 6.0);

GridDensity density_from_field(const ScalarField& field);

// Uniform cloud on the unit disc/ball, unit weights.
WeightedPointCloud uniform_disc_cloud(int count, std::uint64_t seed);
WeightedPointCloud uniform_ball_cloud(int count, std::uint64_t seed);

// Exactly even 2D cloud sampled from the Gaussian grid (see gaussian_field);
// mirror symmetry is exact in floating point.
WeightedPointCloud even_gaussian_cloud(int cells_per_axis = 64, double radius = 6.0);

// Seeded random cloud with atoms in a box and mildly varying weights.
WeightedPointCloud random_cloud(int n, int count, std::uint64_t seed);

ConvexPolytope square();
ConvexPolytope regular_polygon(int sides, double radius = 1.0);
ConvexPolytope unit_cube_3d();

// Random convex 2D polytope: convex hull of seeded points in an annulus, then
// shifted so the origin stays strictly interior.
ConvexPolytope random_polytope_2d(std::uint64_t seed, int points = 12);

} // namespace fixtures
} // namespace santalo
