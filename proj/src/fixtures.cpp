#include "santalo/fixtures.hpp"

#include <cmath>

#include "santalo/rng.hpp"

namespace santalo {
namespace fixtures {

ScalarField counterexample_f(int cells) {
    return sample_field({-2.0}, {1.0}, {cells}, [](const Vec& x) {
        if (x[0] > -2.0 && x[0] < 0.0) return 1.0;
        if (x[0] > 0.0 && x[0] < 1.0) return 4.0;
        return 0.0;
    });
}

ScalarField counterexample_g(int cells) {
    return sample_field({-0.5}, {1.0}, {cells}, [](const Vec& x) {
        if (x[0] > -0.5 && x[0] <= 0.0) return 1.0;
        if (x[0] > 0.0 && x[0] < 1.0) return 0.25;
        return 0.0;
    });
}

ScalarField gaussian_field(int n, int cells_per_axis, double radius) {
    return sample_field(Vec(static_cast<std::size_t>(n), -radius),
                        Vec(static_cast<std::size_t>(n), radius),
                        std::vector<int>(static_cast<std::size_t>(n), cells_per_axis),
                        [](const Vec& x) { return std::exp(-0.5 * dot(x, x)); });
}

GridDensity density_from_field(const ScalarField& field) {
    GridDensity d;
    d.lo = field.lo;
    d.hi = field.hi;
    d.shape = field.shape;
    d.values = field.values;
    return d;
}

WeightedPointCloud uniform_disc_cloud(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec> points;
    std::vector<double> weights(static_cast<std::size_t>(count), 1.0);
    points.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(points.size()) < count) {
        const Vec p = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        if (dot(p, p) <= 1.0) points.push_back(p);
    }
    return WeightedPointCloud(std::move(points), std::move(weights));
}

WeightedPointCloud uniform_ball_cloud(int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec> points;
    std::vector<double> weights(static_cast<std::size_t>(count), 1.0);
    points.reserve(static_cast<std::size_t>(count));
    while (static_cast<int>(points.size()) < count) {
        const Vec p = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        if (dot(p, p) <= 1.0) points.push_back(p);
    }
    return WeightedPointCloud(std::move(points), std::move(weights));
}

WeightedPointCloud even_gaussian_cloud(int cells_per_axis, double radius) {
    return cloud_from_grid(density_from_field(gaussian_field(2, cells_per_axis, radius)));
}

WeightedPointCloud random_cloud(int n, int count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Vec> points;
    std::vector<double> weights;
    points.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Vec p(static_cast<std::size_t>(n));
        for (int a = 0; a < n; ++a) p[static_cast<std::size_t>(a)] = rng.uniform(-2.0, 2.0);
        points.push_back(std::move(p));
        weights.push_back(0.5 + rng.uniform());
    }
    return WeightedPointCloud(std::move(points), std::move(weights));
}

ConvexPolytope square() {
    ConvexPolytope P;
    P.vertices = {{-1.0, -1.0}, {1.0, -1.0}, {1.0, 1.0}, {-1.0, 1.0}};
    return P;
}

ConvexPolytope regular_polygon(int sides, double radius) {
    ConvexPolytope P;
    for (int k = 0; k < sides; ++k) {
        const double a = 2.0 * M_PI * k / sides;
        P.vertices.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return P;
}

ConvexPolytope unit_cube_3d() {
    ConvexPolytope P;
    for (int i = 0; i < 8; ++i)
        P.vertices.push_back({static_cast<double>(i & 1), static_cast<double>((i >> 1) & 1),
                              static_cast<double>((i >> 2) & 1)});
    return P;
}

ConvexPolytope random_polytope_2d(std::uint64_t seed, int points) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<Vec> raw;
        raw.reserve(static_cast<std::size_t>(points));
        for (int i = 0; i < points; ++i) {
            const double angle = rng.uniform(0.0, 2.0 * M_PI);
            const double r = rng.uniform(0.6, 1.4);
            raw.push_back({r * std::cos(angle), r * std::sin(angle)});
        }
        ConvexPolytope P;
        P.vertices = std::move(raw);
        P.validate();
        // Keep only draws with the origin comfortably interior.
        bool interior = true;
        ConvexPolytope copy = P;
        for (const auto& h : h_representation(copy))
            if (h.offset / norm(h.normal) < 0.1) interior = false;
        if (interior) return P;
    }
    throw DegenerateBody("could not draw a random polytope with the origin interior");
}

} // namespace fixtures
} // namespace santalo
