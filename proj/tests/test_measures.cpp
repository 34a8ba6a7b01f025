#include <doctest.h>

#include <cmath>

#include "santalo/fixtures.hpp"
#include "santalo/measures.hpp"
#include "santalo/rng.hpp"

using namespace santalo;

namespace {

WeightedPointCloud counterexample_cloud() {
    return cloud_from_grid(fixtures::density_from_field(fixtures::counterexample_f()));
}

GridDensity uniform_1d(double lo, double hi, int cells) {
    GridDensity d;
    d.lo = {lo};
    d.hi = {hi};
    d.shape = {cells};
    d.values.assign(static_cast<std::size_t>(cells), 1.0);
    return d;
}

} // namespace

TEST_CASE("cloud_from_grid places one atom per positive cell") {
    const WeightedPointCloud cloud = cloud_from_grid(uniform_1d(0.0, 1.0, 100));
    CHECK(cloud.size() == 100);
    CHECK(cloud.total_mass() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("the counterexample density has total mass 6") {
    const WeightedPointCloud cloud = counterexample_cloud();
    CHECK(cloud.total_mass() == doctest::Approx(6.0).epsilon(1e-3));
}

TEST_CASE("all-zero grids are rejected") {
    GridDensity d = uniform_1d(0.0, 1.0, 10);
    d.values.assign(10, 0.0);
    CHECK_THROWS_AS(cloud_from_grid(d), EmptySupport);
}

TEST_CASE("halfspace_mass splits symmetric clouds in half") {
    const WeightedPointCloud cloud({{-1.0}, {1.0}}, {1.0, 1.0});
    CHECK(halfspace_mass(cloud, {1.0}, 0.0, Side::plus) == doctest::Approx(1.0));
    CHECK(halfspace_mass(cloud, {1.0}, 0.0, Side::minus) == doctest::Approx(1.0));
}

TEST_CASE("boundary atoms contribute half to each side") {
    const WeightedPointCloud cloud({{0.0}, {2.0}}, {3.0, 1.0});
    CHECK(halfspace_mass(cloud, {1.0}, 0.0, Side::plus) == doctest::Approx(1.0 + 1.5));
    CHECK(halfspace_mass(cloud, {1.0}, 0.0, Side::minus) == doctest::Approx(1.5));
}

TEST_CASE("the counterexample splits 2 / 4 across the origin") {
    const WeightedPointCloud cloud = counterexample_cloud();
    CHECK(halfspace_mass(cloud, {1.0}, 0.0, Side::minus) == doctest::Approx(2.0).epsilon(1e-3));
    CHECK(halfspace_mass(cloud, {1.0}, 0.0, Side::plus) == doctest::Approx(4.0).epsilon(1e-3));
}

TEST_CASE("bisecting_offset is the midpoint-rule weighted median") {
    const WeightedPointCloud cloud({{1.0}, {2.0}, {3.0}, {4.0}}, {1.0, 1.0, 1.0, 1.0});
    CHECK(bisecting_offset(cloud, {1.0}) == doctest::Approx(2.5));

    // cumulative-distribution oracle: int_{-2}^{t} f = 3  =>  4 t = 1
    const WeightedPointCloud paper_cloud = counterexample_cloud();
    CHECK(bisecting_offset(paper_cloud, {1.0}) == doctest::Approx(0.25).epsilon(1e-3));

    const WeightedPointCloud even({{-2.0}, {-1.0}, {1.0}, {2.0}}, {1.0, 2.0, 2.0, 1.0});
    CHECK(bisecting_offset(even, {1.0}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("zero normals are rejected") {
    const WeightedPointCloud cloud({{1.0, 0.0}}, {1.0});
    CHECK_THROWS_AS(halfspace_mass(cloud, {0.0, 0.0}, 0.0, Side::plus), ZeroNormal);
    CHECK_THROWS_AS(bisecting_offset(cloud, {0.0, 0.0}), ZeroNormal);
}

TEST_CASE("project_along maps atoms onto the hyperplane") {
    const AffineFrame x_axis{{0.0, 0.0}, {{1.0, 0.0}}};

    // orthogonal projection
    const WeightedPointCloud above({{0.5, 1.0}, {-2.0, 3.0}}, {1.0, 2.0});
    const WeightedPointCloud ortho = project_along(above, {0.0, 1.0}, x_axis, Side::plus);
    CHECK(ortho.points()[0][0] == doctest::Approx(0.5));
    CHECK(ortho.points()[1][0] == doctest::Approx(-2.0));

    // oblique projection along (1,1): atoms (0,1), (2,1) -> -1, 1
    const WeightedPointCloud pair({{0.0, 1.0}, {2.0, 1.0}}, {1.0, 1.0});
    const WeightedPointCloud oblique = project_along(pair, {1.0, 1.0}, x_axis, Side::plus);
    CHECK(oblique.points()[0][0] == doctest::Approx(-1.0));
    CHECK(oblique.points()[1][0] == doctest::Approx(1.0));

    CHECK_THROWS_AS(project_along(pair, {1.0, 1.0}, x_axis, Side::minus), EmptySupport);
    CHECK_THROWS_AS(project_along(pair, {1.0, 0.0}, x_axis, Side::plus), DirectionInHyperplane);
}

TEST_CASE("cone_mass counts quadrant masses") {
    const WeightedPointCloud cloud({{1.0, 1.0}, {-1.0, 1.0}, {1.0, -1.0}, {-1.0, -1.0}},
                                   {1.0, 1.0, 1.0, 1.0});
    const auto cones = leaf_cones(axis_aligned_tree({0.0, 0.0}));
    for (const auto& cone : cones) CHECK(cone_mass(cloud, cone) == doctest::Approx(1.0));

    const SimplicialCone orthant = cone_from_basis({0.0, 0.0}, Mat::identity(2));
    const WeightedPointCloud negative({{-1.0, -1.0}}, {1.0});
    CHECK(cone_mass(negative, orthant) == 0.0);
}

TEST_CASE("quadrant mass of a uniform disc concentrates at a quarter") {
    const WeightedPointCloud disc = fixtures::uniform_disc_cloud(4096, 2024);
    const SimplicialCone orthant = cone_from_basis({0.0, 0.0}, Mat::identity(2));
    // binomial concentration: N/4 +- 64 is ~4.3 standard deviations
    CHECK(std::fabs(cone_mass(disc, orthant) - 1024.0) <= 64.0);
}

TEST_CASE("barycenter basics") {
    CHECK(barycenter(counterexample_cloud())[0] == doctest::Approx(0.0).epsilon(1e-3));

    const WeightedPointCloud single({{2.0, -3.0}}, {5.0});
    CHECK(barycenter(single)[0] == doctest::Approx(2.0));
    CHECK(barycenter(single)[1] == doctest::Approx(-3.0));

    const WeightedPointCloud pair({{0.0, 0.0}, {3.0, 0.0}}, {1.0, 2.0});
    CHECK(barycenter(pair)[0] == doctest::Approx(2.0));
    CHECK(barycenter(pair)[1] == doctest::Approx(0.0));
}

TEST_CASE("plus and minus masses always sum to the total") {
    Rng rng(6);
    const WeightedPointCloud cloud = fixtures::random_cloud(2, 200, 15);
    for (int trial = 0; trial < 50; ++trial) {
        Vec normal = rng.normal_vec(2);
        while (norm(normal) < 1e-3) normal = rng.normal_vec(2);
        const double offset = rng.uniform(-1.0, 1.0);
        const double total = halfspace_mass(cloud, normal, offset, Side::plus) +
                             halfspace_mass(cloud, normal, offset, Side::minus);
        CHECK(total == doctest::Approx(cloud.total_mass()).epsilon(1e-12));
    }
}

TEST_CASE("bisecting_offset balances mass within half the largest atom") {
    Rng rng(8);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const WeightedPointCloud cloud = fixtures::random_cloud(2, 101, seed);
        Vec normal = rng.normal_vec(2);
        while (norm(normal) < 1e-3) normal = rng.normal_vec(2);
        const double t = bisecting_offset(cloud, normal);
        const double minus = halfspace_mass(cloud, normal, t, Side::minus);
        CHECK(std::fabs(minus - 0.5 * cloud.total_mass()) <= 0.5 * cloud.max_weight() + 1e-9);
    }
}

TEST_CASE("project_along preserves the side mass exactly") {
    const AffineFrame x_axis{{0.0, 0.5}, {{1.0, 0.0}}};
    for (std::uint64_t seed = 30; seed < 40; ++seed) {
        const WeightedPointCloud cloud = fixtures::random_cloud(2, 64, seed);
        const Vec v = {0.3, 1.0};
        const WeightedPointCloud plus = project_along(cloud, v, x_axis, Side::plus);
        const double side_mass = halfspace_mass(cloud, {0.0, 1.0}, 0.5, Side::plus);
        CHECK(plus.total_mass() == doctest::Approx(side_mass).epsilon(1e-12));
    }
}

TEST_CASE("cone masses over tree leaves add up to the total") {
    const WeightedPointCloud disc = fixtures::uniform_disc_cloud(512, 77);
    const auto cones = leaf_cones(axis_aligned_tree({0.05, -0.1}));
    double total_tol0 = 0.0;
    double total_tolerant = 0.0;
    for (const auto& cone : cones) {
        total_tol0 += cone_mass(disc, cone, 0.0);
        total_tolerant += cone_mass(disc, cone, 1e-9);
    }
    CHECK(total_tolerant >= disc.total_mass() - 1e-12);
    CHECK(total_tol0 == doctest::Approx(disc.total_mass()).epsilon(1e-12));
}

TEST_CASE("general-position jitter perturbs atoms at the 1e-9 scale") {
    const WeightedPointCloud cloud = fixtures::random_cloud(2, 64, 3);
    const WeightedPointCloud jittered = general_position_jitter(cloud, 5);
    REQUIRE(jittered.size() == cloud.size());
    double radius = 0.0;
    for (const Vec& p : cloud.points()) radius = std::max(radius, norm(p));
    double max_shift = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        max_shift = std::max(max_shift, norm(sub(jittered.points()[i], cloud.points()[i])));
        CHECK(jittered.weights()[i] == cloud.weights()[i]);
    }
    CHECK(max_shift > 0.0);
    CHECK(max_shift <= 2e-9 * std::max(radius, 1.0));
    // deterministic in the seed
    const WeightedPointCloud again = general_position_jitter(cloud, 5);
    CHECK(again.points() == jittered.points());
}

TEST_CASE("barycenter is translation equivariant") {
    const WeightedPointCloud cloud = fixtures::random_cloud(3, 64, 9);
    const Vec shift = {1.5, -2.0, 0.25};
    const Vec before = barycenter(cloud);
    const Vec after = barycenter(cloud.translated(shift));
    for (int a = 0; a < 3; ++a)
        CHECK(after[static_cast<std::size_t>(a)] ==
              doctest::Approx(before[static_cast<std::size_t>(a)] + shift[static_cast<std::size_t>(a)])
                  .epsilon(1e-12));
}
