#include <doctest.h>

#include <cmath>

#include "santalo/geometry.hpp"
#include "santalo/rng.hpp"
#include "test_helpers.hpp"

using namespace santalo;

namespace {

SimplicialCone orthant_cone(int n) {
    return cone_from_basis(Vec(static_cast<std::size_t>(n), 0.0), Mat::identity(n));
}

// Random point of a cone: apex + nonnegative combination of generators.
Vec random_cone_point(const SimplicialCone& cone, Rng& rng, double max_coeff = 5.0) {
    Vec x = cone.apex();
    for (int j = 0; j < cone.dim(); ++j) {
        const double c = rng.uniform(0.0, max_coeff);
        const Vec g = cone.generators().column(j);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += c * g[i];
    }
    return x;
}

} // namespace

TEST_CASE("cone_from_basis accepts bases and rejects degenerate ones") {
    const SimplicialCone orthant = orthant_cone(2);
    CHECK(orthant.det() == doctest::Approx(1.0));

    // det oracle for columns (1,0), (1,1): ad - bc = 1
    const SimplicialCone skew = cone_from_basis({0.0, 0.0}, Mat::from_columns({{1.0, 0.0}, {1.0, 1.0}}));
    CHECK(skew.det() == doctest::Approx(1.0 * 1.0 - 0.0 * 1.0));

    CHECK_THROWS_AS(cone_from_basis({0.0, 0.0}, Mat::from_columns({{1.0, 1.0}, {2.0, 2.0}})),
                    DegenerateBasis);
}

TEST_CASE("cone_contains solves the generator system") {
    const SimplicialCone orthant = orthant_cone(2);
    CHECK(cone_contains(orthant, {3.0, 5.0}, 0.0));
    CHECK_FALSE(cone_contains(orthant, {-1.0, 1.0}, 0.0));

    // lambda = (1, 1) solves (1,0) l1 + (1,1) l2 = (2,1)
    const SimplicialCone skew = cone_from_basis({0.0, 0.0}, Mat::from_columns({{1.0, 0.0}, {1.0, 1.0}}));
    CHECK(cone_contains(skew, {2.0, 1.0}, 0.0));
    const Vec lambda = skew.coordinates({2.0, 1.0});
    CHECK(lambda[0] == doctest::Approx(1.0));
    CHECK(lambda[1] == doctest::Approx(1.0));
}

TEST_CASE("dual cone of the orthant is the orthant") {
    const SimplicialCone orthant = orthant_cone(3);
    const SimplicialCone dual = dual_cone(orthant);
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const Vec x = rng.in_ball(Vec(3, 0.0), 2.0);
        CHECK(cone_contains(orthant, x, 1e-9) == cone_contains(dual, x, 1e-9));
    }
}

TEST_CASE("dual cone generators are the inverse transpose") {
    // generators (1,0), (1,1) -> dual generators (1,-1), (0,1), by hand
    const SimplicialCone cone = cone_from_basis({0.0, 0.0}, Mat::from_columns({{1.0, 0.0}, {1.0, 1.0}}));
    const SimplicialCone dual = dual_cone(cone);
    CHECK(dual.generators().at(0, 0) == doctest::Approx(1.0));
    CHECK(dual.generators().at(1, 0) == doctest::Approx(-1.0));
    CHECK(dual.generators().at(0, 1) == doctest::Approx(0.0));
    CHECK(dual.generators().at(1, 1) == doctest::Approx(1.0));

    // sign condition on sampled pairs: x in C, y in C* -> x . y >= 0
    Rng rng(5);
    for (int i = 0; i < 1000; ++i) {
        const Vec x = random_cone_point(cone, rng);
        const Vec y = random_cone_point(dual, rng);
        CHECK(dot(x, y) >= -1e-9);
    }
}

TEST_CASE("duality commutes with rotations") {
    const double c = std::cos(M_PI / 4.0), s = std::sin(M_PI / 4.0);
    const Mat rotated = Mat::from_columns({{c, s}, {-s, c}});
    const SimplicialCone cone = cone_from_basis({0.0, 0.0}, rotated);
    const SimplicialCone dual = dual_cone(cone);
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        const Vec x = rng.in_ball(Vec(2, 0.0), 3.0);
        CHECK(cone_contains(cone, x, 1e-9) == cone_contains(dual, x, 1e-9));
    }
}

TEST_CASE("dual cone requires the apex at the origin") {
    const SimplicialCone shifted = cone_from_basis({1.0, 0.0}, Mat::identity(2));
    CHECK_THROWS_AS(dual_cone(shifted), NonZeroApex);
}

TEST_CASE("leaf cones of the 1D median tree are the two rays") {
    const YaoYaoTree tree = axis_aligned_tree({0.0});
    const auto cones = leaf_cones(tree);
    REQUIRE(cones.size() == 2);
    CHECK(cone_contains(cones[0], {2.0}, 0.0));
    CHECK_FALSE(cone_contains(cones[0], {-2.0}, 0.0));
    CHECK(cone_contains(cones[1], {-2.0}, 0.0));
}

TEST_CASE("leaf cones of the coordinate tree are the quadrants") {
    const YaoYaoTree tree = axis_aligned_tree({0.0, 0.0});
    const auto cones = leaf_cones(tree);
    REQUIRE(cones.size() == 4);
    // order: (+e2,+e1), (+e2,-e1), (-e2,+e1), (-e2,-e1)
    CHECK(cone_contains(cones[0], {1.0, 1.0}, 0.0));
    CHECK(cone_contains(cones[1], {-1.0, 1.0}, 0.0));
    CHECK(cone_contains(cones[2], {1.0, -1.0}, 0.0));
    CHECK(cone_contains(cones[3], {-1.0, -1.0}, 0.0));
    for (const auto& cone : cones) CHECK(cone_contains(cone, cone.apex(), 1e-9));
}

TEST_CASE("asymmetric trees still cover the plane") {
    // plus side splits F along e_1, minus side along -e_1
    AffineFrame root_frame{{0.0, 0.0}, {{1.0, 0.0}, {0.0, 1.0}}};
    AffineFrame child_frame{{0.0, 0.0}, {{1.0, 0.0}}};
    auto plus = YaoYaoNode::split(child_frame, 0.0, {1.0, 0.0}, YaoYaoNode::leaf(),
                                  YaoYaoNode::leaf());
    auto minus = YaoYaoNode::split(child_frame, 0.0, {-1.0, 0.0}, YaoYaoNode::leaf(),
                                   YaoYaoNode::leaf());
    YaoYaoTree tree;
    tree.center = {0.0, 0.0};
    tree.root = YaoYaoNode::split(root_frame, 0.0, {0.0, 1.0}, std::move(plus), std::move(minus));

    const auto cones = leaf_cones(tree);
    REQUIRE(cones.size() == 4);
    Rng rng(17);
    for (int i = 0; i < 10000; ++i) {
        const Vec x = rng.in_ball(Vec(2, 0.0), 10.0);
        int hits = 0;
        for (const auto& cone : cones)
            if (cone_contains(cone, x, 1e-9)) ++hits;
        CHECK(hits >= 1);
    }
}

TEST_CASE("support_cone walks to a supporting leaf") {
    const YaoYaoTree tree = axis_aligned_tree({0.0, 0.0});

    // positive orthant supports x1 + x2
    CHECK(support_cone(tree, {{1.0, 1.0}, 0.0}) == 0);

    // -x2: tie on the second split, plus branch wins -> index 2 = (-e2, +e1)
    const int lower = support_cone(tree, {{0.0, -1.0}, 0.0});
    CHECK(lower == 2);
    const auto cones = leaf_cones(tree);
    CHECK(cone_contains(cones[static_cast<std::size_t>(lower)], {1.0, -1.0}, 0.0));

    CHECK_THROWS_AS(support_cone(tree, {{1.0, 0.0}, 5.0}), FormNotCentered);
}

TEST_CASE("support_cone output supports random centered forms") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Vec center = {0.3, -0.7};
        const YaoYaoTree tree = testing::random_tree(center, seed);
        Rng rng(seed * 97 + 1);
        Vec normal = rng.normal_vec(2);
        while (norm(normal) < 1e-3) normal = rng.normal_vec(2);
        const AffineForm form{normal, -dot(normal, center)};

        const int index = support_cone(tree, form);
        const auto cones = leaf_cones(tree);
        const SimplicialCone& cone = cones[static_cast<std::size_t>(index)];
        int strictly_positive_leaves = 0;
        for (const auto& candidate : cones) {
            bool all_nonneg = true;
            bool all_strict = true;
            Rng sampler(seed * 1311 + 7);
            for (int i = 0; i < 1000; ++i) {
                const Vec x = random_cone_point(candidate, sampler);
                const double v = form(x);
                if (v < -1e-9) all_nonneg = false;
                if (v <= 1e-9 * (1.0 + norm(x))) all_strict = false;
            }
            if (&candidate == &cone) CHECK(all_nonneg);
            if (all_strict) ++strictly_positive_leaves;
        }
        // Proposition: at most one leaf is strictly positive off the center.
        CHECK(strictly_positive_leaves <= 1);
    }
}

TEST_CASE("partition_cover_check on the quadrants") {
    const auto cones = leaf_cones(axis_aligned_tree({0.0, 0.0}));
    const Certificate cert = partition_cover_check(cones, 10000, 123);
    CHECK(cert.passed);
    CHECK(cert.diagnostic("cover_fraction") == 1.0);
    CHECK(cert.diagnostic("overlap_count") == 0.0);
}

TEST_CASE("partition_cover_check measures a single quadrant") {
    const std::vector<SimplicialCone> one = {orthant_cone(2)};
    const Certificate cert = partition_cover_check(one, 10000, 7);
    CHECK_FALSE(cert.passed);
    CHECK(cert.diagnostic("cover_fraction") == doctest::Approx(0.25).epsilon(0.08));
}

TEST_CASE("partition_cover_check flags duplicated cones") {
    const std::vector<SimplicialCone> two = {orthant_cone(2), orthant_cone(2)};
    const Certificate cert = partition_cover_check(two, 2000, 7);
    CHECK_FALSE(cert.passed);
    CHECK(cert.diagnostic("overlap_count") > 0.0);
}

TEST_CASE("dual partition of the quadrant tree covers the plane") {
    const Certificate cert = dual_partition_check(axis_aligned_tree({0.0, 0.0}), 10000, 99);
    CHECK(cert.passed);
}

TEST_CASE("dual partition of random origin-centered trees covers the plane") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const YaoYaoTree tree = testing::random_tree({0.0, 0.0}, seed);
        const Certificate cert = dual_partition_check(tree, 4000, seed + 1000);
        CHECK(cert.passed);
    }
}

TEST_CASE("corrupted trees are rejected") {
    YaoYaoTree tree = axis_aligned_tree({0.0, 0.0});
    // Children whose implied centers disagree: shift one child offset.
    tree.root->plus->offset = 0.5;
    CHECK_THROWS_AS(validate_tree(tree), MalformedTree);
    CHECK_THROWS_AS(dual_partition_check(tree, 100, 1), MalformedTree);

    YaoYaoTree shallow;
    shallow.center = {0.0, 0.0};
    shallow.root = YaoYaoNode::leaf();
    CHECK_THROWS_AS(validate_tree(shallow), MalformedTree);
}

TEST_CASE("double dual membership agrees with the cone") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        Mat gens(2);
        do {
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) gens.at(i, j) = rng.uniform(-2.0, 2.0);
        } while (std::fabs(det(gens)) < 0.1);
        const SimplicialCone cone = cone_from_basis({0.0, 0.0}, gens);
        const SimplicialCone dd = dual_cone(dual_cone(cone));
        for (int i = 0; i < 100; ++i) {
            const Vec x = rng.in_ball(Vec(2, 0.0), 5.0);
            CHECK(cone_contains(cone, x, 1e-9) == cone_contains(dd, x, 1e-9));
        }
    }
}

TEST_CASE("generator and dual-generator matrices preserve the scalar product") {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.integer() % 2);
        Mat gens(n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) gens.at(i, j) = rng.uniform(-2.0, 2.0);
        } while (std::fabs(det(gens)) < 0.1);
        const SimplicialCone cone = cone_from_basis(Vec(static_cast<std::size_t>(n), 0.0), gens);
        const Mat dual_gens = dual_cone(cone).generators();
        const Vec x = rng.normal_vec(n);
        const Vec y = rng.normal_vec(n);
        CHECK(dot(gens.matvec(x), dual_gens.matvec(y)) == doctest::Approx(dot(x, y)).epsilon(1e-9));
    }
}

TEST_CASE("leaf cones of random trees partition space") {
    for (std::uint64_t seed = 100; seed < 106; ++seed) {
        const YaoYaoTree tree = testing::random_tree({0.1, 0.2}, seed);
        const auto cones = leaf_cones(tree);
        CHECK(cones.size() == 4);
        for (const auto& cone : cones) CHECK(std::fabs(cone.det()) > 1e-12);
        const Certificate cert = partition_cover_check(cones, 5000, seed);
        CHECK(cert.passed);
    }
    // 3D random tree
    const YaoYaoTree tree3 = testing::random_tree({0.0, 0.0, 0.0}, 55);
    const auto cones3 = leaf_cones(tree3);
    CHECK(cones3.size() == 8);
    CHECK(partition_cover_check(cones3, 4000, 56).passed);
}

TEST_CASE("support_cone supports centered forms on 3D random trees") {
    for (std::uint64_t seed = 601; seed <= 606; ++seed) {
        const Vec center = {0.2, -0.4, 0.9};
        const YaoYaoTree tree = testing::random_tree(center, seed);
        Rng rng(seed * 13 + 5);
        Vec normal = rng.normal_vec(3);
        while (norm(normal) < 1e-3) normal = rng.normal_vec(3);
        const AffineForm form{normal, -dot(normal, center)};
        const int index = support_cone(tree, form);
        const auto cones = leaf_cones(tree);
        REQUIRE(index >= 0);
        REQUIRE(index < static_cast<int>(cones.size()));
        Rng sampler(seed + 4242);
        for (int i = 0; i < 1000; ++i) {
            const Vec x = random_cone_point(cones[static_cast<std::size_t>(index)], sampler);
            CHECK(form(x) >= -1e-9);
        }
    }
}
