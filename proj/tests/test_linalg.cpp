#include <doctest.h>

#include <cmath>

#include "santalo/linalg.hpp"
#include "santalo/quadrature.hpp"
#include "santalo/rng.hpp"

using namespace santalo;

TEST_CASE("lu determinant matches the 2x2 formula") {
    Mat m = Mat::from_columns({{1.0, 0.0}, {1.0, 1.0}});
    CHECK(det(m) == doctest::Approx(1.0));
    Mat r = Mat::from_columns({{3.0, 2.0}, {-1.0, 4.0}});
    CHECK(det(r) == doctest::Approx(3.0 * 4.0 - 2.0 * (-1.0)));
    CHECK(det(Mat::identity(5)) == doctest::Approx(1.0));
}

TEST_CASE("lu solve recovers a known solution") {
    Mat m = Mat::from_columns({{2.0, 1.0, 0.0}, {1.0, 3.0, 1.0}, {0.0, 1.0, 4.0}});
    const Vec x_true = {1.0, -2.0, 0.5};
    const Vec b = m.matvec(x_true);
    const Vec x = Lu(m).solve(b);
    for (int i = 0; i < 3; ++i) CHECK(x[i] == doctest::Approx(x_true[i]).epsilon(1e-12));
}

TEST_CASE("singular matrices are detected") {
    Mat m = Mat::from_columns({{1.0, 1.0}, {2.0, 2.0}});
    CHECK(Lu(m).singular());
    CHECK(det(m) == 0.0);
    CHECK_THROWS_AS(Lu(m).solve({1.0, 0.0}), DegenerateBasis);
}

TEST_CASE("inverse is a two-sided inverse") {
    Mat m = Mat::from_columns({{1.0, 0.5}, {-0.25, 2.0}});
    const Mat inv = Lu(m).inverse();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double s = 0.0;
            for (int k = 0; k < 2; ++k) s += m.at(i, k) * inv.at(k, j);
            CHECK(s == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("adaptive quadrature integrates polynomials and the gaussian") {
    CHECK(integrate([](double t) { return t * t; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(integrate([](double t) { return std::exp(-0.5 * t * t); }, 0.0, 12.0) ==
          doctest::Approx(std::sqrt(M_PI / 2.0)).epsilon(1e-10));
}

TEST_CASE("unit ball volumes") {
    CHECK(ball_volume(1) == doctest::Approx(2.0));
    CHECK(ball_volume(2) == doctest::Approx(M_PI));
    CHECK(ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0));
}

TEST_CASE("seeded rng reproduces its stream") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform() == b.uniform());
}

TEST_CASE("ball samples stay inside the ball") {
    Rng rng(7);
    const Vec center = {1.0, -2.0, 0.5};
    for (int i = 0; i < 500; ++i) {
        const Vec p = rng.in_ball(center, 3.0);
        CHECK(norm(sub(p, center)) <= 3.0 + 1e-12);
    }
}
