#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "santalo/linalg.hpp"

namespace santalo {

// Seeded generator used by every sampling loop. Uniforms and normals are
// derived from raw engine draws rather than std distributions so that a seed
// pins the exact sample stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() {
        // 53-bit mantissa in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t integer() { return eng_(); }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    Vec normal_vec(int n) {
        Vec v(static_cast<std::size_t>(n));
        for (auto& x : v) x = normal();
        return v;
    }

    // Uniform sample in the closed ball of given radius about a center.
    Vec in_ball(const Vec& center, double radius) {
        const int n = static_cast<int>(center.size());
        Vec dir = normal_vec(n);
        double d = norm(dir);
        while (d == 0.0) {
            dir = normal_vec(n);
            d = norm(dir);
        }
        const double r = radius * std::pow(uniform(), 1.0 / n);
        Vec p(center);
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] += r * dir[static_cast<std::size_t>(i)] / d;
        return p;
    }

    Vec in_box(const Vec& lo, const Vec& hi) {
        Vec p(lo.size());
        for (std::size_t i = 0; i < lo.size(); ++i) p[i] = uniform(lo[i], hi[i]);
        return p;
    }

    // Deterministic child seed for sharded loops.
    static std::uint64_t split(std::uint64_t seed, std::uint64_t shard) {
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (shard + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace santalo
