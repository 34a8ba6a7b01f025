#pragma once

#include <cmath>
#include <memory>

#include "santalo/geometry.hpp"
#include "santalo/rng.hpp"

namespace santalo::testing {

// Random orthonormal basis of R^n via Gram-Schmidt on gaussian vectors.
inline std::vector<Vec> random_orthonormal_basis(int n, Rng& rng) {
    std::vector<Vec> basis;
    while (static_cast<int>(basis.size()) < n) {
        Vec v = rng.normal_vec(n);
        for (const Vec& b : basis) {
            const double c = dot(v, b);
            for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] -= c * b[static_cast<std::size_t>(i)];
        }
        const double nv = norm(v);
        if (nv < 1e-6) continue;
        basis.push_back(scale(v, 1.0 / nv));
    }
    return basis;
}

// Random valid Yao-Yao tree: nested random frames whose hyperplanes all pass
// through the center, with random escape directions.
inline std::unique_ptr<YaoYaoNode> random_node(const Vec& center, const std::vector<Vec>& axes,
                                               Rng& rng) {
    const int d = static_cast<int>(axes.size());
    if (d == 0) return YaoYaoNode::leaf();
    AffineFrame frame;
    frame.origin = center;
    frame.axes = axes;
    // direction in span(axes) escaping the hyperplane span(axes[0..d-2])
    Vec dir(center.size(), 0.0);
    for (int i = 0; i < d; ++i) {
        const double c = i + 1 == d ? (rng.uniform() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.4, 1.5)
                                    : rng.uniform(-1.5, 1.5);
        for (std::size_t k = 0; k < dir.size(); ++k) dir[k] += c * axes[static_cast<std::size_t>(i)][k];
    }
    std::vector<Vec> child_axes(axes.begin(), axes.end() - 1);
    return YaoYaoNode::split(std::move(frame), 0.0, std::move(dir),
                             random_node(center, child_axes, rng),
                             random_node(center, child_axes, rng));
}

inline YaoYaoTree random_tree(const Vec& center, std::uint64_t seed) {
    Rng rng(seed);
    YaoYaoTree tree;
    tree.center = center;
    tree.root = random_node(center, random_orthonormal_basis(static_cast<int>(center.size()), rng),
                            rng);
    return tree;
}

} // namespace santalo::testing
