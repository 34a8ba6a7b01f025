#include "santalo/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "santalo/rng.hpp"

namespace santalo {

WeightedPointCloud::WeightedPointCloud(std::vector<Vec> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
    if (points_.empty()) throw EmptySupport("cloud has no atoms");
    if (points_.size() != weights_.size())
        throw DimensionMismatch("points and weights differ in length");
    const std::size_t n = points_.front().size();
    if (n < 1 || n > static_cast<std::size_t>(kMaxDimension))
        throw UnsupportedDimension("cloud dimension must be between 1 and 8");
    for (const Vec& p : points_) {
        if (p.size() != n) throw DimensionMismatch("atoms have mixed dimensions");
        for (double c : p)
            if (!std::isfinite(c)) throw DimensionMismatch("atom coordinate is not finite");
    }
    for (double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w))
            throw DimensionMismatch("weights must be positive and finite");
        total_mass_ += w;
        max_weight_ = std::max(max_weight_, w);
    }
}

WeightedPointCloud WeightedPointCloud::translated(const Vec& shift) const {
    std::vector<Vec> moved;
    moved.reserve(points_.size());
    for (const Vec& p : points_) moved.push_back(add(p, shift));
    return WeightedPointCloud(std::move(moved), weights_);
}

std::size_t GridDensity::cell_count() const {
    std::size_t n = 1;
    for (int s : shape) n *= static_cast<std::size_t>(s);
    return n;
}

double GridDensity::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim(); ++a)
        v *= (hi[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)]) / shape[static_cast<std::size_t>(a)];
    return v;
}

Vec GridDensity::cell_center(std::size_t flat_index) const {
    const int n = dim();
    Vec c(static_cast<std::size_t>(n));
    std::size_t rest = flat_index;
    for (int a = n - 1; a >= 0; --a) {
        const std::size_t sa = static_cast<std::size_t>(shape[static_cast<std::size_t>(a)]);
        const std::size_t ia = rest % sa;
        rest /= sa;
        const double width =
            (hi[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)]) / static_cast<double>(sa);
        c[static_cast<std::size_t>(a)] = lo[static_cast<std::size_t>(a)] + (static_cast<double>(ia) + 0.5) * width;
    }
    return c;
}

WeightedPointCloud cloud_from_grid(const GridDensity& density) {
    if (density.dim() < 1 || density.dim() > kMaxDimension)
        throw UnsupportedDimension("grid dimension must be between 1 and 8");
    if (density.lo.size() != density.hi.size() ||
        static_cast<int>(density.lo.size()) != density.dim())
        throw DimensionMismatch("grid box does not match shape");
    for (int a = 0; a < density.dim(); ++a) {
        if (density.shape[static_cast<std::size_t>(a)] < 1)
            throw DimensionMismatch("grid shape must be positive");
        if (!(density.hi[static_cast<std::size_t>(a)] > density.lo[static_cast<std::size_t>(a)]))
            throw DimensionMismatch("grid box is empty");
    }
    if (density.values.size() != density.cell_count())
        throw DimensionMismatch("grid value count does not match shape");

    const double cell_vol = density.cell_volume();
    std::vector<Vec> points;
    std::vector<double> weights;
    for (std::size_t i = 0; i < density.values.size(); ++i) {
        const double v = density.values[i];
        if (v < 0.0 || !std::isfinite(v)) throw DimensionMismatch("grid values must be finite and >= 0");
        if (v > 0.0) {
            points.push_back(density.cell_center(i));
            weights.push_back(v * cell_vol);
        }
    }
    if (points.empty()) throw EmptySupport("all grid values are zero");
    return WeightedPointCloud(std::move(points), std::move(weights));
}

double halfspace_mass(const WeightedPointCloud& cloud, const Vec& normal, double offset,
                      Side side) {
    if (static_cast<int>(normal.size()) != cloud.dim())
        throw DimensionMismatch("normal dimension does not match cloud");
    if (norm(normal) == 0.0) throw ZeroNormal();
    double mass = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const double s = dot(normal, cloud.points()[i]) - offset;
        const double w = cloud.weights()[i];
        if (std::fabs(s) <= kBoundaryBand)
            mass += 0.5 * w;
        else if ((side == Side::plus && s > 0.0) || (side == Side::minus && s < 0.0))
            mass += w;
    }
    return mass;
}

double weighted_median(std::vector<std::pair<double, double>>& samples, double total_mass) {
    if (samples.empty()) throw EmptySupport("no samples for the weighted median");
    std::sort(samples.begin(), samples.end());
    const std::size_t m = samples.size();
    const double target = 0.5 * total_mass;
    const double eq_tol = 1e-12 * total_mass;
    double cum = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double value = samples[i].first;
        double w = samples[i].second;
        // aggregate exactly tied values
        std::size_t j = i;
        while (j + 1 < m && samples[j + 1].first == value) {
            ++j;
            w += samples[j].second;
        }
        cum += w;
        if (cum >= target - eq_tol) {
            if (std::fabs(cum - target) <= eq_tol && j + 1 < m)
                return 0.5 * (value + samples[j + 1].first);
            return value;
        }
        i = j;
    }
    return samples.back().first;
}

double bisecting_offset(const WeightedPointCloud& cloud, const Vec& normal) {
    if (static_cast<int>(normal.size()) != cloud.dim())
        throw DimensionMismatch("normal dimension does not match cloud");
    if (norm(normal) == 0.0) throw ZeroNormal();

    const std::size_t m = cloud.size();
    std::vector<std::pair<double, double>> proj(m);
    for (std::size_t i = 0; i < m; ++i)
        proj[i] = {dot(normal, cloud.points()[i]), cloud.weights()[i]};
    return weighted_median(proj, cloud.total_mass());
}

Vec frame_normal(const AffineFrame& frame) {
    const int n = frame.ambient_dim();
    if (frame.subspace_dim() != n - 1)
        throw DimensionMismatch("frame does not describe a hyperplane");
    // Complete the axes: take the coordinate direction with the largest
    // rejection and normalize it.
    Vec best;
    double best_norm = -1.0;
    for (int i = 0; i < n; ++i) {
        Vec r = unit_vector(n, i);
        for (const Vec& a : frame.axes) {
            const double c = dot(r, a);
            for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] -= c * a[static_cast<std::size_t>(k)];
        }
        const double rn = norm(r);
        if (rn > best_norm) {
            best_norm = rn;
            best = r;
        }
    }
    if (best_norm <= kFrameTol) throw DegenerateBasis("frame axes do not leave a normal direction");
    Vec u = scale(best, 1.0 / best_norm);
    int arg = 0;
    for (int i = 1; i < n; ++i)
        if (std::fabs(u[static_cast<std::size_t>(i)]) > std::fabs(u[static_cast<std::size_t>(arg)])) arg = i;
    if (u[static_cast<std::size_t>(arg)] < 0.0) u = scale(u, -1.0);
    return u;
}

WeightedPointCloud project_along(const WeightedPointCloud& cloud, const Vec& v,
                                 const AffineFrame& frame, Side side) {
    const int n = cloud.dim();
    if (frame.ambient_dim() != n || static_cast<int>(v.size()) != n)
        throw DimensionMismatch("frame or direction dimension does not match cloud");
    const Vec u = frame_normal(frame);
    const double vu = dot(v, u);
    if (std::fabs(vu) <= 1e-9) throw DirectionInHyperplane();

    std::vector<Vec> points;
    std::vector<double> weights;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const double s = dot(sub(cloud.points()[i], frame.origin), u);
        double w = cloud.weights()[i];
        if (std::fabs(s) <= kBoundaryBand)
            w *= 0.5;
        else if ((side == Side::plus) != (s > 0.0))
            continue;
        const Vec mapped = axpy(cloud.points()[i], -s / vu, v);
        Vec coords(frame.axes.size());
        const Vec rel = sub(mapped, frame.origin);
        for (std::size_t a = 0; a < frame.axes.size(); ++a) coords[a] = dot(rel, frame.axes[a]);
        points.push_back(std::move(coords));
        weights.push_back(w);
    }
    if (points.empty()) throw EmptySupport("no atoms on the requested side");
    return WeightedPointCloud(std::move(points), std::move(weights));
}

double cone_mass(const WeightedPointCloud& cloud, const SimplicialCone& cone, double tol) {
    if (cloud.dim() != cone.dim()) throw DimensionMismatch("cloud and cone dimensions differ");
    double mass = 0.0;
    for (std::size_t i = 0; i < cloud.size(); ++i)
        if (cone_contains(cone, cloud.points()[i], tol)) mass += cloud.weights()[i];
    return mass;
}

WeightedPointCloud general_position_jitter(const WeightedPointCloud& cloud, std::uint64_t seed) {
    double radius = 0.0;
    for (const Vec& p : cloud.points()) radius = std::max(radius, norm(p));
    const double magnitude = 1e-9 * std::max(radius, 1.0);
    Rng rng(seed);
    std::vector<Vec> points = cloud.points();
    for (Vec& p : points)
        for (double& c : p) c += magnitude * (2.0 * rng.uniform() - 1.0);
    return WeightedPointCloud(std::move(points), cloud.weights());
}

Vec barycenter(const WeightedPointCloud& cloud) {
    Vec b(static_cast<std::size_t>(cloud.dim()), 0.0);
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (int a = 0; a < cloud.dim(); ++a)
            b[static_cast<std::size_t>(a)] += cloud.weights()[i] * cloud.points()[i][static_cast<std::size_t>(a)];
    return scale(b, 1.0 / cloud.total_mass());
}

} // namespace santalo
