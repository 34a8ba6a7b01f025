#include "santalo/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "santalo/quadrature.hpp"
#include "santalo/rng.hpp"

namespace santalo {

// ---------------------------------------------------------------------------
// RadialWeight
// ---------------------------------------------------------------------------

RadialWeight RadialWeight::indicator_unit() {
    RadialWeight w;
    w.kind_ = Kind::indicator_unit;
    return w;
}

RadialWeight RadialWeight::gaussian() {
    RadialWeight w;
    w.kind_ = Kind::gaussian;
    return w;
}

RadialWeight RadialWeight::table(std::vector<double> values, double t_max) {
    if (values.size() < 2 || !(t_max > 0.0))
        throw DimensionMismatch("weight table needs at least two samples and t_max > 0");
    for (double v : values)
        if (v < 0.0 || !std::isfinite(v))
            throw DimensionMismatch("weight table values must be finite and >= 0");
    RadialWeight w;
    w.kind_ = Kind::table;
    w.values_ = std::move(values);
    w.t_max_ = t_max;
    return w;
}

double RadialWeight::operator()(double t) const {
    switch (kind_) {
        case Kind::indicator_unit:
            return t <= 1.0 ? 1.0 : 0.0;
        case Kind::gaussian:
            return std::exp(-0.5 * t * t);
        case Kind::table: {
            if (t < 0.0 || t > t_max_) return 0.0;
            const double pos = t / t_max_ * static_cast<double>(values_.size() - 1);
            const std::size_t i = std::min(static_cast<std::size_t>(pos), values_.size() - 2);
            const double frac = pos - static_cast<double>(i);
            return values_[i] * (1.0 - frac) + values_[i + 1] * frac;
        }
    }
    return 0.0;
}

double RadialWeight::sup() const {
    switch (kind_) {
        case Kind::indicator_unit:
        case Kind::gaussian:
            return 1.0;
        case Kind::table:
            return *std::max_element(values_.begin(), values_.end());
    }
    return 0.0;
}

double RadialWeight::support_radius(int n) const {
    switch (kind_) {
        case Kind::indicator_unit:
            return 1.0;
        case Kind::gaussian:
            return 6.0 + 0.5 * n;
        case Kind::table:
            return t_max_;
    }
    return 1.0;
}

// ---------------------------------------------------------------------------
// ScalarField
// ---------------------------------------------------------------------------

std::size_t ScalarField::cell_count() const {
    std::size_t n = 1;
    for (int s : shape) n *= static_cast<std::size_t>(s);
    return n;
}

double ScalarField::cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim(); ++a)
        v *= (hi[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)]) /
             shape[static_cast<std::size_t>(a)];
    return v;
}

Vec ScalarField::cell_center(std::size_t flat_index) const {
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

double ScalarField::operator()(const Vec& x) const {
    std::size_t index = 0;
    for (int a = 0; a < dim(); ++a) {
        const double l = lo[static_cast<std::size_t>(a)];
        const double h = hi[static_cast<std::size_t>(a)];
        const double xa = x[static_cast<std::size_t>(a)];
        if (xa < l || xa > h) return 0.0;
        const int sa = shape[static_cast<std::size_t>(a)];
        int ia = static_cast<int>((xa - l) / (h - l) * sa);
        if (ia >= sa) ia = sa - 1;
        if (ia < 0) ia = 0;
        index = index * static_cast<std::size_t>(sa) + static_cast<std::size_t>(ia);
    }
    return values[index];
}

bool ScalarField::snap_to_cell(const Vec& x, Vec& center, double& value) const {
    const int n = dim();
    std::size_t index = 0;
    center.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        const double l = lo[static_cast<std::size_t>(a)];
        const double h = hi[static_cast<std::size_t>(a)];
        const double xa = x[static_cast<std::size_t>(a)];
        if (xa < l || xa > h) return false;
        const int sa = shape[static_cast<std::size_t>(a)];
        int ia = static_cast<int>((xa - l) / (h - l) * sa);
        if (ia >= sa) ia = sa - 1;
        if (ia < 0) ia = 0;
        const double width = (h - l) / sa;
        center[static_cast<std::size_t>(a)] = l + (static_cast<double>(ia) + 0.5) * width;
        index = index * static_cast<std::size_t>(sa) + static_cast<std::size_t>(ia);
    }
    value = values[index];
    return true;
}

double ScalarField::integral() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s * cell_volume();
}

double ScalarField::max_value() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, v);
    return m;
}

void ScalarField::validate() const {
    const int n = dim();
    if (n < 1 || n > kMaxDimension)
        throw UnsupportedDimension("field dimension must be between 1 and 8");
    if (static_cast<int>(lo.size()) != n || static_cast<int>(hi.size()) != n)
        throw DimensionMismatch("field box does not match shape");
    for (int a = 0; a < n; ++a) {
        if (shape[static_cast<std::size_t>(a)] < 1) throw DimensionMismatch("field shape must be positive");
        if (!(hi[static_cast<std::size_t>(a)] > lo[static_cast<std::size_t>(a)]))
            throw DimensionMismatch("field box is empty");
    }
    if (values.size() != cell_count()) throw DimensionMismatch("field value count does not match shape");
    for (double v : values)
        if (v < 0.0 || !std::isfinite(v))
            throw DimensionMismatch("field values must be finite and >= 0");
}

ScalarField sample_field(const Vec& lo, const Vec& hi, const std::vector<int>& shape,
                         const std::function<double(const Vec&)>& f) {
    ScalarField field;
    field.lo = lo;
    field.hi = hi;
    field.shape = shape;
    field.values.resize(field.cell_count());
    for (std::size_t i = 0; i < field.values.size(); ++i) field.values[i] = f(field.cell_center(i));
    field.validate();
    return field;
}

// ---------------------------------------------------------------------------
// Weight integrals
// ---------------------------------------------------------------------------

double weight_integral(const RadialWeight& rho, int n) {
    if (n < 1 || n > kMaxDimension)
        throw UnsupportedDimension("weight integral defined for 1 <= n <= 8");
    const double cutoff =
        rho.kind() == RadialWeight::Kind::gaussian ? 10.0 + n : rho.support_radius(n);
    const double radial = integrate(
        [&](double t) { return rho(t) * std::pow(t, n - 1); }, 0.0, cutoff, 1e-14, 40);
    return n * ball_volume(n) * radial;
}

Certificate orthant_identity_check(const RadialWeight& rho, int n, std::uint64_t seed,
                                   long samples) {
    const double closed = weight_integral(rho, n);
    const double R = rho.support_radius(n);

    // Jittered-stratified sampling of [0, R]^n.
    const long per_axis = std::max(1L, static_cast<long>(std::floor(std::pow(
                                            static_cast<double>(samples), 1.0 / n))));
    Rng rng(seed);
    double sum = 0.0;
    long count = 0;
    std::vector<long> idx(static_cast<std::size_t>(n), 0);
    const double h = R / static_cast<double>(per_axis);
    bool done = false;
    Vec x(static_cast<std::size_t>(n));
    while (!done) {
        for (int a = 0; a < n; ++a)
            x[static_cast<std::size_t>(a)] =
                (static_cast<double>(idx[static_cast<std::size_t>(a)]) + rng.uniform()) * h;
        sum += rho(norm(x));
        ++count;
        int a = n - 1;
        while (a >= 0 && ++idx[static_cast<std::size_t>(a)] == per_axis) {
            idx[static_cast<std::size_t>(a)] = 0;
            --a;
        }
        done = a < 0;
    }
    const double box_volume = std::pow(R, n);
    const double orthant_mc = box_volume * sum / static_cast<double>(count);

    Certificate cert;
    cert.lhs = std::ldexp(orthant_mc, n); // 2^n * MC orthant integral
    cert.rhs = closed;
    cert.margin = cert.rhs - cert.lhs;
    cert.passed = std::fabs(cert.lhs - cert.rhs) <= 1e-3 * cert.rhs;
    cert.add("orthant_mc", orthant_mc);
    cert.add("closed_form", closed);
    cert.add("relative_error", std::fabs(cert.lhs - cert.rhs) / cert.rhs);
    cert.add("samples", static_cast<double>(count));
    cert.add("seed", static_cast<double>(seed));
    return cert;
}

// ---------------------------------------------------------------------------
// Polar function and duality
// ---------------------------------------------------------------------------

ScalarField polar_function(const ScalarField& f, const Vec& c, const RadialWeight& rho,
                           const Vec& out_lo, const Vec& out_hi, const std::vector<int>& out_shape,
                           double cap, double* cap_used) {
    f.validate();
    if (static_cast<int>(c.size()) != f.dim()) throw DimensionMismatch("center dimension mismatch");
    if (f.integral() <= 0.0) throw EmptySupport("field has zero integral");

    const double threshold = 1e-12 * f.max_value();
    std::vector<Vec> xs;
    std::vector<double> fx;
    double min_positive = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const double v = f.values[i];
        if (v > threshold) {
            xs.push_back(sub(f.cell_center(i), c));
            fx.push_back(v);
            min_positive = std::min(min_positive, v);
        }
    }
    if (xs.empty()) throw EmptySupport("field has no values above threshold");

    const double sup_rho = rho.sup();
    if (cap < 0.0) cap = sup_rho * sup_rho / min_positive;
    if (cap_used) *cap_used = cap;

    ScalarField g;
    g.lo = out_lo;
    g.hi = out_hi;
    g.shape = out_shape;
    g.values.resize(g.cell_count());
    for (std::size_t j = 0; j < g.values.size(); ++j) {
        const Vec y = g.cell_center(j);
        double inf = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double d = dot(xs[i], y);
            if (d < 0.0) continue;
            const double r = rho(std::sqrt(d));
            const double value = r * r / fx[i];
            if (value < inf) inf = value;
        }
        g.values[j] = std::isfinite(inf) ? inf : cap;
    }
    g.validate();
    return g;
}

Certificate duality_check(const ScalarField& f, const ScalarField& g, const Vec& c,
                          const RadialWeight& rho, long sample_pairs, std::uint64_t seed) {
    f.validate();
    g.validate();
    if (f.dim() != g.dim()) throw DimensionMismatch("fields have different dimensions");
    if (static_cast<int>(c.size()) != f.dim()) throw DimensionMismatch("center dimension mismatch");

    Rng rng(seed);
    const Vec x_lo = sub(f.lo, c);
    const Vec x_hi = sub(f.hi, c);

    double worst = -std::numeric_limits<double>::infinity();
    Vec worst_x(c.size(), 0.0), worst_y(c.size(), 0.0);
    long violations = 0;
    long evaluated = 0;
    Vec fx_center, gy_center;
    for (long k = 0; k < sample_pairs; ++k) {
        // Sampled points are snapped to their cell centers, the canonical
        // representatives of the step functions.
        double fv = 0.0, gv = 0.0;
        if (!f.snap_to_cell(add(c, rng.in_box(x_lo, x_hi)), fx_center, fv)) continue;
        if (!g.snap_to_cell(rng.in_box(g.lo, g.hi), gy_center, gv)) continue;
        const Vec x = sub(fx_center, c);
        const double d = dot(x, gy_center);
        if (d < 0.0) continue; // rejection: the hypothesis couples x.y >= 0
        if (fv == 0.0 || gv == 0.0) continue;
        const double r = rho(std::sqrt(d));
        const double violation = fv * gv - r * r;
        ++evaluated;
        if (violation > worst) {
            worst = violation;
            worst_x = x;
            worst_y = gy_center;
        }
        if (violation > kPointwiseSlack) ++violations;
    }
    if (evaluated == 0) worst = 0.0;

    Certificate cert;
    cert.lhs = worst;
    cert.rhs = 0.0;
    cert.margin = -worst;
    cert.passed = violations == 0;
    cert.add("violations", static_cast<double>(violations));
    cert.add("sample_pairs", static_cast<double>(sample_pairs));
    cert.add("evaluated_pairs", static_cast<double>(evaluated));
    cert.add("grid_semantics", 1.0);
    cert.add("seed", static_cast<double>(seed));
    for (std::size_t a = 0; a < worst_x.size(); ++a)
        cert.add("worst_x_" + std::to_string(a), worst_x[a]);
    for (std::size_t a = 0; a < worst_y.size(); ++a)
        cert.add("worst_y_" + std::to_string(a), worst_y[a]);
    return cert;
}

Certificate santalo_verify(const ScalarField& f, const ScalarField& g, const RadialWeight& rho) {
    f.validate();
    g.validate();
    if (f.dim() != g.dim()) throw DimensionMismatch("fields have different dimensions");
    const double fi = f.integral();
    const double gi = g.integral();
    const double w = weight_integral(rho, f.dim());
    Certificate cert = make_certificate(fi * gi, w * w, kIntegralSlack * w * w);
    cert.add("f_integral", fi);
    cert.add("g_integral", gi);
    cert.add("weight_integral", w);
    return cert;
}

// ---------------------------------------------------------------------------
// Cone-wise proof trace
// ---------------------------------------------------------------------------

Certificate conewise_trace(const ScalarField& f, const ScalarField& g, const RadialWeight& rho,
                           const YaoYaoTree& tree, double slack) {
    f.validate();
    g.validate();
    if (f.dim() != g.dim() || f.dim() != tree.dim())
        throw DimensionMismatch("fields and tree must share one dimension");
    for (double c : tree.center)
        if (std::fabs(c) > kMembershipTol)
            throw MalformedTree("conewise trace expects a tree centered at the origin");
    const int n = tree.dim();
    const auto cones = leaf_cones(tree);

    const double w_total = weight_integral(rho, n);
    const double orthant = std::ldexp(w_total, -n); // int_{R_+^n} rho(|x|) dx
    const double bound = orthant * orthant;

    // Cache cell centers and weights once per field.
    auto gather = [](const ScalarField& field) {
        std::vector<Vec> centers;
        std::vector<double> masses;
        const double cv = field.cell_volume();
        centers.reserve(field.values.size());
        for (std::size_t i = 0; i < field.values.size(); ++i) {
            if (field.values[i] > 0.0) {
                centers.push_back(field.cell_center(i));
                masses.push_back(field.values[i] * cv);
            }
        }
        return std::make_pair(std::move(centers), std::move(masses));
    };
    const auto [f_centers, f_masses] = gather(f);
    const auto [g_centers, g_masses] = gather(g);

    Certificate cert;
    const double f_integral = f.integral();
    const double g_integral = g.integral();

    bool per_cone_ok = true;
    double sum_products = 0.0;
    double dual_g_total = 0.0;
    double max_equip_dev = 0.0;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        // Uniform scaling to |det| = 1; the cone as a set is unchanged.
        const double scale_factor = std::pow(std::fabs(cones[k].det()), 1.0 / n);
        const SimplicialCone normalized = cone_from_basis(
            Vec(static_cast<std::size_t>(n), 0.0), cones[k].generators().scaled(1.0 / scale_factor));
        const SimplicialCone dual = dual_cone(normalized);

        double f_part = 0.0;
        for (std::size_t i = 0; i < f_centers.size(); ++i)
            if (cone_contains(normalized, f_centers[i], kBoundaryBand)) f_part += f_masses[i];
        double g_part = 0.0;
        for (std::size_t i = 0; i < g_centers.size(); ++i)
            if (cone_contains(dual, g_centers[i], kBoundaryBand)) g_part += g_masses[i];

        const double product = f_part * g_part;
        sum_products += product;
        dual_g_total += g_part;
        max_equip_dev = std::max(max_equip_dev,
                                 std::fabs(f_part - std::ldexp(f_integral, -n)));
        if (product > bound * (1.0 + slack)) per_cone_ok = false;

        cert.add("f_integral_" + std::to_string(k), f_part);
        cert.add("g_dual_integral_" + std::to_string(k), g_part);
        cert.add("product_" + std::to_string(k), product);
        cert.add("det_scale_" + std::to_string(k), scale_factor);
    }

    const bool sum_ok = sum_products <= std::ldexp(bound, n) * (1.0 + slack);
    cert.lhs = f_integral * g_integral;
    cert.rhs = w_total * w_total;
    cert.margin = cert.rhs - cert.lhs;
    const bool assembled_ok = cert.lhs <= cert.rhs * (1.0 + slack);
    cert.passed = per_cone_ok && sum_ok && assembled_ok;

    cert.add("slack", slack);
    cert.add("per_cone_bound", bound);
    cert.add("sum_products", sum_products);
    cert.add("sum_bound", std::ldexp(bound, n));
    cert.add("dual_g_total", dual_g_total);
    cert.add("g_integral", g_integral);
    cert.add("f_integral", f_integral);
    cert.add("max_equipartition_deviation", max_equip_dev);
    cert.add("per_cone_ok", per_cone_ok ? 1.0 : 0.0);
    cert.add("sum_ok", sum_ok ? 1.0 : 0.0);
    return cert;
}

// ---------------------------------------------------------------------------
// Prekopa-Leindler family
// ---------------------------------------------------------------------------

Certificate pl_check(const ScalarField& phi1, const ScalarField& phi2, const ScalarField& phi3,
                     double lambda, long sample_pairs, std::uint64_t seed) {
    phi1.validate();
    phi2.validate();
    phi3.validate();
    if (phi1.dim() != phi2.dim() || phi1.dim() != phi3.dim())
        throw DimensionMismatch("fields have different dimensions");
    if (!(lambda > 0.0 && lambda < 1.0)) throw Error("lambda must lie in (0, 1)");

    Rng rng(seed);
    long violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    Vec x_center, y_center;
    for (long k = 0; k < sample_pairs; ++k) {
        double a = 0.0, b = 0.0;
        if (!phi1.snap_to_cell(rng.in_box(phi1.lo, phi1.hi), x_center, a)) continue;
        if (!phi2.snap_to_cell(rng.in_box(phi2.lo, phi2.hi), y_center, b)) continue;
        if (a == 0.0 || b == 0.0) continue;
        const Vec z = add(scale(x_center, lambda), scale(y_center, 1.0 - lambda));
        const double violation = std::pow(a, lambda) * std::pow(b, 1.0 - lambda) - phi3(z);
        worst = std::max(worst, violation);
        if (violation > kPointwiseSlack) ++violations;
    }
    if (!std::isfinite(worst)) worst = 0.0;

    const double lhs = std::pow(phi1.integral(), lambda) * std::pow(phi2.integral(), 1.0 - lambda);
    const double rhs = phi3.integral();
    const bool hypothesis_ok = violations == 0;
    const bool conclusion_ok = lhs <= rhs * (1.0 + kIntegralSlack);

    Certificate cert;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.margin = rhs - lhs;
    cert.passed = hypothesis_ok && conclusion_ok;
    cert.add("hypothesis_violations", static_cast<double>(violations));
    cert.add("worst_violation", worst);
    cert.add("hypothesis_ok", hypothesis_ok ? 1.0 : 0.0);
    cert.add("conclusion_informational", hypothesis_ok ? 0.0 : 1.0);
    cert.add("lambda", lambda);
    cert.add("sample_pairs", static_cast<double>(sample_pairs));
    cert.add("seed", static_cast<double>(seed));
    return cert;
}

namespace {

void require_orthant(const ScalarField& field) {
    for (double l : field.lo)
        if (l < -kBoundaryBand) throw SupportOutsideOrthant();
}

} // namespace

Certificate log_pl_check(const ScalarField& f1, const ScalarField& f2, const ScalarField& f3,
                         long sample_pairs, std::uint64_t seed) {
    f1.validate();
    f2.validate();
    f3.validate();
    if (f1.dim() != f2.dim() || f1.dim() != f3.dim())
        throw DimensionMismatch("fields have different dimensions");
    require_orthant(f1);
    require_orthant(f2);
    require_orthant(f3);

    const int n = f1.dim();
    Rng rng(seed);
    long violations = 0;
    double worst = -std::numeric_limits<double>::infinity();
    Vec z(static_cast<std::size_t>(n));
    Vec x_center, y_center;
    for (long k = 0; k < sample_pairs; ++k) {
        double a = 0.0, b = 0.0;
        if (!f1.snap_to_cell(rng.in_box(f1.lo, f1.hi), x_center, a)) continue;
        if (!f2.snap_to_cell(rng.in_box(f2.lo, f2.hi), y_center, b)) continue;
        if (a == 0.0 || b == 0.0) continue;
        for (int i = 0; i < n; ++i)
            z[static_cast<std::size_t>(i)] =
                std::sqrt(std::max(0.0, x_center[static_cast<std::size_t>(i)]) *
                          std::max(0.0, y_center[static_cast<std::size_t>(i)]));
        const double c = f3(z);
        const double violation = a * b - c * c;
        worst = std::max(worst, violation);
        if (violation > kPointwiseSlack) ++violations;
    }
    if (!std::isfinite(worst)) worst = 0.0;

    const double lhs = f1.integral() * f2.integral();
    const double f3i = f3.integral();
    const double rhs = f3i * f3i;
    const bool hypothesis_ok = violations == 0;
    const bool conclusion_ok = lhs <= rhs * (1.0 + kIntegralSlack);

    Certificate cert;
    cert.lhs = lhs;
    cert.rhs = rhs;
    cert.margin = rhs - lhs;
    cert.passed = hypothesis_ok && conclusion_ok;
    cert.add("hypothesis_violations", static_cast<double>(violations));
    cert.add("worst_violation", worst);
    cert.add("hypothesis_ok", hypothesis_ok ? 1.0 : 0.0);
    cert.add("conclusion_informational", hypothesis_ok ? 0.0 : 1.0);
    cert.add("sample_pairs", static_cast<double>(sample_pairs));
    cert.add("seed", static_cast<double>(seed));
    return cert;
}

Certificate exp_substitution_check(const ScalarField& field) {
    field.validate();
    require_orthant(field);
    const int n = field.dim();

    // Log-coordinate grid; the lower edge is clamped away from zero, which
    // drops only the mass of f on a sliver of relative width 1e-8.
    ScalarField g;
    g.lo.resize(static_cast<std::size_t>(n));
    g.hi.resize(static_cast<std::size_t>(n));
    g.shape.resize(static_cast<std::size_t>(n));
    long per_axis_cap = n == 1 ? 16384 : (n == 2 ? 1024 : 160);
    for (int a = 0; a < n; ++a) {
        const double hi_a = field.hi[static_cast<std::size_t>(a)];
        if (!(hi_a > 0.0)) throw SupportOutsideOrthant("field box has no positive extent");
        const double lo_a = std::max(field.lo[static_cast<std::size_t>(a)], hi_a * 1e-8);
        g.lo[static_cast<std::size_t>(a)] = std::log(lo_a);
        g.hi[static_cast<std::size_t>(a)] = std::log(hi_a);
        g.shape[static_cast<std::size_t>(a)] = static_cast<int>(
            std::min<long>(per_axis_cap, 4L * field.shape[static_cast<std::size_t>(a)]));
    }
    g.values.resize(g.cell_count());
    Vec point(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < g.values.size(); ++i) {
        const Vec u = g.cell_center(i);
        double jacobian = 1.0;
        for (int a = 0; a < n; ++a) {
            point[static_cast<std::size_t>(a)] = std::exp(u[static_cast<std::size_t>(a)]);
            jacobian *= point[static_cast<std::size_t>(a)];
        }
        g.values[i] = field(point) * jacobian;
    }

    const double fi = field.integral();
    const double gi = g.integral();
    Certificate cert;
    cert.lhs = fi > 0.0 ? std::fabs(gi - fi) / fi : std::fabs(gi - fi);
    cert.rhs = 1e-3;
    cert.margin = cert.rhs - cert.lhs;
    cert.passed = cert.lhs <= cert.rhs;
    cert.add("f_integral", fi);
    cert.add("g_integral", gi);
    return cert;
}

} // namespace santalo
