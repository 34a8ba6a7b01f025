#include "santalo/equipartition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace santalo {

EquipartitionReport EquipartitionReport::clone() const {
    EquipartitionReport r;
    r.tree = tree.clone();
    r.masses = masses;
    r.max_imbalance = max_imbalance;
    r.residual_norm = residual_norm;
    r.iterations = iterations;
    r.total_mass = total_mass;
    return r;
}

namespace {

AffineFrame hyperplane_frame(int n, double t) {
    AffineFrame f;
    f.origin = Vec(static_cast<std::size_t>(n), 0.0);
    f.origin.back() = t;
    for (int i = 0; i + 1 < n; ++i) f.axes.push_back(unit_vector(n, i));
    return f;
}

Vec escape_direction(int n, const Vec& slopes) {
    Vec v(static_cast<std::size_t>(n), 0.0);
    v.back() = 1.0;
    for (int i = 0; i + 1 < n; ++i) v[static_cast<std::size_t>(i)] = slopes[static_cast<std::size_t>(i)];
    return v;
}

void fill_masses(EquipartitionReport& report, const WeightedPointCloud& cloud) {
    const auto cones = leaf_cones(report.tree);
    report.masses.clear();
    report.total_mass = cloud.total_mass();
    const double share = cloud.total_mass() / static_cast<double>(cones.size());
    report.max_imbalance = 0.0;
    for (const auto& cone : cones) {
        const double m = cone_mass(cloud, cone);
        report.masses.push_back(m);
        report.max_imbalance = std::max(report.max_imbalance, std::fabs(m - share));
    }
}

// ---------------------------------------------------------------------------
// Solver cores on frame-coordinate arrays.
//
// The top split along the last coordinate is independent of the escape
// slopes, so atoms are partitioned once per solve; every residual evaluation
// then only recomputes the projected coordinates a - slope * delta.
// ---------------------------------------------------------------------------

// 1D split data of one side of a 2D problem.
struct Side1d {
    std::vector<double> a;     // first coordinate
    std::vector<double> delta; // signed offset from the split hyperplane
    std::vector<double> w;
    double mass = 0.0;

    void clear() {
        a.clear();
        delta.clear();
        w.clear();
        mass = 0.0;
    }
    void push(double a_, double delta_, double w_) {
        a.push_back(a_);
        delta.push_back(delta_);
        w.push_back(w_);
        mass += w_;
    }
};

struct Core2d {
    Side1d plus, minus;
    double t = 0.0;
    int evals = 0;
    std::vector<std::pair<double, double>> scratch;

    // Builds the split from 2D coordinate arrays (a = first axis, b = last).
    void build(const std::vector<double>& a, const std::vector<double>& b,
               const std::vector<double>& w, double total, bool even_mode) {
        plus.clear();
        minus.clear();
        if (even_mode) {
            t = 0.0;
        } else {
            scratch.clear();
            for (std::size_t i = 0; i < b.size(); ++i) scratch.emplace_back(b[i], w[i]);
            t = weighted_median(scratch, total);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            const double delta = b[i] - t;
            if (std::fabs(delta) <= kBoundaryBand) {
                plus.push(a[i], delta, 0.5 * w[i]);
                minus.push(a[i], delta, 0.5 * w[i]);
            } else if (delta > 0.0) {
                plus.push(a[i], delta, w[i]);
            } else {
                minus.push(a[i], delta, w[i]);
            }
        }
        if (plus.a.empty() || minus.a.empty())
            throw EmptySupport("no atoms on one side of the top split");
    }

    double side_median(const Side1d& side, double slope) {
        scratch.clear();
        for (std::size_t i = 0; i < side.a.size(); ++i)
            scratch.emplace_back(side.a[i] - slope * side.delta[i], side.w[i]);
        return weighted_median(scratch, side.mass);
    }

    std::pair<double, double> medians(double slope) {
        ++evals;
        return {side_median(plus, slope), side_median(minus, slope)};
    }

    double residual(double slope) {
        const auto [mp, mm] = medians(slope);
        return mp - mm;
    }
};

struct Outcome2d {
    double slope = 0.0;
    double t = 0.0;
    double median_plus = 0.0;
    double median_minus = 0.0;
    double residual = 0.0;
    double center_a = 0.0; // common center, first frame coordinate
};

Outcome2d outcome_at(Core2d& core, double slope) {
    Outcome2d out;
    out.slope = slope;
    out.t = core.t;
    const auto [mp, mm] = core.medians(slope);
    out.median_plus = mp;
    out.median_minus = mm;
    out.residual = mp - mm;
    out.center_a = 0.5 * (mp + mm);
    return out;
}

// Bracket scan [-S, S], S = 1, 2, 4, ..., then bisection; returns candidate
// slopes (empty when no sign change was found within the limit).
std::vector<double> solve_slope(Core2d& core, double bracket_limit, double& best_abs,
                                double& best_slope) {
    best_abs = std::numeric_limits<double>::infinity();
    best_slope = 0.0;
    auto track = [&](double s, double r) {
        if (std::fabs(r) < best_abs) {
            best_abs = std::fabs(r);
            best_slope = s;
        }
    };

    double a = 0.0, b = 0.0, ra = 0.0, rb = 0.0;
    bool bracketed = false;
    for (double S = 1.0; S <= bracket_limit; S *= 2.0) {
        a = -S;
        b = S;
        ra = core.residual(a);
        track(a, ra);
        if (ra == 0.0) return {a};
        rb = core.residual(b);
        track(b, rb);
        if (rb == 0.0) return {b};
        if ((ra < 0.0) != (rb < 0.0)) {
            bracketed = true;
            break;
        }
    }
    if (!bracketed) return {};

    double mid = 0.5 * (a + b);
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (a + b);
        if (b - a <= 1e-13 * std::max(1.0, std::max(std::fabs(a), std::fabs(b)))) break;
        const double rm = core.residual(mid);
        track(mid, rm);
        if (rm == 0.0) return {mid};
        if ((rm < 0.0) == (ra < 0.0)) {
            a = mid;
            ra = rm;
        } else {
            b = mid;
            rb = rm;
        }
    }
    return {mid, a, b};
}

// Canonical 2D solve: smallest-|residual| candidate wins. Used both by the
// top-level 2D entry (before its mass-based reselection) and as the canonical
// lower-dimensional center inside the 3D residual.
Outcome2d solve_2d_core(Core2d& core, double bracket_limit) {
    double best_abs = 0.0, best_slope = 0.0;
    const std::vector<double> candidates = solve_slope(core, bracket_limit, best_abs, best_slope);
    if (candidates.empty())
        throw NoBracket("no sign change of the center residual within the bracket limit",
                        EquipartitionReport{});
    Outcome2d best;
    double best_key = std::numeric_limits<double>::infinity();
    for (double s : candidates) {
        Outcome2d out = outcome_at(core, s);
        if (std::fabs(out.residual) < best_key) {
            best_key = std::fabs(out.residual);
            best = out;
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Tree construction
// ---------------------------------------------------------------------------

YaoYaoTree median_split_tree(double c) {
    YaoYaoTree tree;
    tree.center = {c};
    AffineFrame frame;
    frame.origin = {0.0};
    frame.axes = {Vec{1.0}};
    tree.root = YaoYaoNode::split(std::move(frame), c, Vec{1.0}, YaoYaoNode::leaf(),
                                  YaoYaoNode::leaf());
    return tree;
}

YaoYaoTree tree_2d(double t, double slope, double median) {
    YaoYaoTree tree;
    tree.center = {median, t};
    AffineFrame child_frame = hyperplane_frame(2, t);

    auto make_child = [&]() {
        return YaoYaoNode::split(child_frame, median, Vec{1.0, 0.0}, YaoYaoNode::leaf(),
                                 YaoYaoNode::leaf());
    };
    AffineFrame root_frame;
    root_frame.origin = {0.0, 0.0};
    root_frame.axes = {Vec{1.0, 0.0}, Vec{0.0, 1.0}};
    tree.root = YaoYaoNode::split(std::move(root_frame), t, escape_direction(2, Vec{slope}),
                                  make_child(), make_child());
    return tree;
}

YaoYaoTree tree_3d(double t, const Vec& slopes, const Outcome2d& plus, const Outcome2d& minus) {
    // Common center on the top hyperplane: midpoint of the two canonical 2D
    // centers, in the hyperplane's (e_1, e_2) coordinates.
    const double c1 = 0.5 * (plus.center_a + minus.center_a);
    const double c2 = 0.5 * (plus.t + minus.t);

    YaoYaoTree tree;
    tree.center = {c1, c2, t};

    AffineFrame hyper = hyperplane_frame(3, t);
    AffineFrame line;
    line.origin = {0.0, c2, t};
    line.axes = {unit_vector(3, 0)};

    auto make_grandchild = [&]() {
        return YaoYaoNode::split(line, c1, unit_vector(3, 0), YaoYaoNode::leaf(),
                                 YaoYaoNode::leaf());
    };
    auto make_child = [&](const Outcome2d& side) {
        Vec dir = {side.slope, 1.0, 0.0};
        return YaoYaoNode::split(hyper, c2, std::move(dir), make_grandchild(), make_grandchild());
    };

    AffineFrame root;
    root.origin = {0.0, 0.0, 0.0};
    root.axes = {unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)};
    tree.root = YaoYaoNode::split(std::move(root), t, escape_direction(3, slopes),
                                  make_child(plus), make_child(minus));
    return tree;
}

// ---------------------------------------------------------------------------
// 2D solver entry
// ---------------------------------------------------------------------------

Core2d core_from_cloud_2d(const WeightedPointCloud& cloud, bool even_mode) {
    Core2d core;
    std::vector<double> a(cloud.size()), b(cloud.size()), w(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        a[i] = cloud.points()[i][0];
        b[i] = cloud.points()[i][1];
        w[i] = cloud.weights()[i];
    }
    core.build(a, b, w, cloud.total_mass(), even_mode);
    return core;
}

EquipartitionReport solve_2d(const WeightedPointCloud& cloud, const SolverOptions& opts) {
    Core2d core = core_from_cloud_2d(cloud, opts.even_mode);

    double best_abs = 0.0, best_slope = 0.0;
    const std::vector<double> candidates =
        solve_slope(core, opts.bracket_limit, best_abs, best_slope);

    if (candidates.empty()) {
        const Outcome2d best = outcome_at(core, best_slope);
        EquipartitionReport report;
        report.tree = tree_2d(core.t, best.slope, best.center_a);
        report.residual_norm = std::fabs(best.residual);
        report.iterations = core.evals;
        fill_masses(report, cloud);
        throw NoBracket("no sign change of the center residual within the bracket limit",
                        std::move(report));
    }

    // Among the final bracket candidates, keep the best a posteriori mass
    // balance; the theorem's conclusion is the testable contract.
    EquipartitionReport best_report;
    double best_key = std::numeric_limits<double>::infinity();
    for (double s : candidates) {
        const Outcome2d out = outcome_at(core, s);
        EquipartitionReport report;
        report.tree = tree_2d(core.t, out.slope, out.center_a);
        report.residual_norm = std::fabs(out.residual);
        fill_masses(report, cloud);
        if (report.max_imbalance < best_key) {
            best_key = report.max_imbalance;
            best_report = std::move(report);
        }
    }
    best_report.iterations = core.evals;
    return best_report;
}

// ---------------------------------------------------------------------------
// 3D solver
// ---------------------------------------------------------------------------

// One side of the 3D top split; x, y are the hyperplane coordinates.
struct Side2d {
    std::vector<double> x, y, delta, w;
    double mass = 0.0;

    void push(double x_, double y_, double z_, double w_) {
        x.push_back(x_);
        y.push_back(y_);
        delta.push_back(z_);
        w.push_back(w_);
        mass += w_;
    }
};

struct Core3d {
    Side2d plus, minus;
    double t = 0.0;
    int evals = 0;
    double bracket_limit = 1048576.0;
    // reusable buffers for the projected 2D problems
    std::vector<double> proj_a, proj_b;
    Core2d core2d;

    void build(const WeightedPointCloud& cloud, bool even_mode) {
        if (even_mode) {
            t = 0.0;
        } else {
            std::vector<std::pair<double, double>> proj(cloud.size());
            for (std::size_t i = 0; i < cloud.size(); ++i)
                proj[i] = {cloud.points()[i][2], cloud.weights()[i]};
            t = weighted_median(proj, cloud.total_mass());
        }
        for (std::size_t i = 0; i < cloud.size(); ++i) {
            const Vec& p = cloud.points()[i];
            const double w = cloud.weights()[i];
            const double delta = p[2] - t;
            if (std::fabs(delta) <= kBoundaryBand) {
                plus.push(p[0], p[1], delta, 0.5 * w);
                minus.push(p[0], p[1], delta, 0.5 * w);
            } else if (delta > 0.0) {
                plus.push(p[0], p[1], delta, w);
            } else {
                minus.push(p[0], p[1], delta, w);
            }
        }
        if (plus.x.empty() || minus.x.empty())
            throw EmptySupport("no atoms on one side of the top split");
    }

    // Canonical center of one projected side; throws NoBracket/EmptySupport.
    Outcome2d side_outcome(const Side2d& side, double s1, double s2) {
        const std::size_t m = side.x.size();
        proj_a.resize(m);
        proj_b.resize(m);
        for (std::size_t i = 0; i < m; ++i) {
            proj_a[i] = side.x[i] - s1 * side.delta[i];
            proj_b[i] = side.y[i] - s2 * side.delta[i];
        }
        core2d.build(proj_a, proj_b, side.w, side.mass, false);
        return solve_2d_core(core2d, bracket_limit);
    }

    struct Eval {
        bool ok = false;
        Vec residual;
        Outcome2d plus;
        Outcome2d minus;
    };

    Eval operator()(double s1, double s2) {
        ++evals;
        Eval e;
        try {
            e.plus = side_outcome(plus, s1, s2);
            e.minus = side_outcome(minus, s1, s2);
            e.residual = {e.plus.center_a - e.minus.center_a, e.plus.t - e.minus.t};
            e.ok = true;
        } catch (const NoBracket&) {
        } catch (const EmptySupport&) {
        }
        return e;
    }
};

double residual_norm2(const Core3d::Eval& e) {
    if (!e.ok) return std::numeric_limits<double>::infinity();
    return dot(e.residual, e.residual);
}

EquipartitionReport solve_3d(const WeightedPointCloud& cloud, const SolverOptions& opts) {
    Core3d core;
    core.bracket_limit = opts.bracket_limit;
    core.build(cloud, opts.even_mode);

    double best_norm2 = std::numeric_limits<double>::infinity();
    Vec best_s = {0.0, 0.0};
    Core3d::Eval best_eval;

    auto consider = [&](double s1, double s2) {
        const auto e = core(s1, s2);
        const double n2 = residual_norm2(e);
        if (n2 < best_norm2) {
            best_norm2 = n2;
            best_s = {s1, s2};
            best_eval = e;
        }
        return n2;
    };

    // Coarse grid, expanded while the minimizer sits on the window boundary.
    constexpr int kGrid = 9;
    double window = 4.0;
    for (;;) {
        int arg1 = 0, arg2 = 0;
        double local_best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < kGrid; ++i) {
            for (int j = 0; j < kGrid; ++j) {
                const double s1 = -window + 2.0 * window * i / (kGrid - 1);
                const double s2 = -window + 2.0 * window * j / (kGrid - 1);
                const double n2 = consider(s1, s2);
                if (n2 < local_best) {
                    local_best = n2;
                    arg1 = i;
                    arg2 = j;
                }
            }
        }
        const bool on_boundary = arg1 == 0 || arg1 == kGrid - 1 || arg2 == 0 || arg2 == kGrid - 1;
        if (!on_boundary || window * 2.0 > std::min(opts.bracket_limit, 4096.0) ||
            !std::isfinite(local_best))
            break;
        window *= 2.0;
    }

    // Subdivision rounds around the running best point.
    double w = window * 2.0 / (kGrid - 1);
    for (int round = 0; round < opts.grid_refinements; ++round) {
        const Vec local_center = best_s;
        for (int i = 0; i < kGrid; ++i)
            for (int j = 0; j < kGrid; ++j)
                consider(local_center[0] - w + 2.0 * w * i / (kGrid - 1),
                         local_center[1] - w + 2.0 * w * j / (kGrid - 1));
        w *= 0.25;
        if (best_norm2 == 0.0) break;
    }

    // Local derivative-free simplex descent on |residual|^2.
    if (best_norm2 > 0.0) {
        struct Vertex {
            Vec s;
            double value;
        };
        std::vector<Vertex> simplex;
        const double h = std::max(w, 1e-9);
        simplex.push_back({best_s, best_norm2});
        simplex.push_back({Vec{best_s[0] + h, best_s[1]}, consider(best_s[0] + h, best_s[1])});
        simplex.push_back({Vec{best_s[0], best_s[1] + h}, consider(best_s[0], best_s[1] + h)});
        auto order = [&]() {
            std::sort(simplex.begin(), simplex.end(),
                      [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
        };
        order();
        for (int iter = 0; iter < 120; ++iter) {
            if (!std::isfinite(simplex[0].value) || simplex[0].value == 0.0) break;
            const Vec centroid = scale(add(simplex[0].s, simplex[1].s), 0.5);
            const Vec worst = simplex[2].s;
            const Vec refl = sub(scale(centroid, 2.0), worst);
            const double fr = consider(refl[0], refl[1]);
            if (fr < simplex[0].value) {
                const Vec expa = sub(scale(centroid, 3.0), scale(worst, 2.0));
                const double fe = consider(expa[0], expa[1]);
                simplex[2] = fe < fr ? Vertex{expa, fe} : Vertex{refl, fr};
            } else if (fr < simplex[1].value) {
                simplex[2] = {refl, fr};
            } else {
                const Vec contr = scale(add(centroid, worst), 0.5);
                const double fc = consider(contr[0], contr[1]);
                if (fc < simplex[2].value) {
                    simplex[2] = {contr, fc};
                } else {
                    for (int k = 1; k < 3; ++k) {
                        simplex[static_cast<std::size_t>(k)].s =
                            scale(add(simplex[0].s, simplex[static_cast<std::size_t>(k)].s), 0.5);
                        simplex[static_cast<std::size_t>(k)].value =
                            consider(simplex[static_cast<std::size_t>(k)].s[0],
                                     simplex[static_cast<std::size_t>(k)].s[1]);
                    }
                }
            }
            order();
            const double spread = norm(sub(simplex[2].s, simplex[0].s));
            if (spread < 1e-12 * std::max(1.0, norm(simplex[0].s))) break;
        }
    }

    if (!best_eval.ok)
        throw EmptySupport("3D residual could not be evaluated anywhere in the search window");

    EquipartitionReport report;
    report.tree = tree_3d(core.t, best_s, best_eval.plus, best_eval.minus);
    report.residual_norm = std::sqrt(best_norm2);
    report.iterations = core.evals;
    fill_masses(report, cloud);

    if (report.max_imbalance > opts.mass_tol * cloud.total_mass())
        throw NotConverged("3D equipartition imbalance " + std::to_string(report.max_imbalance) +
                               " above tolerance",
                           std::move(report));
    return report;
}

} // namespace

Vec yy_center_1d(const WeightedPointCloud& cloud) {
    if (cloud.dim() != 1) throw UnsupportedDimension("yy_center_1d expects a 1D cloud");
    return {bisecting_offset(cloud, Vec{1.0})};
}

Vec center_residual(const WeightedPointCloud& cloud, const Vec& slopes, const SolverOptions& opts) {
    const int n = cloud.dim();
    if (n != 2 && n != 3) throw UnsupportedDimension("center_residual expects dimension 2 or 3");
    if (static_cast<int>(slopes.size()) != n - 1)
        throw DimensionMismatch("expected n-1 slope parameters");
    if (n == 2) {
        Core2d core = core_from_cloud_2d(cloud, opts.even_mode);
        return {core.residual(slopes[0])};
    }
    Core3d core;
    core.bracket_limit = opts.bracket_limit;
    core.build(cloud, opts.even_mode);
    const Outcome2d plus = core.side_outcome(core.plus, slopes[0], slopes[1]);
    const Outcome2d minus = core.side_outcome(core.minus, slopes[0], slopes[1]);
    return {plus.center_a - minus.center_a, plus.t - minus.t};
}

EquipartitionReport yy_equipartition(const WeightedPointCloud& cloud, const SolverOptions& opts) {
    const int n = cloud.dim();
    switch (n) {
        case 1: {
            const double c = opts.even_mode ? 0.0 : yy_center_1d(cloud)[0];
            EquipartitionReport report;
            report.tree = median_split_tree(c);
            report.iterations = 1;
            fill_masses(report, cloud);
            return report;
        }
        case 2:
            return solve_2d(cloud, opts);
        case 3:
            return solve_3d(cloud, opts);
        default:
            throw UnsupportedDimension("equipartition solver supports dimensions 1-3, got " +
                                       std::to_string(n));
    }
}

Certificate equipartition_verify(const YaoYaoTree& tree, const WeightedPointCloud& cloud,
                                 double tol) {
    if (tree.dim() != cloud.dim()) throw DimensionMismatch("tree and cloud dimensions differ");
    const auto cones = leaf_cones(tree);
    const double share = cloud.total_mass() / static_cast<double>(cones.size());

    Certificate cert;
    double max_imbalance = 0.0;
    int boundary_atoms = 0;
    for (std::size_t k = 0; k < cones.size(); ++k) {
        const double m = cone_mass(cloud, cones[k]);
        max_imbalance = std::max(max_imbalance, std::fabs(m - share));
        cert.add("mass_" + std::to_string(k), m);
    }
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (const auto& cone : cones) {
            if (cone_contains(cone, cloud.points()[i], kMembershipTol) &&
                !cone_contains(cone, cloud.points()[i], -kMembershipTol)) {
                ++boundary_atoms;
                break;
            }
        }
    }
    cert.lhs = max_imbalance;
    cert.rhs = tol * cloud.total_mass();
    cert.margin = cert.rhs - cert.lhs;
    cert.passed = cert.lhs <= cert.rhs;
    cert.add("total_mass", cloud.total_mass());
    cert.add("share", share);
    cert.add("boundary_atoms", boundary_atoms);
    return cert;
}

} // namespace santalo
