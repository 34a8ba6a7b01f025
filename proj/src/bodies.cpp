#include "santalo/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "santalo/geometry.hpp"
#include "santalo/inequalities.hpp"
#include "santalo/quadrature.hpp"
#include "santalo/rng.hpp"

namespace santalo {

namespace {

constexpr double kFeasibilityMargin = 1e-9;

int ambient_dim(const std::vector<Vec>& vertices) {
    if (vertices.empty()) throw DegenerateBody("polytope has no vertices");
    return static_cast<int>(vertices.front().size());
}

// Rank of the span of (v_i - v_0) via Gaussian elimination.
int affine_rank(const std::vector<Vec>& vertices) {
    const int n = ambient_dim(vertices);
    std::vector<Vec> rows;
    for (std::size_t i = 1; i < vertices.size(); ++i) rows.push_back(sub(vertices[i], vertices[0]));
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int pivot = -1;
        double best = 1e-9;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            const double v = std::fabs(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]);
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
        const Vec& p = rows[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            Vec& q = rows[static_cast<std::size_t>(r)];
            const double f = q[static_cast<std::size_t>(col)] / p[static_cast<std::size_t>(col)];
            for (int c = col; c < n; ++c)
                q[static_cast<std::size_t>(c)] -= f * p[static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

Vec vertex_centroid(const std::vector<Vec>& vertices) {
    Vec c(vertices.front().size(), 0.0);
    for (const Vec& v : vertices) c = add(c, v);
    return scale(c, 1.0 / static_cast<double>(vertices.size()));
}

void dedupe_points(std::vector<Vec>& pts, double tol) {
    std::vector<Vec> out;
    for (const Vec& p : pts) {
        bool seen = false;
        for (const Vec& q : out)
            if (norm(sub(p, q)) <= tol) {
                seen = true;
                break;
            }
        if (!seen) out.push_back(p);
    }
    pts = std::move(out);
}

// Enumerate the vertices of { x : normal_i . x <= offset_i } by solving all
// n-subsets of active constraints. Intended for n <= 3 and modest counts.
std::vector<Vec> enumerate_vertices(const std::vector<Halfspace>& halfspaces, int n) {
    const int m = static_cast<int>(halfspaces.size());
    if (m < n) return {};
    std::vector<Vec> vertices;
    std::vector<int> pick(static_cast<std::size_t>(n));
    double scale_hint = 0.0;
    for (const auto& h : halfspaces) scale_hint = std::max(scale_hint, std::fabs(h.offset));

    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            Mat A(n);
            Vec b(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const Halfspace& h = halfspaces[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
                for (int j = 0; j < n; ++j) A.at(i, j) = h.normal[static_cast<std::size_t>(j)];
                b[static_cast<std::size_t>(i)] = h.offset;
            }
            Lu lu(A);
            if (std::fabs(lu.det()) < 1e-10) return;
            const Vec x = lu.solve(b);
            for (const auto& h : halfspaces)
                if (dot(h.normal, x) > h.offset + 1e-7 * (1.0 + scale_hint + norm(x))) return;
            vertices.push_back(x);
            return;
        }
        for (int i = start; i < m; ++i) {
            pick[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    dedupe_points(vertices, 1e-7 * (1.0 + scale_hint));
    return vertices;
}

// 2D convex hull in counterclockwise order (monotone chain).
std::vector<Vec> hull_2d(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t m = pts.size();
    if (m < 3) return pts;
    auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    std::vector<Vec> hull(2 * m);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = m - 1, t = k + 1; i > 0; --i) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0.0) --k;
        hull[k++] = pts[i - 1];
    }
    hull.resize(k - 1);
    return hull;
}

double shoelace(const std::vector<Vec>& ring) {
    double a = 0.0;
    const std::size_t m = ring.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Vec& p = ring[i];
        const Vec& q = ring[(i + 1) % m];
        a += p[0] * q[1] - q[0] * p[1];
    }
    return 0.5 * std::fabs(a);
}

std::vector<Halfspace> h_rep_2d(const std::vector<Vec>& vertices) {
    const std::vector<Vec> ring = hull_2d(vertices);
    if (ring.size() < 3) throw DegenerateBody("2D polytope cell has fewer than 3 hull vertices");
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        const Vec& p = ring[i];
        const Vec& q = ring[(i + 1) % ring.size()];
        // CCW ring: the outward normal is the direction (dy, -dx).
        Vec normal = {q[1] - p[1], -(q[0] - p[0])};
        const double len = norm(normal);
        if (len <= 1e-14) continue;
        normal = scale(normal, 1.0 / len);
        hs.push_back({normal, dot(normal, p)});
    }
    return hs;
}

std::vector<Halfspace> h_rep_3d(const std::vector<Vec>& vertices) {
    // Facet normals of P are the vertices of (P - c)^polar, whose halfspace
    // description is available directly from the vertex list.
    const Vec c = vertex_centroid(vertices);
    std::vector<Halfspace> polar_rows;
    polar_rows.reserve(vertices.size());
    for (const Vec& v : vertices) polar_rows.push_back({sub(v, c), 1.0});
    const std::vector<Vec> normals = enumerate_vertices(polar_rows, 3);
    if (normals.size() < 4) throw DegenerateBody("3D polytope has fewer than 4 facets");
    std::vector<Halfspace> hs;
    for (const Vec& u : normals) hs.push_back({u, 1.0 + dot(u, c)});
    return hs;
}

double volume_2d(const ConvexPolytope& P) { return shoelace(hull_2d(P.vertices)); }

// Orthonormal frame of the plane with the given normal.
std::pair<Vec, Vec> plane_frame(const Vec& normal) {
    const Vec n = scale(normal, 1.0 / norm(normal));
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::fabs(n[static_cast<std::size_t>(i)]) < std::fabs(n[static_cast<std::size_t>(k)])) k = i;
    Vec a = unit_vector(3, k);
    const double c = dot(a, n);
    for (int i = 0; i < 3; ++i) a[static_cast<std::size_t>(i)] -= c * n[static_cast<std::size_t>(i)];
    a = scale(a, 1.0 / norm(a));
    Vec b = {n[1] * a[2] - n[2] * a[1], n[2] * a[0] - n[0] * a[2], n[0] * a[1] - n[1] * a[0]};
    return {a, b};
}

double volume_3d(ConvexPolytope P) {
    const auto& hs = h_representation(P);
    const Vec c = vertex_centroid(P.vertices);
    double volume = 0.0;
    for (const auto& h : hs) {
        const double nn = norm(h.normal);
        std::vector<Vec> facet;
        for (const Vec& v : P.vertices)
            if (std::fabs(dot(h.normal, v) - h.offset) <= 1e-7 * (1.0 + std::fabs(h.offset) + nn * norm(v)))
                facet.push_back(v);
        if (facet.size() < 3) continue;
        // Order facet vertices by angle in the facet plane.
        const Vec fc = vertex_centroid(facet);
        const auto [a, b] = plane_frame(h.normal);
        std::sort(facet.begin(), facet.end(), [&](const Vec& p, const Vec& q) {
            const Vec dp = sub(p, fc);
            const Vec dq = sub(q, fc);
            return std::atan2(dot(dp, b), dot(dp, a)) < std::atan2(dot(dq, b), dot(dq, a));
        });
        for (std::size_t i = 1; i + 1 < facet.size(); ++i) {
            const Vec e1 = sub(facet[0], c);
            const Vec e2 = sub(facet[i], c);
            const Vec e3 = sub(facet[i + 1], c);
            const double det3 = e1[0] * (e2[1] * e3[2] - e2[2] * e3[1]) -
                                e1[1] * (e2[0] * e3[2] - e2[2] * e3[0]) +
                                e1[2] * (e2[0] * e3[1] - e2[1] * e3[0]);
            volume += std::fabs(det3) / 6.0;
        }
    }
    return volume;
}

void bounding_box(const std::vector<Vec>& vertices, Vec& lo, Vec& hi) {
    const int n = ambient_dim(vertices);
    lo.assign(static_cast<std::size_t>(n), std::numeric_limits<double>::infinity());
    hi.assign(static_cast<std::size_t>(n), -std::numeric_limits<double>::infinity());
    for (const Vec& v : vertices)
        for (int a = 0; a < n; ++a) {
            lo[static_cast<std::size_t>(a)] = std::min(lo[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(a)]);
            hi[static_cast<std::size_t>(a)] = std::max(hi[static_cast<std::size_t>(a)], v[static_cast<std::size_t>(a)]);
        }
}

} // namespace

void ConvexPolytope::validate() const {
    const int n = ambient_dim(vertices);
    if (n < 1 || n > kMaxDimension)
        throw UnsupportedDimension("polytope dimension must be between 1 and 8");
    for (const Vec& v : vertices)
        if (static_cast<int>(v.size()) != n) throw DimensionMismatch("vertices have mixed dimensions");
    if (static_cast<int>(vertices.size()) < n + 1 || affine_rank(vertices) < n)
        throw DegenerateBody("polytope needs n+1 affinely independent vertices");
}

ConvexPolytope ConvexPolytope::translated(const Vec& shift) const {
    ConvexPolytope out;
    out.vertices.reserve(vertices.size());
    for (const Vec& v : vertices) out.vertices.push_back(add(v, shift));
    if (halfspaces) {
        out.halfspaces.emplace();
        for (const auto& h : *halfspaces)
            out.halfspaces->push_back({h.normal, h.offset + dot(h.normal, shift)});
    }
    return out;
}

const std::vector<Halfspace>& h_representation(ConvexPolytope& P) {
    if (P.halfspaces) return *P.halfspaces;
    P.validate();
    const int n = P.dim();
    if (n == 1) {
        double lo = P.vertices.front()[0], hi = lo;
        for (const Vec& v : P.vertices) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        P.halfspaces = {{Vec{1.0}, hi}, {Vec{-1.0}, -lo}};
    } else if (n == 2) {
        P.halfspaces = h_rep_2d(P.vertices);
    } else if (n == 3) {
        P.halfspaces = h_rep_3d(P.vertices);
    } else {
        throw UnsupportedDimension("halfspace representation is derived only for n <= 3");
    }
    return *P.halfspaces;
}

bool polytope_contains(const std::vector<Halfspace>& halfspaces, const Vec& x, double tol) {
    for (const auto& h : halfspaces)
        if (dot(h.normal, x) > h.offset + tol) return false;
    return true;
}

bool vertex_hull_contains(const std::vector<Vec>& vertices, const Vec& x, double tol) {
    // Phase-1 simplex for: V lambda = x, sum lambda = 1, lambda >= 0.
    const int n = ambient_dim(vertices);
    const int m = n + 1;
    const int k = static_cast<int>(vertices.size());
    const int cols = k + m; // hull coefficients + artificials
    std::vector<std::vector<double>> T(static_cast<std::size_t>(m + 1),
                                       std::vector<double>(static_cast<std::size_t>(cols + 1), 0.0));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j)
            T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i < n ? vertices[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] : 1.0;
        T[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] =
            i < n ? x[static_cast<std::size_t>(i)] : 1.0;
        if (T[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] < 0.0)
            for (int j = 0; j <= cols; ++j)
                if (j < k || j == cols) T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *= -1.0;
        T[static_cast<std::size_t>(i)][static_cast<std::size_t>(k + i)] = 1.0;
    }
    // Objective: minimize the sum of artificials; reduced costs of the basic
    // artificial columns start at zero.
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        basis[static_cast<std::size_t>(i)] = k + i;
        for (int j = 0; j <= cols; ++j)
            if (j < k || j == cols)
                T[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] -=
                    T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    for (int iter = 0; iter < 2000; ++iter) {
        // Bland's rule: first structural column with a negative reduced cost.
        int enter = -1;
        for (int j = 0; j < k; ++j)
            if (T[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] < -1e-11) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            const double a = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (a > 1e-11) {
                const double ratio = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols)] / a;
                if (ratio < best_ratio - 1e-13 ||
                    (ratio < best_ratio + 1e-13 && leave >= 0 &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) break; // unbounded; cannot happen for a feasibility problem
        const double pivot = T[static_cast<std::size_t>(leave)][static_cast<std::size_t>(enter)];
        for (int j = 0; j <= cols; ++j) T[static_cast<std::size_t>(leave)][static_cast<std::size_t>(j)] /= pivot;
        for (int i = 0; i <= m; ++i) {
            if (i == leave) continue;
            const double f = T[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
            if (f == 0.0) continue;
            for (int j = 0; j <= cols; ++j)
                T[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * T[static_cast<std::size_t>(leave)][static_cast<std::size_t>(j)];
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }
    const double residual = -T[static_cast<std::size_t>(m)][static_cast<std::size_t>(cols)];
    return residual <= tol * (1.0 + norm(x));
}

ConvexPolytope polar_polytope(const ConvexPolytope& P) {
    ConvexPolytope body = P;
    body.validate();
    const int n = body.dim();
    const auto& hs = h_representation(body);
    for (const auto& h : hs) {
        const double len = norm(h.normal);
        if (h.offset / len < kFeasibilityMargin) throw OriginNotInterior();
    }
    ConvexPolytope polar;
    polar.halfspaces.emplace();
    for (const Vec& v : body.vertices) polar.halfspaces->push_back({v, 1.0});
    if (n > 3) throw UnsupportedDimension("polar vertex enumeration is implemented for n <= 3");
    polar.vertices = enumerate_vertices(*polar.halfspaces, n);
    if (static_cast<int>(polar.vertices.size()) < n + 1)
        throw DegenerateBody("polar polytope collapsed");
    return polar;
}

double polytope_volume(const ConvexPolytope& P, VolumeMethod method, long samples,
                       std::uint64_t seed) {
    ConvexPolytope body = P;
    body.validate();
    const int n = body.dim();
    switch (method) {
        case VolumeMethod::exact2d:
            if (n != 2) throw UnsupportedDimension("exact2d needs a 2D polytope");
            return volume_2d(body);
        case VolumeMethod::exact3d:
            if (n != 3) throw UnsupportedDimension("exact3d needs a 3D polytope");
            return volume_3d(body);
        case VolumeMethod::montecarlo: {
            if (samples <= 0) samples = 100000;
            Vec lo, hi;
            bounding_box(body.vertices, lo, hi);
            double box_volume = 1.0;
            for (int a = 0; a < n; ++a)
                box_volume *= hi[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)];
            const bool use_h = body.halfspaces.has_value() || n <= 3;
            const std::vector<Halfspace>* hs = use_h ? &h_representation(body) : nullptr;
            Rng rng(seed);
            long hits = 0;
            for (long s = 0; s < samples; ++s) {
                const Vec x = rng.in_box(lo, hi);
                const bool inside = hs ? polytope_contains(*hs, x)
                                       : vertex_hull_contains(body.vertices, x);
                if (inside) ++hits;
            }
            return box_volume * static_cast<double>(hits) / static_cast<double>(samples);
        }
    }
    throw UnsupportedDimension("unknown volume method");
}

namespace {

double polar_volume_objective(ConvexPolytope& body, const std::vector<Halfspace>& hs, const Vec& z,
                              long mc_samples, std::uint64_t seed) {
    // Interior check with margin, on normalized rows; the inradius of P - z
    // also bounds the polar: (P - z)^polar fits in the ball of radius 1/inr.
    double inradius = std::numeric_limits<double>::infinity();
    for (const auto& h : hs) {
        const double slack = (h.offset - dot(h.normal, z)) / norm(h.normal);
        inradius = std::min(inradius, slack);
    }
    if (inradius < kFeasibilityMargin) return std::numeric_limits<double>::infinity();
    const int n = body.dim();
    ConvexPolytope shifted = body.translated(scale(z, -1.0));
    if (n == 1) {
        const ConvexPolytope polar = polar_polytope(shifted);
        double lo = polar.vertices.front()[0], hi = lo;
        for (const Vec& v : polar.vertices) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        return hi - lo;
    }
    if (n <= 3) {
        ConvexPolytope polar = polar_polytope(shifted);
        return n == 2 ? volume_2d(polar) : volume_3d(polar);
    }
    // Monte Carlo with the direct H-representation of the polar.
    std::vector<Halfspace> polar_rows;
    polar_rows.reserve(shifted.vertices.size());
    for (const Vec& v : shifted.vertices) polar_rows.push_back({v, 1.0});
    const double box = 1.0 / inradius;
    Vec lo(static_cast<std::size_t>(n), -box), hi(static_cast<std::size_t>(n), box);
    Rng rng(seed);
    long hits = 0;
    for (long s = 0; s < mc_samples; ++s)
        if (polytope_contains(polar_rows, rng.in_box(lo, hi))) ++hits;
    return std::pow(2.0 * box, n) * static_cast<double>(hits) / static_cast<double>(mc_samples);
}

} // namespace

Vec santalo_point_body(const ConvexPolytope& P, const SantaloSearchOptions& opts,
                       Certificate* diagnostics) {
    ConvexPolytope body = P;
    body.validate();
    const int n = body.dim();
    const auto& hs = h_representation(body);

    Vec lo, hi;
    bounding_box(body.vertices, lo, hi);
    const double diag = norm(sub(hi, lo));

    auto objective = [&](const Vec& z) {
        return polar_volume_objective(body, hs, z, opts.mc_samples, opts.seed);
    };

    Vec best_z;
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> restart_values;

    for (int restart = 0; restart < opts.restarts; ++restart) {
        Rng rng(Rng::split(opts.seed, static_cast<std::uint64_t>(restart)));
        // Random interior start.
        Vec z0 = vertex_centroid(body.vertices);
        for (int attempt = 0; attempt < 200; ++attempt) {
            const Vec cand = rng.in_box(lo, hi);
            if (polytope_contains(hs, cand, -kFeasibilityMargin * diag)) {
                z0 = cand;
                break;
            }
        }

        // Nelder-Mead.
        struct Vertex {
            Vec z;
            double value;
        };
        std::vector<Vertex> simplex;
        simplex.push_back({z0, objective(z0)});
        for (int i = 0; i < n; ++i) {
            Vec zi = z0;
            zi[static_cast<std::size_t>(i)] += 0.05 * diag;
            simplex.push_back({zi, objective(zi)});
        }
        auto order = [&]() {
            std::sort(simplex.begin(), simplex.end(),
                      [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
        };
        order();
        for (int iter = 0; iter < opts.max_iterations; ++iter) {
            Vec centroid(static_cast<std::size_t>(n), 0.0);
            for (int i = 0; i < n; ++i) centroid = add(centroid, simplex[static_cast<std::size_t>(i)].z);
            centroid = scale(centroid, 1.0 / n);
            Vertex& worst = simplex.back();

            const Vec refl = sub(scale(centroid, 2.0), worst.z);
            const double fr = objective(refl);
            if (fr < simplex.front().value) {
                const Vec expa = add(centroid, scale(sub(refl, centroid), 2.0));
                const double fe = objective(expa);
                worst = fe < fr ? Vertex{expa, fe} : Vertex{refl, fr};
            } else if (fr < simplex[simplex.size() - 2].value) {
                worst = {refl, fr};
            } else {
                const Vec contr = add(centroid, scale(sub(worst.z, centroid), 0.5));
                const double fc = objective(contr);
                if (fc < worst.value) {
                    worst = {contr, fc};
                } else {
                    for (std::size_t i = 1; i < simplex.size(); ++i) {
                        simplex[i].z = scale(add(simplex.front().z, simplex[i].z), 0.5);
                        simplex[i].value = objective(simplex[i].z);
                    }
                }
            }
            order();
            double spread = 0.0;
            for (const auto& v : simplex) spread = std::max(spread, norm(sub(v.z, simplex.front().z)));
            if (spread < 1e-10 * diag &&
                simplex.back().value - simplex.front().value <
                    1e-12 * (1.0 + std::fabs(simplex.front().value)))
                break;
        }
        restart_values.push_back(simplex.front().value);
        if (simplex.front().value < best_value) {
            best_value = simplex.front().value;
            best_z = simplex.front().z;
        }
    }

    double worst_restart = *std::max_element(restart_values.begin(), restart_values.end());
    const bool agree = worst_restart - best_value <= 1e-3 * std::fabs(best_value);
    if (diagnostics) {
        diagnostics->lhs = best_value;
        diagnostics->rhs = worst_restart;
        diagnostics->margin = worst_restart - best_value;
        diagnostics->passed = agree;
        for (std::size_t i = 0; i < restart_values.size(); ++i)
            diagnostics->add("restart_value_" + std::to_string(i), restart_values[i]);
        diagnostics->add("restarts_agree", agree ? 1.0 : 0.0);
        for (std::size_t a = 0; a < best_z.size(); ++a)
            diagnostics->add("z_" + std::to_string(a), best_z[a]);
    }
    return best_z;
}

BodyCertificate blaschke_santalo_check(const ConvexPolytope& P, const Vec& z) {
    ConvexPolytope body = P;
    body.validate();
    const int n = body.dim();
    const ConvexPolytope shifted = body.translated(scale(z, -1.0));
    const ConvexPolytope polar = polar_polytope(shifted);

    const VolumeMethod method = n == 2   ? VolumeMethod::exact2d
                                : n == 3 ? VolumeMethod::exact3d
                                         : VolumeMethod::montecarlo;
    BodyCertificate cert;
    cert.vol_K = polytope_volume(body, method, 1000000, 17);
    cert.vol_polar = polytope_volume(polar, method, 1000000, 18);
    cert.product = cert.vol_K * cert.vol_polar;
    const double vn = ball_volume(n);
    cert.bound = vn * vn;
    cert.passed = cert.product <= cert.bound * (1.0 + kIntegralSlack);
    cert.santalo_point = z;
    return cert;
}

Certificate indicator_reduction_check(const ConvexPolytope& P, const Vec& c, long samples,
                                      std::uint64_t seed) {
    ConvexPolytope body = P;
    body.validate();
    const int n = body.dim();
    if (n != 2 && n != 3)
        throw UnsupportedDimension("indicator reduction check runs the exact pipeline (n = 2, 3)");
    const auto& hs = h_representation(body);
    ConvexPolytope shifted = body.translated(scale(c, -1.0));
    const ConvexPolytope polar = polar_polytope(shifted); // throws OriginNotInterior if c is not

    // f = indicator of P on its bounding box.
    Vec lo, hi;
    bounding_box(body.vertices, lo, hi);
    const Vec pad = scale(sub(hi, lo), 0.02);
    const int res = n == 2 ? 128 : 48;
    const ScalarField f = sample_field(sub(lo, pad), add(hi, pad), std::vector<int>(n, res),
                                       [&](const Vec& x) {
                                           return polytope_contains(hs, x, 0.0) ? 1.0 : 0.0;
                                       });

    // g = maximal dual of f at c for the unit-ball indicator weight.
    Vec plo, phi_;
    bounding_box(polar.vertices, plo, phi_);
    const Vec ppad = scale(sub(phi_, plo), 0.05);
    const RadialWeight rho = RadialWeight::indicator_unit();
    const ScalarField g =
        polar_function(f, c, rho, sub(plo, ppad), add(phi_, ppad), std::vector<int>(n, n == 2 ? 96 : 40));

    // (a) g >= 1 on sampled points of (P - c)^polar, shrunk a little to stay
    // clear of grid-resolution effects at the boundary.
    const double shrink = 0.05;
    ConvexPolytope polar_copy = polar;
    const auto& polar_hs = h_representation(polar_copy);
    Rng rng(seed);
    long checked = 0;
    long violations = 0;
    while (checked < samples) {
        const Vec y = rng.in_box(plo, phi_);
        if (!polytope_contains(polar_hs, y)) continue;
        ++checked;
        const Vec y_in = scale(y, 1.0 - shrink);
        if (g(y_in) < 1.0 - kPointwiseSlack) ++violations;
    }

    // (b) (int rho(|x|) dx)^2 = v_n^2.
    const double w = weight_integral(rho, n);
    const double vn = ball_volume(n);
    const bool b_ok = std::fabs(w * w - vn * vn) <= kIntegralSlack * vn * vn;

    // (c) the functional certificate and the classical product.
    const Certificate sv = santalo_verify(f, g, rho);
    const VolumeMethod method = n == 2 ? VolumeMethod::exact2d : VolumeMethod::exact3d;
    const double vol_K = polytope_volume(body, method);
    const double vol_polar = polytope_volume(polar, method);
    const bool product_ok = vol_K * vol_polar <= vn * vn * (1.0 + kIntegralSlack);

    Certificate cert;
    cert.lhs = vol_K * vol_polar;
    cert.rhs = vn * vn;
    cert.margin = cert.rhs - cert.lhs;
    cert.passed = violations == 0 && b_ok && sv.passed && product_ok;
    cert.add("polar_sample_violations", static_cast<double>(violations));
    cert.add("polar_samples", static_cast<double>(checked));
    cert.add("polar_shrink", shrink);
    cert.add("weight_integral_sq", w * w);
    cert.add("vn_sq", vn * vn);
    cert.add("functional_lhs", sv.lhs);
    cert.add("functional_rhs", sv.rhs);
    cert.add("functional_passed", sv.passed ? 1.0 : 0.0);
    cert.add("vol_K", vol_K);
    cert.add("vol_polar", vol_polar);
    cert.add("seed", static_cast<double>(seed));
    return cert;
}

} // namespace santalo
