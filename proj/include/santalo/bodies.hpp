#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "santalo/certificate.hpp"
#include "santalo/linalg.hpp"

namespace santalo {

struct Halfspace {
    Vec normal;
    double offset = 0.0; // normal . x <= offset
};

// Convex polytope; the vertex list is primary, the halfspace list is derived
// on demand (n <= 3).
struct ConvexPolytope {
    std::vector<Vec> vertices;
    std::optional<std::vector<Halfspace>> halfspaces;

    int dim() const { return static_cast<int>(vertices.front().size()); }
    void validate() const;
    ConvexPolytope translated(const Vec& shift) const;
};

struct BodyCertificate {
    double vol_K = 0.0;
    double vol_polar = 0.0;
    double product = 0.0;
    double bound = 0.0; // v_n^2
    bool passed = false;
    Vec santalo_point;
};

enum class VolumeMethod { exact2d, exact3d, montecarlo };

struct SantaloSearchOptions {
    int restarts = 5;
    int max_iterations = 300;
    std::uint64_t seed = 0;
    long mc_samples = 100000; // used only when no exact volume is available
};

// Ensures the halfspace list is present (computes it for n <= 3).
const std::vector<Halfspace>& h_representation(ConvexPolytope& P);

bool polytope_contains(const std::vector<Halfspace>& halfspaces, const Vec& x, double tol = 1e-9);

// Membership in conv(vertices) via a small feasibility LP; any dimension.
bool vertex_hull_contains(const std::vector<Vec>& vertices, const Vec& x, double tol = 1e-9);

// { x : v . x <= 1 for every vertex v }, with vertices enumerated from the
// halfspace intersection (n <= 3). Requires the origin strictly interior.
ConvexPolytope polar_polytope(const ConvexPolytope& P);

double polytope_volume(const ConvexPolytope& P, VolumeMethod method, long samples = 0,
                       std::uint64_t seed = 0);

// Minimizes z -> vol((P - z)^polar) by multi-start derivative-free simplex
// descent; restart agreement is the convergence sentinel.
Vec santalo_point_body(const ConvexPolytope& P, const SantaloSearchOptions& opts = {},
                       Certificate* diagnostics = nullptr);

BodyCertificate blaschke_santalo_check(const ConvexPolytope& P, const Vec& z);

// Numerical reduction chain from the functional inequality to the classical
// one, with f the indicator of P and the unit-ball indicator weight.
Certificate indicator_reduction_check(const ConvexPolytope& P, const Vec& c, long samples,
                                      std::uint64_t seed);

} // namespace santalo
