#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "santalo/certificate.hpp"
#include "santalo/geometry.hpp"
#include "santalo/measures.hpp"

namespace santalo {

struct SolverOptions {
    double mass_tol = 1e-3;          // fraction of total mass
    double bracket_limit = 1048576.0; // max |s| = 2^20
    int grid_refinements = 8;         // 3D only
    bool even_mode = false;
    std::uint64_t seed = 0;
};

struct EquipartitionReport {
    YaoYaoTree tree;
    std::vector<double> masses;
    double max_imbalance = 0.0;
    double residual_norm = 0.0;
    int iterations = 0;
    double total_mass = 0.0;

    EquipartitionReport clone() const;
};

// 2D bracket expansion found no sign change of the center residual.
class NoBracket : public Error {
public:
    NoBracket(std::string msg, EquipartitionReport best)
        : Error(std::move(msg)), best_report(std::move(best)) {}
    EquipartitionReport best_report;
};

// 3D search ended above the mass tolerance.
class NotConverged : public Error {
public:
    NotConverged(std::string msg, EquipartitionReport best)
        : Error(std::move(msg)), best_report(std::move(best)) {}
    EquipartitionReport best_report;
};

// Weighted median of a 1D cloud (midpoint rule); each ray from it carries
// half the mass under half-counting.
Vec yy_center_1d(const WeightedPointCloud& cloud);

// Difference of the canonical lower-dimensional centers of the two halves,
// in the coordinates of the top split's hyperplane frame. The top split is
// along e_n at the bisecting offset (0 when even_mode is set) and the escape
// direction is v(s) = e_n + sum_i s_i e_i.
Vec center_residual(const WeightedPointCloud& cloud, const Vec& slopes, const SolverOptions& opts);

// Yao-Yao equipartition solver for dimensions 1, 2, 3.
EquipartitionReport yy_equipartition(const WeightedPointCloud& cloud, const SolverOptions& opts = {});

// Mass of every leaf cone; passes iff the largest deviation from
// total / 2^n stays within tol * total.
Certificate equipartition_verify(const YaoYaoTree& tree, const WeightedPointCloud& cloud,
                                 double tol);

} // namespace santalo
