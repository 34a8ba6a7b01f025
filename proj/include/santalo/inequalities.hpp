#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "santalo/certificate.hpp"
#include "santalo/geometry.hpp"
#include "santalo/linalg.hpp"
#include "santalo/measures.hpp"

namespace santalo {

inline constexpr double kPointwiseSlack = 1e-9;
inline constexpr double kIntegralSlack = 1e-6;

// Non-negative weight rho on R_+ with x -> rho(|x|) integrable in every
// dimension up to 8.
class RadialWeight {
public:
    enum class Kind { indicator_unit, gaussian, table };

    static RadialWeight indicator_unit();
    static RadialWeight gaussian();
    static RadialWeight table(std::vector<double> values, double t_max);

    Kind kind() const { return kind_; }
    double operator()(double t) const;
    double sup() const;
    // Radius beyond which the weight is negligible (cutoff for quadrature and
    // sampling); dimension-aware for the Gaussian tail.
    double support_radius(int n) const;

private:
    RadialWeight() = default;
    Kind kind_ = Kind::indicator_unit;
    std::vector<double> values_;
    double t_max_ = 1.0;
};

// Non-negative function sampled at the cell centers of a regular grid over a
// bounded box; 0 outside. Values are row-major, last axis fastest.
struct ScalarField {
    Vec lo;
    Vec hi;
    std::vector<int> shape;
    std::vector<double> values;

    int dim() const { return static_cast<int>(shape.size()); }
    std::size_t cell_count() const;
    double cell_volume() const;
    Vec cell_center(std::size_t flat_index) const;
    // Piecewise-constant evaluation: value of the containing cell, 0 outside.
    double operator()(const Vec& x) const;
    // Snaps a point to the center of its cell; false outside the box. The
    // cell centers are the canonical representatives of the step function,
    // and every sampled pointwise hypothesis is evaluated at them.
    bool snap_to_cell(const Vec& x, Vec& center, double& value) const;
    double integral() const;
    double max_value() const;

    void validate() const;
};

// Builds a field by sampling a callable at cell centers.
ScalarField sample_field(const Vec& lo, const Vec& hi, const std::vector<int>& shape,
                         const std::function<double(const Vec&)>& f);

// integral over R^n of rho(|x|), computed as n v_n int_0^inf rho(t) t^{n-1} dt
// by adaptive quadrature.
double weight_integral(const RadialWeight& rho, int n);

// Monte Carlo check of 2^n * int_{R_+^n} rho(|x|) dx = int_{R^n} rho(|x|) dx
// at relative tolerance 1e-3.
Certificate orthant_identity_check(const RadialWeight& rho, int n, std::uint64_t seed = 20090101,
                                   long samples = 1000000);

// Pointwise-maximal g dual to f at center c:
//   g(y) = inf { rho(sqrt(x.y))^2 / f(c+x) : f(c+x) > 0, x.y >= 0 }
// sampled on the given output grid; empty infima take a configured cap.
ScalarField polar_function(const ScalarField& f, const Vec& c, const RadialWeight& rho,
                           const Vec& out_lo, const Vec& out_hi, const std::vector<int>& out_shape,
                           double cap = -1.0, double* cap_used = nullptr);

// Samples pairs with x.y >= 0 and checks f(c+x) g(y) <= rho(sqrt(x.y))^2.
Certificate duality_check(const ScalarField& f, const ScalarField& g, const Vec& c,
                          const RadialWeight& rho, long sample_pairs, std::uint64_t seed);

// int f * int g vs (int_{R^n} rho(|x|) dx)^2.
Certificate santalo_verify(const ScalarField& f, const ScalarField& g, const RadialWeight& rho);

// Per-cone products int_A f * int_{A*} g against (int_{R_+^n} rho)^2, their
// sum against 2^n times that bound, and the assembled inequality; generator
// matrices are scaled to determinant 1 for the change-of-variables bookkeeping.
Certificate conewise_trace(const ScalarField& f, const ScalarField& g, const RadialWeight& rho,
                           const YaoYaoTree& tree, double slack = kIntegralSlack);

// Prekopa-Leindler: hypothesis phi1(x)^l phi2(y)^(1-l) <= phi3(l x + (1-l) y)
// sampled pointwise, conclusion (int phi1)^l (int phi2)^(1-l) <= int phi3.
Certificate pl_check(const ScalarField& phi1, const ScalarField& phi2, const ScalarField& phi3,
                     double lambda, long sample_pairs, std::uint64_t seed);

// Logarithmic form on the positive orthant: hypothesis
// f1(x) f2(y) <= f3(sqrt(x_1 y_1), ..., sqrt(x_n y_n))^2, conclusion
// int f1 * int f2 <= (int f3)^2.
Certificate log_pl_check(const ScalarField& f1, const ScalarField& f2, const ScalarField& f3,
                         long sample_pairs, std::uint64_t seed);

// Verifies that g(x) = f(e^{x_1},...,e^{x_n}) e^{x_1+...+x_n} on a
// log-coordinate grid preserves the integral of f.
Certificate exp_substitution_check(const ScalarField& field);

} // namespace santalo
