#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "santalo/certificate.hpp"
#include "santalo/linalg.hpp"

namespace santalo {

inline constexpr int kMaxDimension = 8;
inline constexpr double kMembershipTol = 1e-9;
inline constexpr double kFrameTol = 1e-12;
inline constexpr double kSampleRadius = 10.0;

// Orthonormal frame of an affine subspace of R^n: an origin plus an ordered
// list of pairwise orthogonal unit axes.
struct AffineFrame {
    Vec origin;
    std::vector<Vec> axes;

    int ambient_dim() const { return static_cast<int>(origin.size()); }
    int subspace_dim() const { return static_cast<int>(axes.size()); }
};

// Checks orthonormality of the axes within kFrameTol.
bool frame_is_orthonormal(const AffineFrame& frame);

// ell(x) = normal . x + offset
struct AffineForm {
    Vec normal;
    double offset = 0.0;

    double operator()(const Vec& x) const { return dot(normal, x) + offset; }
};

// apex + pos(v_1, ..., v_n) for a basis v_1..v_n stored as matrix columns.
// The LU factorization of the generator matrix is cached for membership
// queries; generators stay unnormalized.
class SimplicialCone {
public:
    SimplicialCone(Vec apex, Mat generators);

    const Vec& apex() const { return apex_; }
    const Mat& generators() const { return generators_; }
    int dim() const { return generators_.order(); }
    double det() const { return det_; }

    // Coordinates lambda with generators * lambda = x - apex.
    Vec coordinates(const Vec& x) const;

private:
    Vec apex_;
    Mat generators_;
    std::shared_ptr<const Lu> lu_;
    double det_ = 0.0;
};

SimplicialCone cone_from_basis(const Vec& apex, const Mat& generators);

// True iff the solve generators * lambda = x - apex yields lambda_i >= -tol.
bool cone_contains(const SimplicialCone& cone, const Vec& x, double tol = kMembershipTol);

// Generators of the dual cone are the inverse-transpose of the generators.
// Requires apex = 0.
SimplicialCone dual_cone(const SimplicialCone& cone);

// Binary recursion tree of hyperplane/direction choices sharing one center.
// A Split at a d-dimensional subspace E (described by `frame`) cuts E along
// the hyperplane { x in E : (x - origin) . axes.back() = offset } and escapes
// it along `direction`; both children are partitions of that hyperplane.
struct YaoYaoNode {
    bool is_leaf = true;
    AffineFrame frame;
    double offset = 0.0;
    Vec direction;
    std::unique_ptr<YaoYaoNode> plus;
    std::unique_ptr<YaoYaoNode> minus;

    static std::unique_ptr<YaoYaoNode> leaf() { return std::make_unique<YaoYaoNode>(); }
    static std::unique_ptr<YaoYaoNode> split(AffineFrame frame, double offset, Vec direction,
                                             std::unique_ptr<YaoYaoNode> plus_child,
                                             std::unique_ptr<YaoYaoNode> minus_child);
    std::unique_ptr<YaoYaoNode> clone() const;
};

struct YaoYaoTree {
    Vec center;
    std::unique_ptr<YaoYaoNode> root;

    int dim() const { return static_cast<int>(center.size()); }
    YaoYaoTree clone() const;
};

// Throws MalformedTree unless: depth equals the ambient dimension, every
// frame is orthonormal, every split's hyperplane contains the shared center,
// directions live in the current subspace but not in the hyperplane, and
// child frames describe the split's hyperplane.
void validate_tree(const YaoYaoTree& tree);

// The coordinate-aligned tree: every split along the last remaining axis at
// the center's coordinate. Its leaf cones are the 2^n (signed) orthants.
YaoYaoTree axis_aligned_tree(const Vec& center);

// The 2^n simplicial cones of the partition, all with apex = tree.center.
// Leaf order is plus subtree first, depth first.
std::vector<SimplicialCone> leaf_cones(const YaoYaoTree& tree);

// Index (in leaf_cones order) of a leaf whose cone lies in { ell >= 0 }, for
// a form vanishing at the center. Ties at ell(center + v) = 0 take the plus
// branch.
int support_cone(const YaoYaoTree& tree, const AffineForm& form);

// Samples points in a ball of radius kSampleRadius around the shared apex and
// reports cover fraction and the number of points strictly interior to two or
// more cones.
Certificate partition_cover_check(const std::vector<SimplicialCone>& cones, int samples,
                                  std::uint64_t seed);

// Dualizes all leaf cones of a tree centered at the origin and runs
// partition_cover_check on them.
Certificate dual_partition_check(const YaoYaoTree& tree, int samples, std::uint64_t seed);

} // namespace santalo
