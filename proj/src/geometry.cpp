#include "santalo/geometry.hpp"

#include <cmath>
#include <string>

#include "santalo/rng.hpp"

namespace santalo {

namespace {

void check_dimension(int n) {
    if (n < 1 || n > kMaxDimension)
        throw UnsupportedDimension("dimension must be between 1 and 8, got " + std::to_string(n));
}

// Residual of v after removing its components along the given axes.
Vec reject_from_span(const Vec& v, const std::vector<Vec>& axes) {
    Vec r = v;
    for (const Vec& a : axes) {
        const double c = dot(r, a);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= c * a[i];
    }
    return r;
}

} // namespace

bool frame_is_orthonormal(const AffineFrame& frame) {
    for (std::size_t i = 0; i < frame.axes.size(); ++i) {
        if (static_cast<int>(frame.axes[i].size()) != frame.ambient_dim()) return false;
        if (std::fabs(norm(frame.axes[i]) - 1.0) > kFrameTol) return false;
        for (std::size_t j = i + 1; j < frame.axes.size(); ++j)
            if (std::fabs(dot(frame.axes[i], frame.axes[j])) > kFrameTol) return false;
    }
    return true;
}

SimplicialCone::SimplicialCone(Vec apex, Mat generators)
    : apex_(std::move(apex)), generators_(std::move(generators)) {
    check_dimension(generators_.order());
    if (static_cast<int>(apex_.size()) != generators_.order())
        throw DimensionMismatch("apex dimension does not match generator matrix");
    auto lu = std::make_shared<Lu>(generators_);
    det_ = lu->det();
    if (std::fabs(det_) <= 1e-12) throw DegenerateBasis();
    lu_ = std::move(lu);
}

Vec SimplicialCone::coordinates(const Vec& x) const {
    if (x.size() != apex_.size()) throw DimensionMismatch("point dimension does not match cone");
    return lu_->solve(sub(x, apex_));
}

SimplicialCone cone_from_basis(const Vec& apex, const Mat& generators) {
    return SimplicialCone(apex, generators);
}

bool cone_contains(const SimplicialCone& cone, const Vec& x, double tol) {
    const Vec lambda = cone.coordinates(x);
    for (double l : lambda)
        if (l < -tol) return false;
    return true;
}

SimplicialCone dual_cone(const SimplicialCone& cone) {
    for (double c : cone.apex())
        if (std::fabs(c) > 1e-12) throw NonZeroApex();
    const Mat dual_gens = Lu(cone.generators()).inverse().transpose();
    return SimplicialCone(Vec(cone.apex().size(), 0.0), dual_gens);
}

std::unique_ptr<YaoYaoNode> YaoYaoNode::split(AffineFrame frame, double offset, Vec direction,
                                              std::unique_ptr<YaoYaoNode> plus_child,
                                              std::unique_ptr<YaoYaoNode> minus_child) {
    auto node = std::make_unique<YaoYaoNode>();
    node->is_leaf = false;
    node->frame = std::move(frame);
    node->offset = offset;
    node->direction = std::move(direction);
    node->plus = std::move(plus_child);
    node->minus = std::move(minus_child);
    return node;
}

std::unique_ptr<YaoYaoNode> YaoYaoNode::clone() const {
    auto node = std::make_unique<YaoYaoNode>();
    node->is_leaf = is_leaf;
    node->frame = frame;
    node->offset = offset;
    node->direction = direction;
    if (plus) node->plus = plus->clone();
    if (minus) node->minus = minus->clone();
    return node;
}

YaoYaoTree YaoYaoTree::clone() const {
    YaoYaoTree t;
    t.center = center;
    t.root = root ? root->clone() : nullptr;
    return t;
}

namespace {

// Recursive structural check against the shared center and the parent
// split's hyperplane.
void validate_node(const YaoYaoNode& node, const Vec& center, bool at_root, int expected_dim,
                   const AffineFrame* parent_frame, double parent_offset) {
    if (node.is_leaf) {
        if (expected_dim != 0) throw MalformedTree("leaf at nonzero remaining dimension");
        return;
    }
    if (expected_dim == 0) throw MalformedTree("split below full depth");
    const AffineFrame& f = node.frame;
    const int n = static_cast<int>(center.size());
    if (f.ambient_dim() != n) throw MalformedTree("frame ambient dimension mismatch");
    if (f.subspace_dim() != expected_dim) throw MalformedTree("frame rank does not match depth");
    if (!frame_is_orthonormal(f)) throw MalformedTree("frame axes are not orthonormal");

    if (!at_root) {
        // The frame must describe the parent split's hyperplane.
        const Vec& u = parent_frame->axes.back();
        const Vec rel = sub(f.origin, parent_frame->origin);
        if (std::fabs(dot(rel, u) - parent_offset) > kMembershipTol)
            throw MalformedTree("child frame origin is not on the parent hyperplane");
        if (norm(reject_from_span(rel, parent_frame->axes)) > kMembershipTol)
            throw MalformedTree("child frame origin leaves the parent subspace");
        for (const Vec& a : f.axes) {
            if (std::fabs(dot(a, u)) > kMembershipTol)
                throw MalformedTree("child frame axis leaves the parent hyperplane");
            if (norm(reject_from_span(a, parent_frame->axes)) > kMembershipTol)
                throw MalformedTree("child frame axis leaves the parent subspace");
        }
    }

    // Shared center must lie on this split's hyperplane.
    if (std::fabs(dot(sub(center, f.origin), f.axes.back()) - node.offset) > kMembershipTol)
        throw MalformedTree("center is not on a split hyperplane");
    if (norm(reject_from_span(sub(center, f.origin), f.axes)) > kMembershipTol)
        throw MalformedTree("center leaves a split subspace");

    // Direction lives in the subspace but escapes the hyperplane.
    if (static_cast<int>(node.direction.size()) != n)
        throw MalformedTree("direction dimension mismatch");
    const double dnorm = norm(node.direction);
    if (dnorm <= kMembershipTol) throw MalformedTree("zero split direction");
    if (norm(reject_from_span(node.direction, f.axes)) > kMembershipTol * dnorm)
        throw MalformedTree("direction leaves the split subspace");
    if (std::fabs(dot(node.direction, f.axes.back())) <= kMembershipTol * dnorm)
        throw MalformedTree("direction lies in the split hyperplane");

    if (!node.plus || !node.minus) throw MalformedTree("split with missing child");
    validate_node(*node.plus, center, false, expected_dim - 1, &f, node.offset);
    validate_node(*node.minus, center, false, expected_dim - 1, &f, node.offset);
}

} // namespace

void validate_tree(const YaoYaoTree& tree) {
    const int n = tree.dim();
    check_dimension(n);
    if (!tree.root) throw MalformedTree("empty tree");
    validate_node(*tree.root, tree.center, true, n, nullptr, 0.0);
}

namespace {

std::unique_ptr<YaoYaoNode> axis_node(const Vec& center, int depth) {
    const int n = static_cast<int>(center.size());
    const int d = n - depth; // remaining dimension at this node
    if (d == 0) return YaoYaoNode::leaf();
    AffineFrame frame;
    frame.origin = Vec(static_cast<std::size_t>(n), 0.0);
    // Frame of the intersection of previous split hyperplanes: axes e_1..e_d,
    // origin carrying the already-fixed trailing coordinates of the center.
    for (int i = d; i < n; ++i) frame.origin[static_cast<std::size_t>(i)] = center[static_cast<std::size_t>(i)];
    for (int i = 0; i < d; ++i) frame.axes.push_back(unit_vector(n, i));
    auto plus = axis_node(center, depth + 1);
    auto minus = axis_node(center, depth + 1);
    return YaoYaoNode::split(std::move(frame), center[static_cast<std::size_t>(d - 1)],
                             unit_vector(n, d - 1), std::move(plus), std::move(minus));
}

} // namespace

YaoYaoTree axis_aligned_tree(const Vec& center) {
    check_dimension(static_cast<int>(center.size()));
    YaoYaoTree tree;
    tree.center = center;
    tree.root = axis_node(center, 0);
    return tree;
}

namespace {

void collect_generators(const YaoYaoNode& node, std::vector<Vec>& prefix,
                        std::vector<std::vector<Vec>>& out) {
    if (node.is_leaf) {
        out.push_back(prefix);
        return;
    }
    prefix.push_back(node.direction);
    collect_generators(*node.plus, prefix, out);
    prefix.back() = scale(node.direction, -1.0);
    collect_generators(*node.minus, prefix, out);
    prefix.pop_back();
}

} // namespace

std::vector<SimplicialCone> leaf_cones(const YaoYaoTree& tree) {
    validate_tree(tree);
    std::vector<std::vector<Vec>> generator_lists;
    std::vector<Vec> prefix;
    collect_generators(*tree.root, prefix, generator_lists);
    std::vector<SimplicialCone> cones;
    cones.reserve(generator_lists.size());
    for (const auto& gens : generator_lists)
        cones.push_back(cone_from_basis(tree.center, Mat::from_columns(gens)));
    return cones;
}

int support_cone(const YaoYaoTree& tree, const AffineForm& form) {
    validate_tree(tree);
    if (static_cast<int>(form.normal.size()) != tree.dim())
        throw DimensionMismatch("form dimension does not match tree");
    if (norm(form.normal) == 0.0) throw ZeroNormal();
    if (std::fabs(form(tree.center)) > kMembershipTol) throw FormNotCentered();

    int index = 0;
    const YaoYaoNode* node = tree.root.get();
    int remaining = tree.dim();
    while (!node->is_leaf) {
        const double value = form(add(tree.center, node->direction));
        const int leaves_per_child = 1 << (remaining - 1);
        if (value >= 0.0) {
            node = node->plus.get();
        } else {
            index += leaves_per_child;
            node = node->minus.get();
        }
        --remaining;
    }
    return index;
}

Certificate partition_cover_check(const std::vector<SimplicialCone>& cones, int samples,
                                  std::uint64_t seed) {
    if (cones.empty()) throw DimensionMismatch("no cones given");
    const Vec& apex = cones.front().apex();
    for (const auto& c : cones) {
        if (c.dim() != cones.front().dim())
            throw DimensionMismatch("cones have mixed dimensions");
        if (norm(sub(c.apex(), apex)) > 1e-12)
            throw DimensionMismatch("cones do not share an apex");
    }

    Rng rng(seed);
    int covered = 0;
    int overlaps = 0;
    for (int s = 0; s < samples; ++s) {
        const Vec x = rng.in_ball(apex, kSampleRadius);
        int hit = 0;
        int interior = 0;
        for (const auto& c : cones) {
            if (cone_contains(c, x, kMembershipTol)) ++hit;
            if (cone_contains(c, x, -kMembershipTol)) ++interior;
        }
        if (hit > 0) ++covered;
        if (interior >= 2) ++overlaps;
    }

    const double cover_fraction = samples > 0 ? static_cast<double>(covered) / samples : 0.0;
    Certificate cert;
    cert.lhs = (1.0 - cover_fraction) + overlaps;
    cert.rhs = 0.0;
    cert.margin = cert.rhs - cert.lhs;
    cert.passed = covered == samples && overlaps == 0;
    cert.add("cover_fraction", cover_fraction);
    cert.add("overlap_count", overlaps);
    cert.add("samples", samples);
    cert.add("seed", static_cast<double>(seed));
    return cert;
}

Certificate dual_partition_check(const YaoYaoTree& tree, int samples, std::uint64_t seed) {
    for (double c : tree.center)
        if (std::fabs(c) > 1e-12) throw NonZeroApex("tree must be centered at the origin");
    const auto cones = leaf_cones(tree);
    std::vector<SimplicialCone> duals;
    duals.reserve(cones.size());
    for (const auto& c : cones)
        duals.push_back(dual_cone(cone_from_basis(Vec(c.apex().size(), 0.0), c.generators())));
    return partition_cover_check(duals, samples, seed);
}

} // namespace santalo
