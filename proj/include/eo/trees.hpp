#pragma once

// Tree interpretations of the series t - R and its one-parameter
// deformation R(t,u), plus the signed spanning-forest identity.
//
// Quartic family: rooted plane ternary trees with black and white leaves,
// charge = white - black, balanced = charge 1, counted by white leaves.
// General family: rooted plane binary trees with solid and dashed edges,
// charge = solid - dashed, balanced = charge 0, counted by leaves.
// In both cases t - R counts balanced trees none of whose proper subtrees
// (a non-root non-leaf vertex with all its descendants) is balanced, and
// (R(t,u) - t)/u counts balanced trees with weight (u+1) per proper
// balanced subtree.

#include <functional>
#include <stdexcept>
#include <vector>

#include "closedform.hpp"
#include "maps.hpp"

namespace eo {

// unique series with zero constant term satisfying
// R = t + u * sum_{n>=1} w_n R^{n+1}, where the w_n are the coefficients of
// the hypergeometric series of the family; at u = -1 this is series_R
inline USeries tree_R(Family f, const Rational& u, long order) {
    if (order < 1) throw std::invalid_argument("tree_R: order must be >= 1");
    USeries R = USeries::identity(order);
    // [t^k] of the right side only involves r_j with j < k, so one pass per
    // coefficient suffices
    for (long k = 2; k <= order; ++k) {
        USeries rhs(order);
        USeries pw = R * R;
        for (long n = 1; n + 1 <= order; ++n) {
            rhs = rhs + omega_weight(f, n) * pw;
            if (n + 2 <= order) pw = pw * R;
        }
        R.set_coeff(k, u * rhs.coeff(k));
    }
    return R;
}

namespace detail {

struct TreeNode {
    std::vector<int> kids; // empty iff leaf
    int white = 0;         // leaf colour, quartic family
    int solid = 0;         // colour of the edge to the parent, general family
};

struct PlaneTree {
    std::vector<TreeNode> node; // node 0 is the root
};

// append a copy of src rooted at src node 0 under dst node `parent`
inline void graft(PlaneTree& dst, int parent, const PlaneTree& src) {
    int base = int(dst.node.size());
    for (const auto& nd : src.node) {
        TreeNode copy = nd;
        for (int& k : copy.kids) k += base;
        dst.node.push_back(copy);
    }
    dst.node[size_t(parent)].kids.push_back(base);
}

// all ternary trees with exactly `leaves` leaves, leaves coloured freely
inline std::vector<PlaneTree> ternary_trees(long leaves) {
    std::vector<PlaneTree> out;
    if (leaves == 1) {
        for (int w = 0; w < 2; ++w) {
            PlaneTree t;
            t.node.push_back(TreeNode{});
            t.node[0].white = w;
            out.push_back(t);
        }
        return out;
    }
    for (long a = 1; a <= leaves - 2; ++a)
        for (long b = 1; a + b <= leaves - 1; ++b) {
            long c = leaves - a - b;
            for (const auto& ta : ternary_trees(a))
                for (const auto& tb : ternary_trees(b))
                    for (const auto& tc : ternary_trees(c)) {
                        PlaneTree t;
                        t.node.push_back(TreeNode{});
                        graft(t, 0, ta);
                        graft(t, 0, tb);
                        graft(t, 0, tc);
                        out.push_back(t);
                    }
        }
    return out;
}

// all binary trees with exactly `leaves` leaves, every edge coloured freely
inline std::vector<PlaneTree> binary_trees(long leaves) {
    std::vector<PlaneTree> out;
    if (leaves == 1) {
        PlaneTree t;
        t.node.push_back(TreeNode{});
        out.push_back(t);
        return out;
    }
    for (long a = 1; a <= leaves - 1; ++a) {
        long b = leaves - a;
        for (const auto& ta : binary_trees(a))
            for (const auto& tb : binary_trees(b))
                for (int ca = 0; ca < 2; ++ca)
                    for (int cb = 0; cb < 2; ++cb) {
                        PlaneTree t;
                        t.node.push_back(TreeNode{});
                        graft(t, 0, ta);
                        graft(t, 0, tb);
                        int k1 = t.node[0].kids[0], k2 = t.node[0].kids[1];
                        t.node[size_t(k1)].solid = ca;
                        t.node[size_t(k2)].solid = cb;
                        out.push_back(t);
                    }
    }
    return out;
}

// charge of the subtree at v: white minus black leaves (quartic) or solid
// minus dashed edges strictly below v (general)
inline long subtree_charge(const PlaneTree& t, int v, Family f) {
    long c = 0;
    std::vector<int> stack{v};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        const TreeNode& nd = t.node[size_t(x)];
        if (f == Family::Quartic) {
            if (nd.kids.empty()) c += nd.white ? 1 : -1;
        } else if (x != v) {
            c += nd.solid ? 1 : -1;
        }
        for (int k : nd.kids) stack.push_back(k);
    }
    return c;
}

// number of proper balanced subtrees; -1 when the tree itself is unbalanced
inline long proper_balanced_count(const PlaneTree& t, Family f) {
    long target = (f == Family::Quartic) ? 1 : 0;
    if (subtree_charge(t, 0, f) != target) return -1;
    long b = 0;
    for (int v = 1; v < int(t.node.size()); ++v) {
        if (t.node[size_t(v)].kids.empty()) continue;
        if (subtree_charge(t, v, f) == target) ++b;
    }
    return b;
}

inline std::vector<PlaneTree> balanced_candidates(Family f, long n) {
    // a quartic balanced tree with n white leaves has n-1 black ones
    return (f == Family::Quartic) ? ternary_trees(2 * n - 1) : binary_trees(n);
}

inline long quartic_white_count(const PlaneTree& t) {
    long w = 0;
    for (const auto& nd : t.node)
        if (nd.kids.empty() && nd.white) ++w;
    return w;
}

} // namespace detail

// balanced trees of the given size with no proper balanced subtree; this is
// [t^n](t - R)
inline Integer count_primitive_trees(Family f, long n) {
    if (n < 2) throw std::invalid_argument("count_primitive_trees: n must be >= 2");
    long bound = (f == Family::Quartic) ? 4 : 5;
    if (n > bound) throw std::domain_error("count_primitive_trees: beyond exhaustive bound");
    Integer total(0);
    for (const auto& t : detail::balanced_candidates(f, n)) {
        if (f == Family::Quartic && detail::quartic_white_count(t) != n) continue;
        if (detail::proper_balanced_count(t, f) == 0) total = total + Integer(1);
    }
    return total;
}

// sum of (u+1)^b over balanced trees of the given size, b the number of
// proper balanced subtrees; this is [t^n](R(t,u) - t)/u
inline Rational marked_tree_sum(Family f, long n, const Rational& u) {
    if (n < 2) throw std::invalid_argument("marked_tree_sum: n must be >= 2");
    long bound = (f == Family::Quartic) ? 4 : 5;
    if (n > bound) throw std::domain_error("marked_tree_sum: beyond exhaustive bound");
    Rational total(0);
    Rational w = u + Rational(1);
    for (const auto& t : detail::balanced_candidates(f, n)) {
        if (f == Family::Quartic && detail::quartic_white_count(t) != n) continue;
        long b = detail::proper_balanced_count(t, f);
        if (b < 0) continue;
        Rational term(1);
        for (long i = 0; i < b; ++i) term = term * w;
        total = total + term;
    }
    return total;
}

// Eulerian orientations of quartic maps with n faces are (n+1)/6 times the
// signed number of quartic maps with n+1 faces carrying a spanning forest
// that avoids the root edge; returns the accumulated absolute defect, zero
// when the identity holds on every tested instance
inline Rational check_forest_link(long n_max_index) {
    if (n_max_index > 2) throw std::domain_error("check_forest_link: beyond brute-force reach");
    Rational defect(0);
    for (long idx = 1; idx <= n_max_index; ++idx) {
        long n = idx + 2; // faces on the orientation side
        EnumOptions opt;
        opt.allowed_degrees = {4};
        Integer q(0);
        enumerate_rooted_maps(2 * idx, [&](const CombMap& m) {
            q = q + count_eulerian_orientations(m, OrientMode::QuarticRootForced);
        }, opt);
        Integer s = signed_forest_statistic(n);
        Rational lhs = Rational(Integer(6) * q);
        Rational rhs = Rational(Integer(n + 1) * s);
        Rational diff = lhs - rhs;
        if (diff < Rational(0)) diff = Rational(0) - diff;
        defect = defect + diff;
    }
    return defect;
}

} // namespace eo
