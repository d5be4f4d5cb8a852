#pragma once

// Rooted combinatorial maps as rotation systems: sigma is the anticlockwise
// successor at each vertex, alpha the edge involution, and phi = sigma o alpha
// the face permutation. With these conventions the phi-orbit of a dart d is
// the face to the RIGHT of d, and the contour d, phi(d), phi^2(d), ... walks
// that face clockwise (interior on the right). The root face, drawn as the
// infinite face, is face_of(root); the co-root face is face_of(alpha(root)).
// The corner between darts e and sigma(e) at their common vertex belongs to
// face_of(sigma(e)). The atomic map has no darts and counts as one vertex and
// one face.
//
// Enumeration builds candidates in a canonical labelling: darts are labelled
// in the order a deterministic traversal from the root discovers them
// (process darts 0, 1, 2, ...; from dart k, first sigma(k), then alpha(k)).
// Exactly one labelling of each rooted map survives this constraint, so maps
// are produced once each, with no isomorphism testing.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

namespace eo {

struct CombMap {
    std::vector<int> sigma, alpha;
    int root = -1; // -1 only for the atomic map

    int darts() const { return int(sigma.size()); }
    bool atomic() const { return sigma.empty(); }
    int edges() const { return darts() / 2; }

    friend bool operator==(const CombMap& a, const CombMap& b) {
        return a.sigma == b.sigma && a.alpha == b.alpha && a.root == b.root;
    }
    friend bool operator<(const CombMap& a, const CombMap& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        if (a.alpha != b.alpha) return a.alpha < b.alpha;
        return a.root < b.root;
    }
};

struct Validation {
    bool ok = true;
    std::string what;
};

// orbit labelling: orbits[d] = id of the orbit of d under `next`, ids in
// order of smallest member
inline int orbit_ids(const std::vector<int>& next, std::vector<int>& orbits) {
    int n = int(next.size());
    orbits.assign(static_cast<size_t>(n), -1);
    int count = 0;
    for (int d = 0; d < n; ++d) {
        if (orbits[size_t(d)] != -1) continue;
        for (int e = d; orbits[size_t(e)] == -1; e = next[size_t(e)]) orbits[size_t(e)] = count;
        ++count;
    }
    return count;
}

inline std::vector<int> phi_perm(const CombMap& m) {
    std::vector<int> phi(static_cast<size_t>(m.darts()));
    for (int d = 0; d < m.darts(); ++d) phi[size_t(d)] = m.sigma[size_t(m.alpha[size_t(d)])];
    return phi;
}

inline int n_vertices(const CombMap& m) {
    if (m.atomic()) return 1;
    std::vector<int> v;
    return orbit_ids(m.sigma, v);
}
inline int n_faces(const CombMap& m) {
    if (m.atomic()) return 1;
    std::vector<int> f;
    auto phi = phi_perm(m);
    return orbit_ids(phi, f);
}

inline Validation validate(const CombMap& m) {
    if (m.atomic()) {
        if (m.root != -1) return {false, "atomic map with a root dart"};
        return {true, ""};
    }
    int n = m.darts();
    if (n % 2 != 0 || int(m.alpha.size()) != n) return {false, "dart arrays inconsistent"};
    if (m.root < 0 || m.root >= n) return {false, "root out of range"};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int d = 0; d < n; ++d) {
        int s = m.sigma[size_t(d)];
        if (s < 0 || s >= n) return {false, "sigma not a permutation"};
        if (seen[size_t(s)]) return {false, "sigma not a permutation"};
        seen[size_t(s)] = 1;
    }
    for (int d = 0; d < n; ++d) {
        int a = m.alpha[size_t(d)];
        if (a < 0 || a >= n || a == d) return {false, "alpha with a fixed point"};
        if (m.alpha[size_t(a)] != d) return {false, "alpha not an involution"};
    }
    // transitivity: the group generated by sigma and alpha must act
    // transitively on darts
    std::vector<char> reach(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    reach[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int d = stack.back();
        stack.pop_back();
        for (int e : {m.sigma[size_t(d)], m.alpha[size_t(d)]})
            if (!reach[size_t(e)]) {
                reach[size_t(e)] = 1;
                ++cnt;
                stack.push_back(e);
            }
    }
    if (cnt != n) return {false, "dart set not connected"};
    if (n_vertices(m) - m.edges() + n_faces(m) != 2) return {false, "genus-0 violation"};
    return {true, ""};
}

inline std::vector<int> vertex_of(const CombMap& m) {
    std::vector<int> v;
    orbit_ids(m.sigma, v);
    return v;
}
inline std::vector<int> face_of(const CombMap& m) {
    std::vector<int> f;
    auto phi = phi_perm(m);
    orbit_ids(phi, f);
    return f;
}
inline std::vector<int> vertex_degrees(const CombMap& m) {
    auto v = vertex_of(m);
    std::vector<int> deg(static_cast<size_t>(n_vertices(m)), 0);
    for (int d = 0; d < m.darts(); ++d) ++deg[size_t(v[size_t(d)])];
    return deg;
}
inline std::vector<int> face_degrees(const CombMap& m) {
    auto f = face_of(m);
    std::vector<int> deg(static_cast<size_t>(n_faces(m)), 0);
    for (int d = 0; d < m.darts(); ++d) ++deg[size_t(f[size_t(d)])];
    return deg;
}

// ---- canonical relabelling ------------------------------------------------

// the traversal order used by the enumerator; pi[old dart] = new label
inline std::vector<int> canonical_order(const CombMap& m) {
    int n = m.darts();
    std::vector<int> pi(static_cast<size_t>(n), -1), by_label(static_cast<size_t>(n), -1);
    int next = 0;
    pi[size_t(m.root)] = next;
    by_label[0] = m.root;
    ++next;
    for (int k = 0; k < n; ++k) {
        int d = by_label[size_t(k)];
        if (d < 0) throw std::logic_error("canonical_order: disconnected map");
        for (int e : {m.sigma[size_t(d)], m.alpha[size_t(d)]})
            if (pi[size_t(e)] == -1) {
                pi[size_t(e)] = next;
                by_label[size_t(next)] = e;
                ++next;
            }
    }
    return pi;
}

inline CombMap relabel(const CombMap& m, const std::vector<int>& pi) {
    CombMap r;
    r.sigma.assign(static_cast<size_t>(m.darts()), -1);
    r.alpha.assign(static_cast<size_t>(m.darts()), -1);
    for (int d = 0; d < m.darts(); ++d) {
        r.sigma[size_t(pi[size_t(d)])] = pi[size_t(m.sigma[size_t(d)])];
        r.alpha[size_t(pi[size_t(d)])] = pi[size_t(m.alpha[size_t(d)])];
    }
    r.root = pi[size_t(m.root)];
    return r;
}

inline CombMap canonical_form(const CombMap& m) {
    if (m.atomic()) return m;
    return relabel(m, canonical_order(m));
}

// ---- enumeration ------------------------------------------------------------

struct EnumOptions {
    std::vector<long> allowed_degrees; // empty = no constraint
    bool planar_only = true;
};

namespace detail {

class MapEnumerator {
public:
    MapEnumerator(long edges, const std::function<void(const CombMap&)>& emit, const EnumOptions& opt)
        : n_(2 * edges), emit_(emit), opt_(opt) {
        max_deg_ = 0;
        for (long d : opt.allowed_degrees) max_deg_ = std::max(max_deg_, d);
        sigma_.assign(static_cast<size_t>(n_), -1);
        alpha_.assign(static_cast<size_t>(n_), -1);
        sigma_pre_.assign(static_cast<size_t>(n_), -1);
    }

    void run() {
        if (n_ == 0) {
            CombMap m; // atomic
            if (degree_ok_atomic()) emit_(m);
            return;
        }
        next_fresh_ = 1;
        rec(0);
    }

private:
    bool degree_ok_atomic() const {
        if (opt_.allowed_degrees.empty()) return true;
        return std::find(opt_.allowed_degrees.begin(), opt_.allowed_degrees.end(), 0L) !=
               opt_.allowed_degrees.end();
    }

    // length of the sigma-chain through d and its head (the end with no
    // preimage); chains are short, walking is fine
    int chain_head(int d) const {
        int h = d;
        while (sigma_pre_[size_t(h)] != -1) h = sigma_pre_[size_t(h)];
        return h;
    }
    int chain_len_from(int h) const {
        int len = 1;
        for (int d = h; sigma_[size_t(d)] != -1; d = sigma_[size_t(d)]) ++len;
        return len;
    }

    void rec(int k) {
        if (k == n_) {
            if (next_fresh_ != n_) return;
            finish();
            return;
        }
        // dart k must have been discovered by an earlier dart, otherwise the
        // assignment is disconnected (and not in discovery order)
        if (k >= next_fresh_) return;
        // sigma[k]: either an already-discovered chain head, or a fresh dart
        for (int j = 0; j <= next_fresh_; ++j) {
            bool fresh = (j == next_fresh_);
            if (fresh) {
                if (j >= n_) break;
            } else {
                if (sigma_pre_[size_t(j)] != -1) continue;
            }
            // degree bookkeeping: closing the cycle through k fixes a vertex
            // degree; merging two chains bounds it from below
            if (!opt_.allowed_degrees.empty()) {
                int head = chain_head(k);
                if (!fresh && head == j) {
                    long len = chain_len_from(head); // closes: k is the tail
                    if (std::find(opt_.allowed_degrees.begin(), opt_.allowed_degrees.end(), len) ==
                        opt_.allowed_degrees.end())
                        continue;
                } else {
                    long len = chain_len_from(head) + (fresh ? 1 : chain_len_from(j));
                    if (len > max_deg_) continue;
                }
            }
            sigma_[size_t(k)] = j;
            sigma_pre_[size_t(j)] = k;
            if (fresh) ++next_fresh_;
            descend_alpha(k);
            if (fresh) --next_fresh_;
            sigma_[size_t(k)] = -1;
            sigma_pre_[size_t(j)] = -1;
        }
    }

    void descend_alpha(int k) {
        if (alpha_[size_t(k)] != -1) {
            rec(k + 1);
            return;
        }
        for (int m = k + 1; m <= next_fresh_; ++m) {
            bool fresh = (m == next_fresh_);
            if (fresh) {
                if (m >= n_) break;
            } else {
                if (alpha_[size_t(m)] != -1) continue;
            }
            alpha_[size_t(k)] = m;
            alpha_[size_t(m)] = k;
            if (fresh) ++next_fresh_;
            rec(k + 1);
            if (fresh) --next_fresh_;
            alpha_[size_t(k)] = -1;
            alpha_[size_t(m)] = -1;
        }
    }

    void finish() {
        CombMap m;
        m.sigma = sigma_;
        m.alpha = alpha_;
        m.root = 0;
        if (opt_.planar_only) {
            std::vector<int> tmp;
            int V = orbit_ids(m.sigma, tmp);
            auto phi = phi_perm(m);
            int F = orbit_ids(phi, tmp);
            if (V - m.edges() + F != 2) return;
        }
        emit_(m);
    }

    int n_;
    const std::function<void(const CombMap&)>& emit_;
    EnumOptions opt_;
    long max_deg_ = 0;
    std::vector<int> sigma_, alpha_, sigma_pre_;
    int next_fresh_ = 1;
};

} // namespace detail

inline void enumerate_rooted_maps(long edges, const std::function<void(const CombMap&)>& emit,
                                  const EnumOptions& opt = {}) {
    if (edges < 0) throw std::invalid_argument("enumerate_rooted_maps: negative edge count");
    detail::MapEnumerator(edges, emit, opt).run();
}

inline long count_rooted_maps(long edges, const EnumOptions& opt = {}) {
    long c = 0;
    enumerate_rooted_maps(edges, [&](const CombMap&) { ++c; }, opt);
    return c;
}

// ---- orientations -----------------------------------------------------------

// Edges are indexed by their smaller dart, in increasing order. dir = +1
// orients the edge out of that dart, -1 out of the other, 0 leaves it
// unoriented.
inline std::vector<int> edge_reps(const CombMap& m) {
    std::vector<int> reps;
    for (int d = 0; d < m.darts(); ++d)
        if (d < m.alpha[size_t(d)]) reps.push_back(d);
    return reps;
}
inline std::vector<int> edge_index(const CombMap& m) {
    std::vector<int> idx(static_cast<size_t>(m.darts()), -1);
    auto reps = edge_reps(m);
    for (size_t e = 0; e < reps.size(); ++e) {
        idx[size_t(reps[e])] = int(e);
        idx[size_t(m.alpha[size_t(reps[e])])] = int(e);
    }
    return idx;
}

struct Orientation {
    CombMap base;
    std::vector<int8_t> dir; // per edge, indexed as in edge_reps

    // the tail dart of an oriented edge
    int tail(int e) const {
        auto reps = edge_reps(base);
        return dir[size_t(e)] > 0 ? reps[size_t(e)] : base.alpha[size_t(reps[size_t(e)])];
    }
    friend bool operator==(const Orientation& a, const Orientation& b) {
        return a.base == b.base && a.dir == b.dir;
    }
    friend bool operator<(const Orientation& a, const Orientation& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        return a.dir < b.dir;
    }
};

enum class OrientMode { Total, Partial, QuarticRootForced };

// every vertex must have as many outgoing as incoming darts among the
// oriented edges; Total forces every edge oriented and the root dart to be a
// tail, Partial allows unoriented edges and frees the root.
inline void enumerate_eulerian_orientations(const CombMap& m, OrientMode mode,
                                            const std::function<void(const Orientation&)>& emit) {
    if (m.atomic()) {
        if (mode != OrientMode::QuarticRootForced) emit(Orientation{m, {}});
        return;
    }
    if (mode == OrientMode::QuarticRootForced) {
        for (int d : vertex_degrees(m))
            if (d != 4) throw std::invalid_argument("orientation count: map is not quartic");
    }
    auto vmap = vertex_of(m);
    auto reps = edge_reps(m);
    int E = int(reps.size());
    std::vector<int> balance(static_cast<size_t>(n_vertices(m)), 0); // out minus in
    std::vector<int8_t> dir(static_cast<size_t>(E), 0);
    bool partial = (mode == OrientMode::Partial);
    int root_edge = -1;
    {
        auto idx = edge_index(m);
        root_edge = idx[size_t(m.root)];
    }
    std::function<void(int)> rec = [&](int e) {
        if (e == E) {
            for (int b : balance)
                if (b != 0) return;
            emit(Orientation{m, dir});
            return;
        }
        int d = reps[size_t(e)], a = m.alpha[size_t(d)];
        int vt = vmap[size_t(d)], vh = vmap[size_t(a)];
        auto attempt = [&](int8_t way) {
            // way +1: tail d; way -1: tail a; 0: unoriented
            dir[size_t(e)] = way;
            if (way != 0) {
                int t = way > 0 ? vt : vh, h = way > 0 ? vh : vt;
                ++balance[size_t(t)];
                --balance[size_t(h)];
                rec(e + 1);
                --balance[size_t(t)];
                ++balance[size_t(h)];
            } else {
                rec(e + 1);
            }
            dir[size_t(e)] = 0;
        };
        if (!partial && e == root_edge) {
            attempt(d == m.root ? int8_t(1) : int8_t(-1));
            return;
        }
        attempt(1);
        attempt(-1);
        if (partial) attempt(0);
    };
    rec(0);
}

inline long count_eulerian_orientations(const CombMap& m, OrientMode mode) {
    long c = 0;
    enumerate_eulerian_orientations(m, mode, [&](const Orientation&) { ++c; });
    return c;
}

// ---- duality ----------------------------------------------------------------

// dual rotation system: sigma* = (sigma alpha)^{-1}, same alpha, same root
// dart. Applying it twice gives the same map rerooted at alpha(root), so the
// operation has order four, matching the usual picture of dualizing a rooted
// planar map.
inline CombMap dual(const CombMap& m) {
    if (m.atomic()) return m;
    CombMap d;
    d.sigma.assign(static_cast<size_t>(m.darts()), -1);
    d.alpha = m.alpha;
    d.root = m.root;
    auto phi = phi_perm(m);
    for (int x = 0; x < m.darts(); ++x) d.sigma[size_t(phi[size_t(x)])] = x;
    return d;
}

struct LabelledMap {
    CombMap base;
    std::vector<long> label; // per vertex id of base

    friend bool operator==(const LabelledMap& a, const LabelledMap& b) {
        return a.base == b.base && a.label == b.label;
    }
    friend bool operator<(const LabelledMap& a, const LabelledMap& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        return a.label < b.label;
    }
};

// allow_flat admits increment-0 edges (used by the image of the degree-two
// contraction); a plain labelled map has all increments +-1 and root edge
// going from label 0 to label 1
inline Validation validate_labelled(const LabelledMap& lm, bool allow_flat = false) {
    Validation v = validate(lm.base);
    if (!v.ok) return v;
    if (lm.base.atomic()) {
        if (lm.label.size() != 1 || lm.label[0] != 0) return {false, "atomic label must be 0"};
        return {true, ""};
    }
    auto vm = vertex_of(lm.base);
    if (lm.label.size() != size_t(n_vertices(lm.base))) return {false, "label count mismatch"};
    for (int d = 0; d < lm.base.darts(); ++d) {
        long inc = lm.label[size_t(vm[size_t(lm.base.alpha[size_t(d)])])] - lm.label[size_t(vm[size_t(d)])];
        if (inc != 1 && inc != -1 && !(allow_flat && inc == 0)) return {false, "edge increment out of range"};
    }
    if (lm.label[size_t(vm[size_t(lm.base.root)])] != 0) return {false, "root tail label not 0"};
    long head = lm.label[size_t(vm[size_t(lm.base.alpha[size_t(lm.base.root)])])];
    if (!allow_flat && head != 1) return {false, "root head label not 1"};
    return {true, ""};
}

// vertices all of whose neighbours carry a strictly larger label
inline long count_local_minima(const LabelledMap& lm) {
    if (lm.base.atomic()) return 1;
    auto vm = vertex_of(lm.base);
    int V = n_vertices(lm.base);
    std::vector<char> is_min(static_cast<size_t>(V), 1);
    for (int d = 0; d < lm.base.darts(); ++d) {
        long mine = lm.label[size_t(vm[size_t(d)])];
        long other = lm.label[size_t(vm[size_t(lm.base.alpha[size_t(d)])])];
        if (other <= mine) is_min[size_t(vm[size_t(d)])] = 0;
    }
    long c = 0;
    for (int v = 0; v < V; ++v) c += is_min[size_t(v)];
    return c;
}

inline LabelledMap canonical_form(const LabelledMap& lm) {
    if (lm.base.atomic()) return lm;
    auto pi = canonical_order(lm.base);
    LabelledMap out;
    out.base = relabel(lm.base, pi);
    auto vold = vertex_of(lm.base);
    auto vnew = vertex_of(out.base);
    out.label.assign(static_cast<size_t>(n_vertices(out.base)), 0);
    for (int d = 0; d < lm.base.darts(); ++d)
        out.label[size_t(vnew[size_t(pi[size_t(d)])])] = lm.label[size_t(vold[size_t(d)])];
    return out;
}

inline Orientation canonical_form(const Orientation& o) {
    if (o.base.atomic()) return o;
    auto pi = canonical_order(o.base);
    Orientation out;
    out.base = relabel(o.base, pi);
    auto reps_old = edge_reps(o.base);
    auto idx_new = edge_index(out.base);
    out.dir.assign(o.dir.size(), 0);
    for (size_t e = 0; e < reps_old.size(); ++e) {
        if (o.dir[e] == 0) continue;
        int tail_old = o.dir[e] > 0 ? reps_old[e] : o.base.alpha[size_t(reps_old[e])];
        int tail_new = pi[size_t(tail_old)];
        int enew = idx_new[size_t(tail_new)];
        auto reps_new = edge_reps(out.base);
        out.dir[size_t(enew)] = (reps_new[size_t(enew)] == tail_new) ? 1 : -1;
    }
    return out;
}

// Total Eulerian orientations of M correspond to labellings of the dual map:
// crossing an oriented edge from its right side to its left side raises the
// label by one, and the dual root vertex (the root face of M) gets label 0,
// which puts the dual root edge between labels 0 and 1.
inline LabelledMap orientation_duality(const Orientation& o) {
    const CombMap& m = o.base;
    if (m.atomic()) return LabelledMap{m, {0}};
    CombMap dm = dual(m);
    auto fm = face_of(m); // = vertex ids of dm up to renumbering below
    auto vdm = vertex_of(dm);
    // face orbit id -> dual vertex id: via any dart
    int F = n_faces(m);
    std::vector<int> face_to_v(static_cast<size_t>(F), -1);
    for (int d = 0; d < m.darts(); ++d) face_to_v[size_t(fm[size_t(d)])] = vdm[size_t(d)];
    // propagate labels: left(tail dart) = right(tail dart) + 1
    std::vector<std::optional<long>> lab(static_cast<size_t>(F));
    lab[size_t(fm[size_t(m.root)])] = 0;
    auto reps = edge_reps(m);
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t e = 0; e < reps.size(); ++e) {
            if (o.dir[e] == 0) throw std::invalid_argument("orientation_duality: unoriented edge");
            int t = o.dir[e] > 0 ? reps[e] : m.alpha[size_t(reps[e])];
            int f_right = fm[size_t(t)], f_left = fm[size_t(m.alpha[size_t(t)])];
            if (lab[size_t(f_right)] && !lab[size_t(f_left)]) {
                lab[size_t(f_left)] = *lab[size_t(f_right)] + 1;
                changed = true;
            } else if (!lab[size_t(f_right)] && lab[size_t(f_left)]) {
                lab[size_t(f_right)] = *lab[size_t(f_left)] - 1;
                changed = true;
            } else if (lab[size_t(f_right)] && lab[size_t(f_left)] &&
                       *lab[size_t(f_left)] != *lab[size_t(f_right)] + 1) {
                throw std::logic_error("orientation_duality: inconsistent height function");
            }
        }
    }
    LabelledMap out;
    out.base = dm;
    out.label.assign(static_cast<size_t>(n_vertices(dm)), 0);
    for (int f = 0; f < F; ++f) {
        if (!lab[size_t(f)]) throw std::logic_error("orientation_duality: face not reached");
        out.label[size_t(face_to_v[size_t(f)])] = *lab[size_t(f)];
    }
    Validation v = validate_labelled(out);
    if (!v.ok) throw std::logic_error("orientation_duality: " + v.what);
    return out;
}

// exact inverse: the base is recovered by three more dualizations (duality
// has order four on the nose), the orientation by reading the labels across
// each edge
inline Orientation orientation_duality_inverse(const LabelledMap& lm) {
    CombMap m = dual(dual(dual(lm.base)));
    auto fm = face_of(m);
    auto vb = vertex_of(lm.base);
    // faces of m and vertices of lm.base are the same dart orbits
    auto reps = edge_reps(m);
    Orientation o;
    o.base = m;
    o.dir.assign(reps.size(), 0);
    for (size_t e = 0; e < reps.size(); ++e) {
        int d = reps[e], a = m.alpha[size_t(d)];
        long f_right = lm.label[size_t(vb[size_t(d)])];
        long f_left = lm.label[size_t(vb[size_t(a)])];
        if (f_left == f_right + 1)
            o.dir[e] = 1;
        else if (f_right == f_left + 1)
            o.dir[e] = -1;
        else
            throw std::invalid_argument("orientation_duality_inverse: increments not +-1");
    }
    (void)fm;
    return o;
}

// ---- labelled map enumeration ----------------------------------------------

// all labellings of a fixed planar map with root tail 0 and increments +-1
// (root edge forced 0 -> 1 unless allow_any_root_increment)
inline void enumerate_labellings(const CombMap& m, const std::function<void(const LabelledMap&)>& emit) {
    if (m.atomic()) {
        emit(LabelledMap{m, {0}});
        return;
    }
    auto vm = vertex_of(m);
    int V = n_vertices(m);
    auto reps = edge_reps(m);
    // order edges so each new edge touches an already-labelled vertex
    std::vector<int> order;
    {
        std::vector<char> vlab(static_cast<size_t>(V), 0), used(reps.size(), 0);
        vlab[size_t(vm[size_t(m.root)])] = 1;
        for (size_t step = 0; step < reps.size(); ++step) {
            bool found = false;
            for (size_t e = 0; e < reps.size(); ++e) {
                if (used[e]) continue;
                int vt = vm[size_t(reps[e])], vh = vm[size_t(m.alpha[size_t(reps[e])])];
                if (vlab[size_t(vt)] || vlab[size_t(vh)]) {
                    used[e] = 1;
                    vlab[size_t(vt)] = vlab[size_t(vh)] = 1;
                    order.push_back(int(e));
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("enumerate_labellings: disconnected map");
        }
    }
    std::vector<std::optional<long>> lab(static_cast<size_t>(V));
    lab[size_t(vm[size_t(m.root)])] = 0;
    int root_edge = edge_index(m)[size_t(m.root)];
    std::function<void(size_t)> rec = [&](size_t step) {
        if (step == order.size()) {
            LabelledMap lm;
            lm.base = m;
            lm.label.assign(static_cast<size_t>(V), 0);
            for (int v = 0; v < V; ++v) lm.label[size_t(v)] = *lab[size_t(v)];
            emit(lm);
            return;
        }
        int e = order[step];
        int dt = reps[size_t(e)], dh = m.alpha[size_t(dt)];
        int vt = vm[size_t(dt)], vh = vm[size_t(dh)];
        auto try_inc = [&](long inc) {
            // label[vh] = label[vt] + inc along the representative dart
            if (e == root_edge) {
                // force 0 -> 1 along the root dart
                long want = (dt == m.root) ? 1 : -1;
                if (inc != want) return;
            }
            if (lab[size_t(vt)] && lab[size_t(vh)]) {
                if (*lab[size_t(vh)] - *lab[size_t(vt)] == inc) rec(step + 1);
            } else if (lab[size_t(vt)]) {
                lab[size_t(vh)] = *lab[size_t(vt)] + inc;
                rec(step + 1);
                lab[size_t(vh)].reset();
            } else {
                lab[size_t(vt)] = *lab[size_t(vh)] - inc;
                rec(step + 1);
                lab[size_t(vt)].reset();
            }
        };
        try_inc(1);
        try_inc(-1);
    };
    rec(0);
}

inline void enumerate_labelled_maps(long edges, const std::function<void(const LabelledMap&)>& emit) {
    enumerate_rooted_maps(edges, [&](const CombMap& m) { enumerate_labellings(m, emit); });
}

// ---- Tutte polynomial --------------------------------------------------------

struct Multigraph {
    int V = 0;
    std::vector<std::pair<int, int>> e;
};

inline Multigraph underlying_graph(const CombMap& m) {
    Multigraph g;
    g.V = n_vertices(m);
    auto vm = vertex_of(m);
    for (int d : edge_reps(m)) g.e.push_back({vm[size_t(d)], vm[size_t(m.alpha[size_t(d)])]});
    return g;
}

namespace detail {

inline int graph_components(const Multigraph& g, int skip_edge) {
    std::vector<int> parent(static_cast<size_t>(g.V));
    for (int i = 0; i < g.V; ++i) parent[size_t(i)] = i;
    std::function<int(int)> find = [&](int x) { return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]); };
    for (size_t i = 0; i < g.e.size(); ++i) {
        if (int(i) == skip_edge) continue;
        parent[size_t(find(g.e[i].first))] = find(g.e[i].second);
    }
    int c = 0;
    for (int i = 0; i < g.V; ++i)
        if (find(i) == i) ++c;
    return c;
}

} // namespace detail

inline Integer tutte_eval(const Multigraph& g, long x, long y) {
    // find a non-loop edge; classify as bridge or ordinary
    for (size_t i = 0; i < g.e.size(); ++i) {
        auto [u, v] = g.e[i];
        if (u == v) continue;
        Multigraph del = g;
        del.e.erase(del.e.begin() + long(i));
        bool bridge = detail::graph_components(g, int(i)) != detail::graph_components(g, -1);
        Multigraph con;
        con.V = g.V - 1;
        // contract: relabel v to u, shift ids above v down
        for (size_t k = 0; k < g.e.size(); ++k) {
            if (k == i) continue;
            auto [a, b] = g.e[k];
            if (a == v) a = u;
            if (b == v) b = u;
            if (a > v) --a;
            if (b > v) --b;
            con.e.push_back({a, b});
        }
        if (bridge) return Integer(x) * tutte_eval(con, x, y);
        return tutte_eval(del, x, y) + tutte_eval(con, x, y);
    }
    // only loops remain
    Integer r(1);
    for (size_t i = 0; i < g.e.size(); ++i) r *= Integer(y);
    return r;
}

inline Integer tutte_sum_33(long edges) {
    Integer total(0);
    enumerate_rooted_maps(edges, [&](const CombMap& m) { total += tutte_eval(underlying_graph(m), 3, 3); });
    return total;
}

// ---- signed forests ----------------------------------------------------------

// Sum over planar quartic rooted maps with n_faces + 1 faces and over
// spanning forests avoiding the root edge of (-1)^{components - 1}. A forest
// is an acyclic edge subset; components include isolated vertices.
inline Integer signed_forest_statistic(long n_faces) {
    long V = n_faces - 1; // quartic: F = V + 2, so V = (n_faces + 1) - 2
    if (V < 1) throw std::invalid_argument("signed_forest_statistic: need at least 3 faces");
    long E = 2 * V;
    Integer total(0);
    EnumOptions opt;
    opt.allowed_degrees = {4};
    enumerate_rooted_maps(E, [&](const CombMap& m) {
        Multigraph g = underlying_graph(m);
        int root_edge = edge_index(m)[size_t(m.root)];
        // enumerate acyclic subsets of the other edges
        std::vector<int> chosen;
        std::function<void(int)> rec = [&](int e) {
            if (e == int(g.e.size())) {
                long comps = g.V - long(chosen.size());
                total += ((comps - 1) % 2 == 0) ? Integer(1) : Integer(-1);
                return;
            }
            rec(e + 1); // skip edge e
            if (e == root_edge) return;
            auto [u, v] = g.e[size_t(e)];
            if (u == v) return; // loop closes a cycle
            // does adding e close a cycle among chosen edges?
            std::vector<int> parent(static_cast<size_t>(g.V));
            for (int i = 0; i < g.V; ++i) parent[size_t(i)] = i;
            std::function<int(int)> find = [&](int x) {
                return parent[size_t(x)] == x ? x : parent[size_t(x)] = find(parent[size_t(x)]);
            };
            for (int c : chosen) parent[size_t(find(g.e[size_t(c)].first))] = find(g.e[size_t(c)].second);
            if (find(u) == find(v)) return;
            chosen.push_back(e);
            rec(e + 1);
            chosen.pop_back();
        };
        rec(0);
    }, opt);
    return total;
}

// ---- patch counting ----------------------------------------------------------

// A patch is a labelled map whose inner faces are all quadrangles and whose
// outer vertices carry labels 0 and 1 only (the outer face is the one to the
// right of the root dart). Refinements:
//   C: every neighbour of the root vertex is labelled 1 and the root corner
//      is the only corner of the root vertex on the outer face; the atomic
//      map does not qualify. Counted by root-vertex degree.
//   D: inner faces are quadrangles or digons, every digon touches the root
//      vertex, every neighbour of the root vertex is labelled 1. Counted by
//      the number of digons. The atomic map qualifies.
// The colourful variant additionally asks each inner quadrangle to show
// exactly three distinct labels.
struct PatchTables {
    long level_cap = 0;    // cells kept satisfy j + n <= level_cap
    long edge_ceiling = 0; // D counts at digon number k need j + 2n + k <= ceiling
    std::map<std::pair<long, long>, long> p;        // (j, n) -> count
    std::map<std::tuple<long, long, long>, long> c; // (j, n, root degree) -> count
    std::map<std::tuple<long, long, long>, long> d; // (j, n, digons) -> count
};

namespace detail {

struct PatchView {
    bool plain_ok = false, with_digons_ok = false;
    long j = 0, n = 0, digons = 0, root_degree = 0;
    bool neighbours_one = true; // every neighbour of the root vertex labelled 1
    bool c_extra = false;       // neighbours_one plus unique outer corner at root
};

inline PatchView inspect_patch(const LabelledMap& lm, bool colourful) {
    PatchView pv;
    const CombMap& m = lm.base;
    if (m.atomic()) {
        pv.plain_ok = pv.with_digons_ok = true;
        return pv;
    }
    auto vm = vertex_of(m);
    auto fm = face_of(m);
    auto fdeg = face_degrees(m);
    int outer = fm[size_t(m.root)]; // the root face, drawn as the infinite one
    pv.j = fdeg[size_t(outer)] / 2;
    if (fdeg[size_t(outer)] % 2 != 0) return pv; // cannot happen with +-1 labels
    bool quads_only = true, quads_or_digons = true;
    int rootv = vm[size_t(m.root)];
    std::vector<std::vector<int>> face_darts(static_cast<size_t>(n_faces(m)));
    for (int d = 0; d < m.darts(); ++d) face_darts[size_t(fm[size_t(d)])].push_back(d);
    for (int f = 0; f < n_faces(m); ++f) {
        if (f == outer) continue;
        if (fdeg[size_t(f)] == 4) {
            ++pv.n;
            if (colourful) {
                std::vector<long> labs;
                for (int d : face_darts[size_t(f)]) labs.push_back(lm.label[size_t(vm[size_t(d)])]);
                std::sort(labs.begin(), labs.end());
                labs.erase(std::unique(labs.begin(), labs.end()), labs.end());
                if (labs.size() != 3) quads_only = quads_or_digons = false;
            }
        } else if (fdeg[size_t(f)] == 2) {
            quads_only = false;
            ++pv.digons;
            bool touches_root = false;
            for (int d : face_darts[size_t(f)])
                if (vm[size_t(d)] == rootv) touches_root = true;
            if (!touches_root) quads_or_digons = false;
        } else {
            quads_only = quads_or_digons = false;
        }
    }
    for (int d = 0; d < m.darts(); ++d)
        if (fm[size_t(d)] == outer && lm.label[size_t(vm[size_t(d)])] != 0 &&
            lm.label[size_t(vm[size_t(d)])] != 1) {
            quads_only = quads_or_digons = false;
            break;
        }
    pv.plain_ok = quads_only;
    pv.with_digons_ok = quads_or_digons;
    if (!pv.plain_ok && !pv.with_digons_ok) return pv;
    // refinement data
    long outer_corners = 0;
    for (int d = 0; d < m.darts(); ++d) {
        if (vm[size_t(d)] != rootv) continue;
        ++pv.root_degree;
        if (lm.label[size_t(vm[size_t(m.alpha[size_t(d)])])] != 1) pv.neighbours_one = false;
        if (fm[size_t(d)] == outer) ++outer_corners;
    }
    pv.c_extra = pv.neighbours_one && outer_corners == 1;
    return pv;
}

} // namespace detail

inline PatchTables enumerate_patch_tables(bool colourful, long level_cap, long edge_ceiling) {
    PatchTables t;
    t.level_cap = level_cap;
    t.edge_ceiling = edge_ceiling;
    for (long E = 0; E <= edge_ceiling; ++E) {
        enumerate_rooted_maps(E, [&](const CombMap& m) {
            enumerate_labellings(m, [&](const LabelledMap& lm) {
                auto pv = detail::inspect_patch(lm, colourful);
                if (pv.j + pv.n > level_cap) return;
                if (pv.plain_ok && pv.digons == 0) {
                    ++t.p[{pv.j, pv.n}];
                    if (pv.c_extra && !lm.base.atomic()) ++t.c[{pv.j, pv.n, pv.root_degree}];
                }
                if (pv.with_digons_ok && pv.neighbours_one) ++t.d[{pv.j, pv.n, pv.digons}];
            });
        });
    }
    return t;
}

// ---- exchange format --------------------------------------------------------

// one map per line: "E; sigma-cycles; alpha-pairs; root", e.g.
// "2; (0 2 1)(3); (0 1)(2 3); 0". The atomic map is "0; ; ; -1".
inline std::string write_map(const CombMap& m) {
    std::ostringstream os;
    os << m.edges() << "; ";
    if (!m.atomic()) {
        std::vector<char> done(static_cast<size_t>(m.darts()), 0);
        for (int d = 0; d < m.darts(); ++d) {
            if (done[size_t(d)]) continue;
            os << '(';
            bool first = true;
            for (int e = d; !done[size_t(e)]; e = m.sigma[size_t(e)]) {
                done[size_t(e)] = 1;
                if (!first) os << ' ';
                os << e;
                first = false;
            }
            os << ')';
        }
    }
    os << "; ";
    for (int d = 0; d < m.darts(); ++d)
        if (d < m.alpha[size_t(d)]) os << '(' << d << ' ' << m.alpha[size_t(d)] << ')';
    os << "; " << m.root;
    return os.str();
}

inline CombMap read_map(const std::string& line) {
    auto fail = [&]() { throw std::invalid_argument("read_map: cannot parse '" + line + "'"); };
    std::vector<std::string> parts;
    {
        std::string cur;
        for (char ch : line) {
            if (ch == ';') {
                parts.push_back(cur);
                cur.clear();
            } else
                cur += ch;
        }
        parts.push_back(cur);
    }
    if (parts.size() != 4) fail();
    long E = std::stol(parts[0]);
    CombMap m;
    m.sigma.assign(static_cast<size_t>(2 * E), -1);
    m.alpha.assign(static_cast<size_t>(2 * E), -1);
    auto parse_groups = [&](const std::string& s, std::vector<int>& target) {
        std::vector<int> cycle;
        long num = -1;
        bool in_num = false, in_group = false;
        auto flushnum = [&]() {
            if (in_num) cycle.push_back(int(num));
            num = -1;
            in_num = false;
        };
        auto close = [&]() {
            for (size_t i = 0; i < cycle.size(); ++i) {
                int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
                if (from < 0 || from >= 2 * E || target[size_t(from)] != -1) fail();
                target[size_t(from)] = to;
            }
            cycle.clear();
        };
        for (char ch : s) {
            if (ch == '(') {
                in_group = true;
            } else if (ch == ')') {
                flushnum();
                close();
                in_group = false;
            } else if (ch >= '0' && ch <= '9') {
                if (!in_group) fail();
                if (!in_num) num = 0;
                in_num = true;
                num = num * 10 + (ch - '0');
            } else if (ch == ' ') {
                flushnum();
            } else
                fail();
        }
        if (in_group) fail();
    };
    parse_groups(parts[1], m.sigma);
    parse_groups(parts[2], m.alpha);
    m.root = int(std::stol(parts[3]));
    if (E == 0) {
        if (m.root != -1) fail();
        return m;
    }
    Validation v = validate(m);
    if (!v.ok) throw std::invalid_argument("read_map: " + v.what);
    return m;
}

} // namespace eo
