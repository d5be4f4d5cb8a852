#pragma once

// The correspondence between labelled maps and mobile-maps, and its
// specializations to quadrangulations.
//
// A mobile-map is a rooted planar map with black and white vertices in which
// every edge joins a black vertex to a white one, white vertices carry
// integer labels, the root vertex is white with label 1, and around each
// black vertex two neighbours that are consecutive in clockwise order have
// labels ell, m with m >= ell - 1.
//
// Forward construction, one mobile edge per descending dart f of the
// labelled map (a dart whose head label is one less than its tail label):
// the edge joins the white copy of tail(f), attached in the corner just
// clockwise of f, to the black vertex of face_of(f). Around a white vertex
// the mobile edges follow the sigma-order of their descending darts; around
// a black vertex they follow the reverse contour order of the face. The root
// is the mobile edge of alpha(root), taken at its white end (the co-root
// vertex, labelled 1).
//
// Inverse construction: in each face of the mobile-map, with minimal white
// corner label m, a fresh vertex labelled m-1 is added, every white corner
// labelled ell is joined to the next white corner labelled ell-1 in
// anticlockwise order (to the fresh vertex when ell = m), and at each corner
// the outgoing edge is drawn last in clockwise order among the corner's
// edges, incoming edges following their sources' anticlockwise distance.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "maps.hpp"

namespace eo {

struct MobileMap {
    CombMap base;
    std::vector<char> black; // per vertex id
    std::vector<long> label; // per vertex id, 0 on black vertices

    friend bool operator==(const MobileMap& a, const MobileMap& b) {
        return a.base == b.base && a.black == b.black && a.label == b.label;
    }
    friend bool operator<(const MobileMap& a, const MobileMap& b) {
        if (!(a.base == b.base)) return a.base < b.base;
        if (a.black != b.black) return a.black < b.black;
        return a.label < b.label;
    }
};

inline Validation validate_mobile(const MobileMap& M) {
    Validation v = validate(M.base);
    if (!v.ok) return v;
    if (M.base.atomic()) return {false, "mobile-map must have at least one edge"};
    auto vm = vertex_of(M.base);
    int V = n_vertices(M.base);
    if (int(M.black.size()) != V || int(M.label.size()) != V) return {false, "vertex data size mismatch"};
    for (int d = 0; d < M.base.darts(); ++d)
        if (M.black[size_t(vm[size_t(d)])] == M.black[size_t(vm[size_t(M.base.alpha[size_t(d)])])])
            return {false, "edge does not join black to white"};
    int rv = vm[size_t(M.base.root)];
    if (M.black[size_t(rv)]) return {false, "root vertex is black"};
    if (M.label[size_t(rv)] != 1) return {false, "root vertex not labelled 1"};
    // around each black vertex, clockwise-consecutive neighbour labels ell
    // then m must satisfy m >= ell - 1; clockwise at a vertex is the
    // sigma-inverse direction
    std::vector<int> sigma_pre(static_cast<size_t>(M.base.darts()));
    for (int d = 0; d < M.base.darts(); ++d) sigma_pre[size_t(M.base.sigma[size_t(d)])] = d;
    for (int d = 0; d < M.base.darts(); ++d) {
        if (!M.black[size_t(vm[size_t(d)])]) continue;
        long ell = M.label[size_t(vm[size_t(M.base.alpha[size_t(d)])])];
        long m = M.label[size_t(vm[size_t(M.base.alpha[size_t(sigma_pre[size_t(d)])])])];
        if (m < ell - 1) return {false, "black vertex violates the label condition"};
    }
    return {true, ""};
}

inline MobileMap canonical_form(const MobileMap& M) {
    auto pi = canonical_order(M.base);
    MobileMap out;
    out.base = relabel(M.base, pi);
    auto vold = vertex_of(M.base);
    auto vnew = vertex_of(out.base);
    int V = n_vertices(out.base);
    out.black.assign(static_cast<size_t>(V), 0);
    out.label.assign(static_cast<size_t>(V), 0);
    for (int d = 0; d < M.base.darts(); ++d) {
        int a = vold[size_t(d)], b = vnew[size_t(pi[size_t(d)])];
        out.black[size_t(b)] = M.black[size_t(a)];
        out.label[size_t(b)] = M.label[size_t(a)];
    }
    return out;
}

// ---- forward construction ----------------------------------------------------

inline MobileMap phi(const LabelledMap& L) {
    {
        Validation v = validate_labelled(L);
        if (!v.ok) throw std::invalid_argument("phi: " + v.what);
    }
    if (L.base.atomic()) throw std::invalid_argument("phi: needs at least one edge");
    const CombMap& b = L.base;
    auto vm = vertex_of(b);
    auto phiP = phi_perm(b);
    int n = b.darts();
    std::vector<char> desc(static_cast<size_t>(n), 0);
    std::vector<int> idx(static_cast<size_t>(n), -1);
    int K = 0;
    for (int d = 0; d < n; ++d) {
        if (L.label[size_t(vm[size_t(d)])] - 1 == L.label[size_t(vm[size_t(b.alpha[size_t(d)])])]) {
            desc[size_t(d)] = 1;
            idx[size_t(d)] = K++;
        }
    }
    // darts of M: 2k at the white end, 2k+1 at the black end of edge k
    CombMap mb;
    mb.sigma.assign(static_cast<size_t>(2 * K), -1);
    mb.alpha.assign(static_cast<size_t>(2 * K), -1);
    for (int k = 0; k < K; ++k) {
        mb.alpha[size_t(2 * k)] = 2 * k + 1;
        mb.alpha[size_t(2 * k + 1)] = 2 * k;
    }
    // white rotations: descending darts at a vertex, in sigma order
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int d0 = 0; d0 < n; ++d0) {
            if (seen[size_t(d0)]) continue;
            std::vector<int> members;
            for (int d = d0; !seen[size_t(d)]; d = b.sigma[size_t(d)]) {
                seen[size_t(d)] = 1;
                if (desc[size_t(d)]) members.push_back(d);
            }
            for (size_t i = 0; i < members.size(); ++i)
                mb.sigma[size_t(2 * idx[size_t(members[i])])] =
                    2 * idx[size_t(members[(i + 1) % members.size()])];
        }
    }
    // black rotations: descending darts of a face, in reverse contour order
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int d0 = 0; d0 < n; ++d0) {
            if (seen[size_t(d0)]) continue;
            std::vector<int> members;
            for (int d = d0; !seen[size_t(d)]; d = phiP[size_t(d)]) {
                seen[size_t(d)] = 1;
                if (desc[size_t(d)]) members.push_back(d);
            }
            if (members.empty()) throw std::logic_error("phi: face without descending dart");
            for (size_t i = 0; i < members.size(); ++i)
                mb.sigma[size_t(2 * idx[size_t(members[i])] + 1)] =
                    2 * idx[size_t(members[(i + members.size() - 1) % members.size()])] + 1;
        }
    }
    mb.root = 2 * idx[size_t(b.alpha[size_t(b.root)])];
    MobileMap M;
    M.base = mb;
    auto vmm = vertex_of(mb);
    int V = n_vertices(mb);
    M.black.assign(static_cast<size_t>(V), 0);
    M.label.assign(static_cast<size_t>(V), 0);
    for (int d = 0; d < n; ++d) {
        if (!desc[size_t(d)]) continue;
        int k = idx[size_t(d)];
        M.black[size_t(vmm[size_t(2 * k + 1)])] = 1;
        M.label[size_t(vmm[size_t(2 * k)])] = L.label[size_t(vm[size_t(d)])];
    }
    Validation v = validate_mobile(M);
    if (!v.ok) throw std::logic_error("phi produced an invalid mobile-map: " + v.what);
    return M;
}

// ---- inverse construction ----------------------------------------------------

inline LabelledMap psi(const MobileMap& M) {
    {
        Validation v = validate_mobile(M);
        if (!v.ok) throw std::invalid_argument("psi: " + v.what);
    }
    const CombMap& b = M.base;
    auto vm = vertex_of(b);
    auto phiP = phi_perm(b);
    int n = b.darts();
    // Each dart e is a corner (the sector from e to sigma(e)), belonging to
    // the face of sigma(e). List every face's corners in anticlockwise
    // (reverse contour) order.
    std::vector<int> face_of_corner(static_cast<size_t>(n)), pos(static_cast<size_t>(n), -1);
    std::vector<std::vector<int>> acw; // per face, corner darts
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int d0 = 0; d0 < n; ++d0) {
            if (seen[size_t(d0)]) continue;
            std::vector<int> cw;
            for (int d = d0; !seen[size_t(d)]; d = phiP[size_t(d)]) {
                seen[size_t(d)] = 1;
                cw.push_back(b.alpha[size_t(d)]); // corner between d and phi(d)
            }
            std::vector<int> rev(cw.rbegin(), cw.rend());
            int f = int(acw.size());
            for (size_t i = 0; i < rev.size(); ++i) {
                pos[size_t(rev[i])] = int(i);
                face_of_corner[size_t(rev[i])] = f;
            }
            acw.push_back(std::move(rev));
        }
    }
    auto corner_white = [&](int e) { return !M.black[size_t(vm[size_t(e)])]; };
    auto corner_label = [&](int e) { return M.label[size_t(vm[size_t(e)])]; };
    int nF = int(acw.size());
    std::vector<long> face_min(static_cast<size_t>(nF));
    for (int f = 0; f < nF; ++f) {
        bool any = false;
        long mn = 0;
        for (int e : acw[size_t(f)])
            if (corner_white(e)) {
                mn = any ? std::min(mn, corner_label(e)) : corner_label(e);
                any = true;
            }
        if (!any) throw std::logic_error("psi: face without white corner");
        face_min[size_t(f)] = mn;
    }
    // one new edge per white corner; target is a corner or the face centre
    struct Chord {
        int source;
        int target_corner = -1; // or
        int target_face = -1;   // centre of this face
    };
    std::vector<Chord> chords;
    std::vector<int> chord_of(static_cast<size_t>(n), -1);
    for (int f = 0; f < nF; ++f) {
        const auto& cs = acw[size_t(f)];
        int deg = int(cs.size());
        for (int i = 0; i < deg; ++i) {
            int e = cs[size_t(i)];
            if (!corner_white(e)) continue;
            Chord ch;
            ch.source = e;
            long ell = corner_label(e);
            if (ell == face_min[size_t(f)]) {
                ch.target_face = f;
            } else {
                for (int s = 1; s < deg; ++s) {
                    int e2 = cs[size_t((i + s) % deg)];
                    if (corner_white(e2) && corner_label(e2) == ell - 1) {
                        ch.target_corner = e2;
                        break;
                    }
                }
                if (ch.target_corner < 0) throw std::logic_error("psi: no corner to descend to");
            }
            chord_of[size_t(e)] = int(chords.size());
            chords.push_back(ch);
        }
    }
    int C = int(chords.size());
    // darts of L: 2c at the source corner, 2c+1 at the target
    CombMap lb;
    lb.sigma.assign(static_cast<size_t>(2 * C), -1);
    lb.alpha.assign(static_cast<size_t>(2 * C), -1);
    for (int c = 0; c < C; ++c) {
        lb.alpha[size_t(2 * c)] = 2 * c + 1;
        lb.alpha[size_t(2 * c + 1)] = 2 * c;
    }
    // incoming chords per target corner
    std::vector<std::vector<int>> incoming(static_cast<size_t>(n));
    std::vector<std::vector<int>> centre_in(static_cast<size_t>(nF));
    for (int c = 0; c < C; ++c) {
        if (chords[size_t(c)].target_corner >= 0)
            incoming[size_t(chords[size_t(c)].target_corner)].push_back(c);
        else
            centre_in[size_t(chords[size_t(c)].target_face)].push_back(c);
    }
    // rotation at the white vertices of M: corners in sigma order, inside a
    // corner the outgoing dart first, then incoming darts by anticlockwise
    // distance to their source
    {
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (int d0 = 0; d0 < n; ++d0) {
            if (seen[size_t(d0)]) continue;
            if (M.black[size_t(vm[size_t(d0)])]) {
                for (int d = d0; !seen[size_t(d)]; d = b.sigma[size_t(d)]) seen[size_t(d)] = 1;
                continue;
            }
            std::vector<int> fan;
            for (int e = d0; !seen[size_t(e)]; e = b.sigma[size_t(e)]) {
                seen[size_t(e)] = 1;
                fan.push_back(2 * chord_of[size_t(e)]);
                int f = face_of_corner[size_t(e)];
                int deg = int(acw[size_t(f)].size());
                std::vector<int> in = incoming[size_t(e)];
                std::sort(in.begin(), in.end(), [&](int c1, int c2) {
                    int a1 = (pos[size_t(chords[size_t(c1)].source)] - pos[size_t(e)] + deg) % deg;
                    int a2 = (pos[size_t(chords[size_t(c2)].source)] - pos[size_t(e)] + deg) % deg;
                    return a1 < a2;
                });
                for (int c : in) fan.push_back(2 * c + 1);
            }
            for (size_t i = 0; i < fan.size(); ++i)
                lb.sigma[size_t(fan[i])] = fan[(i + 1) % fan.size()];
        }
    }
    // rotation at the centres: incoming darts in anticlockwise source order
    for (int f = 0; f < nF; ++f) {
        auto& in = centre_in[size_t(f)];
        if (in.empty()) continue;
        std::sort(in.begin(), in.end(), [&](int c1, int c2) {
            return pos[size_t(chords[size_t(c1)].source)] < pos[size_t(chords[size_t(c2)].source)];
        });
        for (size_t i = 0; i < in.size(); ++i)
            lb.sigma[size_t(2 * in[i] + 1)] = 2 * in[(i + 1) % in.size()] + 1;
    }
    // root of L: the outgoing edge of the corner at the root dart of M,
    // taken at its far end (labelled 0)
    lb.root = 2 * chord_of[size_t(b.root)] + 1;
    LabelledMap L;
    L.base = lb;
    auto vl = vertex_of(lb);
    int V = n_vertices(lb);
    L.label.assign(static_cast<size_t>(V), 0);
    std::vector<char> set(static_cast<size_t>(V), 0);
    auto put = [&](int dart, long lab) {
        int v = vl[size_t(dart)];
        if (set[size_t(v)] && L.label[size_t(v)] != lab)
            throw std::logic_error("psi: inconsistent vertex labels");
        set[size_t(v)] = 1;
        L.label[size_t(v)] = lab;
    };
    for (int c = 0; c < C; ++c) {
        long ell = corner_label(chords[size_t(c)].source);
        put(2 * c, ell);
        put(2 * c + 1, ell - 1);
    }
    Validation v = validate_labelled(L);
    if (!v.ok) throw std::logic_error("psi produced an invalid labelled map: " + v.what);
    return L;
}

// ---- quadrangulation specialization -------------------------------------------

// root vertex labelled 1, increments 0 or +-1; this is the shape of the maps
// obtained from labelled quadrangulations by contracting the degree-2 black
// vertices of their mobile-maps
inline Validation validate_unit_root_labels(const LabelledMap& lm) {
    Validation v = validate(lm.base);
    if (!v.ok) return v;
    if (lm.base.atomic()) return {false, "needs at least one edge"};
    auto vm = vertex_of(lm.base);
    if (lm.label.size() != size_t(n_vertices(lm.base))) return {false, "label count mismatch"};
    for (int d = 0; d < lm.base.darts(); ++d) {
        long inc =
            lm.label[size_t(vm[size_t(lm.base.alpha[size_t(d)])])] - lm.label[size_t(vm[size_t(d)])];
        if (inc < -1 || inc > 1) return {false, "increment out of range"};
    }
    if (lm.label[size_t(vm[size_t(lm.base.root)])] != 1) return {false, "root vertex not labelled 1"};
    return {true, ""};
}

inline bool is_quadrangulation(const CombMap& m) {
    if (m.atomic()) return false;
    for (int d : face_degrees(m))
        if (d != 4) return false;
    return true;
}

// contract the degree-2 black vertices of phi(Q)
inline LabelledMap phi4(const LabelledMap& Q) {
    if (!is_quadrangulation(Q.base)) throw std::invalid_argument("phi4: not a quadrangulation");
    MobileMap M = phi(Q);
    const CombMap& mb = M.base;
    auto vm = vertex_of(mb);
    // white darts are the even ones; alpha of the contracted map pairs the
    // white darts across each black vertex
    int K = mb.darts() / 2;
    std::vector<int> newid(static_cast<size_t>(mb.darts()), -1);
    for (int k = 0; k < K; ++k) newid[size_t(2 * k)] = k;
    CombMap out;
    out.sigma.assign(static_cast<size_t>(K), -1);
    out.alpha.assign(static_cast<size_t>(K), -1);
    for (int k = 0; k < K; ++k) {
        int bdart = 2 * k + 1;
        int other = mb.sigma[size_t(bdart)];
        if (other == bdart || mb.sigma[size_t(other)] != bdart)
            throw std::logic_error("phi4: black vertex degree is not 2");
        out.alpha[size_t(k)] = newid[size_t(mb.alpha[size_t(other)])];
        out.sigma[size_t(k)] = newid[size_t(mb.sigma[size_t(2 * k)])];
    }
    out.root = newid[size_t(mb.root)];
    LabelledMap r;
    r.base = out;
    auto vo = vertex_of(out);
    r.label.assign(static_cast<size_t>(n_vertices(out)), 0);
    for (int k = 0; k < K; ++k) r.label[size_t(vo[size_t(k)])] = M.label[size_t(vm[size_t(2 * k)])];
    Validation v = validate_unit_root_labels(r);
    if (!v.ok) throw std::logic_error("phi4 produced an invalid map: " + v.what);
    return r;
}

// insert a degree-2 black vertex on every edge, then invert the mobile
// construction
inline LabelledMap phi4_inverse(const LabelledMap& m4) {
    {
        Validation v = validate_unit_root_labels(m4);
        if (!v.ok) throw std::invalid_argument("phi4_inverse: " + v.what);
    }
    const CombMap& b = m4.base;
    int n = b.darts();
    CombMap mb;
    mb.sigma.assign(static_cast<size_t>(2 * n), -1);
    mb.alpha.assign(static_cast<size_t>(2 * n), -1);
    // dart d of m4 becomes the white dart 2d; 2d+1 sits at the black vertex
    // in the middle of the edge of d
    for (int d = 0; d < n; ++d) {
        mb.alpha[size_t(2 * d)] = 2 * d + 1;
        mb.alpha[size_t(2 * d + 1)] = 2 * d;
        mb.sigma[size_t(2 * d)] = 2 * b.sigma[size_t(d)];
        mb.sigma[size_t(2 * d + 1)] = 2 * b.alpha[size_t(d)] + 1;
    }
    mb.root = 2 * b.root;
    MobileMap M;
    M.base = mb;
    auto vm4 = vertex_of(b);
    auto vmm = vertex_of(mb);
    int V = n_vertices(mb);
    M.black.assign(static_cast<size_t>(V), 0);
    M.label.assign(static_cast<size_t>(V), 0);
    for (int d = 0; d < n; ++d) {
        M.black[size_t(vmm[size_t(2 * d + 1)])] = 1;
        M.label[size_t(vmm[size_t(2 * d)])] = m4.label[size_t(vm4[size_t(d)])];
    }
    LabelledMap Q = psi(M);
    if (!is_quadrangulation(Q.base)) throw std::logic_error("phi4_inverse: image is not a quadrangulation");
    return Q;
}

// ---- the two-to-one correspondence --------------------------------------------

inline bool face_has_three_labels(const LabelledMap& lm, const std::vector<int>& vm,
                                  const std::vector<int>& darts_of_face) {
    std::vector<long> labs;
    for (int d : darts_of_face) labs.push_back(lm.label[size_t(vm[size_t(d)])]);
    std::sort(labs.begin(), labs.end());
    labs.erase(std::unique(labs.begin(), labs.end()), labs.end());
    return labs.size() == 3;
}

// every face shows three distinct labels
inline bool is_colourful(const LabelledMap& lm) {
    auto vm = vertex_of(lm.base);
    auto fm = face_of(lm.base);
    std::vector<std::vector<int>> per_face(static_cast<size_t>(n_faces(lm.base)));
    for (int d = 0; d < lm.base.darts(); ++d) per_face[size_t(fm[size_t(d)])].push_back(d);
    for (auto& f : per_face)
        if (!face_has_three_labels(lm, vm, f)) return false;
    return true;
}

// the two colourful labelled quadrangulations associated with a labelled
// map: one through reversing the root edge, one through shifting all labels
// up by one
inline std::pair<LabelledMap, LabelledMap> colourful_pair(const LabelledMap& L) {
    LabelledMap rev = L;
    rev.base.root = L.base.alpha[size_t(L.base.root)];
    LabelledMap up = L;
    for (auto& x : up.label) ++x;
    return {phi4_inverse(rev), phi4_inverse(up)};
}

// inverse of the pair construction: a colourful labelled quadrangulation
// maps back to the labelled map it came from
inline LabelledMap colourful_to_labelled(const LabelledMap& Q) {
    if (!is_colourful(Q)) throw std::invalid_argument("colourful_to_labelled: not colourful");
    LabelledMap m4 = phi4(Q);
    auto vm = vertex_of(m4.base);
    long head = m4.label[size_t(vm[size_t(m4.base.alpha[size_t(m4.base.root)])])];
    if (head == 0) {
        m4.base.root = m4.base.alpha[size_t(m4.base.root)];
    } else if (head == 2) {
        for (auto& x : m4.label) --x;
    } else {
        throw std::logic_error("colourful_to_labelled: root increment is flat");
    }
    Validation v = validate_labelled(m4);
    if (!v.ok) throw std::logic_error("colourful_to_labelled: " + v.what);
    return m4;
}

// ---- partial orientations ------------------------------------------------------

// duality between partial Eulerian orientations and vertex labellings with
// increments 0, +-1: unoriented edges separate equal labels, the root face
// gets label 1
inline LabelledMap partial_duality(const Orientation& o) {
    const CombMap& m = o.base;
    if (m.atomic()) throw std::invalid_argument("partial_duality: atomic");
    CombMap dm = dual(m);
    auto fm = face_of(m);
    auto vdm = vertex_of(dm);
    int F = n_faces(m);
    std::vector<int> face_to_v(static_cast<size_t>(F), -1);
    for (int d = 0; d < m.darts(); ++d) face_to_v[size_t(fm[size_t(d)])] = vdm[size_t(d)];
    std::vector<std::optional<long>> lab(static_cast<size_t>(F));
    lab[size_t(fm[size_t(m.root)])] = 1;
    auto reps = edge_reps(m);
    for (bool changed = true; changed;) {
        changed = false;
        for (size_t e = 0; e < reps.size(); ++e) {
            int d = reps[e];
            long inc; // label(left of d) - label(right of d)
            if (o.dir[e] == 0)
                inc = 0;
            else
                inc = (o.dir[e] > 0) ? 1 : -1;
            int f_right = fm[size_t(d)], f_left = fm[size_t(m.alpha[size_t(d)])];
            if (lab[size_t(f_right)] && !lab[size_t(f_left)]) {
                lab[size_t(f_left)] = *lab[size_t(f_right)] + inc;
                changed = true;
            } else if (!lab[size_t(f_right)] && lab[size_t(f_left)]) {
                lab[size_t(f_right)] = *lab[size_t(f_left)] - inc;
                changed = true;
            } else if (lab[size_t(f_right)] && lab[size_t(f_left)] &&
                       *lab[size_t(f_left)] - *lab[size_t(f_right)] != inc) {
                throw std::logic_error("partial_duality: inconsistent height function");
            }
        }
    }
    LabelledMap out;
    out.base = dm;
    out.label.assign(static_cast<size_t>(n_vertices(dm)), 0);
    for (int f = 0; f < F; ++f) {
        if (!lab[size_t(f)]) throw std::logic_error("partial_duality: face not reached");
        out.label[size_t(face_to_v[size_t(f)])] = *lab[size_t(f)];
    }
    Validation v = validate_unit_root_labels(out);
    if (!v.ok) throw std::logic_error("partial_duality: " + v.what);
    return out;
}

inline Orientation partial_duality_inverse(const LabelledMap& lm) {
    {
        Validation v = validate_unit_root_labels(lm);
        if (!v.ok) throw std::invalid_argument("partial_duality_inverse: " + v.what);
    }
    CombMap m = dual(dual(dual(lm.base)));
    auto vb = vertex_of(lm.base);
    auto reps = edge_reps(m);
    Orientation o;
    o.base = m;
    o.dir.assign(reps.size(), 0);
    for (size_t e = 0; e < reps.size(); ++e) {
        int d = reps[e], a = m.alpha[size_t(d)];
        long diff = lm.label[size_t(vb[size_t(a)])] - lm.label[size_t(vb[size_t(d)])];
        if (diff == 1)
            o.dir[e] = 1;
        else if (diff == -1)
            o.dir[e] = -1;
        else if (diff == 0)
            o.dir[e] = 0;
        else
            throw std::invalid_argument("partial_duality_inverse: increment out of range");
    }
    return o;
}

// quartic Eulerian orientations with n vertices correspond to partial
// Eulerian orientations with n edges: dualize to a labelled quadrangulation,
// contract the mobile's black vertices, dualize back treating equal labels
// as unoriented edges
inline Orientation quartic_to_partial(const Orientation& o) {
    for (int d : vertex_degrees(o.base))
        if (d != 4) throw std::invalid_argument("quartic_to_partial: map is not quartic");
    return partial_duality_inverse(phi4(orientation_duality(o)));
}

inline Orientation partial_to_quartic(const Orientation& p) {
    return orientation_duality_inverse(phi4_inverse(partial_duality(p)));
}

// ---- enumeration of mobile-maps ------------------------------------------------

// all mobile-maps with a given number of edges, by direct filtering: the
// label range around each black vertex is bounded by its degree, so labels
// stay within [1 - 2E, 1 + 2E]
inline void enumerate_mobile_maps(long edges, const std::function<void(const MobileMap&)>& emit) {
    enumerate_rooted_maps(edges, [&](const CombMap& m) {
        // two-colour with the root side white
        int V = n_vertices(m);
        auto vm = vertex_of(m);
        std::vector<int> colour(static_cast<size_t>(V), -1);
        colour[size_t(vm[size_t(m.root)])] = 0;
        std::vector<int> stack{vm[size_t(m.root)]};
        std::vector<std::vector<int>> adj(static_cast<size_t>(V));
        for (int d = 0; d < m.darts(); ++d) adj[size_t(vm[size_t(d)])].push_back(vm[size_t(m.alpha[size_t(d)])]);
        bool ok = true;
        while (!stack.empty() && ok) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[size_t(v)]) {
                if (colour[size_t(w)] == -1) {
                    colour[size_t(w)] = 1 - colour[size_t(v)];
                    stack.push_back(w);
                } else if (colour[size_t(w)] == colour[size_t(v)])
                    ok = false;
            }
        }
        if (!ok) return;
        std::vector<int> whites;
        for (int v = 0; v < V; ++v)
            if (colour[size_t(v)] == 0) whites.push_back(v);
        MobileMap M;
        M.base = m;
        M.black.assign(static_cast<size_t>(V), 0);
        for (int v = 0; v < V; ++v) M.black[size_t(v)] = (colour[size_t(v)] == 1);
        M.label.assign(static_cast<size_t>(V), 0);
        long lo = 1 - 2 * edges, hi = 1 + 2 * edges;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == whites.size()) {
                if (validate_mobile(M).ok) emit(M);
                return;
            }
            int v = whites[i];
            if (v == vm[size_t(m.root)]) {
                M.label[size_t(v)] = 1;
                rec(i + 1);
                return;
            }
            for (long x = lo; x <= hi; ++x) {
                M.label[size_t(v)] = x;
                rec(i + 1);
            }
            M.label[size_t(v)] = 0;
        };
        rec(0);
    });
}

} // namespace eo
