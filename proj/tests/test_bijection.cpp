#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "eo/bijection.hpp"

using namespace eo;

namespace {

using Key = std::pair<CombMap, std::vector<long>>;

Key key_of(const LabelledMap& L) {
    LabelledMap c = canonical_form(L);
    return {c.base, c.label};
}

} // namespace

TEST_CASE("labelled to mobile and back, with transferred statistics") {
    std::vector<long> expected = {1, 5, 33};
    for (long E = 1; E <= 3; ++E) {
        CAPTURE(E);
        long count = 0;
        std::set<std::pair<CombMap, std::pair<std::vector<char>, std::vector<long>>>> images;
        enumerate_labelled_maps(E, [&](const LabelledMap& L) {
            ++count;
            MobileMap M = phi(L);
            CHECK(validate_mobile(M).ok);
            long mins = count_local_minima(L);
            long blacks = 0;
            for (char b : M.black) blacks += b ? 1 : 0;
            CHECK(blacks == n_faces(L.base));
            CHECK(long(M.black.size()) - blacks == n_vertices(L.base) - mins);
            CHECK(M.base.edges() == L.base.edges());
            CHECK(n_faces(M.base) == mins);
            MobileMap c = canonical_form(M);
            images.insert({c.base, {c.black, c.label}});
            CHECK(key_of(psi(M)) == key_of(L));
        });
        CHECK(count == expected[size_t(E - 1)]);
        CHECK(long(images.size()) == count); // injective
    }
}

TEST_CASE("mobile to labelled and back, against independent enumeration") {
    std::vector<long> expected = {1, 5, 33};
    for (long E = 1; E <= 3; ++E) {
        CAPTURE(E);
        long count = 0;
        enumerate_mobile_maps(E, [&](const MobileMap& M) {
            ++count;
            LabelledMap L = psi(M);
            CHECK(validate_labelled(L).ok);
            MobileMap back = phi(L);
            CHECK(canonical_form(back) == canonical_form(M));
        });
        CHECK(count == expected[size_t(E - 1)]);
    }
}

TEST_CASE("quadrangulation contraction and its inverse") {
    for (long n = 1; n <= 2; ++n) {
        CAPTURE(n);
        long quads = 0;
        std::set<Key> images;
        enumerate_labelled_maps(2 * n, [&](const LabelledMap& L) {
            if (!is_quadrangulation(L.base)) return;
            ++quads;
            LabelledMap m4 = phi4(L);
            CHECK(long(edge_reps(m4.base).size()) == n);
            CHECK(validate_unit_root_labels(m4).ok);
            images.insert(key_of(m4));
            LabelledMap back = phi4_inverse(m4);
            CHECK(key_of(back) == key_of(L));
        });
        CHECK(long(images.size()) == quads); // injective on quadrangulations

        // expansion of a plain labelled map, after shifting into the
        // unit-root convention, lands back on it
        enumerate_labelled_maps(n, [&](const LabelledMap& L) {
            LabelledMap shifted = L;
            for (long& v : shifted.label) ++v;
            CHECK(validate_unit_root_labels(shifted).ok);
            LabelledMap q = phi4_inverse(shifted);
            CHECK(is_quadrangulation(q.base));
            CHECK(key_of(phi4(q)) == key_of(shifted));
        });
    }
}

TEST_CASE("two-label faces of a quadrangulation become flat edges") {
    enumerate_labelled_maps(4, [&](const LabelledMap& L) {
        if (!is_quadrangulation(L.base)) return;
        auto vm = vertex_of(L.base);
        auto fm = face_of(L.base);
        std::vector<std::vector<int>> pf(static_cast<size_t>(n_faces(L.base)));
        for (int d = 0; d < L.base.darts(); ++d) pf[size_t(fm[size_t(d)])].push_back(d);
        long two_label = 0;
        for (auto& f : pf)
            if (!face_has_three_labels(L, vm, f)) ++two_label;
        LabelledMap m4 = phi4(L);
        auto vm4 = vertex_of(m4.base);
        long flat = 0;
        for (int d : edge_reps(m4.base))
            if (m4.label[size_t(vm4[size_t(d)])] ==
                m4.label[size_t(vm4[size_t(m4.base.alpha[size_t(d)])])])
                ++flat;
        CHECK(two_label == flat);
    });
}

TEST_CASE("colourful quadrangulations double-cover labelled maps") {
    for (long n = 1; n <= 2; ++n) {
        CAPTURE(n);
        std::set<Key> colourful;
        enumerate_labelled_maps(2 * n, [&](const LabelledMap& L) {
            if (is_quadrangulation(L.base) && is_colourful(L)) colourful.insert(key_of(L));
        });
        std::map<Key, long> hit;
        long maps = 0;
        enumerate_labelled_maps(n, [&](const LabelledMap& L) {
            ++maps;
            auto [q1, q2] = colourful_pair(L);
            CHECK(is_colourful(q1));
            CHECK(is_colourful(q2));
            CHECK_FALSE(key_of(q1) == key_of(q2));
            ++hit[key_of(q1)];
            ++hit[key_of(q2)];
            CHECK(key_of(colourful_to_labelled(q1)) == key_of(L));
            CHECK(key_of(colourful_to_labelled(q2)) == key_of(L));
        });
        CHECK(long(colourful.size()) == 2 * maps);
        for (auto& [k, c] : hit) {
            CHECK(c == 1);
            CHECK(colourful.count(k) == 1);
        }
    }
}

TEST_CASE("quartic orientations correspond to partial orientations") {
    EnumOptions opt;
    opt.allowed_degrees = {4};
    std::vector<long> expected = {4, 35};
    for (long n = 1; n <= 2; ++n) {
        CAPTURE(n);
        // the target side: partial orientations of maps with n edges
        std::set<Orientation> partials;
        enumerate_rooted_maps(n, [&](const CombMap& m) {
            enumerate_eulerian_orientations(m, OrientMode::Partial, [&](const Orientation& o) {
                partials.insert(canonical_form(o));
            });
        });
        REQUIRE(long(partials.size()) == expected[size_t(n - 1)]);

        std::set<Orientation> images;
        long quartic_count = 0;
        enumerate_rooted_maps(2 * n, [&](const CombMap& m) {
            enumerate_eulerian_orientations(m, OrientMode::QuarticRootForced,
                                            [&](const Orientation& o) {
                ++quartic_count;
                Orientation p = quartic_to_partial(o);
                CHECK(partials.count(canonical_form(p)) == 1);
                images.insert(canonical_form(p));
                Orientation back = partial_to_quartic(p);
                CHECK(canonical_form(back) == canonical_form(o));
            });
        }, opt);
        CHECK(quartic_count == expected[size_t(n - 1)]);
        CHECK(images.size() == partials.size()); // bijective correspondence
    }
}

TEST_CASE("height labelling of a partial orientation inverts exactly") {
    long seen = 0;
    enumerate_rooted_maps(2, [&](const CombMap& m) {
        enumerate_eulerian_orientations(m, OrientMode::Partial, [&](const Orientation& o) {
            ++seen;
            LabelledMap lm = partial_duality(o);
            CHECK(validate_unit_root_labels(lm).ok);
            Orientation back = partial_duality_inverse(lm);
            CHECK(canonical_form(back) == canonical_form(o));
        });
    });
    CHECK(seen == 35);
}

TEST_CASE("mobile validation rejects broken inputs") {
    // take a valid mobile and break the root label
    bool tested = false;
    enumerate_mobile_maps(2, [&](const MobileMap& M) {
        if (tested) return;
        tested = true;
        MobileMap bad = M;
        long root_vertex = vertex_of(bad.base)[size_t(bad.base.root)];
        bad.label[size_t(root_vertex)] = 7;
        CHECK_FALSE(validate_mobile(bad).ok);
    });
    CHECK(tested);
}
