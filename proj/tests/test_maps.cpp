#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eo/maps.hpp"

using namespace eo;

TEST_CASE("rooted planar map counts by edges") {
    std::vector<long> expected = {1, 2, 9, 54, 378, 2916};
    for (long e = 0; e <= 5; ++e) {
        CAPTURE(e);
        CHECK(count_rooted_maps(e) == expected[size_t(e)]);
    }
}

TEST_CASE("rooted map counts without the planarity filter") {
    EnumOptions opt;
    opt.planar_only = false;
    std::vector<long> expected = {1, 2, 10, 74};
    for (long e = 0; e <= 3; ++e) {
        CAPTURE(e);
        CHECK(count_rooted_maps(e, opt) == expected[size_t(e)]);
    }
}

TEST_CASE("rooted quartic map counts") {
    EnumOptions opt;
    opt.allowed_degrees = {4};
    CHECK(count_rooted_maps(2, opt) == 2);
    CHECK(count_rooted_maps(4, opt) == 9);
}

TEST_CASE("every enumerated map is planar, connected and canonical-stable") {
    enumerate_rooted_maps(3, [&](const CombMap& m) {
        CHECK(n_vertices(m) - m.edges() + n_faces(m) == 2); // Euler relation
        CHECK(canonical_form(canonical_form(m)) == canonical_form(m));
    });
}

TEST_CASE("orientation counts against the counting series") {
    // all maps, every edge oriented and balanced
    std::vector<long> total = {1, 5, 33};
    for (long e = 1; e <= 3; ++e) {
        long s = 0;
        enumerate_rooted_maps(e, [&](const CombMap& m) {
            s += count_eulerian_orientations(m, OrientMode::Total);
        });
        CAPTURE(e);
        CHECK(s == total[size_t(e - 1)]);
    }
    // unoriented edges allowed, root free
    std::vector<long> partial = {4, 35, 402};
    for (long e = 1; e <= 3; ++e) {
        long s = 0;
        enumerate_rooted_maps(e, [&](const CombMap& m) {
            s += count_eulerian_orientations(m, OrientMode::Partial);
        });
        CAPTURE(e);
        CHECK(s == partial[size_t(e - 1)]);
    }
    // quartic maps with the root dart forced outgoing
    EnumOptions opt;
    opt.allowed_degrees = {4};
    std::vector<long> quartic = {4, 35};
    for (long n = 1; n <= 2; ++n) {
        long s = 0;
        enumerate_rooted_maps(2 * n, [&](const CombMap& m) {
            s += count_eulerian_orientations(m, OrientMode::QuarticRootForced);
        }, opt);
        CAPTURE(n);
        CHECK(s == quartic[size_t(n - 1)]);
    }
}

TEST_CASE("duality exchanges vertices and faces, fourth power is identity") {
    for (long e = 1; e <= 3; ++e) {
        enumerate_rooted_maps(e, [&](const CombMap& m) {
            CombMap d = dual(m);
            CHECK(n_vertices(d) == n_faces(m));
            CHECK(n_faces(d) == n_vertices(m));
            CHECK(d.edges() == m.edges());
            CHECK(dual(dual(dual(dual(m)))) == m);
        });
    }
}

TEST_CASE("height function of a total orientation and back") {
    long seen = 0;
    enumerate_rooted_maps(2, [&](const CombMap& m) {
        enumerate_eulerian_orientations(m, OrientMode::Total, [&](const Orientation& o) {
            ++seen;
            LabelledMap lm = orientation_duality(o);
            Orientation back = orientation_duality_inverse(lm);
            CHECK(canonical_form(back) == canonical_form(o));
        });
    });
    CHECK(seen == 5);
}

TEST_CASE("labelled map enumeration matches orientation counts") {
    std::vector<long> expected = {1, 5, 33};
    for (long e = 1; e <= 3; ++e) {
        long c = 0;
        enumerate_labelled_maps(e, [&](const LabelledMap&) { ++c; });
        CAPTURE(e);
        CHECK(c == expected[size_t(e - 1)]);
    }
}

TEST_CASE("local minima of labelled maps") {
    LabelledMap atom;
    atom.label = {1};
    CHECK(count_local_minima(atom) == 1);
    long total_minima = 0, total_faces_dual = 0;
    enumerate_labelled_maps(2, [&](const LabelledMap& lm) {
        long mins = count_local_minima(lm);
        CHECK(mins >= 1);
        total_minima += mins;
        total_faces_dual += n_faces(lm.base);
    });
    CHECK(total_minima > 0);
    CHECK(total_faces_dual > 0);
}

TEST_CASE("tutte polynomial sum at (3,3)") {
    CHECK(tutte_sum_33(1) == Integer(6));
    CHECK(tutte_sum_33(2) == Integer(78));
    CHECK(tutte_sum_33(3) == Integer(1326));
    CHECK(tutte_sum_33(4) == Integer(25992));
}

TEST_CASE("signed spanning forest statistic") {
    CHECK(signed_forest_statistic(2) == Integer(2)); // loops only, empty forests
    CHECK(signed_forest_statistic(3) == Integer(6));
    CHECK(signed_forest_statistic(4) == Integer(42));
    CHECK_THROWS_AS(signed_forest_statistic(1), std::invalid_argument);
}

TEST_CASE("patch table base cases") {
    PatchTables t = enumerate_patch_tables(false, 2, 4);
    CHECK(t.p.at({0, 0}) == 1); // the atomic patch
    CHECK(t.c.at({1, 0, 1}) == 1);
    CHECK(t.d.at({1, 0, 0}) == 1);
    CHECK(t.d.at({1, 0, 1}) == 1); // one digon appended
    CHECK(t.d.find({0, 1, 0}) == t.d.end()); // no patches without boundary marks
}

TEST_CASE("map exchange format round trip") {
    for (long e = 0; e <= 3; ++e) {
        enumerate_rooted_maps(e, [&](const CombMap& m) {
            std::string line = write_map(m);
            CHECK(line.find('\n') == std::string::npos);
            CombMap back = read_map(line);
            CHECK(back == m);
        });
    }
    CHECK_THROWS_AS(read_map("garbage"), std::invalid_argument);
}
