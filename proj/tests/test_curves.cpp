#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tri/arrangement.hpp"
#include "tri/curve.hpp"
#include "tri/ops.hpp"

using namespace tri;

TEST_CASE("band loops place and extract") {
    Surface s = Surface::disk_with_bands(1, 1);
    EdgeId a = s.edge_by_label("a1");
    EdgeId b = s.edge_by_label("b1");
    Arrangement arr(s);
    int ia = arr.add(band_loop(arr.surface(), a));
    int ib = arr.add(band_loop(arr.surface(), b));
    CHECK(arr.self_embedded(ia));
    CHECK(arr.self_embedded(ib));
    PathWord wa = arr.extract(ia);
    CHECK(wa.word.size() == 1);
    CHECK(arr.drawn_crossings(ia, ib) == 1);
    CHECK(std::abs(arr.signed_crossings(ia, ib)) == 1);
}

TEST_CASE("boundary parallel curve on the one-holed torus") {
    Surface s = Surface::disk_with_bands(1, 1);
    PathWord d = boundary_parallel(s, 0);
    CHECK(d.word.size() == 4);
    // null-homologous: signed pairing with the band loops vanishes
    EdgeId a = s.edge_by_label("a1");
    EdgeId b = s.edge_by_label("b1");
    CHECK(algebraic_intersection(d, band_loop(s, a)) == 0);
    CHECK(algebraic_intersection(d, band_loop(s, b)) == 0);
    Arrangement arr(s);
    int id = arr.add(d);
    CHECK(arr.self_embedded(id));
}

TEST_CASE("antisymmetry of the signed count") {
    Surface s = Surface::disk_with_bands(2, 1);
    PathWord x = band_loop(s, s.edge_by_label("a1"));
    PathWord y = band_loop(s, s.edge_by_label("b1"));
    CHECK(algebraic_intersection(x, y) == -algebraic_intersection(y, x));
}

TEST_CASE("free reduction cancels backtracks") {
    Surface s = Surface::disk_with_bands(1, 1);
    EdgeId a = s.edge_by_label("a1");
    PathWord p;
    p.surface = &s;
    p.closed = true;
    p.word = {Letter{a, +1}, Letter{a, -1}};
    PathWord r = reduced(p);
    CHECK(r.word.empty());
    CHECK(r.home_face >= 0);
}

TEST_CASE("canonical keys identify rotations and reversals") {
    Surface s = Surface::disk_with_bands(1, 1);
    EdgeId a = s.edge_by_label("a1");
    EdgeId b = s.edge_by_label("b1");
    PathWord p = multi_band_loop(s, {Letter{a, +1}, Letter{b, +1}});
    PathWord q = multi_band_loop(s, {Letter{b, +1}, Letter{a, +1}});
    CHECK(same_path(p, q));
    CHECK(same_path(p, reversed(p)));
    PathWord r = multi_band_loop(s, {Letter{a, +1}, Letter{b, -1}});
    CHECK(!same_path(p, r));
}

TEST_CASE("separating curve around the first handle pair") {
    Surface s = Surface::disk_with_bands(2, 1);
    PathWord neck = genus_boundary(s, 1);
    CHECK(neck.word.size() == 4);
    Arrangement arr(s);
    int id = arr.add(neck);
    CHECK(arr.self_embedded(id));
    for (const char* lbl : {"a1", "b1", "a2", "b2"})
        CHECK(algebraic_intersection(neck, band_loop(s, s.edge_by_label(lbl))) == 0);
}

TEST_CASE("co-core arcs are consistent") {
    Surface s = Surface::disk_with_bands(1, 2);
    Arrangement arr(s);
    std::vector<int> ids;
    int k = 0;
    for (EdgeId band : s.bands()) {
        int id = arr.add(cocore_arc(arr.surface(), band, Rat(k++)));
        CHECK(arr.self_embedded(id));
        ids.push_back(id);
    }
    for (size_t i = 0; i < ids.size(); i++)
        for (size_t j = i + 1; j < ids.size(); j++)
            CHECK(arr.drawn_crossings(ids[i], ids[j]) == 0);
}

TEST_CASE("parallel copies of one curve can be drawn disjointly") {
    Surface s = Surface::disk_with_bands(1, 1);
    PathWord d = boundary_parallel(s, 0);
    Arrangement arr(s);
    int c1 = arr.add(d);
    int c2 = arr.add(d);
    arr.reduce_against(c2, {c1});
    CHECK(arr.drawn_crossings(c1, c2) == 0);
}
