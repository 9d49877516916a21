#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tri/curve.hpp"
#include "tri/ops.hpp"

#include <random>

using namespace tri;

namespace {

std::vector<PathWord> standard_loops(const Surface& s) {
    std::vector<PathWord> out;
    for (EdgeId b : s.bands()) out.push_back(band_loop(s, b));
    return out;
}

// deterministic pseudo-random twist product applied to a seed curve
PathWord random_curve(const Surface& s, std::mt19937& rng, int length) {
    auto loops = standard_loops(s);
    std::uniform_int_distribution<int> pick(0, (int)loops.size() - 1);
    std::uniform_int_distribution<int> coin(0, 1);
    PathWord c = loops[pick(rng)];
    for (int i = 0; i < length; i++)
        c = dehn_twist(c, loops[pick(rng)], coin(rng) ? +1 : -1);
    return c;
}

} // namespace

TEST_CASE("twist along a disjoint curve is the identity") {
    Surface s = Surface::disk_with_bands(1, 2);
    PathWord c = band_loop(s, s.edge_by_label("a1"));
    PathWord d1 = boundary_parallel(s, 0);
    PathWord t = dehn_twist(c, d1, +1);
    CHECK(same_path(t, c));
}

TEST_CASE("twist along a trivial loop is the identity") {
    Surface s = Surface::closed_surface(1);
    EdgeId a = s.edge_by_label("a1");
    EdgeId b = s.edge_by_label("b1");
    PathWord trivial = multi_band_loop(
        s, {Letter{a, +1}, Letter{b, +1}, Letter{a, -1}, Letter{b, -1}});
    PathWord x = band_loop(s, a);
    CHECK(same_path(dehn_twist(x, trivial, +1), x));
}

TEST_CASE("transvection on homology classes") {
    Surface s = Surface::disk_with_bands(1, 1);
    EdgeId a = s.edge_by_label("a1");
    EdgeId b = s.edge_by_label("b1");
    PathWord x = band_loop(s, a);
    PathWord y = band_loop(s, b);
    // [t_a^sign(b)] = [b] + sign*<b,a>[a]
    for (int sign : {+1, -1}) {
        PathWord t = dehn_twist(y, x, sign);
        auto vt = edge_vector(t);
        auto vy = edge_vector(y);
        auto vx = edge_vector(x);
        long long pairing = algebraic_intersection(y, x);
        for (int e = 0; e < (int)vt.size(); e++)
            CHECK(vt[e] == vy[e] + sign * pairing * vx[e]);
    }
}

TEST_CASE("twist and untwist return the input exactly") {
    std::mt19937 rng(7);
    for (auto [p, b] : {std::pair{1, 1}, {1, 2}, {2, 2}}) {
        Surface s = Surface::disk_with_bands(p, b);
        for (int trial = 0; trial < 15; trial++) {
            PathWord c = random_curve(s, rng, 2);
            PathWord g = random_curve(s, rng, 1);
            PathWord back = dehn_twist(dehn_twist(c, g, +1), g, -1);
            CHECK(same_path(back, c));
        }
    }
    Surface t = Surface::closed_surface(1);
    for (int trial = 0; trial < 15; trial++) {
        PathWord c = random_curve(t, rng, 2);
        PathWord g = random_curve(t, rng, 1);
        PathWord back = dehn_twist(dehn_twist(c, g, -1), g, +1);
        CHECK(same_path(back, c));
    }
}

TEST_CASE("double twist intersection formula on the torus") {
    Surface s = Surface::closed_surface(1);
    PathWord g = band_loop(s, s.edge_by_label("a1"));
    PathWord x = band_loop(s, s.edge_by_label("b1"));
    REQUIRE(geometric_intersection(g, x) == 1);
    PathWord t2 = dehn_twist(dehn_twist(x, g, +1), g, +1);
    CHECK(geometric_intersection(t2, x) == 2);
}

TEST_CASE("intersection numbers are twist invariant") {
    std::mt19937 rng(11);
    Surface s = Surface::disk_with_bands(2, 1);
    for (int trial = 0; trial < 10; trial++) {
        PathWord x = random_curve(s, rng, 1);
        PathWord y = random_curve(s, rng, 1);
        PathWord g = random_curve(s, rng, 1);
        long long before = geometric_intersection(x, y);
        long long after =
            geometric_intersection(dehn_twist(x, g, +1), dehn_twist(y, g, +1));
        CHECK(before == after);
    }
}

TEST_CASE("transvection identity for the signed pairing") {
    std::mt19937 rng(13);
    for (auto [p, b] : {std::pair{1, 1}, {1, 2}}) {
        Surface s = Surface::disk_with_bands(p, b);
        for (int trial = 0; trial < 12; trial++) {
            PathWord x = random_curve(s, rng, 1);
            PathWord y = random_curve(s, rng, 1);
            PathWord g = random_curve(s, rng, 1);
            long long lhs = algebraic_intersection(dehn_twist(x, g, +1), y);
            long long rhs = algebraic_intersection(x, y) +
                            algebraic_intersection(x, g) * algebraic_intersection(g, y);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("twisting arcs keeps the endpoints") {
    Surface s = Surface::disk_with_bands(1, 1);
    PathWord arc = cocore_arc(s, s.edge_by_label("a1"), Rat(0));
    PathWord g = band_loop(s, s.edge_by_label("a1"));
    PathWord t = dehn_twist(arc, g, +1);
    CHECK(t.ends[0] == arc.ends[0]);
    CHECK(t.ends[1] == arc.ends[1]);
    CHECK(!same_path(t, arc));
    PathWord back = dehn_twist(t, g, -1);
    CHECK(same_path(back, arc));
}

TEST_CASE("slides change homology by the slid curve") {
    Surface s = Surface::disk_with_bands(1, 2);
    PathWord arc = cocore_arc(s, s.edge_by_label("a1"), Rat(0));
    PathWord over = band_loop(s, s.edge_by_label("b1"));
    auto sites = slide_sites(arc, over);
    REQUIRE(!sites.empty());
    PathWord slid = slide_arc(arc, over, sites[0], +1);
    auto va = edge_vector(arc);
    auto vs = edge_vector(slid);
    auto vo = edge_vector(over);
    for (int e = 0; e < (int)va.size(); e++) CHECK(vs[e] == va[e] + vo[e]);
    CHECK(slid.ends[0] == arc.ends[0]);
}
