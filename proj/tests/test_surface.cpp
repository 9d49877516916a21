#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tri/ops.hpp"
#include "tri/surface.hpp"

using namespace tri;

TEST_CASE("disk with no bands is a disk") {
    Surface s = Surface::disk_with_bands(0, 1);
    CHECK(s.euler_characteristic() == 1);
    CHECK(s.boundary_count() == 1);
    CHECK(s.genus() == 0);
}

TEST_CASE("one-holed torus from two interleaved bands") {
    Surface s = Surface::disk_with_bands(1, 1);
    auto [g, b] = classify(s);
    CHECK(g == 1);
    CHECK(b == 1);
    CHECK(s.euler_characteristic() == -1);
}

TEST_CASE("genus and boundary for a range of models") {
    for (int p = 0; p <= 3; p++)
        for (int b = 1; b <= 3; b++) {
            Surface s = Surface::disk_with_bands(p, b);
            auto [gg, bb] = classify(s);
            CHECK(gg == p);
            CHECK(bb == b);
            CHECK(s.euler_characteristic() == 2 - 2 * p - b);
        }
}

TEST_CASE("closed surfaces") {
    for (int g = 0; g <= 3; g++) {
        Surface s = Surface::closed_surface(g);
        auto [gg, bb] = classify(s);
        CHECK(gg == g);
        CHECK(bb == 0);
        CHECK(s.euler_characteristic() == 2 - 2 * g);
    }
}

TEST_CASE("capping one circle of an annulus gives a disk") {
    Surface s = Surface::disk_with_bands(0, 2);
    CHECK(s.boundary_count() == 2);
    s.cap_boundary(1);
    auto [g, b] = classify(s);
    CHECK(g == 0);
    CHECK(b == 1);
}
