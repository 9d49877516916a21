#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tri/mcg.hpp"

#include <random>

using namespace tri;

TEST_CASE("homology action basics") {
    Surface s = Surface::disk_with_bands(1, 1);
    TwistWord empty;
    empty.surface = &s;
    CHECK(mat_equal(h1_action(empty), mat_identity(2)));

    // twelve twists of the elliptic fibration word act trivially
    TwistWord w = torus_fibration_word(s, 1);
    CHECK(w.length() == 12);
    CHECK(mat_equal(h1_action(w), mat_identity(2)));

    // a boundary twist is invisible to homology
    TwistWord bd = boundary_multitwist(s, 0, 1);
    CHECK(mat_equal(h1_action(bd), mat_identity(2)));

    // matrices of twist words are determinant one
    TwistWord one;
    one.surface = &s;
    one.letters.push_back(TwistLetter{band_loop(s, s.bands()[0]), +1});
    CHECK(mat_det(h1_action(one)) == 1);
}

TEST_CASE("hurwitz moves preserve the mapping class") {
    Surface s = Surface::disk_with_bands(1, 1);
    TwistWord w = torus_fibration_word(s, 1);
    Mat before = h1_action(w);
    for (int i = 1; i < w.length(); i++) {
        TwistWord m = hurwitz_move(w, i, true);
        CHECK(mat_equal(h1_action(m), before));
        TwistWord back = hurwitz_move(m, i, false);
        REQUIRE(back.length() == w.length());
        for (int k = 0; k < w.length(); k++) {
            CHECK(back.letters[k].sign == w.letters[k].sign);
            CHECK(same_path(back.letters[k].curve, w.letters[k].curve));
        }
    }
}

TEST_CASE("hurwitz move on disjoint letters is a transposition") {
    Surface s = Surface::disk_with_bands(1, 2);
    auto lib = standard_curves(s);
    TwistWord w;
    w.surface = &s;
    w.letters.push_back(TwistLetter{lib.at("delta1"), +1});
    w.letters.push_back(TwistLetter{lib.at("delta2"), -1});
    TwistWord m = hurwitz_move(w, 1, true);
    CHECK(same_path(m.letters[0].curve, lib.at("delta2")));
    CHECK(same_path(m.letters[1].curve, lib.at("delta1")));
    CHECK(m.letters[0].sign == -1);
}

TEST_CASE("push forward") {
    Surface s = Surface::disk_with_bands(1, 1);
    auto lib = standard_curves(s);
    TwistWord w = torus_fibration_word(s, 1);
    TwistWord id;
    id.surface = &s;
    TwistWord same = push_forward(w, id);
    for (int k = 0; k < w.length(); k++)
        CHECK(same_path(same.letters[k].curve, w.letters[k].curve));

    TwistWord h;
    h.surface = &s;
    h.letters.push_back(TwistLetter{lib.at("a1"), +1});
    TwistWord fwd = push_forward(w, h);
    TwistWord back = push_forward(fwd, inverse_word(h));
    for (int k = 0; k < w.length(); k++)
        CHECK(same_path(back.letters[k].curve, w.letters[k].curve));

    // h1 of the pushed word is the conjugate
    Mat mh = h1_action(h);
    Mat lhs = h1_action(fwd);
    Mat rhs = mat_mul(mh, h1_action(w));
    // rhs * mh^{-1}: check lhs * mh == rhs instead
    CHECK(mat_equal(mat_mul(lhs, mh), rhs));
}

TEST_CASE("conjugation of a twist is the twist of the image") {
    Surface s = Surface::disk_with_bands(1, 1);
    auto lib = standard_curves(s);
    TwistWord tb;
    tb.surface = &s;
    tb.letters.push_back(TwistLetter{lib.at("b1"), +1});
    TwistWord ta;
    ta.surface = &s;
    ta.letters.push_back(TwistLetter{lib.at("a1"), +1});
    TwistWord conj = global_conjugate(tb, ta);
    CHECK(same_path(conj.letters[0].curve, dehn_twist(lib.at("b1"), lib.at("a1"), +1)));
}

TEST_CASE("elliptic fibration relation") {
    Surface s = Surface::disk_with_bands(1, 1);
    TwistWord w = torus_fibration_word(s, 1);
    TwistWord t_delta = boundary_multitwist(s, 0, 1);
    auto rep = verify_factorization(w, t_delta);
    CHECK(rep.h1_pass);
    CHECK(rep.alexander_pass);
}

TEST_CASE("empty word equals empty word") {
    Surface s = Surface::disk_with_bands(1, 1);
    TwistWord e1, e2;
    e1.surface = e2.surface = &s;
    auto rep = verify_factorization(e1, e2);
    CHECK(rep.h1_pass);
    CHECK(rep.alexander_pass);
}

TEST_CASE("homology cannot see the boundary twist but the arcs do") {
    Surface s = Surface::disk_with_bands(1, 1);
    TwistWord bd = boundary_multitwist(s, 0, 1);
    TwistWord empty;
    empty.surface = &s;
    auto rep = verify_factorization(bd, empty);
    CHECK(rep.h1_pass);
    CHECK(!rep.alexander_pass);
}

TEST_CASE("genus-2 positive relation") {
    Surface s = Surface::disk_with_bands(2, 1);
    TwistWord w = matsumoto_word(s);
    CHECK(w.length() == 8);
    TwistWord t_delta = boundary_multitwist(s, 0, 1);
    auto rep = verify_factorization(w, t_delta);
    CHECK(rep.h1_pass);
    CHECK(rep.alexander_pass);
}

TEST_CASE("twisted double of the genus-2 word") {
    Surface s = Surface::disk_with_bands(2, 1);
    TwistWord w = dolgachev_word(s);
    CHECK(w.length() == 16);
    TwistWord t_delta2 = boundary_multitwist(s, 0, 2);
    auto rep = verify_factorization(w, t_delta2);
    CHECK(rep.h1_pass);
    CHECK(rep.alexander_pass);
}
