#include "tri/mcg.hpp"

#include <cassert>
#include <stdexcept>

namespace tri {

PathWord apply_word(const TwistWord& w, const PathWord& target) {
    PathWord c = reduced(target);
    for (const auto& l : w.letters) c = dehn_twist(c, l.curve, l.sign);
    return c;
}

TwistWord inverse_word(const TwistWord& w) {
    TwistWord r;
    r.surface = w.surface;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back(TwistLetter{it->curve, -it->sign});
    return r;
}

TwistWord concat(const TwistWord& first, const TwistWord& then) {
    if (first.surface != then.surface) throw std::runtime_error("concat across surfaces");
    TwistWord r = first;
    for (const auto& l : then.letters) r.letters.push_back(l);
    return r;
}

Mat band_pairing_form(const Surface& s) {
    const auto& bands = s.bands();
    int k = (int)bands.size();
    Mat j(k, Vec(k, 0));
    for (int x = 0; x < k; x++)
        for (int y = 0; y < k; y++) {
            if (x == y) continue;
            j[x][y] = algebraic_intersection(band_loop(s, bands[x]), band_loop(s, bands[y]));
        }
    return j;
}

Vec band_class(const PathWord& curve) {
    const Surface& s = *curve.surface;
    auto ev = edge_vector(curve);
    Vec v;
    for (EdgeId b : s.bands()) v.push_back(ev[b]);
    return v;
}

Mat h1_transvection(const Surface& s, const PathWord& curve, int sign) {
    Mat j = band_pairing_form(s);
    Vec g = band_class(curve);
    int k = (int)g.size();
    Vec jg = mat_apply(j, g);
    // x -> x + sign * <x, g> * g  with <x, g> = x^T J g
    Mat t = mat_identity(k);
    for (int r = 0; r < k; r++)
        for (int c = 0; c < k; c++) t[r][c] += sign * g[r] * jg[c];
    return t;
}

Mat h1_action(const TwistWord& w) {
    const Surface& s = *w.surface;
    int k = (int)s.bands().size();
    Mat m = mat_identity(k);
    Mat j = band_pairing_form(s);
    for (const auto& l : w.letters) {
        Vec g = band_class(l.curve);
        Vec jg = mat_apply(j, g);
        Mat t = mat_identity(k);
        for (int r = 0; r < k; r++)
            for (int c = 0; c < k; c++) t[r][c] += l.sign * g[r] * jg[c];
        m = mat_mul(t, m); // letters act first to last
    }
    return m;
}

TwistWord hurwitz_move(const TwistWord& w, int i, bool to_left) {
    if (i < 1 || i >= (int)w.letters.size()) throw std::runtime_error("hurwitz index out of range");
    TwistWord r = w;
    TwistLetter& early = r.letters[i - 1];
    TwistLetter& late = r.letters[i];
    if (to_left) {
        // (..., A, B, ...) -> (..., t_{A^{-1}(B)}, A, ...)
        TwistLetter moved{dehn_twist(late.curve, early.curve, -early.sign), late.sign};
        late = early;
        early = moved;
    } else {
        // inverse move: (..., C, A, ...) -> (..., A, t_{A(C)}, ...)
        TwistLetter moved{dehn_twist(early.curve, late.curve, late.sign), early.sign};
        early = late;
        late = moved;
    }
    return r;
}

TwistWord push_forward(const TwistWord& w, const TwistWord& h) {
    TwistWord r;
    r.surface = w.surface;
    for (const auto& l : w.letters)
        r.letters.push_back(TwistLetter{apply_word(h, l.curve), l.sign});
    return r;
}

TwistWord global_conjugate(const TwistWord& w, const TwistWord& h) {
    // h t_c^e h^{-1} = t_{h(c)}^e letter by letter
    return push_forward(w, h);
}

std::vector<PathWord> filling_arcs(const Surface& s) {
    std::vector<PathWord> arcs;
    int k = 0;
    for (EdgeId b : s.bands()) arcs.push_back(cocore_arc(s, b, Rat(7919 + k++)));
    return arcs;
}

MappingClassReport verify_factorization(const TwistWord& word, const TwistWord& target) {
    if (word.surface != target.surface)
        throw std::runtime_error("factorization check across surfaces");
    const Surface& s = *word.surface;
    if (s.boundary_count() == 0)
        throw std::runtime_error("factorization check needs a surface with boundary");
    MappingClassReport rep;
    rep.h1_matrix = h1_action(word);
    rep.h1_pass = mat_equal(rep.h1_matrix, h1_action(target));
    rep.alexander_pass = true;
    for (const PathWord& arc : filling_arcs(s)) {
        PathWord im1 = apply_word(word, arc);
        PathWord im2 = apply_word(target, arc);
        rep.arcs_checked++;
        if (!same_path(im1, im2)) {
            rep.alexander_pass = false;
            break;
        }
    }
    return rep;
}

TwistWord boundary_multitwist(const Surface& s, int circle, int n) {
    TwistWord w;
    w.surface = &s;
    PathWord d = boundary_parallel(s, circle);
    int sign = n >= 0 ? +1 : -1;
    for (int i = 0; i < std::abs(n); i++) w.letters.push_back(TwistLetter{d, sign});
    return w;
}

std::map<std::string, PathWord> standard_curves(const Surface& s) {
    std::map<std::string, PathWord> lib;
    auto [g, b] = classify(s);
    for (EdgeId e : s.bands()) lib[s.edge(e).label] = band_loop(s, e);
    if (b >= 1) lib["delta"] = boundary_parallel(s, 0);
    if (b == 2) {
        lib["delta1"] = boundary_parallel(s, 0);
        lib["delta2"] = boundary_parallel(s, 1);
        lib["delta3"] = genus_boundary(s, g);
    }
    if (g == 2 && b <= 1) {
        // the genus-2 positive factorization curves: c1 separates the two
        // handle pairs; D0, D1, D2 run through both
        EdgeId a1 = s.edge_by_label("a1"), b1 = s.edge_by_label("b1");
        EdgeId a2 = s.edge_by_label("a2"), b2 = s.edge_by_label("b2");
        lib["c1"] = genus_boundary(s, 1);
        lib["D0"] = multi_band_loop(s, {Letter{a1, +1}, Letter{a2, +1}});
        lib["D1"] = multi_band_loop(s, {Letter{b1, +1}, Letter{b2, +1}});
        lib["D2"] = multi_band_loop(
            s, {Letter{b1, +1}, Letter{a1, -1}, Letter{b2, +1}, Letter{a2, -1}});
    }
    return lib;
}

TwistWord torus_fibration_word(const Surface& s11, int n) {
    auto lib = standard_curves(s11);
    TwistWord w;
    w.surface = &s11;
    for (int i = 0; i < 6 * n; i++) {
        w.letters.push_back(TwistLetter{lib.at("a1"), +1});
        w.letters.push_back(TwistLetter{lib.at("b1"), +1});
    }
    return w;
}

TwistWord gurtas_word(const Surface& s, int n, int h) {
    if (n != 1 || h != 1)
        throw std::runtime_error("only the n=1, h=1 word is built in");
    return matsumoto_word(s);
}

TwistWord matsumoto_word(const Surface& s21) {
    auto lib = standard_curves(s21);
    TwistWord w;
    w.surface = &s21;
    for (int rep = 0; rep < 2; rep++) {
        w.letters.push_back(TwistLetter{lib.at("c1"), +1});
        w.letters.push_back(TwistLetter{lib.at("D2"), +1});
        w.letters.push_back(TwistLetter{lib.at("D1"), +1});
        w.letters.push_back(TwistLetter{lib.at("D0"), +1});
    }
    return w;
}

TwistWord dolgachev_word(const Surface& s21) {
    TwistWord w = matsumoto_word(s21);
    auto lib = standard_curves(s21);
    TwistWord h;
    h.surface = &s21;
    h.letters.push_back(TwistLetter{lib.at("a1"), -1});
    h.letters.push_back(TwistLetter{lib.at("b1"), -1});
    TwistWord hw = push_forward(w, h);
    return concat(w, hw);
}

} // namespace tri
