#ifndef TRI_MCG_HPP
#define TRI_MCG_HPP

#include "tri/curve.hpp"
#include "tri/homology.hpp"
#include "tri/ops.hpp"

#include <map>
#include <string>

namespace tri {

// An ordered product of (signed) Dehn twists.  letters[0] acts first.
struct TwistLetter {
    PathWord curve;
    int sign = +1;
};
struct TwistWord {
    const Surface* surface = nullptr;
    std::vector<TwistLetter> letters;
    int length() const { return (int)letters.size(); }
};

PathWord apply_word(const TwistWord& w, const PathWord& target);
TwistWord inverse_word(const TwistWord& w);
TwistWord concat(const TwistWord& first, const TwistWord& then);

// first-homology data in the band-loop basis of a disk-with-bands surface
Mat band_pairing_form(const Surface& s);
Vec band_class(const PathWord& curve);
Mat h1_transvection(const Surface& s, const PathWord& curve, int sign);
Mat h1_action(const TwistWord& w);

// Elementary reordering move at application positions i, i+1 (1-based i,
// 1 <= i < length); the composite mapping class is unchanged.  to_left moves
// the earlier letter past the later one; the two moves are inverse.
TwistWord hurwitz_move(const TwistWord& w, int i, bool to_left);

// Apply h to every twisting curve ("push forward the vanishing cycles").
TwistWord push_forward(const TwistWord& w, const TwistWord& h);
// Letterwise conjugation h t h^{-1}; coincides with push_forward on twists.
TwistWord global_conjugate(const TwistWord& w, const TwistWord& h);

// The band co-core arcs, which cut the surface to a disk.
std::vector<PathWord> filling_arcs(const Surface& s);

struct MappingClassReport {
    Mat h1_matrix;          // action of `word`
    bool h1_pass = false;   // h1 agreement with the target
    bool alexander_pass = false;
    int arcs_checked = 0;
};
// Decide whether two words give the same mapping class rel boundary: compare
// the h1 action and the images of the filling arc system.
MappingClassReport verify_factorization(const TwistWord& word, const TwistWord& target);

// t_delta^n along a boundary-parallel curve
TwistWord boundary_multitwist(const Surface& s, int circle, int n);

// named standard curves on the disk-with-bands models
std::map<std::string, PathWord> standard_curves(const Surface& s);

// standard monodromy words; each lives on the stated model surface
TwistWord torus_fibration_word(const Surface& s11, int n);        // (t_b t_a)^{6n}
TwistWord gurtas_word(const Surface& s, int n, int h);            // eta_{n-1,h}^2
TwistWord matsumoto_word(const Surface& s21);                     // gurtas(1,1)
TwistWord dolgachev_word(const Surface& s21);                     // h(W)W twisted sum

} // namespace tri

#endif
