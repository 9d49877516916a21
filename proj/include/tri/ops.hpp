#ifndef TRI_OPS_HPP
#define TRI_OPS_HPP

#include "tri/arrangement.hpp"
#include "tri/curve.hpp"

#include <map>
#include <vector>

namespace tri {

// Minimal transverse intersection count (bigon-free position).
long long geometric_intersection(const PathWord& a, const PathWord& b);

// Signed count, from any common transverse drawing; antisymmetric.
long long algebraic_intersection(const PathWord& a, const PathWord& b);

// Dehn twist of a curve or arc along a closed curve.  sign=+1 is the twist
// matching the fixed surface orientation convention (transvection
// x -> x + sign*<x,c>*c on first homology).
PathWord dehn_twist(const PathWord& target, const PathWord& twister, int sign);

// Band sum of an arc (or curve) with a parallel push-off of a closed curve.
// The band runs inside a shared face from the given target chord to the given
// chord of `over`; direction picks the traversal sense of the push-off.
struct SlideSite {
    int target_chord = 0;
    int over_chord = 0;
};
PathWord slide_arc(const PathWord& target, const PathWord& over, const SlideSite& site,
                   int direction);
// all valid slide sites (chord pairs sharing a face)
std::vector<SlideSite> slide_sites(const PathWord& target, const PathWord& over);

// Surgery along a family of disjoint closed curves (cut and cap both sides),
// or cutting along disjoint arcs (no caps).  Closed members must be
// essential-or-at-least nonempty.  Passengers must be disjoint from the
// family; they are re-expressed on the result.
struct SurgeredSurface {
    Surface surface;
    std::vector<PathWord> images;
    // for each closed family member, the two cap faces
    std::vector<std::pair<FaceId, FaceId>> caps;
};
SurgeredSurface surger(const Surface& s, const std::vector<PathWord>& family,
                       const std::vector<PathWord>& passengers);
SurgeredSurface cut_along(const Surface& s, const std::vector<PathWord>& family,
                          const std::vector<PathWord>& passengers);

// Glue two surfaces along matched boundary circles (orientation reversing).
// Arc systems with mirrored end positions concatenate to closed curves.
struct GlueMatch {
    int circle1 = 0;
    int circle2 = 0;
    int offset = 0; // rotation of the identification
};
struct GluedSurface {
    Surface surface;
    std::vector<PathWord> images1, images2; // closed curves carried over
    std::vector<PathWord> joined;           // arcs1[i] + partner arc, closed
    std::vector<int> partner;               // index into arcs2 per joined curve
};
GluedSurface glue_boundaries(const Surface& s1, const Surface& s2,
                             const std::vector<GlueMatch>& matching,
                             const std::vector<PathWord>& curves1,
                             const std::vector<PathWord>& curves2,
                             const std::vector<PathWord>& arcs1,
                             const std::vector<PathWord>& arcs2);

// (genus, boundary count), with orientability and chi checks
std::pair<int, int> classify(const Surface& s);

} // namespace tri

#endif
