#ifndef TRI_CURVE_HPP
#define TRI_CURVE_HPP

#include "tri/surface.hpp"

#include <cstdint>
#include <vector>

namespace tri {

// Exact rational, used for boundary anchor positions.
struct Rat {
    long long n = 0, d = 1;
    Rat() = default;
    Rat(long long num, long long den = 1);
    static int cmp(const Rat& a, const Rat& b);
    bool operator<(const Rat& o) const { return cmp(*this, o) < 0; }
    bool operator==(const Rat& o) const { return cmp(*this, o) == 0; }
};
Rat midpoint(const Rat& a, const Rat& b);

// One transverse crossing of an edge.  dir=+1 crosses into the face holding
// the forward dart, dir=-1 into the face holding the reverse dart.
struct Letter {
    EdgeId edge = -1;
    int dir = +1;
    bool operator==(const Letter&) const = default;
};

inline Letter inverse(const Letter& l) { return Letter{l.edge, -l.dir}; }

struct ArcEnd {
    EdgeId edge = -1; // boundary edge
    Rat pos;
    bool operator==(const ArcEnd& o) const { return edge == o.edge && pos == o.pos; }
};

// A closed curve or properly embedded arc, up to the drawn position: the
// cyclic (or linear) sequence of edge crossings.  Arcs also fix their two
// boundary anchor points.
struct PathWord {
    const Surface* surface = nullptr;
    bool closed = true;
    std::vector<Letter> word;
    FaceId home_face = -1;   // face of an empty closed loop
    ArcEnd ends[2];          // arcs only: [0]=start, [1]=end

    bool empty() const { return word.empty(); }
    int length() const { return (int)word.size(); }
};

// face entered after crossing l
FaceId face_after(const Surface& s, const Letter& l);
// face the crossing starts from
FaceId face_before(const Surface& s, const Letter& l);
// the dart occurrence the crossing lands on / departs from
DartRef dart_after(const Surface& s, const Letter& l);
DartRef dart_before(const Surface& s, const Letter& l);

// consecutive-chord face consistency
void validate_path(const PathWord& p);

// Free reduction (cyclic for closed curves): cancel adjacent inverse letters.
PathWord reduced(const PathWord& p);

// Orientation reversal.
PathWord reversed(const PathWord& p);

// Canonical key for unoriented equality of reduced paths.
std::vector<int> canonical_key(const PathWord& p);
bool same_path(const PathWord& a, const PathWord& b);

// Signed count of crossings per edge (abelianized word).
std::vector<int> edge_vector(const PathWord& p);

// ------------------------------------------------------------ constructors

// Loop through one band: word [(e,+1)].
PathWord band_loop(const Surface& s, EdgeId band, int dir = +1);

// Loop through a list of bands in order.
PathWord multi_band_loop(const Surface& s, const std::vector<Letter>& letters);

// Curve just inside the given boundary circle.
PathWord boundary_parallel(const Surface& s, int circle_index);

// Separating curve around the genus pairs (a_i, b_i): product of commutator
// words.  p = number of leading genus pairs to enclose.
PathWord genus_boundary(const Surface& s, int p);

// Band co-core arc: crosses the band once, anchored on adjacent rim edges at
// the given anchor position.
PathWord cocore_arc(const Surface& s, EdgeId band, const Rat& pos);

} // namespace tri

#endif
