#ifndef TRI_REGIONS_HPP
#define TRI_REGIONS_HPP

#include "tri/arrangement.hpp"

#include <map>
#include <optional>
#include <set>

namespace tri {

// Complement-region analysis of a set of participant strands: per-face
// subdivisions by their chords, fragments, and the regions obtained by gluing
// fragments across the cellulation edges.  Participants must be drawn so that
// crossings only occur between the mover and the frozen family (reduction) or
// not at all (surgery).
struct RegionAnalysis {
    struct Cross {
        int c1, c2;    // global chord indices (c1 < c2)
        int r1, r2;    // rank of this crossing along c1 / c2
        int sign;      // +1 if (a1, a2, b1, b2) ccw
    };
    struct Piece {
        bool is_arc;     // circle run between consecutive marked points
        int arc_index;   // for circle runs
        int chord;       // global chord index
        int piece_index; // 0..#crossings on the chord
        bool forward;    // chord pieces: traversed along the chord direction
    };
    struct Fragment {
        FaceId face;
        bool whole_face = false;
        std::vector<Piece> pieces;
    };
    struct Pt {
        FacePt at;
        int chord;
        bool is_a;
    };

    const Arrangement* arr = nullptr;
    FaceGeometry geo;
    std::vector<int> participants;
    std::set<int> pset;

    // per face
    std::vector<std::vector<Pt>> pts;                 // sorted marked points
    std::vector<std::vector<Cross>> crossings;        // per face
    std::vector<std::map<int, std::vector<int>>> along; // chord -> crossing ids
    std::vector<std::vector<Fragment>> frags;

    // global fragment ids
    std::vector<int> offset; // per face
    int nfrag = 0;
    mutable std::vector<int> uf;

    // region stats (keyed by representative)
    std::map<int, long long> chi;
    std::map<int, bool> touches_boundary;
    struct Visit {
        FaceId face;
        int cross_id;
        int fragment; // global id
    };
    std::map<int, std::vector<Visit>> visits;

    int find(int x) const;
    int region_of_fragment(int frag) const { return find(frag); }
    int fragment_at(FaceId f, const FacePt& at) const;
    // oriented key helpers
    static long long oriented(long long key, bool fwd, long long n);

    RegionAnalysis(const Arrangement& a, std::vector<int> parts);

private:
    std::map<int, int> arc_owner_at(FaceId f) const;
    std::vector<std::map<int, int>> arc_owner_; // per face: arc index -> local fragment
    void build();
};

// Bigon sweeps between a mover and a frozen family.  Implementation of
// Arrangement::reduce_against.
int reduce_mover(Arrangement& arr, int mover, const std::vector<int>& frozen);

} // namespace tri

#endif
