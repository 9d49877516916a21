#ifndef TRI_ARRANGEMENT_HPP
#define TRI_ARRANGEMENT_HPP

#include "tri/curve.hpp"
#include "tri/surface.hpp"

#include <optional>
#include <set>
#include <vector>

namespace tri {

// A system of curves and arcs drawn on a cellulated surface.  Each strand is
// a sequence of edge-crossing events; every edge carries the linear order of
// the events along it.  Chords between consecutive events are implicit: two
// chords in a face cross exactly when their endpoints interleave around the
// face walk.  The drawn position is exact; isotopy moves (bigon sweeps) and
// cellulation changes (edge splits, handle insertion, surgery) rewrite it.
class Arrangement {
public:
    struct Event {
        int strand = -1;
        EdgeId edge = -1;
        int dir = 0;       // +1: into the face of the forward dart
        bool alive = false;
    };
    struct Strand {
        bool alive = false;
        bool closed = true;
        std::vector<int> evs;  // event ids along the strand
        ArcEnd ends[2];        // arcs only
        FaceId home_face = -1; // empty closed strand's face
    };

    explicit Arrangement(Surface s);

    const Surface& surface() const { return surf_; }
    Surface& surface_mut() { return surf_; }

    // Insert a path value; events are appended after existing ones on each
    // edge, internally ordered by itinerary comparison.  Word must be reduced.
    int add(const PathWord& p);
    void remove(int sid);
    PathWord extract(int sid) const;

    int strand_count() const { return (int)strands_.size(); }
    const Strand& strand(int sid) const { return strands_[sid]; }
    const Event& event(int ev) const { return events_[ev]; }
    bool alive(int sid) const { return sid >= 0 && sid < (int)strands_.size() && strands_[sid].alive; }

    // ---- queries ---------------------------------------------------------
    long long drawn_crossings(int a, int b) const;
    long long signed_crossings(int a, int b) const;
    bool self_embedded(int sid) const;
    // all drawn crossings between a and b, as (chord index in a, chord index
    // in b, sign), ordered deterministically
    struct Crossing {
        int chord_a, chord_b;
        int sign;
    };
    std::vector<Crossing> crossings(int a, int b) const;

    // ---- isotopy ---------------------------------------------------------
    // Sweep bigons between `mover` and the frozen strands until none remain.
    // Only `mover` is modified.  Returns the number of sweeps.
    int reduce_against(int mover, const std::vector<int>& frozen);

    // Replace a run of the mover (the events in `interior`, contiguous along
    // the strand) by a path parallel to the frozen events `fpath` (in travel
    // order), placed on the side away from the swept region.
    // region_left: the vacated region lies left of the frozen direction.
    // insert_chord: word position of the swept chord when interior is empty.
    void apply_sweep(int mover, const std::vector<int>& interior, int frozen,
                     const std::vector<int>& fpath, int travel_dir,
                     bool region_left, int insert_chord);

    // ---- cellulation changes --------------------------------------------
    // Split edge e at the gap before order index `gap` (0..#events).
    // Returns {front, back} edge ids.
    std::pair<EdgeId, EdgeId> split_edge(EdgeId e, int gap);

    // Replace event `ev` (on an interior edge) by a genus-1 widget the strand
    // passes through.  The strand letter (e,d) becomes the letter sequence
    // through the widget ports.  Returns the widget's named edges.
    struct Widget {
        EdgeId port_in, port_out; // entry/exit relative to the host event dir
        EdgeId foot_in, foot_out; // h-circles on the entry/exit side
        EdgeId seam_u, seam_w;    // lens seams around the feet
        EdgeId seam_s;            // tube seam; crossing it winds the tube
    };
    Widget insert_widget(int ev);

    // event order along an edge (ids)
    const std::vector<int>& edge_events(EdgeId e) const { return order_[e]; }
    int event_index(int ev) const;

    // size of the point space on an edge: events (interior) or arc anchors
    // (boundary); intrinsic point keys are 2*rank+1, gaps 2*rank, and a
    // reversed dart sees key k as 2*point_space(e) - k.
    long long point_space(EdgeId e) const;

    // Drop dead events, renumber nothing (ids stay stable).
    void check() const; // full invariant pass (debug)

private:
    Surface surf_;
    std::vector<Event> events_;
    std::vector<Strand> strands_;
    std::vector<std::vector<int>> order_; // per edge

    friend class FaceGeometry;
    friend class Reducer;
    friend struct SurgeryOps;

    int new_event(int strand, EdgeId e, int dir);
    void erase_event(int ev);
    void place_block(int sid);                 // initial placement of a new strand
    int compare_same_strand(int ea, int eb) const; // itinerary order on an edge
};

// Endpoint of a chord on a face walk: position = (slot in walk, key along the
// edge oriented by the dart, tiebreak).  Anchors of arcs on boundary edges
// are ordered by their rational positions.
struct FacePt {
    int slot = -1;
    long long along = -1;
    bool operator<(const FacePt& o) const {
        return slot != o.slot ? slot < o.slot : along < o.along;
    }
    bool operator==(const FacePt&) const = default;
};

// Chord of a strand: between node i and node i+1.  For closed strands nodes
// are events (cyclic); for arcs node 0 is the start anchor and node n+1 the
// end anchor.
struct ChordRef {
    int strand = -1;
    int index = -1;
    bool operator==(const ChordRef&) const = default;
    bool operator<(const ChordRef& o) const {
        return strand != o.strand ? strand < o.strand : index < o.index;
    }
};

// Per-face chord geometry: resolves chord endpoints to face positions and
// answers interleaving questions.
class FaceGeometry {
public:
    FaceGeometry(const Arrangement& arr, const std::vector<int>& participants);

    struct Chord {
        ChordRef ref;
        FaceId face;
        FacePt a, b; // a = source endpoint (strand direction), b = target
    };
    const std::vector<Chord>& chords() const { return chords_; }
    // chords bucketed per face
    const std::vector<std::vector<int>>& per_face() const { return by_face_; }

    static bool cyc_between(const FacePt& a, const FacePt& x, const FacePt& b);
    static bool interleaved(const Chord& c1, const Chord& c2);
    static int cross_sign(const Chord& c1, const Chord& c2); // +1 if (a1,a2,b1,b2) ccw

private:
    std::vector<Chord> chords_;
    std::vector<std::vector<int>> by_face_;
};

// number of chords of a strand
int chord_count(const Arrangement& arr, int sid);
// face a given chord lies in, and its endpoints
FaceId chord_face(const Arrangement& arr, int sid, int index);
// rank of an anchor position among all arc ends on a boundary edge
long long anchor_rank_in(const Arrangement& arr, EdgeId e, const Rat& pos);

} // namespace tri

#endif
