#ifndef TRI_SURFACE_HPP
#define TRI_SURFACE_HPP

#include <string>
#include <vector>

namespace tri {

using EdgeId = int;
using FaceId = int;

// A directed traversal of an edge inside a face walk.
struct Dart {
    EdgeId edge = -1;
    bool forward = true;
    bool operator==(const Dart&) const = default;
};

// Slot of a dart inside the cellulation: which face walk, at which position.
struct DartRef {
    FaceId face = -1;
    int slot = -1;
    bool operator==(const DartRef&) const = default;
};

// Compact oriented surface given as a polygonal cellulation.  Every face is a
// disk listed as a cyclic walk of darts with the face on the left, so the two
// occurrences of an interior edge are traversed in opposite directions.
// Boundary edges occur in exactly one face walk.  Vertices are implicit
// (corner orbits).
class Surface {
public:
    struct Edge {
        std::string label;      // optional, used by constructors
        DartRef side[2];        // side[1] = forward occurrence, side[0] = reverse
        int occurrences = 0;    // 1 = boundary edge, 2 = interior
    };
    struct Face {
        std::vector<Dart> walk;
    };

    EdgeId add_edge(std::string label = "");
    FaceId add_face(std::vector<Dart> walk);

    // Consistency: each edge in 1 or 2 walks, opposite directions if 2.
    void validate() const;

    int edge_count() const { return (int)edges_.size(); }
    int face_count() const { return (int)faces_.size(); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const Face& face(FaceId f) const { return faces_[f]; }
    const std::vector<Face>& faces() const { return faces_; }

    bool is_boundary_edge(EdgeId e) const { return edges_[e].occurrences == 1; }
    bool is_interior_edge(EdgeId e) const { return edges_[e].occurrences == 2; }

    // The face occurrence of a dart; for interior edges both directions exist.
    DartRef dart_ref(EdgeId e, bool forward) const { return edges_[e].side[forward ? 1 : 0]; }
    bool has_dart(EdgeId e, bool forward) const { return dart_ref(e, forward).face >= 0; }
    Dart dart_at(DartRef r) const { return faces_[r.face].walk[r.slot]; }

    int vertex_count() const;
    int euler_characteristic() const;

    // Boundary circles as cyclic dart lists (each dart a boundary edge,
    // traversed with the surface on its left).
    std::vector<std::vector<Dart>> boundary_circles() const;
    int boundary_count() const { return (int)boundary_circles().size(); }
    int genus() const;

    // --- standard models -------------------------------------------------

    // Sigma_{p,b}: a disk with 2p+b-1 bands, given as one polygonal face with
    // band edges appearing twice.  Genus bands come in interleaved pairs
    // labelled a1,b1,...,ap,bp; the remaining b-1 bands (c1,...) each split
    // off one boundary circle.  Requires b >= 1.
    static Surface disk_with_bands(int p, int b);

    // Closed Sigma_g: disk_with_bands(g, 1) with the boundary capped.
    static Surface closed_surface(int g);

    // Glue a disk face onto the given boundary circle (by index into
    // boundary_circles()).  Returns the cap face id.
    FaceId cap_boundary(int circle_index);

    EdgeId edge_by_label(const std::string& label) const;

    // Band edges of disk_with_bands, in creation order.
    const std::vector<EdgeId>& bands() const { return bands_; }
    void note_band(EdgeId e) { bands_.push_back(e); }

    // Replace the dart at (face, slot) by a sequence of darts, then reindex.
    void splice_walk(FaceId f, int slot, const std::vector<Dart>& replacement);
    // Recompute edge occurrence data from the face walks.
    void reindex();

private:
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<EdgeId> bands_;

    // corner orbit machinery
    friend class CornerOrbits;
};

// Union-find over dart endpoints; computes vertices and boundary traversal.
class CornerOrbits {
public:
    explicit CornerOrbits(const Surface& s);
    int vertex_classes() const { return classes_; }
    // representative of the vertex at the head (end) / tail (start) of a dart slot
    int head(FaceId f, int slot) const;
    int tail(FaceId f, int slot) const;

private:
    const Surface& s_;
    std::vector<int> parent_;
    mutable std::vector<int> rank_;
    int classes_ = 0;
    std::vector<int> face_offset_;
    int find(int x) const;
    void unite(int a, int b);
    int head_token(FaceId f, int slot) const;
    int tail_token(FaceId f, int slot) const;
};

} // namespace tri

#endif
