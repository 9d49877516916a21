#include "tri/surface.hpp"

#include <cassert>
#include <map>
#include <stdexcept>

namespace tri {

EdgeId Surface::add_edge(std::string label) {
    Edge e;
    e.label = std::move(label);
    edges_.push_back(e);
    return (int)edges_.size() - 1;
}

FaceId Surface::add_face(std::vector<Dart> walk) {
    FaceId f = (int)faces_.size();
    faces_.push_back(Face{std::move(walk)});
    const auto& w = faces_[f].walk;
    for (int i = 0; i < (int)w.size(); i++) {
        Edge& e = edges_.at(w[i].edge);
        int side = w[i].forward ? 1 : 0;
        if (e.side[side].face >= 0)
            throw std::runtime_error("edge traversed twice in the same direction");
        e.side[side] = DartRef{f, i};
        e.occurrences++;
        if (e.occurrences > 2)
            throw std::runtime_error("edge on more than two face sides");
    }
    return f;
}

void Surface::reindex() {
    for (auto& e : edges_) {
        e.side[0] = DartRef{};
        e.side[1] = DartRef{};
        e.occurrences = 0;
    }
    for (int f = 0; f < (int)faces_.size(); f++) {
        const auto& w = faces_[f].walk;
        for (int i = 0; i < (int)w.size(); i++) {
            Edge& e = edges_.at(w[i].edge);
            int side = w[i].forward ? 1 : 0;
            if (e.side[side].face >= 0)
                throw std::runtime_error("edge traversed twice in the same direction");
            e.side[side] = DartRef{f, i};
            e.occurrences++;
        }
    }
}

void Surface::splice_walk(FaceId f, int slot, const std::vector<Dart>& replacement) {
    auto& w = faces_.at(f).walk;
    w.erase(w.begin() + slot);
    w.insert(w.begin() + slot, replacement.begin(), replacement.end());
    reindex();
}

void Surface::validate() const {
    for (int e = 0; e < (int)edges_.size(); e++) {
        // occurrences == 0 marks an edge retired by a splice
        if (edges_[e].occurrences > 2)
            throw std::runtime_error("edge " + std::to_string(e) + " has bad occurrence count");
    }
    for (const auto& f : faces_)
        if (f.walk.empty()) throw std::runtime_error("empty face walk");
}

EdgeId Surface::edge_by_label(const std::string& label) const {
    for (int e = 0; e < (int)edges_.size(); e++)
        if (edges_[e].label == label) return e;
    throw std::runtime_error("no edge labelled " + label);
}

// ---------------------------------------------------------------- corners --

CornerOrbits::CornerOrbits(const Surface& s) : s_(s) {
    int total = 0;
    face_offset_.resize(s.face_count());
    for (int f = 0; f < s.face_count(); f++) {
        face_offset_[f] = total;
        total += 2 * (int)s.face(f).walk.size();
    }
    parent_.resize(total);
    rank_.assign(total, 0);
    for (int i = 0; i < total; i++) parent_[i] = i;
    classes_ = total;

    for (int f = 0; f < s.face_count(); f++) {
        const auto& w = s.face(f).walk;
        int n = (int)w.size();
        for (int i = 0; i < n; i++) {
            // consecutive darts share a vertex
            unite(head_token(f, i), tail_token(f, (i + 1) % n));
            // opposite side of an interior edge
            const Dart& d = w[i];
            DartRef opp = s.dart_ref(d.edge, !d.forward);
            if (opp.face >= 0) {
                unite(head_token(f, i), tail_token(opp.face, opp.slot));
                unite(tail_token(f, i), head_token(opp.face, opp.slot));
            }
        }
    }
}

int CornerOrbits::head_token(FaceId f, int slot) const { return face_offset_[f] + 2 * slot + 1; }
int CornerOrbits::tail_token(FaceId f, int slot) const { return face_offset_[f] + 2 * slot; }
int CornerOrbits::head(FaceId f, int slot) const { return find(head_token(f, slot)); }
int CornerOrbits::tail(FaceId f, int slot) const { return find(tail_token(f, slot)); }

int CornerOrbits::find(int x) const {
    auto& p = const_cast<std::vector<int>&>(parent_);
    while (p[x] != x) { p[x] = p[p[x]]; x = p[x]; }
    return x;
}

void CornerOrbits::unite(int a, int b) {
    a = find(a); b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) rank_[a]++;
    classes_--;
}

int Surface::vertex_count() const { return CornerOrbits(*this).vertex_classes(); }

int Surface::euler_characteristic() const {
    int live_edges = 0;
    for (const auto& e : edges_)
        if (e.occurrences > 0) live_edges++;
    return vertex_count() - live_edges + face_count();
}

std::vector<std::vector<Dart>> Surface::boundary_circles() const {
    CornerOrbits orbits(*this);
    // boundary darts keyed by the vertex class of their tail
    std::map<int, std::pair<EdgeId, bool>> next_from_vertex;
    std::vector<std::pair<EdgeId, bool>> bdarts;
    for (int e = 0; e < (int)edges_.size(); e++) {
        if (!is_boundary_edge(e)) continue;
        bool fwd = has_dart(e, true);
        DartRef r = dart_ref(e, fwd);
        int tail = orbits.tail(r.face, r.slot);
        if (next_from_vertex.count(tail))
            throw std::runtime_error("boundary is not a 1-manifold");
        next_from_vertex[tail] = {e, fwd};
        bdarts.push_back({e, fwd});
    }
    std::vector<std::vector<Dart>> circles;
    std::map<EdgeId, bool> used;
    for (auto& [e0, fwd0] : bdarts) {
        if (used.count(e0)) continue;
        std::vector<Dart> circle;
        EdgeId e = e0; bool fwd = fwd0;
        while (!used.count(e)) {
            used[e] = true;
            circle.push_back(Dart{e, fwd});
            DartRef r = dart_ref(e, fwd);
            int v = orbits.head(r.face, r.slot);
            auto it = next_from_vertex.find(v);
            if (it == next_from_vertex.end())
                throw std::runtime_error("open boundary chain");
            e = it->second.first;
            fwd = it->second.second;
        }
        circles.push_back(std::move(circle));
    }
    return circles;
}

int Surface::genus() const {
    int chi = euler_characteristic();
    int b = boundary_count();
    int g2 = 2 - chi - b;
    assert(g2 % 2 == 0 && g2 >= 0);
    return g2 / 2;
}

// ----------------------------------------------------------------- models --

Surface Surface::disk_with_bands(int p, int b) {
    if (b < 1 || p < 0) throw std::runtime_error("disk_with_bands needs b>=1, p>=0");
    Surface s;
    std::vector<Dart> walk;
    int m = 0;
    auto rim = [&]() { // boundary segment of the disk rim
        EdgeId e = s.add_edge("m" + std::to_string(m++));
        walk.push_back(Dart{e, true});
    };
    rim();
    for (int j = 1; j <= p; j++) {
        EdgeId a = s.add_edge("a" + std::to_string(j));
        EdgeId bb = s.add_edge("b" + std::to_string(j));
        s.note_band(a);
        s.note_band(bb);
        walk.push_back(Dart{a, true});  rim();
        walk.push_back(Dart{bb, true}); rim();
        walk.push_back(Dart{a, false}); rim();
        walk.push_back(Dart{bb, false}); rim();
    }
    for (int j = 1; j <= b - 1; j++) {
        EdgeId c = s.add_edge("c" + std::to_string(j));
        s.note_band(c);
        walk.push_back(Dart{c, true});
        // segment between the two feet ends up on its own boundary circle
        EdgeId inner = s.add_edge("s" + std::to_string(j));
        walk.push_back(Dart{inner, true});
        walk.push_back(Dart{c, false});
        rim();
    }
    s.add_face(std::move(walk));
    s.validate();
    return s;
}

FaceId Surface::cap_boundary(int circle_index) {
    auto circles = boundary_circles();
    if (circle_index < 0 || circle_index >= (int)circles.size())
        throw std::runtime_error("no such boundary circle");
    const auto& circle = circles[circle_index];
    // cap walk: same edges, opposite direction, reversed order
    std::vector<Dart> walk;
    for (int i = (int)circle.size() - 1; i >= 0; i--)
        walk.push_back(Dart{circle[i].edge, !circle[i].forward});
    return add_face(std::move(walk));
}

Surface Surface::closed_surface(int g) {
    Surface s = disk_with_bands(g, 1);
    s.cap_boundary(0);
    s.validate();
    return s;
}

} // namespace tri
