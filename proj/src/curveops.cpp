#include "tri/curve.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace tri {

// ------------------------------------------------------------------- Rat --

static long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a ? a : 1;
}

Rat::Rat(long long num, long long den) : n(num), d(den) {
    if (d == 0) throw std::runtime_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    long long g = gcd_ll(n, d);
    n /= g; d /= g;
}

int Rat::cmp(const Rat& a, const Rat& b) {
    __int128 lhs = (__int128)a.n * b.d;
    __int128 rhs = (__int128)b.n * a.d;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

Rat midpoint(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.n * b.d + (__int128)b.n * a.d;
    __int128 d = (__int128)2 * a.d * b.d;
    if (n > INT64_MAX / 2 || n < INT64_MIN / 2 || d > INT64_MAX / 2)
        throw std::runtime_error("anchor position overflow");
    return Rat((long long)n, (long long)d);
}

// ------------------------------------------------------------ path words --

FaceId face_after(const Surface& s, const Letter& l) {
    return s.dart_ref(l.edge, l.dir > 0).face;
}
FaceId face_before(const Surface& s, const Letter& l) {
    return s.dart_ref(l.edge, l.dir < 0).face;
}
DartRef dart_after(const Surface& s, const Letter& l) {
    return s.dart_ref(l.edge, l.dir > 0);
}
DartRef dart_before(const Surface& s, const Letter& l) {
    return s.dart_ref(l.edge, l.dir < 0);
}

static FaceId anchor_face(const Surface& s, const ArcEnd& a) {
    if (!s.is_boundary_edge(a.edge))
        throw std::runtime_error("arc anchor not on a boundary edge");
    bool fwd = s.has_dart(a.edge, true);
    return s.dart_ref(a.edge, fwd).face;
}

void validate_path(const PathWord& p) {
    const Surface& s = *p.surface;
    int m = (int)p.word.size();
    for (const Letter& l : p.word) {
        if (l.edge < 0 || l.edge >= s.edge_count() || s.edge(l.edge).occurrences == 0)
            throw std::runtime_error("path crosses a dead edge");
        if (s.is_boundary_edge(l.edge))
            throw std::runtime_error("path crosses a boundary edge");
        if (l.dir != 1 && l.dir != -1) throw std::runtime_error("bad crossing direction");
    }
    if (p.closed) {
        if (m == 0) {
            if (p.home_face < 0) throw std::runtime_error("empty loop without a home face");
            return;
        }
        for (int i = 0; i < m; i++)
            if (face_after(s, p.word[i]) != face_before(s, p.word[(i + 1) % m]))
                throw std::runtime_error("inconsistent chord faces in closed path");
    } else {
        FaceId f0 = anchor_face(s, p.ends[0]);
        FaceId f1 = anchor_face(s, p.ends[1]);
        if (m == 0) {
            if (f0 != f1) throw std::runtime_error("empty arc spans two faces");
            return;
        }
        if (f0 != face_before(s, p.word[0]) || f1 != face_after(s, p.word[m - 1]))
            throw std::runtime_error("arc anchors in wrong faces");
        for (int i = 0; i + 1 < m; i++)
            if (face_after(s, p.word[i]) != face_before(s, p.word[i + 1]))
                throw std::runtime_error("inconsistent chord faces in arc");
    }
}

PathWord reduced(const PathWord& p) {
    PathWord q = p;
    auto cancels = [](const Letter& a, const Letter& b) {
        return a.edge == b.edge && a.dir == -b.dir;
    };
    std::vector<Letter> out;
    FaceId last_face = -1;
    for (const Letter& l : q.word) {
        if (!out.empty() && cancels(out.back(), l)) {
            last_face = face_before(*q.surface, out.back());
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    if (q.closed) {
        while (out.size() >= 2 && cancels(out.front(), out.back())) {
            last_face = face_before(*q.surface, out.front());
            out.erase(out.begin());
            out.pop_back();
        }
        if (out.empty() && q.home_face < 0) q.home_face = last_face;
    }
    q.word = std::move(out);
    return q;
}

PathWord reversed(const PathWord& p) {
    PathWord q = p;
    std::reverse(q.word.begin(), q.word.end());
    for (Letter& l : q.word) l.dir = -l.dir;
    if (!q.closed) std::swap(q.ends[0], q.ends[1]);
    return q;
}

static std::vector<int> letters_key(const std::vector<Letter>& w) {
    std::vector<int> k;
    k.reserve(w.size());
    for (const Letter& l : w) k.push_back(2 * l.edge + (l.dir > 0 ? 1 : 0));
    return k;
}

static std::vector<int> min_rotation(std::vector<int> v) {
    if (v.empty()) return v;
    std::vector<int> best = v;
    for (size_t i = 1; i < v.size(); i++) {
        std::rotate(v.begin(), v.begin() + 1, v.end());
        if (v < best) best = v;
    }
    return best;
}

std::vector<int> canonical_key(const PathWord& p) {
    PathWord q = reduced(p);
    if (q.closed) {
        auto k1 = min_rotation(letters_key(q.word));
        auto k2 = min_rotation(letters_key(reversed(q).word));
        return std::min(k1, k2);
    }
    // arcs: orientation fixed by the anchors; compare both if ends coincide
    auto k1 = letters_key(q.word);
    auto k2 = letters_key(reversed(q).word);
    std::vector<int> key = std::min(k1, k2);
    return key;
}

bool same_path(const PathWord& a, const PathWord& b) {
    if (a.surface != b.surface || a.closed != b.closed) return false;
    if (!a.closed) {
        bool ends_match = (a.ends[0] == b.ends[0] && a.ends[1] == b.ends[1]) ||
                          (a.ends[0] == b.ends[1] && a.ends[1] == b.ends[0]);
        if (!ends_match) return false;
        PathWord ra = reduced(a), rb = reduced(b);
        if (ra.ends[0] == rb.ends[0] && ra.ends[1] == rb.ends[1] &&
            letters_key(ra.word) == letters_key(rb.word))
            return true;
        PathWord rb2 = reversed(rb);
        return ra.ends[0] == rb2.ends[0] && ra.ends[1] == rb2.ends[1] &&
               letters_key(ra.word) == letters_key(rb2.word);
    }
    return canonical_key(a) == canonical_key(b);
}

std::vector<int> edge_vector(const PathWord& p) {
    std::vector<int> v(p.surface->edge_count(), 0);
    for (const Letter& l : p.word) v[l.edge] += l.dir;
    return v;
}

// ---------------------------------------------------------- constructors --

PathWord band_loop(const Surface& s, EdgeId band, int dir) {
    PathWord p;
    p.surface = &s;
    p.closed = true;
    p.word = {Letter{band, dir}};
    validate_path(p);
    return p;
}

PathWord multi_band_loop(const Surface& s, const std::vector<Letter>& letters) {
    PathWord p;
    p.surface = &s;
    p.closed = true;
    p.word = letters;
    validate_path(p);
    return p;
}

PathWord boundary_parallel(const Surface& s, int circle_index) {
    auto circles = s.boundary_circles();
    const auto& circle = circles.at(circle_index);
    CornerOrbits orbits(s);
    PathWord p;
    p.surface = &s;
    p.closed = true;
    // Walk the circle; at each vertex between consecutive boundary darts,
    // cross the interior edges of the corner fan in rotation order.
    int n = (int)circle.size();
    for (int i = 0; i < n; i++) {
        Dart d = circle[i];
        DartRef r = s.dart_ref(d.edge, d.forward);
        // fan at the head of d: step from (face,slot) to the next dart around
        FaceId f = r.face;
        int slot = r.slot;
        while (true) {
            const auto& w = s.face(f).walk;
            int next_slot = (slot + 1) % (int)w.size();
            Dart nd = w[next_slot];
            if (s.is_boundary_edge(nd.edge)) break; // reached the next boundary dart
            // cross nd near its tail: from face f into the face on its other side
            int dir = nd.forward ? -1 : +1; // into the face of the opposite dart
            p.word.push_back(Letter{nd.edge, dir});
            DartRef opp = s.dart_ref(nd.edge, !nd.forward);
            f = opp.face;
            slot = opp.slot;
        }
    }
    if (p.word.empty()) {
        // disk-like circle: a parallel loop inside the adjacent face
        Dart d = circle[0];
        p.home_face = s.dart_ref(d.edge, d.forward).face;
    }
    validate_path(p);
    return p;
}

PathWord genus_boundary(const Surface& s, int p_pairs) {
    // boundary of a neighbourhood of the first p genus band pairs
    PathWord p;
    p.surface = &s;
    p.closed = true;
    const auto& bands = s.bands();
    if (2 * p_pairs > (int)bands.size())
        throw std::runtime_error("not enough band pairs");
    for (int j = 0; j < p_pairs; j++) {
        EdgeId a = bands[2 * j], b = bands[2 * j + 1];
        p.word.push_back(Letter{a, +1});
        p.word.push_back(Letter{b, +1});
        p.word.push_back(Letter{a, -1});
        p.word.push_back(Letter{b, -1});
    }
    if (p.word.empty()) p.home_face = 0;
    validate_path(p);
    return p;
}

PathWord cocore_arc(const Surface& s, EdgeId band, const Rat& pos) {
    if (!s.is_interior_edge(band)) throw std::runtime_error("co-core of a boundary edge");
    PathWord p;
    p.surface = &s;
    p.closed = false;
    p.word = {Letter{band, +1}};
    // anchors on the boundary edges preceding the two darts of the band in
    // their face walks
    auto rim_before = [&](DartRef r) -> EdgeId {
        const auto& w = s.face(r.face).walk;
        int n = (int)w.size();
        for (int k = 1; k <= n; k++) {
            Dart d = w[(r.slot - k % n + n) % n];
            if (s.is_boundary_edge(d.edge)) return d.edge;
        }
        throw std::runtime_error("no rim edge near band attachment");
    };
    p.ends[0] = ArcEnd{rim_before(s.dart_ref(band, false)), pos};
    p.ends[1] = ArcEnd{rim_before(s.dart_ref(band, true)), pos};
    validate_path(p);
    return p;
}

} // namespace tri
