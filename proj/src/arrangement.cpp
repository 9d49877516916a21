#include "tri/arrangement.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <map>
#include <stdexcept>

namespace tri {

Arrangement::Arrangement(Surface s) : surf_(std::move(s)) {
    order_.resize(surf_.edge_count());
}

int Arrangement::new_event(int strand, EdgeId e, int dir) {
    events_.push_back(Event{strand, e, dir, true});
    return (int)events_.size() - 1;
}

void Arrangement::erase_event(int ev) {
    EdgeId e = events_[ev].edge;
    auto& ord = order_[e];
    auto it = std::find(ord.begin(), ord.end(), ev);
    assert(it != ord.end());
    ord.erase(it);
    events_[ev].alive = false;
}

int Arrangement::event_index(int ev) const {
    const auto& ord = order_[events_[ev].edge];
    auto it = std::find(ord.begin(), ord.end(), ev);
    assert(it != ord.end());
    return (int)(it - ord.begin());
}

// anchor rank among all arc ends on a boundary edge, ordered by position
long long anchor_rank_in(const Arrangement& arr, EdgeId e, const Rat& pos) {
    std::vector<Rat> all;
    for (int sid = 0; sid < arr.strand_count(); sid++) {
        const auto& st = arr.strand(sid);
        if (!st.alive || st.closed) continue;
        for (int side = 0; side < 2; side++)
            if (st.ends[side].edge == e) all.push_back(st.ends[side].pos);
    }
    std::sort(all.begin(), all.end());
    auto it = std::lower_bound(all.begin(), all.end(), pos);
    return it - all.begin();
}

long long Arrangement::point_space(EdgeId e) const {
    if (surf_.is_boundary_edge(e)) {
        long long count = 0;
        for (const auto& st : strands_) {
            if (!st.alive || st.closed) continue;
            for (int side = 0; side < 2; side++)
                if (st.ends[side].edge == e) count++;
        }
        return std::max(count, 1LL);
    }
    return std::max((long long)order_[e].size(), 1LL);
}

int Arrangement::add(const PathWord& p) {
    PathWord q = reduced(p);
    q.surface = &surf_;
    validate_path(q);
    if (!q.closed) {
        for (int side = 0; side < 2; side++)
            for (const auto& st : strands_) {
                if (!st.alive || st.closed) continue;
                for (int s2 = 0; s2 < 2; s2++)
                    if (st.ends[s2].edge == q.ends[side].edge &&
                        st.ends[s2].pos == q.ends[side].pos)
                        throw std::runtime_error("duplicate arc anchor position");
            }
    }
    int sid = (int)strands_.size();
    Strand st;
    st.alive = true;
    st.closed = q.closed;
    st.home_face = q.home_face;
    st.ends[0] = q.ends[0];
    st.ends[1] = q.ends[1];
    for (const Letter& l : q.word) st.evs.push_back(new_event(sid, l.edge, l.dir));
    strands_.push_back(std::move(st));
    place_block(sid);
    return sid;
}

void Arrangement::remove(int sid) {
    Strand& st = strands_.at(sid);
    if (!st.alive) return;
    for (int ev : st.evs) erase_event(ev);
    st.evs.clear();
    st.alive = false;
}

PathWord Arrangement::extract(int sid) const {
    const Strand& st = strands_.at(sid);
    assert(st.alive);
    PathWord p;
    p.surface = &surf_;
    p.closed = st.closed;
    p.home_face = st.home_face;
    p.ends[0] = st.ends[0];
    p.ends[1] = st.ends[1];
    for (int ev : st.evs) p.word.push_back(Letter{events_[ev].edge, events_[ev].dir});
    return p;
}

// ------------------------------------------------------ itinerary compare --

namespace {
struct Ray {
    const Arrangement* arr;
    int sid;
    int idx;
    int step;
    bool at_anchor = false;
    int anchor_side = -1;

    Letter normalized(int i) const {
        const auto& st = arr->strand(sid);
        const auto& ev = arr->event(st.evs[i]);
        Letter l{ev.edge, ev.dir};
        if (step < 0) l.dir = -l.dir;
        return l;
    }
    bool advance() {
        const auto& st = arr->strand(sid);
        int m = (int)st.evs.size();
        int next = idx + step;
        if (st.closed) {
            idx = (next % m + m) % m;
            return true;
        }
        if (next < 0) { at_anchor = true; anchor_side = 0; return false; }
        if (next >= m) { at_anchor = true; anchor_side = 1; return false; }
        idx = next;
        return true;
    }
};
} // namespace

int Arrangement::compare_same_strand(int ea, int eb) const {
    const Event& A = events_[ea];
    const Event& B = events_[eb];
    assert(A.edge == B.edge && A.strand == B.strand);
    const Strand& st = strands_[A.strand];
    auto word_index = [&](int ev) {
        for (int i = 0; i < (int)st.evs.size(); i++)
            if (st.evs[i] == ev) return i;
        throw std::runtime_error("event not on strand");
    };
    Ray ra{this, A.strand, word_index(ea), A.dir > 0 ? +1 : -1};
    Ray rb{this, A.strand, word_index(eb), B.dir > 0 ? +1 : -1};

    FaceId face = surf_.dart_ref(A.edge, true).face;
    int entry_slot = surf_.dart_ref(A.edge, true).slot;
    int limit = 2 * (int)st.evs.size() + 4;
    for (int steps = 0; steps < limit; steps++) {
        bool alive_a = ra.advance();
        bool alive_b = rb.advance();
        int n = (int)surf_.face(face).walk.size();
        auto exit_key = [&](Ray& r, bool alive) -> std::pair<long long, long long> {
            int slot;
            long long along = 0;
            if (!alive) {
                const ArcEnd& ae = st.ends[r.anchor_side];
                DartRef dr = surf_.dart_ref(ae.edge, surf_.has_dart(ae.edge, true));
                assert(dr.face == face);
                slot = dr.slot;
                long long rank = anchor_rank_in(*this, ae.edge, ae.pos);
                Dart d = surf_.dart_at(dr);
                along = d.forward ? rank : (1000000 - rank);
            } else {
                Letter l = r.normalized(r.idx);
                DartRef dr = dart_before(surf_, l);
                assert(dr.face == face);
                slot = dr.slot;
            }
            long long dist = ((slot - entry_slot) % n + n) % n;
            return {dist, along};
        };
        bool diverge;
        if (alive_a != alive_b) diverge = true;
        else if (!alive_a) diverge = true;
        else diverge = !(ra.normalized(ra.idx) == rb.normalized(rb.idx));
        if (diverge) {
            auto ka = exit_key(ra, alive_a);
            auto kb = exit_key(rb, alive_b);
            if (ka == kb) throw std::runtime_error("itinerary tie between strand events");
            return ka < kb ? +1 : -1;
        }
        Letter l = ra.normalized(ra.idx);
        face = face_after(surf_, l);
        entry_slot = dart_after(surf_, l).slot;
    }
    throw std::runtime_error("non-primitive strand word");
}

void Arrangement::place_block(int sid) {
    Strand& st = strands_[sid];
    std::map<EdgeId, std::vector<int>> mine;
    for (int ev : st.evs) mine[events_[ev].edge].push_back(ev);
    for (auto& [e, list] : mine) {
        std::sort(list.begin(), list.end(),
                  [&](int x, int y) { return compare_same_strand(x, y) < 0; });
        for (int ev : list) order_[e].push_back(ev);
    }
}

// ------------------------------------------------------------- chord math --

int chord_count(const Arrangement& arr, int sid) {
    const auto& st = arr.strand(sid);
    int m = (int)st.evs.size();
    return st.closed ? m : m + 1;
}

FaceGeometry::FaceGeometry(const Arrangement& arr, const std::vector<int>& participants) {
    const Surface& s = arr.surface();
    by_face_.resize(s.face_count());
    auto event_pt = [&](int ev, bool to_side) -> std::pair<FaceId, FacePt> {
        const auto& E = arr.event(ev);
        Letter l{E.edge, E.dir};
        DartRef dr = to_side ? dart_after(s, l) : dart_before(s, l);
        int idx = arr.event_index(ev);
        int n = (int)arr.edge_events(E.edge).size();
        Dart d = s.dart_at(dr);
        long long along = d.forward ? idx : (n - 1 - idx);
        return {dr.face, FacePt{dr.slot, 2 * along + 1}};
    };
    auto anchor_pt = [&](const ArcEnd& ae) -> std::pair<FaceId, FacePt> {
        DartRef dr = s.dart_ref(ae.edge, s.has_dart(ae.edge, true));
        long long rank = anchor_rank_in(arr, ae.edge, ae.pos);
        long long n = arr.point_space(ae.edge);
        Dart d = s.dart_at(dr);
        long long key = 2 * rank + 1;
        return {dr.face, FacePt{dr.slot, d.forward ? key : 2 * n - key}};
    };
    for (int sid : participants) {
        const auto& st = arr.strand(sid);
        if (!st.alive) throw std::runtime_error("dead strand in face geometry");
        int m = (int)st.evs.size();
        if (st.closed && m == 0) continue;
        int chords = chord_count(arr, sid);
        for (int i = 0; i < chords; i++) {
            Chord c;
            c.ref = ChordRef{sid, i};
            std::pair<FaceId, FacePt> pa, pb;
            if (st.closed) {
                pa = event_pt(st.evs[i], true);
                pb = event_pt(st.evs[(i + 1) % m], false);
            } else {
                pa = (i == 0) ? anchor_pt(st.ends[0]) : event_pt(st.evs[i - 1], true);
                pb = (i == m) ? anchor_pt(st.ends[1]) : event_pt(st.evs[i], false);
            }
            if (pa.first != pb.first) throw std::runtime_error("chord spans two faces");
            c.face = pa.first;
            c.a = pa.second;
            c.b = pb.second;
            by_face_[c.face].push_back((int)chords_.size());
            chords_.push_back(c);
        }
    }
}

bool FaceGeometry::cyc_between(const FacePt& a, const FacePt& x, const FacePt& b) {
    if (a == b) return false;
    if (a < b) return a < x && x < b;
    return a < x || x < b;
}

bool FaceGeometry::interleaved(const Chord& c1, const Chord& c2) {
    bool in_a = cyc_between(c1.a, c2.a, c1.b);
    bool in_b = cyc_between(c1.a, c2.b, c1.b);
    return in_a != in_b;
}

int FaceGeometry::cross_sign(const Chord& c1, const Chord& c2) {
    assert(interleaved(c1, c2));
    return cyc_between(c1.a, c2.a, c1.b) ? +1 : -1;
}

std::vector<Arrangement::Crossing> Arrangement::crossings(int a, int b) const {
    std::vector<Crossing> out;
    if (a == b) return out;
    FaceGeometry geo(*this, {a, b});
    for (const auto& bucket : geo.per_face()) {
        for (int i : bucket) {
            const auto& ci = geo.chords()[i];
            if (ci.ref.strand != a) continue;
            for (int j : bucket) {
                const auto& cj = geo.chords()[j];
                if (cj.ref.strand != b) continue;
                if (FaceGeometry::interleaved(ci, cj))
                    out.push_back(Crossing{ci.ref.index, cj.ref.index,
                                           FaceGeometry::cross_sign(ci, cj)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        return std::pair(x.chord_a, x.chord_b) < std::pair(y.chord_a, y.chord_b);
    });
    return out;
}

long long Arrangement::drawn_crossings(int a, int b) const {
    return (long long)crossings(a, b).size();
}

long long Arrangement::signed_crossings(int a, int b) const {
    long long total = 0;
    for (const auto& c : crossings(a, b)) total += c.sign;
    return total;
}

bool Arrangement::self_embedded(int sid) const {
    FaceGeometry geo(*this, {sid});
    for (const auto& bucket : geo.per_face())
        for (size_t i = 0; i < bucket.size(); i++)
            for (size_t j = i + 1; j < bucket.size(); j++)
                if (FaceGeometry::interleaved(geo.chords()[bucket[i]],
                                              geo.chords()[bucket[j]]))
                    return false;
    return true;
}

// ------------------------------------------------------------ cellulation --

std::pair<EdgeId, EdgeId> Arrangement::split_edge(EdgeId e, int gap) {
    const auto label = surf_.edge(e).label;
    EdgeId e1 = surf_.add_edge(label + "'");
    EdgeId e2 = surf_.add_edge(label + "\"");
    order_.resize(surf_.edge_count());
    DartRef fwd = surf_.dart_ref(e, true);
    if (fwd.face >= 0)
        surf_.splice_walk(fwd.face, fwd.slot, {Dart{e1, true}, Dart{e2, true}});
    DartRef rev = surf_.dart_ref(e, false);
    if (rev.face >= 0)
        surf_.splice_walk(rev.face, rev.slot, {Dart{e2, false}, Dart{e1, false}});
    auto evs = order_[e];
    order_[e].clear();
    for (int i = 0; i < (int)evs.size(); i++) {
        EdgeId target = i < gap ? e1 : e2;
        events_[evs[i]].edge = target;
        order_[target].push_back(evs[i]);
    }
    return {e1, e2};
}

Arrangement::Widget Arrangement::insert_widget(int ev) {
    Event E = events_[ev];
    if (!E.alive) throw std::runtime_error("widget on dead event");
    EdgeId e = E.edge;
    if (surf_.is_boundary_edge(e)) throw std::runtime_error("widget on boundary edge");
    int idx = event_index(ev);
    auto& ord = order_[e];
    ord.erase(ord.begin() + idx);
    events_[ev].alive = false;
    auto [e1, e2] = split_edge(e, idx);

    std::string base = "t" + std::to_string(ev);
    EdgeId pa = surf_.add_edge(base + ".pa");
    EdgeId pb = surf_.add_edge(base + ".pb");
    EdgeId u = surf_.add_edge(base + ".u");
    EdgeId h1 = surf_.add_edge(base + ".h1");
    EdgeId w = surf_.add_edge(base + ".w");
    EdgeId h2 = surf_.add_edge(base + ".h2");
    EdgeId sseam = surf_.add_edge(base + ".s");
    order_.resize(surf_.edge_count());

    // forward side holds e1+, e2+ consecutively; insert the port between them
    DartRef a2 = surf_.dart_ref(e2, true);
    surf_.splice_walk(a2.face, a2.slot, {Dart{pa, false}, Dart{e2, true}});
    DartRef b1 = surf_.dart_ref(e1, false);
    surf_.splice_walk(b1.face, b1.slot, {Dart{pb, false}, Dart{e1, false}});

    surf_.add_face({Dart{pa, true}, Dart{u, true}, Dart{h1, true}, Dart{u, false},
                    Dart{pb, true}, Dart{w, true}, Dart{h2, true}, Dart{w, false}});
    surf_.add_face({Dart{h1, false}, Dart{sseam, true}, Dart{h2, false}, Dart{sseam, false}});
    surf_.validate();

    // reroute the host strand through the ports
    Strand& st = strands_[E.strand];
    int wi = -1;
    for (int i = 0; i < (int)st.evs.size(); i++)
        if (st.evs[i] == ev) { wi = i; break; }
    assert(wi >= 0);
    int evin, evout;
    if (E.dir > 0) {
        // was crossing into the face with the forward darts: B -> lens -> A
        evin = new_event(E.strand, pb, +1);
        evout = new_event(E.strand, pa, -1);
    } else {
        evin = new_event(E.strand, pa, +1);
        evout = new_event(E.strand, pb, -1);
    }
    order_[events_[evin].edge].push_back(evin);
    order_[events_[evout].edge].push_back(evout);
    st.evs[wi] = evin;
    st.evs.insert(st.evs.begin() + wi + 1, evout);

    Widget wd;
    wd.port_in = E.dir > 0 ? pb : pa;
    wd.port_out = E.dir > 0 ? pa : pb;
    wd.foot_in = h1;
    wd.foot_out = h2;
    wd.seam_u = u;
    wd.seam_w = w;
    wd.seam_s = sseam;
    return wd;
}

void Arrangement::apply_sweep(int mover, const std::vector<int>& interior, int frozen,
                              const std::vector<int>& fpath, int travel_dir,
                              bool region_left, int insert_chord) {
    Strand& st = strands_[mover];
    int splice_at;
    if (!interior.empty()) {
        // locate the contiguous run; rotate closed strands so it sits inline
        auto pos_of = [&](int ev) {
            auto it = std::find(st.evs.begin(), st.evs.end(), ev);
            assert(it != st.evs.end());
            return (int)(it - st.evs.begin());
        };
        int p = pos_of(interior.front());
        if (st.closed) {
            std::rotate(st.evs.begin(), st.evs.begin() + p, st.evs.end());
            p = 0;
        }
        for (int i = 0; i < (int)interior.size(); i++)
            if (st.evs[p + i] != interior[i])
                throw std::runtime_error("sweep run not contiguous");
        for (int ev : interior) erase_event(ev);
        st.evs.erase(st.evs.begin() + p, st.evs.begin() + p + (int)interior.size());
        splice_at = p;
    } else {
        // insert inside the given chord: closed chord j runs ev[j] -> ev[j+1],
        // arc chord j runs node j -> node j+1 (node i = ev[i-1])
        splice_at = st.closed ? insert_chord + 1 : insert_chord;
    }
    (void)frozen;
    std::vector<int> fresh;
    for (int fe : fpath) {
        const Event F = events_[fe]; // by value: new_event may reallocate
        int dir = travel_dir > 0 ? F.dir : -F.dir;
        int ne = new_event(mover, F.edge, dir);
        // away side: region_left -> place on the right of the frozen direction
        bool place_right = region_left;
        int idx = event_index(fe);
        int at;
        if (F.dir > 0) at = place_right ? idx + 1 : idx;
        else at = place_right ? idx : idx + 1;
        auto& ord = order_[F.edge];
        ord.insert(ord.begin() + at, ne);
        fresh.push_back(ne);
    }
    st.evs.insert(st.evs.begin() + splice_at, fresh.begin(), fresh.end());
}

void Arrangement::check() const {
    surf_.validate();
    for (int sid = 0; sid < (int)strands_.size(); sid++) {
        if (!strands_[sid].alive) continue;
        PathWord p = extract(sid);
        validate_path(p);
        if (!self_embedded(sid))
            throw std::runtime_error("strand self-crossing: " + std::to_string(sid));
    }
    for (EdgeId e = 0; e < (int)order_.size(); e++)
        for (int ev : order_[e]) {
            assert(events_[ev].alive);
            assert(events_[ev].edge == e);
        }
}

} // namespace tri
