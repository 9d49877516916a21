#include "tri/ops.hpp"

#include "regions.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tri {

std::pair<int, int> classify(const Surface& s) {
    s.validate();
    int b = s.boundary_count();
    int chi = s.euler_characteristic();
    int g2 = 2 - chi - b;
    if (g2 < 0 || g2 % 2 != 0) throw std::runtime_error("surface is not orientable-consistent");
    return {g2 / 2, b};
}

long long geometric_intersection(const PathWord& a, const PathWord& b) {
    if (a.surface != b.surface) throw std::runtime_error("curves on different surfaces");
    // an empty closed loop bounds a disk and isotopes off anything
    if ((a.closed && a.word.empty()) || (b.closed && b.word.empty())) return 0;
    if (same_path(a, b)) return 0; // parallel copy
    Arrangement arr(*a.surface);
    int ia = arr.add(a);
    int ib = arr.add(b);
    arr.reduce_against(ib, {ia});
    return arr.drawn_crossings(ia, ib);
}

long long algebraic_intersection(const PathWord& a, const PathWord& b) {
    if (a.surface != b.surface) throw std::runtime_error("curves on different surfaces");
    if ((a.closed && a.word.empty()) || (b.closed && b.word.empty())) return 0;
    Arrangement arr(*a.surface);
    int ia = arr.add(a);
    int ib = arr.add(b);
    return arr.signed_crossings(ia, ib);
}

// twist/slide helpers: order the crossings of one target chord along it
namespace {
struct Detour {
    int target_chord;
    FacePt order_key; // position along the target chord
    std::vector<Letter> letters;
};
} // namespace

static std::vector<Letter> cycle_from(const Arrangement& arr, int sid, int chord, int dir) {
    // letters of the closed strand starting after `chord`, following `dir`
    const auto& st = arr.strand(sid);
    int m = (int)st.evs.size();
    std::vector<Letter> out;
    for (int k = 0; k < m; k++) {
        int idx = dir > 0 ? (chord + 1 + k) % m : (chord - k + 2 * m) % m;
        const auto& ev = arr.event(st.evs[idx]);
        Letter l{ev.edge, ev.dir};
        if (dir < 0) l.dir = -l.dir;
        out.push_back(l);
    }
    return out;
}

static PathWord insert_detours(const Arrangement& arr, int target, std::vector<Detour> dets,
                               const Surface* home) {
    PathWord base = arr.extract(target);
    base.surface = home;
    const auto& st = arr.strand(target);
    bool closed = st.closed;
    // group by chord; within a chord, order along the chord direction
    FaceGeometry geo(arr, {target});
    std::map<int, const FaceGeometry::Chord*> chords;
    for (const auto& c : geo.chords())
        if (c.ref.strand == target) chords[c.ref.index] = &c;
    std::stable_sort(dets.begin(), dets.end(), [&](const Detour& x, const Detour& y) {
        if (x.target_chord != y.target_chord) return x.target_chord < y.target_chord;
        const auto* c = chords.at(x.target_chord);
        return FaceGeometry::cyc_between(c->a, x.order_key, y.order_key);
    });
    PathWord out = base;
    out.word.clear();
    int m = (int)base.word.size();
    size_t di = 0;
    auto emit_detours_for = [&](int chord) {
        while (di < dets.size() && dets[di].target_chord == chord) {
            for (const Letter& l : dets[di].letters) out.word.push_back(l);
            di++;
        }
    };
    if (closed) {
        // chord i sits after letter i
        for (int i = 0; i < m; i++) {
            out.word.push_back(base.word[i]);
            emit_detours_for(i);
        }
    } else {
        // chord i sits before letter i; chord m after the last letter
        for (int i = 0; i < m; i++) {
            emit_detours_for(i);
            out.word.push_back(base.word[i]);
        }
        emit_detours_for(m);
    }
    if (di != dets.size()) throw std::runtime_error("detour chord out of range");
    out.surface = home;
    return reduced(out);
}

PathWord dehn_twist(const PathWord& target, const PathWord& twister, int sign) {
    if (sign != 1 && sign != -1) throw std::runtime_error("twist sign must be +-1");
    if (!twister.closed) throw std::runtime_error("twisting along an arc");
    if (target.surface != twister.surface)
        throw std::runtime_error("twist arguments on different surfaces");
    PathWord t = reduced(target);
    PathWord w = reduced(twister);
    // a null-homotopic twister acts as the identity
    if (w.word.empty()) return t;
    if (t.closed && t.word.empty()) return t;
    Arrangement arr(*target.surface);
    int it = arr.add(t);
    int iw = arr.add(w);
    arr.reduce_against(it, {iw});
    auto cross = arr.crossings(it, iw);
    if (cross.empty()) return t;

    FaceGeometry geo(arr, {it, iw});
    std::map<int, const FaceGeometry::Chord*> tchords, wchords;
    for (const auto& c : geo.chords()) {
        if (c.ref.strand == it) tchords[c.ref.index] = &c;
        else wchords[c.ref.index] = &c;
    }
    std::vector<Detour> dets;
    for (const auto& x : cross) {
        const auto* tc = tchords.at(x.chord_a);
        const auto* wc = wchords.at(x.chord_b);
        // position of the crossing along the target chord: the endpoint of
        // the twister chord lying inside (tc.a -> tc.b)
        FacePt key = FaceGeometry::cyc_between(tc->a, wc->a, tc->b) ? wc->a : wc->b;
        int d = sign * x.sign;
        dets.push_back(Detour{x.chord_a, key, cycle_from(arr, iw, x.chord_b, d)});
    }
    return insert_detours(arr, it, std::move(dets), target.surface);
}

std::vector<SlideSite> slide_sites(const PathWord& target, const PathWord& over) {
    Arrangement arr(*target.surface);
    int it = arr.add(target);
    int io = arr.add(over);
    FaceGeometry geo(arr, {it, io});
    std::vector<SlideSite> sites;
    for (const auto& bucket : geo.per_face())
        for (int i : bucket)
            for (int j : bucket) {
                const auto& ci = geo.chords()[i];
                const auto& cj = geo.chords()[j];
                if (ci.ref.strand != it || cj.ref.strand != io) continue;
                sites.push_back(SlideSite{ci.ref.index, cj.ref.index});
            }
    std::sort(sites.begin(), sites.end(), [](const SlideSite& a, const SlideSite& b) {
        return std::pair(a.target_chord, a.over_chord) < std::pair(b.target_chord, b.over_chord);
    });
    return sites;
}

PathWord slide_arc(const PathWord& target, const PathWord& over, const SlideSite& site,
                   int direction) {
    if (!over.closed) throw std::runtime_error("sliding over an arc");
    if (direction != 1 && direction != -1) throw std::runtime_error("bad slide direction");
    if (target.surface != over.surface)
        throw std::runtime_error("slide arguments on different surfaces");
    PathWord ov = reduced(over);
    if (ov.word.empty()) return reduced(target);
    Arrangement arr(*target.surface);
    int it = arr.add(target);
    int io = arr.add(ov);
    // the site must name chords sharing a face
    if (site.target_chord < 0 || site.target_chord >= chord_count(arr, it) ||
        site.over_chord < 0 || site.over_chord >= chord_count(arr, io))
        throw std::runtime_error("slide site out of range");
    if (chord_face(arr, it, site.target_chord) != chord_face(arr, io, site.over_chord))
        throw std::runtime_error("slide site not adjacent");
    std::vector<Detour> dets;
    dets.push_back(Detour{site.target_chord, FacePt{}, cycle_from(arr, io, site.over_chord, direction)});
    return insert_detours(arr, it, std::move(dets), target.surface);
}

FaceId chord_face(const Arrangement& arr, int sid, int index) {
    FaceGeometry geo(arr, {sid});
    for (const auto& c : geo.chords())
        if (c.ref.strand == sid && c.ref.index == index) return c.face;
    throw std::runtime_error("no such chord");
}

// ------------------------------------------------------------------ surgery

static SurgeredSurface do_surgery(const Surface& s, const std::vector<PathWord>& family,
                                  const std::vector<PathWord>& passengers, bool cap) {
    Arrangement arr(s);
    std::vector<int> fam;
    for (const auto& f : family) {
        PathWord fr = reduced(f);
        if (fr.closed && fr.word.empty())
            throw std::runtime_error("surgery along a trivial loop");
        int id = arr.add(fr);
        arr.reduce_against(id, fam);
        for (int other : fam)
            if (arr.drawn_crossings(id, other) != 0)
                throw std::runtime_error("surgery family is not disjoint");
        fam.push_back(id);
    }
    std::vector<int> pass;
    for (const auto& p : passengers) {
        int id = arr.add(p);
        arr.reduce_against(id, fam);
        for (int f : fam)
            if (arr.drawn_crossings(id, f) != 0)
                throw std::runtime_error("passenger meets the surgery family");
        pass.push_back(id);
    }

    RegionAnalysis ra(arr, fam);
    const Surface& S = arr.surface();

    // per-edge participant marks (intrinsic keys), as in the region analysis
    std::vector<std::vector<long long>> marks(S.edge_count());
    std::set<int> fset(fam.begin(), fam.end());
    for (EdgeId e = 0; e < S.edge_count(); e++) {
        if (S.edge(e).occurrences == 0) continue;
        const auto& ord = arr.edge_events(e);
        for (int i = 0; i < (int)ord.size(); i++)
            if (fset.count(arr.event(ord[i]).strand)) marks[e].push_back(2LL * i + 1);
        if (S.is_boundary_edge(e)) {
            for (int sid : fam) {
                const auto& st = arr.strand(sid);
                if (st.closed) continue;
                for (int side = 0; side < 2; side++)
                    if (st.ends[side].edge == e)
                        marks[e].push_back(2LL * anchor_rank_in(arr, e, st.ends[side].pos) + 1);
            }
            std::sort(marks[e].begin(), marks[e].end());
        }
    }

    Surface out;
    // gap edges
    std::map<std::pair<EdgeId, int>, EdgeId> gap_edge;
    for (EdgeId e = 0; e < S.edge_count(); e++) {
        if (S.edge(e).occurrences == 0) continue;
        int gaps = (int)marks[e].size() + 1;
        for (int g = 0; g < gaps; g++)
            gap_edge[{e, g}] = out.add_edge(S.edge(e).label + "#" + std::to_string(g));
    }
    // chord copies (left/right of the chord direction)
    std::map<int, EdgeId> left_copy, right_copy;
    for (int ci = 0; ci < (int)ra.geo.chords().size(); ci++) {
        left_copy[ci] = out.add_edge("cutL" + std::to_string(ci));
        right_copy[ci] = out.add_edge("cutR" + std::to_string(ci));
    }

    // Expand a circle run between consecutive marked points into gap darts.
    // Marks between them cannot exist, so the run is: the tail gap of the
    // start slot, whole single-gap slots, and the head gap of the end slot
    // (or one shared gap when both points sit on the same slot).
    auto mark_rank = [&](EdgeId e, bool dart_fwd, long long along) -> int {
        long long nn = arr.point_space(e);
        long long intrinsic = dart_fwd ? along : 2 * nn - along;
        auto it = std::lower_bound(marks[e].begin(), marks[e].end(), intrinsic);
        if (it == marks[e].end() || *it != intrinsic)
            throw std::runtime_error("marked point is not a surgery mark");
        return (int)(it - marks[e].begin());
    };
    auto expand_arc = [&](FaceId f, const FacePt& from, const FacePt& to,
                          std::vector<Dart>& walk) {
        const auto& fwalk = S.face(f).walk;
        int n = (int)fwalk.size();
        Dart d0 = fwalk[from.slot];
        int r0 = mark_rank(d0.edge, d0.forward, from.along);
        Dart d1 = fwalk[to.slot];
        int r1 = mark_rank(d1.edge, d1.forward, to.along);
        // gap following `from` along the dart / preceding `to`
        int tail_gap = d0.forward ? r0 + 1 : r0;
        int head_gap = d1.forward ? r1 : r1 + 1;
        if (from.slot == to.slot && FacePt{from.slot, from.along} < FacePt{to.slot, to.along}) {
            if (tail_gap != head_gap)
                throw std::runtime_error("non-adjacent marks on one slot");
            walk.push_back(Dart{gap_edge.at({d0.edge, tail_gap}), d0.forward});
            return;
        }
        walk.push_back(Dart{gap_edge.at({d0.edge, tail_gap}), d0.forward});
        int slot = (from.slot + 1) % n;
        while (slot != to.slot) {
            Dart d = fwalk[slot];
            if (!marks[d.edge].empty())
                throw std::runtime_error("unexpected marks between circle points");
            walk.push_back(Dart{gap_edge.at({d.edge, 0}), d.forward});
            slot = (slot + 1) % n;
        }
        walk.push_back(Dart{gap_edge.at({d1.edge, head_gap}), d1.forward});
    };

    // build faces from fragments
    for (FaceId f = 0; f < (int)ra.frags.size(); f++) {
        for (const auto& fr : ra.frags[f]) {
            std::vector<Dart> walk;
            if (fr.whole_face) {
                for (const Dart& d : S.face(f).walk) {
                    int gaps = (int)marks[d.edge].size() + 1;
                    if (gaps != 1) throw std::runtime_error("marked edge on a whole face");
                    walk.push_back(Dart{gap_edge.at({d.edge, 0}), d.forward});
                }
            } else {
                int n = (int)ra.pts[f].size();
                for (const auto& p : fr.pieces) {
                    if (p.is_arc) {
                        const FacePt& from = ra.pts[f][p.arc_index].at;
                        const FacePt& to = ra.pts[f][(p.arc_index + 1) % n].at;
                        expand_arc(f, from, to, walk);
                    } else {
                        if (p.forward) walk.push_back(Dart{left_copy.at(p.chord), true});
                        else walk.push_back(Dart{right_copy.at(p.chord), false});
                    }
                }
            }
            out.add_face(std::move(walk));
        }
    }

    SurgeredSurface result{Surface{}, {}, {}};
    // caps
    if (cap) {
        for (int sid : fam) {
            const auto& st = arr.strand(sid);
            if (!st.closed) continue;
            // chords of this strand in curve order: global chord ids
            std::map<int, int> global_of; // chord index -> global id
            for (int ci = 0; ci < (int)ra.geo.chords().size(); ci++)
                if (ra.geo.chords()[ci].ref.strand == sid)
                    global_of[ra.geo.chords()[ci].ref.index] = ci;
            int m = (int)global_of.size();
            std::vector<Dart> lw, rw;
            for (int i = m - 1; i >= 0; i--) lw.push_back(Dart{left_copy.at(global_of[i]), false});
            for (int i = 0; i < m; i++) rw.push_back(Dart{right_copy.at(global_of[i]), true});
            FaceId lcap = out.add_face(std::move(lw));
            FaceId rcap = out.add_face(std::move(rw));
            result.caps.push_back({lcap, rcap});
        }
    }
    out.validate();

    // passenger images
    std::vector<PathWord> images;
    for (size_t pi = 0; pi < pass.size(); pi++) {
        const auto& st = arr.strand(pass[pi]);
        PathWord img;
        img.surface = nullptr;
        img.closed = st.closed;
        for (int ev : st.evs) {
            const auto& E = arr.event(ev);
            long long key = 2LL * arr.event_index(ev) + 1;
            int g = (int)(std::upper_bound(marks[E.edge].begin(), marks[E.edge].end(), key) -
                          marks[E.edge].begin());
            img.word.push_back(Letter{gap_edge.at({E.edge, g}), E.dir});
        }
        if (st.closed && st.evs.empty()) {
            // trivial loop: lands in the fragment at its home face's first corner
            FaceId f = st.home_face;
            EdgeId e = S.face(f).walk[0].edge;
            long long nn = std::max((long long)arr.edge_events(e).size(), 1LL);
            int frag = ra.fragment_at(f, FacePt{0, 2 * nn + 2});
            // fragment id -> output face id: fragments were emitted in order
            img.home_face = frag;
        }
        if (!st.closed) {
            for (int side = 0; side < 2; side++) {
                const ArcEnd& ae = st.ends[side];
                long long key = 2LL * anchor_rank_in(arr, ae.edge, ae.pos) + 1;
                int g = (int)(std::upper_bound(marks[ae.edge].begin(), marks[ae.edge].end(), key) -
                              marks[ae.edge].begin());
                img.ends[side] = ArcEnd{gap_edge.at({ae.edge, g}), ae.pos};
            }
        }
        images.push_back(std::move(img));
    }

    result.surface = std::move(out);
    result.images = std::move(images);
    return result;
}

SurgeredSurface surger(const Surface& s, const std::vector<PathWord>& family,
                       const std::vector<PathWord>& passengers) {
    return do_surgery(s, family, passengers, true);
}

SurgeredSurface cut_along(const Surface& s, const std::vector<PathWord>& family,
                          const std::vector<PathWord>& passengers) {
    return do_surgery(s, family, passengers, false);
}

// ------------------------------------------------------------------- glue --

GluedSurface glue_boundaries(const Surface& s1, const Surface& s2,
                             const std::vector<GlueMatch>& matching,
                             const std::vector<PathWord>& curves1,
                             const std::vector<PathWord>& curves2,
                             const std::vector<PathWord>& arcs1,
                             const std::vector<PathWord>& arcs2) {
    GluedSurface out;
    Surface& S = out.surface;
    int eoff = s1.edge_count();
    for (int e = 0; e < s1.edge_count(); e++) S.add_edge(s1.edge(e).label);
    for (int e = 0; e < s2.edge_count(); e++) S.add_edge(s2.edge(e).label + "~");
    for (EdgeId b : s1.bands()) S.note_band(b);
    for (EdgeId b : s2.bands()) S.note_band(b + eoff);
    for (int f = 0; f < s1.face_count(); f++) S.add_face(s1.face(f).walk);
    for (int f = 0; f < s2.face_count(); f++) {
        std::vector<Dart> w = s2.face(f).walk;
        for (Dart& d : w) d.edge += eoff;
        S.add_face(std::move(w));
    }

    auto circles1 = s1.boundary_circles();
    auto circles2 = s2.boundary_circles();
    std::map<EdgeId, EdgeId> merged;      // edge in combined ids -> kept edge
    std::map<EdgeId, bool> flip;          // whether parameters reverse
    for (const auto& m : matching) {
        const auto& c1 = circles1.at(m.circle1);
        const auto& c2 = circles2.at(m.circle2);
        if (c1.size() != c2.size())
            throw std::runtime_error("glued circles have different edge counts");
        int k = (int)c1.size();
        for (int i = 0; i < k; i++) {
            Dart d1 = c1[i];
            Dart d2 = c2[((m.offset - i) % k + k) % k];
            EdgeId kept = d1.edge;
            EdgeId gone = d2.edge + eoff;
            DartRef r = S.dart_ref(gone, S.has_dart(gone, true));
            // the merged edge must be traversed oppositely on the two sides
            S.splice_walk(r.face, r.slot, {Dart{kept, !d1.forward}});
            merged[gone] = kept;
            // the gluing reverses the boundary orientation, hence positions
            flip[gone] = true;
        }
    }
    S.reindex();
    S.validate();

    auto carry1 = [&](const PathWord& p) {
        PathWord q = p;
        q.surface = &S;
        return q;
    };
    auto carry2 = [&](const PathWord& p) {
        PathWord q = p;
        q.surface = &S;
        for (Letter& l : q.word) {
            EdgeId e = l.edge + eoff;
            auto it = merged.find(e);
            l.edge = it == merged.end() ? e : it->second;
        }
        if (q.home_face >= 0) q.home_face += s1.face_count();
        if (!q.closed)
            for (int side = 0; side < 2; side++) {
                EdgeId e = q.ends[side].edge + eoff;
                auto it = merged.find(e);
                q.ends[side].edge = it == merged.end() ? e : it->second;
            }
        return q;
    };
    for (const auto& c : curves1) out.images1.push_back(carry1(c));
    for (const auto& c : curves2) out.images2.push_back(carry2(c));

    // join arcs whose ends meet on merged edges
    std::vector<PathWord> a2;
    for (const auto& a : arcs2) a2.push_back(carry2(a));
    std::vector<bool> used(a2.size(), false);
    for (const auto& raw : arcs1) {
        PathWord a1 = carry1(raw);
        // find the partner sharing both end edges (positions mirror; we match
        // by the multiset of end edges and use rank-mirroring for positions)
        int partner = -1;
        for (size_t j = 0; j < a2.size(); j++) {
            if (used[j]) continue;
            const PathWord& b = a2[j];
            bool direct = a1.ends[0].edge == b.ends[0].edge && a1.ends[1].edge == b.ends[1].edge &&
                          a1.ends[0].pos == b.ends[0].pos && a1.ends[1].pos == b.ends[1].pos;
            bool crossed = a1.ends[0].edge == b.ends[1].edge && a1.ends[1].edge == b.ends[0].edge &&
                           a1.ends[0].pos == b.ends[1].pos && a1.ends[1].pos == b.ends[0].pos;
            if (direct || crossed) {
                partner = (int)j;
                if (crossed) a2[j] = reversed(a2[j]);
                break;
            }
        }
        if (partner < 0) throw std::runtime_error("dangling arc endpoint in gluing");
        used[partner] = true;
        const PathWord& b = a2[partner];
        // closed curve: a1 forward, cross at end1, b backward, cross at end0
        PathWord joined;
        joined.surface = &S;
        joined.closed = true;
        auto crossing_letter = [&](EdgeId e, bool into2) -> Letter {
            // side 1 keeps its original dart direction; dir +1 crosses into
            // the face of the forward dart
            bool fwd_in_2 = false;
            // find which dart belongs to the s2-side face (faces >= s1 count)
            DartRef rf = S.dart_ref(e, true);
            fwd_in_2 = rf.face >= s1.face_count();
            int dir = into2 == fwd_in_2 ? +1 : -1;
            return Letter{e, dir};
        };
        joined.word = a1.word;
        joined.word.push_back(crossing_letter(a1.ends[1].edge, true));
        PathWord brev = reversed(b);
        for (const Letter& l : brev.word) joined.word.push_back(l);
        joined.word.push_back(crossing_letter(a1.ends[0].edge, false));
        validate_path(joined);
        out.joined.push_back(reduced(joined));
        out.partner.push_back(partner);
    }
    for (size_t j = 0; j < a2.size(); j++)
        if (!used[j]) throw std::runtime_error("unmatched arc on the second side");
    return out;
}

} // namespace tri
