#include "regions.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <numeric>
#include <stdexcept>

namespace tri {

long long anchor_rank_in(const Arrangement& arr, EdgeId e, const Rat& pos);

long long RegionAnalysis::oriented(long long key, bool fwd, long long n) {
    return fwd ? key : 2 * n - key;
}

int RegionAnalysis::find(int x) const {
    while (uf[x] != x) { uf[x] = uf[uf[x]]; x = uf[x]; }
    return x;
}

RegionAnalysis::RegionAnalysis(const Arrangement& a, std::vector<int> parts)
    : arr(&a), geo(a, parts), participants(std::move(parts)),
      pset(participants.begin(), participants.end()) {
    build();
}

// ---- per-face subdivision -------------------------------------------------

namespace {

// directed segment handles within one face
struct Segs {
    // arcs: between marked point i and i+1 (ccw); pieces: per chord
    int npts;
    std::vector<int> chords;                 // global chord ids in this face
    std::map<int, int> piece_count;          // chord -> #pieces
    // encode: arc fwd: (0, i, 0); arc bwd: (0, i, 1); piece: (1, chord, k, rev)
    struct Id {
        int kind;  // 0 arc, 1 piece
        int a, b, c;
        bool operator<(const Id& o) const {
            return std::tie(kind, a, b, c) < std::tie(o.kind, o.a, o.b, o.c);
        }
        bool operator==(const Id&) const = default;
    };
    static Id arc(int i, bool fwd) { return {0, i, fwd ? 0 : 1, 0}; }
    static Id piece(int chord, int k, bool fwd) { return {1, chord, k, fwd ? 0 : 1}; }
    static Id reverse(Id s) {
        if (s.kind == 0) return {0, s.a, 1 - s.b, 0};
        return {1, s.a, s.b, 1 - s.c};
    }
};

} // namespace

void RegionAnalysis::build() {
    const Arrangement& A = *arr;
    const Surface& s = A.surface();
    int F = s.face_count();
    pts.resize(F);
    crossings.resize(F);
    along.resize(F);
    frags.resize(F);
    arc_owner_.resize(F);

    for (FaceId f = 0; f < F; f++) {
        const auto& bucket = geo.per_face()[f];
        // marked points
        for (int ci : bucket) {
            const auto& c = geo.chords()[ci];
            pts[f].push_back({c.a, ci, true});
            pts[f].push_back({c.b, ci, false});
        }
        std::sort(pts[f].begin(), pts[f].end(),
                  [](const Pt& x, const Pt& y) { return x.at < y.at; });
        for (size_t i = 1; i < pts[f].size(); i++)
            if (pts[f][i].at == pts[f][i - 1].at)
                throw std::runtime_error("coincident chord endpoints");
        std::map<int, int> pt_a, pt_b;
        for (int i = 0; i < (int)pts[f].size(); i++) {
            if (pts[f][i].is_a) pt_a[pts[f][i].chord] = i;
            else pt_b[pts[f][i].chord] = i;
        }
        // crossings
        for (size_t bi = 0; bi < bucket.size(); bi++)
            for (size_t bj = bi + 1; bj < bucket.size(); bj++) {
                int ci = bucket[bi], cj = bucket[bj];
                const auto& x = geo.chords()[ci];
                const auto& y = geo.chords()[cj];
                if (!FaceGeometry::interleaved(x, y)) continue;
                Cross cr;
                cr.c1 = ci;
                cr.c2 = cj;
                cr.sign = FaceGeometry::cross_sign(x, y);
                int id = (int)crossings[f].size();
                crossings[f].push_back(cr);
                along[f][ci].push_back(id);
                along[f][cj].push_back(id);
            }
        for (int ci : bucket) {
            const auto& c = geo.chords()[ci];
            auto key = [&](int cid) -> FacePt {
                const auto& cr = crossings[f][cid];
                int other = cr.c1 == ci ? cr.c2 : cr.c1;
                const auto& oc = geo.chords()[other];
                return FaceGeometry::cyc_between(c.a, oc.a, c.b) ? oc.a : oc.b;
            };
            auto& lst = along[f][ci];
            std::sort(lst.begin(), lst.end(), [&](int xx, int yy) {
                return FaceGeometry::cyc_between(c.a, key(xx), key(yy));
            });
            for (int r = 0; r < (int)lst.size(); r++) {
                auto& cr = crossings[f][lst[r]];
                if (cr.c1 == ci) cr.r1 = r;
                else cr.r2 = r;
            }
        }

        // ---- fragment walks
        if (bucket.empty()) {
            Fragment fr;
            fr.face = f;
            fr.whole_face = true;
            frags[f].push_back(fr);
            continue;
        }
        int n = (int)pts[f].size();
        auto piece_cnt = [&](int ci) { return (int)along[f][ci].size() + 1; };
        // head node of a directed segment: circle point (>=0) or crossing (-1-id)
        auto head = [&](Segs::Id sg) -> int {
            if (sg.kind == 0) {
                int i = sg.a;
                return sg.b == 0 ? (i + 1) % n : i;
            }
            int ci = sg.a, k = sg.b;
            bool fwd = sg.c == 0;
            int m = piece_cnt(ci) - 1; // crossings on chord
            if (fwd) {
                if (k == m) return pt_b.at(ci);
                return -1 - along[f][ci][k];
            }
            if (k == 0) return pt_a.at(ci);
            return -1 - along[f][ci][k - 1];
        };
        auto rotation = [&](int node) -> std::vector<Segs::Id> {
            if (node >= 0) {
                int i = node;
                int ci = pts[f][i].chord;
                int m = piece_cnt(ci) - 1;
                Segs::Id inward = pts[f][i].is_a ? Segs::piece(ci, 0, true)
                                                 : Segs::piece(ci, m, false);
                return {Segs::arc(i, true), inward, Segs::arc((i - 1 + n) % n, false)};
            }
            const auto& cr = crossings[f][-1 - node];
            int r1 = cr.r1, r2 = cr.r2;
            Segs::Id f1 = Segs::piece(cr.c1, r1 + 1, true);
            Segs::Id b1 = Segs::piece(cr.c1, r1, false);
            Segs::Id f2 = Segs::piece(cr.c2, r2 + 1, true);
            Segs::Id b2 = Segs::piece(cr.c2, r2, false);
            if (cr.sign > 0) return {f1, f2, b1, b2};
            return {f1, b2, b1, f2};
        };
        auto next_seg = [&](Segs::Id sg) -> Segs::Id {
            int v = head(sg);
            auto rot = rotation(v);
            Segs::Id r = Segs::reverse(sg);
            for (int i = 0; i < (int)rot.size(); i++)
                if (rot[i] == r) return rot[(i - 1 + (int)rot.size()) % (int)rot.size()];
            throw std::runtime_error("segment missing from rotation");
        };

        std::vector<Segs::Id> all;
        for (int i = 0; i < n; i++) {
            all.push_back(Segs::arc(i, true));
            all.push_back(Segs::arc(i, false));
        }
        for (int ci : bucket)
            for (int k = 0; k < piece_cnt(ci); k++) {
                all.push_back(Segs::piece(ci, k, true));
                all.push_back(Segs::piece(ci, k, false));
            }
        std::set<Segs::Id> used;
        for (const auto& start : all) {
            if (used.count(start)) continue;
            std::vector<Segs::Id> walk;
            Segs::Id cur = start;
            int guard = 0;
            do {
                used.insert(cur);
                walk.push_back(cur);
                cur = next_seg(cur);
                if (++guard > (int)all.size() + 4)
                    throw std::runtime_error("fragment walk diverged");
            } while (!(cur == start));
            bool outer = false;
            for (const auto& sg : walk)
                if (sg.kind == 0 && sg.b == 1) outer = true;
            if (outer) continue;
            Fragment fr;
            fr.face = f;
            for (const auto& sg : walk) {
                Piece p;
                if (sg.kind == 0) {
                    p.is_arc = true;
                    p.arc_index = sg.a;
                    p.chord = -1;
                    p.piece_index = -1;
                    p.forward = true;
                } else {
                    p.is_arc = false;
                    p.arc_index = -1;
                    p.chord = sg.a;
                    p.piece_index = sg.b;
                    p.forward = sg.c == 0;
                }
                fr.pieces.push_back(p);
            }
            frags[f].push_back(fr);
        }
    }

    // ---- глobal fragments + gluing
    offset.assign(F + 1, 0);
    for (int f = 0; f < F; f++) offset[f + 1] = offset[f] + (int)frags[f].size();
    nfrag = offset[F];
    uf.resize(nfrag);
    std::iota(uf.begin(), uf.end(), 0);
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };

    for (FaceId f = 0; f < F; f++)
        for (int fi = 0; fi < (int)frags[f].size(); fi++)
            for (const auto& p : frags[f][fi].pieces)
                if (p.is_arc) arc_owner_[f][p.arc_index] = fi;

    const Surface& S = s;
    std::vector<std::pair<int, int>> gluings;
    std::vector<char> boundary_frag(nfrag, 0);
    for (EdgeId e = 0; e < S.edge_count(); e++) {
        if (S.edge(e).occurrences == 0) continue;
        const auto& ord = A.edge_events(e);
        long long nn = A.point_space(e);
        std::vector<int> ppos;
        for (int i = 0; i < (int)ord.size(); i++)
            if (pset.count(A.event(ord[i]).strand)) ppos.push_back(i);
        // anchors of participant arcs also mark boundary edges
        std::vector<long long> marks; // intrinsic keys of participant marks
        for (int p : ppos) marks.push_back(2LL * p + 1);
        if (S.is_boundary_edge(e)) {
            std::vector<Rat> apos;
            for (int sid : participants) {
                const auto& st = A.strand(sid);
                if (st.closed) continue;
                for (int side = 0; side < 2; side++)
                    if (st.ends[side].edge == e) apos.push_back(st.ends[side].pos);
            }
            for (const Rat& p : apos)
                marks.push_back(2LL * anchor_rank_in(A, e, p) + 1);
            std::sort(marks.begin(), marks.end());
        }
        int k = (int)marks.size();
        for (int g = 0; g <= k; g++) {
            long long lo = (g == 0) ? 0 : marks[g - 1];
            long long hi = (g == k) ? 2 * nn : marks[g];
            long long mid = lo + 1 < hi ? lo + 1 : (lo == 0 ? 0 : hi);
            auto pt_on = [&](bool fwd_dart) -> FacePt {
                DartRef dr = S.dart_ref(e, fwd_dart);
                Dart d = S.dart_at(dr);
                long long key = oriented(mid, d.forward, nn);
                return FacePt{dr.slot, key};
            };
            if (S.is_interior_edge(e)) {
                int fa = fragment_at(S.dart_ref(e, true).face, pt_on(true));
                int fb = fragment_at(S.dart_ref(e, false).face, pt_on(false));
                gluings.push_back({fa, fb});
                unite(fa, fb);
            } else {
                bool fwd = S.has_dart(e, true);
                int fa = fragment_at(S.dart_ref(e, fwd).face, pt_on(fwd));
                boundary_frag[fa] = 1;
            }
        }
    }

    // ---- region stats
    std::map<int, long long> fcount, gcount, vcount;
    for (int i = 0; i < nfrag; i++) fcount[find(i)]++;
    for (auto& [fa, fb] : gluings) gcount[find(fa)]++;
    for (int i = 0; i < nfrag; i++)
        if (boundary_frag[i]) touches_boundary[find(i)] = true;

    CornerOrbits orbits(S);
    std::set<int> boundary_vertices;
    for (EdgeId e = 0; e < S.edge_count(); e++) {
        if (S.edge(e).occurrences != 1) continue;
        bool fwd = S.has_dart(e, true);
        DartRef r = S.dart_ref(e, fwd);
        boundary_vertices.insert(orbits.head(r.face, r.slot));
        boundary_vertices.insert(orbits.tail(r.face, r.slot));
    }
    std::map<int, std::pair<int, bool>> vregion;
    for (FaceId f = 0; f < F; f++) {
        int n = (int)S.face(f).walk.size();
        for (int i = 0; i < n; i++) {
            int v = orbits.head(f, i);
            EdgeId e = S.face(f).walk[i].edge;
            long long nn = A.point_space(e);
            FacePt corner{i, 2 * nn + 2};
            int frag = fragment_at(f, corner);
            int reg = find(frag);
            auto it = vregion.find(v);
            if (it == vregion.end()) vregion[v] = {reg, true};
            else if (it->second.first != reg) it->second.second = false;
        }
    }
    for (auto& [v, pr] : vregion)
        if (pr.second && !boundary_vertices.count(v)) vcount[pr.first]++;

    for (int i = 0; i < nfrag; i++) {
        int r = find(i);
        if (!chi.count(r)) chi[r] = fcount[r] - gcount[r] + vcount[r];
    }

    // crossing visits (corners of regions)
    for (FaceId f = 0; f < F; f++)
        for (int fi = 0; fi < (int)frags[f].size(); fi++) {
            int gid = offset[f] + fi;
            int reg = find(gid);
            const auto& fr = frags[f][fi];
            int n = (int)pts[f].size();
            for (const auto& p : fr.pieces) {
                if (p.is_arc) continue;
                // head node of this directed piece
                int ci = p.chord;
                int m = (int)along[f].count(ci) ? (int)along[f][ci].size() : 0;
                int k = p.piece_index;
                int node;
                if (p.forward) node = (k == m) ? n /*circle*/ : -1 - along[f][ci][k];
                else node = (k == 0) ? n : -1 - along[f][ci][k - 1];
                if (node < 0) visits[reg].push_back({f, -1 - node, gid});
            }
        }
}

int RegionAnalysis::fragment_at(FaceId f, const FacePt& at) const {
    if (pts[f].empty()) return offset[f];
    int n = (int)pts[f].size();
    for (int i = 0; i < n; i++)
        if (FaceGeometry::cyc_between(pts[f][i].at, at, pts[f][(i + 1) % n].at)) {
            auto it = arc_owner_[f].find(i);
            if (it == arc_owner_[f].end())
                throw std::runtime_error("circle arc without interior owner");
            return offset[f] + it->second;
        }
    throw std::runtime_error("face position not located");
}

// ------------------------------------------------------------- reduction --

namespace {

struct BigonData {
    int frozen_strand = -1;
    // mover chords at the two corners + crossing ranks along them
    int mchord_x, mrank_x, mchord_y, mrank_y;
    int fchord_x, frank_x, fchord_y, frank_y;
    // region piece sets
    std::map<int, std::set<int>> mover_pieces;  // chord -> piece indexes
    std::map<int, std::set<int>> frozen_pieces;
    bool frozen_left; // region on the left of the frozen strand direction
};

} // namespace

static std::optional<BigonData> find_bigon(const RegionAnalysis& ra, int mover) {
    const auto& A = *ra.arr;
    for (const auto& [reg, vs] : ra.visits) {
        if (vs.size() != 2) continue;
        auto itb = ra.touches_boundary.find(reg);
        if (itb != ra.touches_boundary.end() && itb->second) continue;
        if (ra.chi.at(reg) != 1) continue;
        auto key0 = std::pair(vs[0].face, vs[0].cross_id);
        auto key1 = std::pair(vs[1].face, vs[1].cross_id);
        if (key0 == key1) continue;

        BigonData b;
        auto fill = [&](const RegionAnalysis::Visit& v, int& mc, int& mr, int& fc, int& fr) {
            const auto& cr = ra.crossings[v.face][v.cross_id];
            int s1 = ra.geo.chords()[cr.c1].ref.strand;
            if (s1 == mover) {
                mc = cr.c1; mr = cr.r1; fc = cr.c2; fr = cr.r2;
            } else {
                mc = cr.c2; mr = cr.r2; fc = cr.c1; fr = cr.r1;
            }
        };
        fill(vs[0], b.mchord_x, b.mrank_x, b.fchord_x, b.frank_x);
        fill(vs[1], b.mchord_y, b.mrank_y, b.fchord_y, b.frank_y);
        int fsx = ra.geo.chords()[b.fchord_x].ref.strand;
        int fsy = ra.geo.chords()[b.fchord_y].ref.strand;
        if (fsx == mover || fsy == mover) continue; // mover self-crossing (impossible)
        if (fsx != fsy) continue;
        b.frozen_strand = fsx;

        // collect region pieces per strand
        bool have_frozen_dir = false;
        bool all_ok = true;
        for (int f = 0; f < (int)ra.frags.size() && all_ok; f++)
            for (int fi = 0; fi < (int)ra.frags[f].size(); fi++) {
                if (ra.find(ra.offset[f] + fi) != reg) continue;
                for (const auto& p : ra.frags[f][fi].pieces) {
                    if (p.is_arc) continue;
                    int strand = ra.geo.chords()[p.chord].ref.strand;
                    if (strand == mover)
                        b.mover_pieces[p.chord].insert(p.piece_index);
                    else if (strand == b.frozen_strand) {
                        b.frozen_pieces[p.chord].insert(p.piece_index);
                        b.frozen_left = p.forward;
                        have_frozen_dir = true;
                    } else {
                        all_ok = false; // a third strand borders the region
                        break;
                    }
                }
            }
        if (!all_ok || !have_frozen_dir) continue;
        (void)A;
        return b;
    }
    return std::nullopt;
}

int reduce_mover(Arrangement& arr, int mover, const std::vector<int>& frozen) {
    std::vector<int> participants{mover};
    for (int f : frozen)
        if (f != mover && arr.alive(f)) participants.push_back(f);
    if (participants.size() < 2) return 0;

    int sweeps = 0;
    long long guard = 4;
    for (int f : frozen)
        if (f != mover) guard += arr.drawn_crossings(mover, f) / 2 + 1;

    while (true) {
        RegionAnalysis ra(arr, participants);
        auto b = find_bigon(ra, mover);
        if (!b) break;

        // --- derive the mover run (chords a -> b with direction)
        const auto& mstrand = arr.strand(mover);
        int mchords = chord_count(arr, mover);
        int a = ra.geo.chords()[b->mchord_x].ref.index;
        int bb = ra.geo.chords()[b->mchord_y].ref.index;
        // direction: which adjacent piece of chord a borders the region
        auto mover_local = [&](int global) { return ra.geo.chords()[global].ref.index; };
        (void)mover_local;
        const auto& apieces = b->mover_pieces.at(b->mchord_x);
        int dir;
        if (a == bb) {
            dir = b->mrank_x < b->mrank_y ? +1 : -1;
        } else {
            dir = apieces.count(b->mrank_x + 1) ? +1 : -1;
        }
        // normalize to dir = +1 by swapping corners if needed
        if (dir < 0) {
            std::swap(b->mchord_x, b->mchord_y);
            std::swap(b->mrank_x, b->mrank_y);
            std::swap(b->fchord_x, b->fchord_y);
            std::swap(b->frank_x, b->frank_y);
            std::swap(a, bb);
            dir = +1;
        }
        // mover interior events, word order from X to Y
        std::vector<int> interior;
        if (a != bb) {
            int j = a;
            while (j != bb) {
                int nj = mstrand.closed ? (j + 1) % mchords : j + 1;
                // event between chord j and nj
                int evi = mstrand.closed ? nj : j; // closed: ev[nj]; arc: ev[j]
                interior.push_back(mstrand.evs[mstrand.closed ? (nj % (int)mstrand.evs.size())
                                                              : j]);
                (void)evi;
                j = nj;
                if ((int)interior.size() > (int)mstrand.evs.size() + 2)
                    throw std::runtime_error("mover run failed to close");
            }
        }

        // --- frozen run from X to Y
        const auto& fstrand = arr.strand(b->frozen_strand);
        int fchords = chord_count(arr, b->frozen_strand);
        int fa = ra.geo.chords()[b->fchord_x].ref.index;
        int fb = ra.geo.chords()[b->fchord_y].ref.index;
        int fdir;
        if (fa == fb) fdir = b->frank_x < b->frank_y ? +1 : -1;
        else {
            const auto& fpieces = b->frozen_pieces.at(b->fchord_x);
            fdir = fpieces.count(b->frank_x + 1) ? +1 : -1;
        }
        std::vector<int> fpath; // frozen events from X to Y
        if (fa != fb) {
            int j = fa;
            while (j != fb) {
                int nj;
                if (fdir > 0) nj = fstrand.closed ? (j + 1) % fchords : j + 1;
                else nj = fstrand.closed ? (j - 1 + fchords) % fchords : j - 1;
                int ev;
                if (fdir > 0) ev = fstrand.evs[fstrand.closed ? (nj % (int)fstrand.evs.size()) : j];
                else ev = fstrand.evs[fstrand.closed ? (j % (int)fstrand.evs.size()) : nj];
                fpath.push_back(ev);
                j = nj;
                if ((int)fpath.size() > (int)fstrand.evs.size() + 2)
                    throw std::runtime_error("frozen run failed to close");
            }
        }

        arr.apply_sweep(mover, interior, b->frozen_strand, fpath, fdir, b->frozen_left, a);
        sweeps++;
        if (sweeps > guard) throw std::runtime_error("bigon reduction runaway");
    }
    return sweeps;
}

int Arrangement::reduce_against(int mover, const std::vector<int>& frozen) {
    return reduce_mover(*this, mover, frozen);
}

} // namespace tri
