#include "toric/walks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace toric {

// ---- Walk ------------------------------------------------------------------

namespace {

int common_vertex(const Edge& a, const Edge& b) {
    if (a.u == b.u || a.u == b.v) return a.u;
    if (a.v == b.u || a.v == b.v) return a.v;
    return -1;
}

}  // namespace

Walk::Walk(const Graph& g, std::vector<int> edge_seq) {
    const std::size_t L = edge_seq.size();
    if (L < 4 || L % 2 != 0)
        throw std::invalid_argument("walk: length must be even and at least 4");
    for (int e : edge_seq)
        if (e < 0 || static_cast<std::size_t>(e) >= g.universe_size() || !g.edge_alive(e))
            throw std::invalid_argument("walk: unknown edge index " + std::to_string(e));
    verts_.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
        const Edge& prev = g.edge(edge_seq[(i + L - 1) % L]);
        const Edge& cur = g.edge(edge_seq[i]);
        if (edge_seq[(i + L - 1) % L] == edge_seq[i])
            throw std::invalid_argument("walk: immediate backtracking is degenerate");
        int v = common_vertex(prev, cur);
        if (v < 0) throw std::invalid_argument("walk: consecutive edges do not share a vertex");
        verts_[i] = v;
    }
    for (std::size_t i = 0; i < L; ++i) {
        const Edge& e = g.edge(edge_seq[i]);
        int a = verts_[i], b = verts_[(i + 1) % L];
        if (!((e.u == a && e.v == b) || (e.u == b && e.v == a)))
            throw std::invalid_argument("walk: edge sequence does not close up");
    }
    edges_ = std::move(edge_seq);
}

Walk Walk::from_vertex_cycle(const Graph& g, const std::vector<int>& cycle) {
    std::vector<int> seq;
    seq.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int e = g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
        if (e < 0) throw std::invalid_argument("walk: vertex cycle uses a missing edge");
        seq.push_back(e);
    }
    return Walk(g, std::move(seq));
}

EdgeMask Walk::edge_set() const {
    EdgeMask m = 0;
    for (int e : edges_) m |= EdgeMask(1) << e;
    return m;
}

VertexMask Walk::vertex_set() const {
    VertexMask m = 0;
    for (int v : verts_) m |= VertexMask(1) << (v - 1);
    return m;
}

bool Walk::visits(int v) const { return (vertex_set() >> (v - 1)) & 1u; }

std::vector<int> Walk::odd_edges() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges_.size(); i += 2) out.push_back(edges_[i]);
    return out;
}

std::vector<int> Walk::even_edges() const {
    std::vector<int> out;
    for (std::size_t i = 1; i < edges_.size(); i += 2) out.push_back(edges_[i]);
    return out;
}

Binomial Walk::binomial(const Graph& g) const {
    return Binomial::of_edge_lists(g, odd_edges(), even_edges());
}

Walk Walk::canonical(const Graph& g) const {
    // Least edge sequence over every rotation and the reflection.  Odd
    // rotations swap the parity classes, which identifies the two traversal
    // orders of the same closed walk.
    const std::size_t L = edges_.size();
    std::vector<int> best = edges_;
    std::vector<int> rev(edges_.rbegin(), edges_.rend());
    std::vector<int> cand(L);
    for (std::size_t r = 0; r < L; ++r) {
        for (std::size_t i = 0; i < L; ++i) cand[i] = edges_[(i + r) % L];
        if (cand < best) best = cand;
        for (std::size_t i = 0; i < L; ++i) cand[i] = rev[(i + r) % L];
        if (cand < best) best = cand;
    }
    return Walk(g, best);
}

// ---- cycle enumeration -------------------------------------------------------

namespace {

struct CycleList {
    std::vector<std::vector<int>> verts;  // each cycle as a vertex list
    std::vector<VertexMask> vmask;
};

// Every simple cycle once: the start s is the cycle's smallest vertex and the
// second vertex is smaller than the last.
CycleList simple_cycles(const Graph& g, std::size_t max_len, const Budget& budget) {
    CycleList out;
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
    for (int i : g.active_edges()) {
        adj[static_cast<std::size_t>(g.edge(i).u)].push_back(g.edge(i).v);
        adj[static_cast<std::size_t>(g.edge(i).v)].push_back(g.edge(i).u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> path;
    VertexMask used = 0;
    std::function<void(int, int)> dfs = [&](int s, int v) {
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == s && path.size() >= 3) {
                if (path[1] < path.back()) {
                    if (out.verts.size() >= budget.candidate_cap)
                        throw budget_error("cycle enumeration cap");
                    out.verts.push_back(path);
                    out.vmask.push_back(used);
                }
            } else if (w > s && !((used >> (w - 1)) & 1u) && path.size() < max_len) {
                path.push_back(w);
                used |= VertexMask(1) << (w - 1);
                dfs(s, w);
                used &= ~(VertexMask(1) << (w - 1));
                path.pop_back();
            }
        }
    };
    for (int s = 1; s <= n; ++s) {
        if (!g.vertex_alive(s)) continue;
        path = {s};
        used = VertexMask(1) << (s - 1);
        dfs(s, s);
    }
    return out;
}

}  // namespace

std::vector<Walk> enumerate_even_cycles(const Graph& g, std::size_t max_len,
                                        const Budget& budget) {
    if (max_len < 4) throw std::invalid_argument("enumerate_even_cycles: max_len >= 4 required");
    CycleList cycles = simple_cycles(g, max_len, budget);
    std::vector<Walk> out;
    for (const auto& c : cycles.verts) {
        if (c.size() % 2 != 0 || c.size() < 4) continue;
        out.push_back(Walk::from_vertex_cycle(g, c).canonical(g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---- primitive walk candidates ----------------------------------------------

namespace {

std::vector<int> rotate_to(const std::vector<int>& cyc, int v) {
    auto it = std::find(cyc.begin(), cyc.end(), v);
    std::vector<int> out(it, cyc.end());
    out.insert(out.end(), cyc.begin(), it);
    return out;
}

// Edge sequence of the full loop around `cyc` starting and ending at v.
void append_loop(const Graph& g, const std::vector<int>& cyc, int v, std::vector<int>& seq) {
    std::vector<int> r = rotate_to(cyc, v);
    for (std::size_t i = 0; i < r.size(); ++i)
        seq.push_back(g.find_edge(r[i], r[(i + 1) % r.size()]));
}

// The two arcs of `cyc` from a to b, as vertex lists (including both ends).
std::pair<std::vector<int>, std::vector<int>> cycle_arcs(const std::vector<int>& cyc, int a,
                                                         int b) {
    std::vector<int> r = rotate_to(cyc, a);
    auto it = std::find(r.begin(), r.end(), b);
    std::vector<int> arc1(r.begin(), it + 1);
    std::vector<int> arc2;
    arc2.push_back(a);
    for (auto jt = r.end() - 1; jt >= it; --jt) arc2.push_back(*jt);
    return {arc1, arc2};
}

void append_vertex_path(const Graph& g, const std::vector<int>& vpath, std::vector<int>& seq) {
    for (std::size_t i = 0; i + 1 < vpath.size(); ++i)
        seq.push_back(g.find_edge(vpath[i], vpath[i + 1]));
}

struct ChainSeg {
    std::vector<int> path;  // vertex path, front = previous junction, back = entry
    int cycle = -1;         // index into CycleList
    int entry = 0;
    int exit = -1;  // -1 for the final cycle
};

struct ChainEnumerator {
    const Graph& g;
    const CycleList& cycles;
    const Budget& budget;
    std::size_t len_cap;
    std::vector<std::vector<int>> cycles_at;  // vertex -> cycle indices
    std::vector<Walk>& sink;
    std::size_t emitted = 0;

    int c0 = -1;
    int j0 = 0;
    std::vector<ChainSeg> segs;

    ChainEnumerator(const Graph& g_, const CycleList& cy, const Budget& b, std::size_t cap,
                    std::vector<Walk>& out)
        : g(g_), cycles(cy), budget(b), len_cap(cap), sink(out) {
        cycles_at.resize(static_cast<std::size_t>(g.vertex_count()) + 1);
        for (std::size_t c = 0; c < cycles.verts.size(); ++c)
            for (int v : cycles.verts[c]) cycles_at[static_cast<std::size_t>(v)].push_back(static_cast<int>(c));
    }

    void emit() {
        std::vector<int> seq;
        append_loop(g, cycles.verts[static_cast<std::size_t>(c0)], j0, seq);
        assemble(0, seq);
        if (seq.size() % 2 != 0) return;
        if (++emitted > budget.candidate_cap) throw budget_error("primitive walk candidates cap");
        sink.push_back(Walk(g, seq).canonical(g));
    }

    void assemble(std::size_t i, std::vector<int>& seq) {
        if (i == segs.size()) return;
        const ChainSeg& s = segs[i];
        append_vertex_path(g, s.path, seq);
        const auto& cyc = cycles.verts[static_cast<std::size_t>(s.cycle)];
        if (s.exit < 0) {
            append_loop(g, cyc, s.entry, seq);
        } else {
            auto [arc1, arc2] = cycle_arcs(cyc, s.entry, s.exit);
            append_vertex_path(g, arc1, seq);
            assemble(i + 1, seq);
            std::vector<int> back(arc2.rbegin(), arc2.rend());  // exit -> entry the other way
            append_vertex_path(g, back, seq);
        }
        std::vector<int> rp(s.path.rbegin(), s.path.rend());
        append_vertex_path(g, rp, seq);
    }

    // Extend the chain from vertex `cur`, with `used` covering everything so
    // far, by a connector path and one more cycle.
    void extend(int cur, VertexMask used, std::size_t len) {
        std::vector<int> vpath = {cur};
        path_dfs(cur, used, len, vpath);
    }

    void path_dfs(int cur, VertexMask used, std::size_t len, std::vector<int>& vpath) {
        // attach a cycle at the current path end
        for (int ci : cycles_at[static_cast<std::size_t>(cur)]) {
            VertexMask cm = cycles.vmask[static_cast<std::size_t>(ci)];
            if ((cm & used) != (VertexMask(1) << (cur - 1))) continue;
            const auto& cyc = cycles.verts[static_cast<std::size_t>(ci)];
            std::size_t clen = cyc.size();
            if (len + clen > len_cap) continue;
            ChainSeg seg;
            seg.path = vpath;
            seg.cycle = ci;
            seg.entry = cur;
            if (clen % 2 == 1) {  // odd cycle can close the chain
                seg.exit = -1;
                segs.push_back(seg);
                emit();
                segs.pop_back();
            }
            for (int exit : cyc) {  // or the chain continues through it
                if (exit == cur) continue;
                seg.exit = exit;
                segs.push_back(seg);
                extend(exit, used | cm, len + clen);
                segs.pop_back();
            }
        }
        // or grow the connector path
        for (int e : g.incident_edges(cur)) {
            int w = g.edge(e).u == cur ? g.edge(e).v : g.edge(e).u;
            if ((used >> (w - 1)) & 1u) continue;
            if (len + 2 + 3 > len_cap) continue;  // path edge counts twice
            vpath.push_back(w);
            path_dfs(w, used | (VertexMask(1) << (w - 1)), len + 2, vpath);
            vpath.pop_back();
        }
    }

    void run() {
        for (std::size_t c = 0; c < cycles.verts.size(); ++c) {
            if (cycles.verts[c].size() % 2 == 0) continue;  // chain ends are odd cycles
            if (cycles.verts[c].size() > len_cap) continue;
            c0 = static_cast<int>(c);
            for (int v : cycles.verts[c]) {
                j0 = v;
                segs.clear();
                extend(v, cycles.vmask[c], cycles.verts[c].size());
            }
        }
    }
};

}  // namespace

std::vector<Walk> enumerate_primitive_walks(const Graph& g, const Budget& budget) {
    const std::size_t cap = budget.walk_cap_for(g.edge_count());
    CycleList cycles = simple_cycles(g, std::min<std::size_t>(cap, static_cast<std::size_t>(g.vertex_count())), budget);

    std::vector<Walk> candidates;
    for (const auto& c : cycles.verts)
        if (c.size() % 2 == 0 && c.size() >= 4 && c.size() <= cap)
            candidates.push_back(Walk::from_vertex_cycle(g, c).canonical(g));

    ChainEnumerator chains(g, cycles, budget, cap, candidates);
    chains.run();

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<Walk> out;
    for (const Walk& w : candidates) {
        try {
            if (is_primitive(g, w.binomial(g))) out.push_back(w);
        } catch (const std::invalid_argument&) {
            // degenerate binomial (the two sides coincide): not primitive
        }
    }
    return out;
}

// ---- chords ------------------------------------------------------------------

std::vector<int> walk_chords(const Graph& g, const Walk& w) {
    std::vector<int> out;
    EdgeMask we = w.edge_set();
    VertexMask wv = w.vertex_set();
    for (int e : g.active_edges()) {
        if ((we >> e) & 1u) continue;
        if (((wv >> (g.edge(e).u - 1)) & 1u) && ((wv >> (g.edge(e).v - 1)) & 1u))
            out.push_back(e);
    }
    return out;
}

ChordClass classify_chord(const Graph& g, const Walk& w, int chord_edge) {
    if (chord_edge < 0 || static_cast<std::size_t>(chord_edge) >= g.universe_size() ||
        !g.edge_alive(chord_edge))
        throw std::invalid_argument("not_a_chord: unknown edge");
    if ((w.edge_set() >> chord_edge) & 1u)
        throw std::invalid_argument("not_a_chord: edge lies on the walk");
    const Edge& f = g.edge(chord_edge);
    if (!w.visits(f.u) || !w.visits(f.v))
        throw std::invalid_argument("not_a_chord: an endpoint is off the walk");

    // bridge iff no block of the walk's own subgraph contains both endpoints
    BlockDecomposition bd = blocks(g.restricted_to(w.edge_set()));
    bool common_block = false;
    for (const auto& blk : bd.blocks) {
        bool has_u = false, has_v = false;
        for (int e : blk) {
            if (g.edge(e).u == f.u || g.edge(e).v == f.u) has_u = true;
            if (g.edge(e).u == f.v || g.edge(e).v == f.v) has_v = true;
        }
        if (has_u && has_v) {
            common_block = true;
            break;
        }
    }
    ChordClass cc;
    if (!common_block) {
        cc.tag = ChordTag::Bridge;
        return cc;
    }

    const std::size_t L = w.length();
    std::vector<std::pair<int, int>> pairs;  // (i, j) with i < j, 0-based positions
    for (std::size_t a = 0; a < L; ++a)
        for (std::size_t b = a + 1; b < L; ++b) {
            int va = w.verts()[a], vb = w.verts()[b];
            if ((va == f.u && vb == f.v) || (va == f.v && vb == f.u))
                pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    bool any_odd = false, any_even = false;
    std::pair<int, int> first_odd{-1, -1};
    for (auto [i, j] : pairs) {
        if ((j - i + 1) % 2 == 1) {
            any_odd = true;
            if (first_odd.first < 0) first_odd = {i, j};
        } else {
            any_even = true;
        }
    }
    // A chord into a repeated vertex whose occurrences disagree on parity is
    // never odd; it behaves like an even chord for the characterizations.
    if (any_odd && !any_even) {
        cc.tag = ChordTag::Odd;
        cc.pos_i = first_odd.first;
        cc.pos_j = first_odd.second;
        for (int k = first_odd.first; k < first_odd.second; ++k) cc.break2.push_back(w.edges()[static_cast<std::size_t>(k)]);
        cc.break2.push_back(chord_edge);
        for (int k = 0; k < first_odd.first; ++k) cc.break1.push_back(w.edges()[static_cast<std::size_t>(k)]);
        cc.break1.push_back(chord_edge);
        for (std::size_t k = static_cast<std::size_t>(first_odd.second); k < L; ++k)
            cc.break1.push_back(w.edges()[k]);
    } else {
        cc.tag = ChordTag::Even;
    }
    return cc;
}

namespace {

bool effective(const ChordClass& a, const ChordClass& b) {
    int i = a.pos_i, j = a.pos_j, k = b.pos_i, l = b.pos_j;
    if ((k - i) % 2 == 0) return false;
    return (i < k && k < j && j < l) || (k < i && i < l && l < j);
}

// parities of the walk positions where edge e is traversed
std::pair<bool, bool> slot_parities(const Walk& w, int e) {
    bool even_slot = false, odd_slot = false;
    for (std::size_t p = 0; p < w.length(); ++p)
        if (w.edges()[p] == e) (p % 2 == 0 ? even_slot : odd_slot) = true;
    return {even_slot, odd_slot};
}

std::optional<F4Cycle> f4_of(const Graph& g, const Walk& w, int chord_f, const ChordClass& cf,
                             int chord_f2, const ChordClass& cf2) {
    int a = w.verts()[static_cast<std::size_t>(cf.pos_i)], b = w.verts()[static_cast<std::size_t>(cf.pos_j)];
    int c = w.verts()[static_cast<std::size_t>(cf2.pos_i)], d = w.verts()[static_cast<std::size_t>(cf2.pos_j)];
    EdgeMask we = w.edge_set();
    auto walk_edge = [&](int u, int v) {
        int e = g.find_edge(u, v);
        return (e >= 0 && ((we >> e) & 1u)) ? e : -1;
    };
    for (auto [p, q] : {std::pair{std::pair{a, c}, std::pair{b, d}},
                        std::pair{std::pair{a, d}, std::pair{b, c}}}) {
        int e1 = walk_edge(p.first, p.second);
        int e2 = walk_edge(q.first, q.second);
        if (e1 < 0 || e2 < 0) continue;
        auto [ev1, od1] = slot_parities(w, e1);
        auto [ev2, od2] = slot_parities(w, e2);
        if ((ev1 && ev2) || (od1 && od2)) {
            F4Cycle f4;
            f4.e = std::min(e1, e2);
            f4.e2 = std::max(e1, e2);
            f4.f = std::min(chord_f, chord_f2);
            f4.f2 = std::max(chord_f, chord_f2);
            return f4;
        }
    }
    return std::nullopt;
}

}  // namespace

CrossingKind crossing_kind(const Graph& g, const Walk& w, int chord_f, int chord_f2) {
    if (chord_f == chord_f2)
        throw std::invalid_argument("chord_not_odd: need two distinct odd chords");
    ChordClass a = classify_chord(g, w, chord_f);
    ChordClass b = classify_chord(g, w, chord_f2);
    if (a.tag != ChordTag::Odd || b.tag != ChordTag::Odd)
        throw std::invalid_argument("chord_not_odd: both chords must be odd");
    if (!effective(a, b)) return CrossingKind::None;
    if (f4_of(g, w, chord_f, a, chord_f2, b)) return CrossingKind::F4;
    return CrossingKind::StronglyEffective;
}

// ---- strong primitivity --------------------------------------------------------

std::pair<bool, std::string> is_strongly_primitive(const Graph& g, const Walk& w) {
    BlockDecomposition bd = blocks(g.restricted_to(w.edge_set()));
    for (const auto& blk : bd.blocks) {
        // cyclic block: as many edges as vertices
        std::set<int> verts;
        for (int e : blk) {
            verts.insert(g.edge(e).u);
            verts.insert(g.edge(e).v);
        }
        if (verts.size() != blk.size()) continue;
        EdgeMask bm = 0;
        for (int e : blk) bm |= EdgeMask(1) << e;

        std::vector<int> sinks;
        for (int v : verts) {
            int even_slots = 0, odd_slots = 0;
            for (std::size_t p = 0; p < w.length(); ++p) {
                int e = w.edges()[p];
                if (!((bm >> e) & 1u)) continue;
                if (g.edge(e).u != v && g.edge(e).v != v) continue;
                (p % 2 == 0 ? even_slots : odd_slots)++;
            }
            if (even_slots >= 2 || odd_slots >= 2) sinks.push_back(v);
        }
        for (std::size_t x = 0; x < sinks.size(); ++x)
            for (std::size_t y = x + 1; y < sinks.size(); ++y) {
                int e = g.find_edge(sinks[x], sinks[y]);
                if (e >= 0 && ((bm >> e) & 1u))
                    return {false, "sinks " + std::to_string(sinks[x]) + " and " +
                                       std::to_string(sinks[y]) + " are adjacent in a cyclic block"};
            }
    }
    return {true, ""};
}

// ---- full classification --------------------------------------------------------

WalkClassification classify_walk(const Graph& g, const Walk& w) {
    WalkClassification out;
    Binomial b{};
    try {
        b = w.binomial(g);
    } catch (const std::invalid_argument&) {
        out.witness = "degenerate walk: both sides of the binomial coincide";
        return out;
    }
    out.primitive = is_primitive(g, b);
    auto [sp, sp_witness] = is_strongly_primitive(g, w);
    out.strongly_primitive = sp;

    std::vector<int> chords = walk_chords(g, w);
    std::vector<int> odd;
    std::map<int, ChordClass> cls;
    bool all_odd = true;
    std::string bad_chord;
    for (int f : chords) {
        ChordClass cc = classify_chord(g, w, f);
        if (cc.tag == ChordTag::Odd) {
            odd.push_back(f);
            cls[f] = cc;
        } else {
            all_odd = false;
            if (bad_chord.empty())
                bad_chord = std::string(cc.tag == ChordTag::Bridge ? "bridge" : "even chord") +
                            " " + g.edge(f).label;
        }
    }

    bool any_effective = false, any_strong = false;
    for (std::size_t x = 0; x < odd.size(); ++x)
        for (std::size_t y = x + 1; y < odd.size(); ++y) {
            const ChordClass& ca = cls[odd[x]];
            const ChordClass& cb = cls[odd[y]];
            if (!effective(ca, cb)) continue;
            any_effective = true;
            auto f4 = f4_of(g, w, odd[x], ca, odd[y], cb);
            if (f4)
                out.f4_list.push_back(*f4);
            else
                any_strong = true;
        }
    std::sort(out.f4_list.begin(), out.f4_list.end());
    out.f4_list.erase(std::unique(out.f4_list.begin(), out.f4_list.end()), out.f4_list.end());

    bool crosses_f4 = false;
    for (const F4Cycle& f4 : out.f4_list) {
        for (int h : odd) {
            if (h == f4.f || h == f4.f2) continue;
            if (effective(cls[h], cls[f4.f]) || effective(cls[h], cls[f4.f2])) {
                crosses_f4 = true;
                break;
            }
        }
        if (crosses_f4) break;
    }

    out.minimal = out.primitive && out.strongly_primitive && all_odd && !any_strong && !crosses_f4;
    out.indispensable = out.primitive && out.strongly_primitive && all_odd && !any_effective;

    if (!out.minimal) {
        if (!out.primitive)
            out.witness = "not primitive";
        else if (!out.strongly_primitive)
            out.witness = sp_witness;
        else if (!all_odd)
            out.witness = bad_chord;
        else if (any_strong)
            out.witness = "two odd chords cross strongly effectively";
        else if (crosses_f4)
            out.witness = "an odd chord crosses an F4";
    } else if (!out.indispensable) {
        out.witness = "two odd chords cross effectively";
    }
    return out;
}

}  // namespace toric
