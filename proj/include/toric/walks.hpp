#ifndef TORIC_WALKS_HPP
#define TORIC_WALKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "toric/common.hpp"
#include "toric/fibers.hpp"
#include "toric/graph.hpp"

namespace toric {

// Closed even walk, stored as a cyclic edge-index sequence.  verts[i] is the
// start vertex of edges[i].  Edges at even 0-based positions are the "odd
// edges" (1st, 3rd, ... in 1-based counting); together with the odd-position
// edges they split the traversal into the two monomials of the walk binomial.
class Walk {
  public:
    Walk(const Graph& g, std::vector<int> edge_seq);
    static Walk from_vertex_cycle(const Graph& g, const std::vector<int>& cycle);

    const std::vector<int>& edges() const { return edges_; }
    const std::vector<int>& verts() const { return verts_; }
    std::size_t length() const { return edges_.size(); }

    EdgeMask edge_set() const;
    VertexMask vertex_set() const;
    bool visits(int v) const;

    std::vector<int> odd_edges() const;   // positions 1,3,5,... (1-based)
    std::vector<int> even_edges() const;
    Binomial binomial(const Graph& g) const;

    // Lexicographically least edge sequence over rotations by 2 and one
    // reflection; parity classes are preserved up to swap.
    Walk canonical(const Graph& g) const;

    bool operator==(const Walk& o) const { return edges_ == o.edges_; }
    bool operator<(const Walk& o) const {
        return edges_.size() != o.edges_.size() ? edges_.size() < o.edges_.size()
                                                : edges_ < o.edges_;
    }

  private:
    Walk() = default;
    std::vector<int> edges_;
    std::vector<int> verts_;
};

enum class ChordTag { Bridge, Even, Odd };

struct ChordClass {
    ChordTag tag = ChordTag::Bridge;
    // For odd chords: 0-based positions (i < j) of the endpoints in the
    // walk's vertex sequence, and the two break walks (each includes the
    // chord itself as its last edge).
    int pos_i = -1, pos_j = -1;
    std::vector<int> break1, break2;
};

enum class CrossingKind { None, Effective, StronglyEffective, F4 };

struct F4Cycle {
    int e = -1, f = -1, e2 = -1, f2 = -1;  // cycle (e, f, e2, f2); f, f2 odd chords
    bool operator==(const F4Cycle& o) const {
        return e == o.e && f == o.f && e2 == o.e2 && f2 == o.f2;
    }
    bool operator<(const F4Cycle& o) const {
        if (e != o.e) return e < o.e;
        if (f != o.f) return f < o.f;
        if (e2 != o.e2) return e2 < o.e2;
        return f2 < o.f2;
    }
};

struct WalkClassification {
    bool primitive = false;
    bool strongly_primitive = false;
    bool minimal = false;
    bool indispensable = false;
    std::vector<F4Cycle> f4_list;
    std::string witness;  // violated condition when a flag is false
};

std::vector<Walk> enumerate_even_cycles(const Graph& g, std::size_t max_len,
                                        const Budget& budget = {});

// All walks whose binomial is primitive: even cycles plus chains of cycles
// joined at single vertices or by doubled paths, filtered by the exact
// divisibility test.  Canonical and deduplicated.
std::vector<Walk> enumerate_primitive_walks(const Graph& g, const Budget& budget = {});

ChordClass classify_chord(const Graph& g, const Walk& w, int chord_edge);

CrossingKind crossing_kind(const Graph& g, const Walk& w, int chord_f, int chord_f2);

std::pair<bool, std::string> is_strongly_primitive(const Graph& g, const Walk& w);

WalkClassification classify_walk(const Graph& g, const Walk& w);

std::vector<int> walk_chords(const Graph& g, const Walk& w);

}  // namespace toric

#endif
