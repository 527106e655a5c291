#ifndef TORIC_GRAPH_HPP
#define TORIC_GRAPH_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "toric/common.hpp"

namespace toric {

struct Edge {
    int u = 0, v = 0;  // 1-based vertices, u < v
    std::string label;
};

// Simple undirected graph.  Edge indices are stable identifiers: a subgraph
// keeps the parent's edge list and deactivates bits in `alive`, so monomials
// and binomials of a graph and all of its subgraphs live over one shared
// variable set.
class Graph {
  public:
    Graph() = default;
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    std::size_t universe_size() const { return edges_.size(); }
    std::size_t edge_count() const;  // active edges only

    const std::vector<Edge>& universe() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    bool edge_alive(int i) const { return (alive_ >> i) & 1u; }
    bool vertex_alive(int v) const { return (vertices_ >> (v - 1)) & 1u; }
    EdgeMask alive_mask() const { return alive_; }
    VertexMask vertex_mask() const { return vertices_; }

    std::vector<int> active_edges() const;
    std::vector<int> incident_edges(int v) const;
    int degree(int v) const;

    // Finds the active edge {u,v}; -1 if absent.
    int find_edge(int u, int v) const;
    int edge_by_label(const std::string& label) const;

    Graph restricted_to(EdgeMask mask) const;  // same universe, new alive set
    Graph without_vertex(int v) const;         // drops v and incident edges

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && alive_ == o.alive_ && vertices_ == o.vertices_ && same_universe(o);
    }
    bool same_universe(const Graph& o) const;

    std::string display_name;  // optional, cosmetic

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    EdgeMask alive_ = 0;
    VertexMask vertices_ = 0;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // edge-index sets, each sorted
    std::vector<int> cut_vertices;         // sorted
};

// Named families with the labelling conventions used throughout the toolkit.
//   complete:[n]            K_n, edges eps_ij in lex order
//   complete_bipartite:[m,n] K_{m,n}, edges b_ij row-major
//   cycle:[n]               C_n, edges e1..en
//   wheel:[n]               rim length n >= 3; rim edges then spokes, hub = n+1
//   roundabout:[n]          n >= 3; edges e, e_i, R_i, R'_i, r_i, l_i
//   cycle_row:[k]           k >= 1 four-cycles in a row (ladder with k+1 rungs)
//   grid:[r,c]              r x c vertex grid
Graph family(const std::string& name, const std::vector<int>& params);

Graph delete_edges(const Graph& g, const std::vector<int>& edge_indices);
Graph delete_vertex(const Graph& g, int v);

BlockDecomposition blocks(const Graph& g);

// Text format: first line "n m", then m lines "u v [label]" (1-based).
Graph read_graph_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);

}  // namespace toric

#endif
