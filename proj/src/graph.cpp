#include "toric/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace toric {

Budget Budget::from_env() {
    Budget b;
    if (const char* env = std::getenv("TORIC_SPLIT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) return scaled(static_cast<std::size_t>(v));
    }
    return b;
}

Budget Budget::scaled(std::size_t n) {
    Budget b;
    b.fiber_cap = n;
    b.candidate_cap = 10 * n;
    b.product_cap = n;
    b.subset_cap = 10 * n;
    return b;
}

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels) {
    if (vertex_count < 0 || vertex_count > 64)
        throw std::invalid_argument("graph: vertex count must be between 0 and 64");
    if (edges.size() > 64) throw std::invalid_argument("graph: at most 64 edges supported");
    n_ = vertex_count;
    vertices_ = n_ == 64 ? ~VertexMask(0) : ((VertexMask(1) << n_) - 1);
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u == v) throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (u < 1 || v < 1 || u > n_ || v > n_)
            throw std::invalid_argument("graph: vertex out of range");
        if (u > v) std::swap(u, v);
        for (const Edge& e : edges_)
            if (e.u == u && e.v == v)
                throw std::invalid_argument("graph: duplicate edge {" + std::to_string(u) + "," +
                                            std::to_string(v) + "}");
        Edge e;
        e.u = u;
        e.v = v;
        e.label = i < labels.size() && !labels[i].empty() ? labels[i]
                                                         : "e" + std::to_string(i + 1);
        edges_.push_back(std::move(e));
    }
    alive_ = edges_.empty() ? 0
             : edges_.size() == 64 ? ~EdgeMask(0)
                                   : ((EdgeMask(1) << edges_.size()) - 1);
}

std::size_t Graph::edge_count() const { return static_cast<std::size_t>(std::popcount(alive_)); }

std::vector<int> Graph::active_edges() const {
    std::vector<int> out;
    out.reserve(edge_count());
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edge_alive(static_cast<int>(i))) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> Graph::incident_edges(int v) const {
    std::vector<int> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edge_alive(static_cast<int>(i)) && (edges_[i].u == v || edges_[i].v == v))
            out.push_back(static_cast<int>(i));
    return out;
}

int Graph::degree(int v) const { return static_cast<int>(incident_edges(v).size()); }

int Graph::find_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edge_alive(static_cast<int>(i)) && edges_[i].u == u && edges_[i].v == v)
            return static_cast<int>(i);
    return -1;
}

int Graph::edge_by_label(const std::string& label) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].label == label) return static_cast<int>(i);
    return -1;
}

Graph Graph::restricted_to(EdgeMask mask) const {
    Graph g = *this;
    g.alive_ = alive_ & mask;
    return g;
}

Graph Graph::without_vertex(int v) const {
    Graph g = *this;
    for (int i : incident_edges(v)) g.alive_ &= ~(EdgeMask(1) << i);
    g.vertices_ &= ~(VertexMask(1) << (v - 1));
    return g;
}

bool Graph::same_universe(const Graph& o) const {
    if (edges_.size() != o.edges_.size()) return false;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u != o.edges_[i].u || edges_[i].v != o.edges_[i].v) return false;
    return true;
}

namespace {

std::string eps(int i, int j) { return "ε" + std::to_string(i) + std::to_string(j); }

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> lab;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            e.emplace_back(i, j);
            lab.push_back(eps(i, j));
        }
    Graph g(n, e, lab);
    g.display_name = "K" + std::to_string(n);
    return g;
}

Graph make_complete_bipartite(int m, int n) {
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> lab;
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j) {
            e.emplace_back(i, m + j);
            lab.push_back("b" + std::to_string(i) + std::to_string(j));
        }
    Graph g(m + n, e, lab);
    g.display_name = "K" + std::to_string(m) + "," + std::to_string(n);
    return g;
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    Graph g(n, e);
    g.display_name = "C" + std::to_string(n);
    return g;
}

Graph make_wheel(int rim) {
    // rim edges first, then spokes; hub is vertex rim+1
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> lab;
    for (int i = 1; i < rim; ++i) {
        e.emplace_back(i, i + 1);
        lab.push_back(eps(i, i + 1));
    }
    e.emplace_back(1, rim);
    lab.push_back(eps(1, rim));
    for (int i = 1; i <= rim; ++i) {
        e.emplace_back(i, rim + 1);
        lab.push_back(eps(i, rim + 1));
    }
    Graph g(rim + 1, e, lab);
    g.display_name = "W" + std::to_string(rim + 1);
    return g;
}

// Vertices: v_i = i, m_i = n+i, m'_i = 2n+i, o = 3n+1, o' = 3n+2.
Graph make_roundabout(int n) {
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> lab;
    int o = 3 * n + 1, op = 3 * n + 2;
    e.emplace_back(o, op);
    lab.push_back("e");
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(n + i, 2 * n + i);
        lab.push_back("e" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(o, n + i);
        lab.push_back("R" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(op, 2 * n + i);
        lab.push_back("R'" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(i, n + i);
        lab.push_back("r" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i) {
        int prev = i == 1 ? n : i - 1;
        e.emplace_back(i, n + prev);
        lab.push_back("l" + std::to_string(i));
    }
    Graph g(3 * n + 2, e, lab);
    g.display_name = "G" + std::to_string(n);
    return g;
}

// k four-cycles in a row: a ladder with k+1 rungs.  Vertices: top 1..k+1,
// bottom k+2..2k+2.  Rung s_i = {top_i, bot_i}.
Graph make_cycle_row(int k) {
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> lab;
    auto top = [&](int i) { return i + 1; };
    auto bot = [&](int i) { return k + 2 + i; };
    e.emplace_back(top(0), bot(0));
    lab.push_back("s0");
    for (int i = 1; i <= k; ++i) {
        e.emplace_back(top(i - 1), top(i));
        lab.push_back("t" + std::to_string(i));
        e.emplace_back(bot(i - 1), bot(i));
        lab.push_back("d" + std::to_string(i));
        e.emplace_back(top(i), bot(i));
        lab.push_back("s" + std::to_string(i));
    }
    Graph g(2 * k + 2, e, lab);
    g.display_name = "row" + std::to_string(k);
    return g;
}

Graph make_grid(int r, int c) {
    std::vector<std::pair<int, int>> e;
    auto id = [&](int i, int j) { return i * c + j + 1; };
    for (int i = 0; i < r; ++i)
        for (int j = 0; j + 1 < c; ++j) e.emplace_back(id(i, j), id(i, j + 1));
    for (int i = 0; i + 1 < r; ++i)
        for (int j = 0; j < c; ++j) e.emplace_back(id(i, j), id(i + 1, j));
    Graph g(r * c, e);
    g.display_name = "grid" + std::to_string(r) + "x" + std::to_string(c);
    return g;
}

}  // namespace

Graph family(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw std::invalid_argument("family " + name + ": expected " + std::to_string(k) +
                                        " parameter(s)");
    };
    if (name == "complete") {
        need(1);
        if (params[0] < 1) throw std::invalid_argument("complete: n >= 1 required");
        return make_complete(params[0]);
    }
    if (name == "complete_bipartite") {
        need(2);
        if (params[0] < 1 || params[1] < 1)
            throw std::invalid_argument("complete_bipartite: m,n >= 1 required");
        return make_complete_bipartite(params[0], params[1]);
    }
    if (name == "cycle") {
        need(1);
        if (params[0] < 3) throw std::invalid_argument("cycle: n >= 3 required");
        return make_cycle(params[0]);
    }
    if (name == "wheel") {
        need(1);
        if (params[0] < 3) throw std::invalid_argument("wheel: rim length >= 3 required");
        return make_wheel(params[0]);
    }
    if (name == "roundabout") {
        need(1);
        if (params[0] < 3) throw std::invalid_argument("roundabout: n >= 3 required");
        return make_roundabout(params[0]);
    }
    if (name == "cycle_row") {
        need(1);
        if (params[0] < 1) throw std::invalid_argument("cycle_row: k >= 1 required");
        return make_cycle_row(params[0]);
    }
    if (name == "grid") {
        need(2);
        if (params[0] < 2 || params[1] < 2) throw std::invalid_argument("grid: r,c >= 2 required");
        return make_grid(params[0], params[1]);
    }
    throw std::invalid_argument("unknown family: " + name);
}

Graph delete_edges(const Graph& g, const std::vector<int>& edge_indices) {
    EdgeMask mask = g.alive_mask();
    for (int i : edge_indices) {
        if (i < 0 || static_cast<std::size_t>(i) >= g.universe_size() || !g.edge_alive(i))
            throw std::invalid_argument("delete_edges: unknown edge index " + std::to_string(i));
        mask &= ~(EdgeMask(1) << i);
    }
    return g.restricted_to(mask);
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 1 || v > g.vertex_count() || !g.vertex_alive(v))
        throw std::invalid_argument("delete_vertex: unknown vertex " + std::to_string(v));
    return g.without_vertex(v);
}

BlockDecomposition blocks(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n + 1);  // (neighbour, edge index)
    for (int i : g.active_edges()) {
        adj[g.edge(i).u].push_back({g.edge(i).v, i});
        adj[g.edge(i).v].push_back({g.edge(i).u, i});
    }
    std::vector<int> disc(n + 1, 0), low(n + 1, 0);
    std::vector<bool> is_cut(n + 1, false);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> out_blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (auto [w, ei] : adj[u]) {
            if (ei == parent_edge) continue;
            if (!disc[w]) {
                ++children;
                edge_stack.push_back(ei);
                dfs(w, ei);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    if (parent_edge != -1 || children > 1) is_cut[u] = true;
                    std::vector<int> blk;
                    int e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                    } while (e != ei);
                    std::sort(blk.begin(), blk.end());
                    out_blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) {
                edge_stack.push_back(ei);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 1; v <= n; ++v)
        if (!disc[v] && g.vertex_alive(v)) dfs(v, -1);

    std::sort(out_blocks.begin(), out_blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    BlockDecomposition bd;
    bd.blocks = std::move(out_blocks);
    for (int v = 1; v <= n; ++v)
        if (is_cut[v]) bd.cut_vertices.push_back(v);
    return bd;
}

Graph read_graph_text(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("graph text: expected header \"n m\"");
    std::vector<std::pair<int, int>> e;
    std::vector<std::string> lab;
    std::string line;
    std::getline(in, line);
    for (int i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw std::invalid_argument("graph text: missing edge line");
        std::istringstream ls(line);
        int u = 0, v = 0;
        std::string label;
        if (!(ls >> u >> v)) throw std::invalid_argument("graph text: bad edge line: " + line);
        ls >> label;
        e.emplace_back(u, v);
        lab.push_back(label);
    }
    return Graph(n, e, lab);
}

void write_graph_text(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int i : g.active_edges())
        out << g.edge(i).u << " " << g.edge(i).v << " " << g.edge(i).label << "\n";
}

}  // namespace toric
