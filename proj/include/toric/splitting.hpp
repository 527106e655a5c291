#ifndef TORIC_SPLITTING_HPP
#define TORIC_SPLITTING_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "toric/fibers.hpp"
#include "toric/graph.hpp"

namespace toric {

struct EdgeSplitWitness {
    int edge = -1;
    MinimalSystem system;
    Graph walk_subgraph;  // union of the system's walks through the edge
};

struct SplittingReport {
    Graph g1, g2;
    bool is_splitting = false;
    bool is_edge_splitting = false;
    std::optional<EdgeSplitWitness> edge_witness;
    bool is_minimal = false;
    bool is_reduced = false;
    std::size_t mu_g = 0, mu_g1 = 0, mu_g2 = 0;
};

// Subgraph spanned by the walks of S that use edge e (resp. any edge of F,
// resp. vertex v).  S must be a minimal generating set of I_g.
Graph g_s_e(const Graph& g, const MinimalSystem& s, int e);
Graph g_s_F(const Graph& g, const MinimalSystem& s, const std::vector<int>& F);
Graph g_s_v(const Graph& g, const MinimalSystem& s, int v);

// Searches all edges and all per-fiber generator selections for an edge e and
// a minimal system S with I_{G_S^e} != I_G.  The search is exhaustive over
// the support-minimal per-fiber choices, so "nullopt" is a certificate that no
// edge splitting exists.
std::optional<EdgeSplitWitness> is_edge_splittable(const Graph& g, const Budget& budget = {});

bool is_subgraph_splittable(const Graph& g, const Budget& budget = {});

SplittingReport check_splitting(const Graph& g, const Graph& g1, const Graph& g2,
                                const Budget& budget = {});

// All splittings up to ideal equality: unordered pairs of proper subgraph
// ideals generated by subsets of the minimal binomials of I_g, with both
// sides realized by their support graphs.
std::vector<SplittingReport> enumerate_splittings(const Graph& g, const Budget& budget = {});

struct KnType {
    int type = 0;                  // 1..4 as in the K_n classification
    std::array<int, 4> cycle;      // witnessing 4-cycle (a, b, c, d), edge indices
};

KnType kn_classify(int n, const Graph& g1, const Graph& g2, const Budget& budget = {});

bool kn_has_minimal_splitting(int n, const Budget& budget = {});
bool wheel_splittable(int rim, const Budget& budget = {});

struct ReducedForm {
    std::vector<int> F;     // edge indices, E(g) \ E(g2)
    MinimalSystem system;   // S with I_{g1} = I_{G_S^F} and I_{g2} = I_{G\F}
};

ReducedForm reduced_form(const Graph& g, const Graph& g1, const Graph& g2,
                         const Budget& budget = {});

}  // namespace toric

#endif
