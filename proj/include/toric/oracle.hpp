#ifndef TORIC_ORACLE_HPP
#define TORIC_ORACLE_HPP

#include <string>
#include <vector>

#include "toric/fibers.hpp"
#include "toric/graph.hpp"
#include "toric/splitting.hpp"

namespace toric {

// Brute-force ground truth at desk scale.  The minimal/indispensable sets
// come from a raw scan of every monomial up to the walk-length bound, with no
// use of the walk machinery; the splitting enumeration is an independent
// exhaustive pass over generator subsets.

struct OracleReport {
    std::string graph_name;
    std::size_t mu = 0;
    std::vector<Binomial> minimal;
    std::vector<Binomial> indispensable;
    bool agree_minimal = false;
    bool agree_indispensable = false;
    bool agree_mu = false;
    bool agree_splittable = false;
};

// Every minimal binomial, found by bucketing all monomials of degree at most
// |E(g)| by A-degree and taking cross-component pairs of disconnected
// buckets.  Throws budget_error above the edge cap (default 14).
std::vector<Binomial> oracle_minimal_binomials(const Graph& g, std::size_t edge_cap = 14);

std::vector<Binomial> oracle_indispensables(const Graph& g, std::size_t edge_cap = 14);

// Exhaustive splitting search over two-colourings of minimal systems: the
// graph is splittable iff some minimal system splits into two parts whose
// support graphs both have proper ideals.
bool oracle_splittable(const Graph& g, const Budget& budget = {});

// All splittings, via the same generator-subset enumeration the main module
// uses but driven by the oracle's minimal-binomial scan.
std::vector<SplittingReport> oracle_splittings(const Graph& g, const Budget& budget = {});

OracleReport oracle_check(const Graph& g, const Budget& budget = {});

}  // namespace toric

#endif
