#ifndef TORIC_FIBERS_HPP
#define TORIC_FIBERS_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "toric/bigint.hpp"
#include "toric/common.hpp"
#include "toric/graph.hpp"

namespace toric {

// ---- monomials -----------------------------------------------------------

Expo expo_zero(const Graph& g);
Expo expo_of_edges(const Graph& g, const std::vector<int>& edges);  // counts multiplicity
int expo_total_degree(const Expo& a);
bool expo_divides(const Expo& a, const Expo& b);  // a | b
Expo expo_mul(const Expo& a, const Expo& b);
Expo expo_div(const Expo& a, const Expo& b);  // requires b | a
Expo expo_gcd(const Expo& a, const Expo& b);
bool expo_coprime(const Expo& a, const Expo& b);
EdgeMask expo_support(const Expo& a);
std::string expo_to_string(const Graph& g, const Expo& a);  // label notation

DegreeVec a_degree(const Graph& g, const Expo& m);

// Binomial plus - minus with equal A-degrees, stored gcd-free and
// sign-canonical (plus is the lexicographically smaller monomial).
struct Binomial {
    Expo plus, minus;

    static Binomial make(const Expo& a, const Expo& b);
    static Binomial of_edge_lists(const Graph& g, const std::vector<int>& a,
                                  const std::vector<int>& b);

    EdgeMask support() const { return expo_support(plus) | expo_support(minus); }
    bool uses_edge(int e) const { return plus[e] > 0 || minus[e] > 0; }
    bool operator==(const Binomial& o) const { return plus == o.plus && minus == o.minus; }
    bool operator<(const Binomial& o) const {
        return plus != o.plus ? plus < o.plus : minus < o.minus;
    }
    std::string to_string(const Graph& g) const {
        return expo_to_string(g, plus) + " - " + expo_to_string(g, minus);
    }
};

// All monomials of one A-degree, with their components under gcd-adjacency
// (m ~ m' iff gcd != 1, transitively closed).
struct Fiber {
    DegreeVec degree;
    std::vector<Expo> monomials;            // sorted lex
    std::vector<int> comp_of;               // component id per monomial
    std::vector<std::vector<int>> comps;    // components, sorted by least member
    int find(const Expo& m) const;          // -1 if absent
};

Fiber enumerate_fiber(const Graph& g, const DegreeVec& b, const Budget& budget = {});

// Termwise-divisibility test: true iff no other binomial of the ideal divides
// this one (plus side into plus, minus side into minus).
bool is_primitive(const Graph& g, const Binomial& b);

struct FiberSelection {
    DegreeVec degree;
    std::vector<int> component_sizes;
    std::vector<Binomial> chosen;  // c-1 binomials connecting the components
};

struct MinimalSystem {
    std::vector<Binomial> binomials;       // sorted
    std::vector<FiberSelection> per_fiber;
};

// ---- the engine ----------------------------------------------------------

// Per-degree generator data of one subgraph: the fibers (restricted to the
// subgraph's edges) that are disconnected and therefore carry generators.
struct BettiFiber {
    DegreeVec degree;
    std::vector<Expo> monomials;
    std::vector<int> comp_of;
    std::vector<std::vector<int>> comps;  // sorted by least member monomial
    int find(const Expo& m) const;
};

struct IdealProfile {
    std::size_t mu = 0;
    std::vector<BettiFiber> betti;            // sorted by degree
    MinimalSystem canonical;                  // the canonical spanning selection
    BigUint system_count;                     // number of minimal systems
    std::vector<DegreeVec> generator_degrees; // deduplicated primitive-walk degrees
    std::string fingerprint;                  // canonical system, serialized
};

// Caches fibers and per-subgraph ideal profiles over one ambient graph, so a
// search that revisits subgraphs does each analysis once.
class IdealEngine {
  public:
    explicit IdealEngine(Graph ambient, Budget budget = Budget::from_env());

    const Graph& ambient() const { return ambient_; }
    const Budget& budget() const { return budget_; }

    EdgeMask mask_of(const Graph& subgraph) const;  // throws not_subgraph
    Graph subgraph(EdgeMask mask) const { return ambient_.restricted_to(mask); }

    const Fiber& fiber(EdgeMask mask, const DegreeVec& degree);
    const IdealProfile& profile(EdgeMask mask);
    const IdealProfile& profile() { return profile(ambient_.alive_mask()); }

    bool generates(EdgeMask mask, const std::vector<Binomial>& gens);
    bool ideal_equals(EdgeMask sub, EdgeMask super);

    // All minimal binomials (every cross-component pair of every
    // disconnected generator fiber).
    std::vector<Binomial> minimal_binomials(EdgeMask mask);
    std::vector<Binomial> indispensable_binomials(EdgeMask mask);

  private:
    Graph ambient_;
    Budget budget_;
    std::map<std::pair<EdgeMask, DegreeVec>, std::unique_ptr<Fiber>> fiber_memo_;
    std::unordered_map<EdgeMask, std::unique_ptr<IdealProfile>> profile_memo_;
};

// ---- free-function API ----------------------------------------------------

std::vector<DegreeVec> generator_degrees(const Graph& g, const Budget& budget = {});
MinimalSystem minimal_generating_set(const Graph& g, const Budget& budget = {});
std::size_t mu(const Graph& g, const Budget& budget = {});
BigUint count_minimal_systems(const Graph& g, const Budget& budget = {});

// Membership of a binomial of I_g in the subgraph ideal I_h.
bool binomial_in_subgraph_ideal(const Binomial& b, const Graph& h, const Graph& g);

// True iff the binomials in gens generate I_g.
bool generates(const Graph& g, const std::vector<Binomial>& gens, const Budget& budget = {});

// True iff I_h = I_g for a subgraph h of g.
bool ideal_equals(const Graph& h, const Graph& g, const Budget& budget = {});

}  // namespace toric

#endif
