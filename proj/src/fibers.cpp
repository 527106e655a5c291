#include "toric/fibers.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "toric/walks.hpp"

namespace toric {

// ---- monomials -----------------------------------------------------------

Expo expo_zero(const Graph& g) { return Expo(g.universe_size(), 0); }

Expo expo_of_edges(const Graph& g, const std::vector<int>& edges) {
    Expo e = expo_zero(g);
    for (int i : edges) {
        if (i < 0 || static_cast<std::size_t>(i) >= g.universe_size())
            throw std::invalid_argument("unknown edge index " + std::to_string(i));
        ++e[static_cast<std::size_t>(i)];
    }
    return e;
}

int expo_total_degree(const Expo& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool expo_divides(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Expo expo_mul(const Expo& a, const Expo& b) {
    Expo out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>(out[i] + b[i]);
    return out;
}

Expo expo_div(const Expo& a, const Expo& b) {
    Expo out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint8_t>(out[i] - b[i]);
    return out;
}

Expo expo_gcd(const Expo& a, const Expo& b) {
    Expo out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
    return out;
}

bool expo_coprime(const Expo& a, const Expo& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

EdgeMask expo_support(const Expo& a) {
    EdgeMask m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) m |= EdgeMask(1) << i;
    return m;
}

std::string expo_to_string(const Graph& g, const Expo& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        if (!out.empty()) out += "*";
        out += g.edge(static_cast<int>(i)).label;
        if (a[i] > 1) out += "^" + std::to_string(int(a[i]));
    }
    return out.empty() ? "1" : out;
}

DegreeVec a_degree(const Graph& g, const Expo& m) {
    if (m.size() != g.universe_size()) throw std::invalid_argument("a_degree: size mismatch");
    DegreeVec d(static_cast<std::size_t>(g.vertex_count()), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!m[i]) continue;
        if (!g.edge_alive(static_cast<int>(i)))
            throw std::invalid_argument("a_degree: unknown edge " + std::to_string(i));
        d[static_cast<std::size_t>(g.edge(static_cast<int>(i)).u - 1)] += m[i];
        d[static_cast<std::size_t>(g.edge(static_cast<int>(i)).v - 1)] += m[i];
    }
    return d;
}

Binomial Binomial::make(const Expo& a, const Expo& b) {
    Expo g = expo_gcd(a, b);
    Expo p = expo_div(a, g), q = expo_div(b, g);
    if (p == q) throw std::invalid_argument("binomial: the two monomials are equal");
    Binomial out;
    if (q < p) std::swap(p, q);
    out.plus = std::move(p);
    out.minus = std::move(q);
    return out;
}

Binomial Binomial::of_edge_lists(const Graph& g, const std::vector<int>& a,
                                 const std::vector<int>& b) {
    return make(expo_of_edges(g, a), expo_of_edges(g, b));
}

// ---- fibers ----------------------------------------------------------------

int Fiber::find(const Expo& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || *it != m) return -1;
    return static_cast<int>(it - monomials.begin());
}

int BettiFiber::find(const Expo& m) const {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), m);
    if (it == monomials.end() || *it != m) return -1;
    return static_cast<int>(it - monomials.begin());
}

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// Components under shared-variable adjacency.  Two monomials with gcd != 1
// share an edge variable, so per-edge buckets give the same partition in
// linear time.
void gcd_components(const std::vector<Expo>& monomials, std::vector<int>& comp_of,
                    std::vector<std::vector<int>>& comps) {
    const int k = static_cast<int>(monomials.size());
    DSU dsu(k);
    if (k > 0) {
        const std::size_t m = monomials[0].size();
        for (std::size_t e = 0; e < m; ++e) {
            int first = -1;
            for (int i = 0; i < k; ++i) {
                if (!monomials[static_cast<std::size_t>(i)][e]) continue;
                if (first < 0)
                    first = i;
                else
                    dsu.unite(first, i);
            }
        }
    }
    std::map<int, std::vector<int>> by_root;
    for (int i = 0; i < k; ++i) by_root[dsu.find(i)].push_back(i);
    comps.clear();
    for (auto& [root, members] : by_root) comps.push_back(std::move(members));
    // Sorted monomials mean each component's first member is its least; order
    // components by that least member.
    std::sort(comps.begin(), comps.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a[0] < b[0]; });
    comp_of.assign(static_cast<std::size_t>(k), -1);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (int i : comps[c]) comp_of[static_cast<std::size_t>(i)] = static_cast<int>(c);
}

void enumerate_fiber_rec(const Graph& g, DegreeVec& need, Expo& cur, int min_edge_at_v,
                         std::vector<Expo>& out, const Budget& budget) {
    int v = -1;
    for (std::size_t i = 0; i < need.size(); ++i)
        if (need[i] > 0) {
            v = static_cast<int>(i) + 1;
            break;
        }
    if (v < 0) {
        if (out.size() >= budget.fiber_cap) throw budget_error("fiber larger than cap");
        out.push_back(cur);
        return;
    }
    for (int ei : g.incident_edges(v)) {
        if (ei < min_edge_at_v) continue;
        const Edge& e = g.edge(ei);
        int other = e.u == v ? e.v : e.u;
        if (need[static_cast<std::size_t>(other - 1)] <= 0) continue;
        --need[static_cast<std::size_t>(v - 1)];
        --need[static_cast<std::size_t>(other - 1)];
        ++cur[static_cast<std::size_t>(ei)];
        // stay on the same vertex while it still needs degree, never choosing
        // a smaller edge index again: each multiset is produced exactly once
        int next_min = need[static_cast<std::size_t>(v - 1)] > 0 ? ei : 0;
        enumerate_fiber_rec(g, need, cur, next_min, out, budget);
        ++need[static_cast<std::size_t>(v - 1)];
        ++need[static_cast<std::size_t>(other - 1)];
        --cur[static_cast<std::size_t>(ei)];
    }
}

}  // namespace

Fiber enumerate_fiber(const Graph& g, const DegreeVec& b, const Budget& budget) {
    if (b.size() != static_cast<std::size_t>(g.vertex_count()))
        throw std::invalid_argument("enumerate_fiber: degree vector size mismatch");
    Fiber f;
    f.degree = b;
    long total = std::accumulate(b.begin(), b.end(), 0L);
    if (total % 2 != 0) return f;  // odd degree sum: empty fiber
    DegreeVec need(b);
    Expo cur = expo_zero(g);
    enumerate_fiber_rec(g, need, cur, 0, f.monomials, budget);
    std::sort(f.monomials.begin(), f.monomials.end());
    gcd_components(f.monomials, f.comp_of, f.comps);
    return f;
}

// ---- primitivity -----------------------------------------------------------

namespace {

void divisors_rec(const Expo& m, std::size_t i, Expo& cur, std::vector<Expo>& out) {
    if (i == m.size()) {
        out.push_back(cur);
        return;
    }
    for (std::uint8_t e = 0; e <= m[i]; ++e) {
        cur[i] = e;
        divisors_rec(m, i + 1, cur, out);
    }
    cur[i] = 0;
}

std::vector<Expo> divisors(const Expo& m) {
    std::vector<Expo> out;
    Expo cur(m.size(), 0);
    divisors_rec(m, 0, cur, out);
    return out;
}

}  // namespace

bool is_primitive(const Graph& g, const Binomial& b) {
    // Another binomial w - z of the ideal with w | plus and z | minus exists
    // iff some proper divisor of plus shares an A-degree with a different
    // divisor of minus.
    std::map<DegreeVec, std::vector<const Expo*>> minus_by_degree;
    auto minus_divs = divisors(b.minus);
    for (const Expo& z : minus_divs) minus_by_degree[a_degree(g, z)].push_back(&z);
    for (const Expo& w : divisors(b.plus)) {
        if (expo_total_degree(w) == 0 || w == b.plus) continue;
        auto it = minus_by_degree.find(a_degree(g, w));
        if (it == minus_by_degree.end()) continue;
        for (const Expo* z : it->second)
            if (*z != w) return false;
    }
    return true;
}

// ---- engine ----------------------------------------------------------------

IdealEngine::IdealEngine(Graph ambient, Budget budget)
    : ambient_(std::move(ambient)), budget_(budget) {}

EdgeMask IdealEngine::mask_of(const Graph& subgraph) const {
    if (!subgraph.same_universe(ambient_)) {
        // align by endpoints
        EdgeMask mask = 0;
        for (int i : subgraph.active_edges()) {
            int j = ambient_.find_edge(subgraph.edge(i).u, subgraph.edge(i).v);
            if (j < 0)
                throw std::invalid_argument("not_subgraph: edge {" +
                                            std::to_string(subgraph.edge(i).u) + "," +
                                            std::to_string(subgraph.edge(i).v) +
                                            "} is not in the ambient graph");
            mask |= EdgeMask(1) << j;
        }
        return mask;
    }
    EdgeMask mask = subgraph.alive_mask();
    if ((mask & ~ambient_.alive_mask()) != 0)
        throw std::invalid_argument("not_subgraph: extra edges beyond ambient graph");
    return mask;
}

const Fiber& IdealEngine::fiber(EdgeMask mask, const DegreeVec& degree) {
    auto key = std::make_pair(mask, degree);
    auto it = fiber_memo_.find(key);
    if (it != fiber_memo_.end()) return *it->second;
    auto f = std::make_unique<Fiber>(enumerate_fiber(ambient_.restricted_to(mask), degree, budget_));
    return *fiber_memo_.emplace(std::move(key), std::move(f)).first->second;
}

namespace {

// Number of spanning selections of a fiber with component sizes s_1..s_c:
// every labelled tree on the c components, each tree edge realized by any
// representative pair.  By the generalized Cayley formula this is
// s_1*...*s_c * (s_1+...+s_c)^(c-2).
BigUint selection_count(const std::vector<int>& sizes) {
    const std::size_t c = sizes.size();
    if (c <= 1) return BigUint(1);
    BigUint out(1);
    for (int s : sizes) out *= BigUint(static_cast<std::uint64_t>(s));
    std::uint64_t total = 0;
    for (int s : sizes) total += static_cast<std::uint64_t>(s);
    if (c >= 2) out *= BigUint::pow(total, c - 2);
    return out;
}

}  // namespace

const IdealProfile& IdealEngine::profile(EdgeMask mask) {
    mask &= ambient_.alive_mask();
    auto it = profile_memo_.find(mask);
    if (it != profile_memo_.end()) return *it->second;

    auto prof = std::make_unique<IdealProfile>();
    Graph sub = ambient_.restricted_to(mask);
    std::vector<Walk> walks = enumerate_primitive_walks(sub, budget_);

    std::map<DegreeVec, bool> seen;
    for (const Walk& w : walks) {
        DegreeVec d = a_degree(sub, expo_of_edges(sub, w.odd_edges()));
        seen.emplace(std::move(d), true);
    }
    prof->generator_degrees.reserve(seen.size());
    for (auto& [d, _] : seen) prof->generator_degrees.push_back(d);

    prof->system_count = BigUint(1);
    for (const DegreeVec& d : prof->generator_degrees) {
        const Fiber& f = fiber(mask, d);
        if (f.comps.size() < 2) continue;
        BettiFiber bf;
        bf.degree = d;
        bf.monomials = f.monomials;
        bf.comp_of = f.comp_of;
        bf.comps = f.comps;
        prof->mu += f.comps.size() - 1;

        FiberSelection sel;
        sel.degree = d;
        for (const auto& comp : f.comps)
            sel.component_sizes.push_back(static_cast<int>(comp.size()));
        // canonical star selection: least monomial of component 1 paired with
        // the least monomial of every other component
        const Expo& hub = f.monomials[static_cast<std::size_t>(f.comps[0][0])];
        for (std::size_t c = 1; c < f.comps.size(); ++c) {
            Binomial b = Binomial::make(hub, f.monomials[static_cast<std::size_t>(f.comps[c][0])]);
            sel.chosen.push_back(b);
            prof->canonical.binomials.push_back(b);
        }
        prof->system_count *= selection_count(sel.component_sizes);
        prof->canonical.per_fiber.push_back(std::move(sel));
        prof->betti.push_back(std::move(bf));
    }
    std::sort(prof->canonical.binomials.begin(), prof->canonical.binomials.end());

    std::ostringstream fp;
    for (const Binomial& b : prof->canonical.binomials) {
        for (auto x : b.plus) fp << int(x) << ',';
        fp << '|';
        for (auto x : b.minus) fp << int(x) << ',';
        fp << ';';
    }
    prof->fingerprint = fp.str();

    return *profile_memo_.emplace(mask, std::move(prof)).first->second;
}

bool IdealEngine::generates(EdgeMask mask, const std::vector<Binomial>& gens) {
    mask &= ambient_.alive_mask();
    for (const Binomial& b : gens) {
        if ((b.support() & ~mask) != 0) return false;  // not even in the ideal
        Graph sub = ambient_.restricted_to(mask);
        if (a_degree(sub, b.plus) != a_degree(sub, b.minus))
            throw std::invalid_argument("generates: degree mismatch, not an ideal element");
    }
    // A set of ideal elements generates iff at every disconnected generator
    // fiber its degree-matching members connect all components.  Elements of
    // lower degree only move within a component (they leave a common factor),
    // so the check per fiber reduces to a union-find over components.
    const IdealProfile& prof = profile(mask);
    for (const BettiFiber& bf : prof.betti) {
        DSU dsu(static_cast<int>(bf.comps.size()));
        for (const Binomial& b : gens) {
            int ip = bf.find(b.plus);
            if (ip < 0) continue;
            int im = bf.find(b.minus);
            if (im < 0) continue;
            dsu.unite(bf.comp_of[static_cast<std::size_t>(ip)],
                      bf.comp_of[static_cast<std::size_t>(im)]);
        }
        int root = dsu.find(0);
        for (std::size_t c = 1; c < bf.comps.size(); ++c)
            if (dsu.find(static_cast<int>(c)) != root) return false;
    }
    return true;
}

bool IdealEngine::ideal_equals(EdgeMask sub, EdgeMask super) {
    if ((sub & ~super) != 0) throw std::invalid_argument("not_subgraph: ideal_equals");
    if (sub == super) return true;
    return generates(super, profile(sub).canonical.binomials);
}

std::vector<Binomial> IdealEngine::minimal_binomials(EdgeMask mask) {
    const IdealProfile& prof = profile(mask);
    std::vector<Binomial> out;
    for (const BettiFiber& bf : prof.betti)
        for (std::size_t a = 0; a < bf.comps.size(); ++a)
            for (std::size_t b = a + 1; b < bf.comps.size(); ++b)
                for (int i : bf.comps[a])
                    for (int j : bf.comps[b])
                        out.push_back(Binomial::make(bf.monomials[static_cast<std::size_t>(i)],
                                                     bf.monomials[static_cast<std::size_t>(j)]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Binomial> IdealEngine::indispensable_binomials(EdgeMask mask) {
    const IdealProfile& prof = profile(mask);
    std::vector<Binomial> out;
    for (const BettiFiber& bf : prof.betti)
        if (bf.comps.size() == 2 && bf.comps[0].size() == 1 && bf.comps[1].size() == 1)
            out.push_back(Binomial::make(bf.monomials[static_cast<std::size_t>(bf.comps[0][0])],
                                         bf.monomials[static_cast<std::size_t>(bf.comps[1][0])]));
    std::sort(out.begin(), out.end());
    return out;
}

// ---- free functions ---------------------------------------------------------

std::vector<DegreeVec> generator_degrees(const Graph& g, const Budget& budget) {
    IdealEngine eng(g, budget);
    return eng.profile().generator_degrees;
}

MinimalSystem minimal_generating_set(const Graph& g, const Budget& budget) {
    IdealEngine eng(g, budget);
    return eng.profile().canonical;
}

std::size_t mu(const Graph& g, const Budget& budget) {
    IdealEngine eng(g, budget);
    return eng.profile().mu;
}

BigUint count_minimal_systems(const Graph& g, const Budget& budget) {
    IdealEngine eng(g, budget);
    return eng.profile().system_count;
}

bool binomial_in_subgraph_ideal(const Binomial& b, const Graph& h, const Graph& g) {
    IdealEngine eng(g);
    EdgeMask hm = eng.mask_of(h);
    // Cancel the part of each side outside h; membership needs the leftovers
    // to be a pure-h binomial, i.e. the outside parts must agree exactly.
    for (std::size_t i = 0; i < b.plus.size(); ++i) {
        bool in_h = (hm >> i) & 1u;
        if (!in_h && b.plus[i] != b.minus[i]) return false;
    }
    return true;
}

bool generates(const Graph& g, const std::vector<Binomial>& gens, const Budget& budget) {
    IdealEngine eng(g, budget);
    return eng.generates(g.alive_mask(), gens);
}

bool ideal_equals(const Graph& h, const Graph& g, const Budget& budget) {
    IdealEngine eng(g, budget);
    return eng.ideal_equals(eng.mask_of(h), g.alive_mask());
}

}  // namespace toric
