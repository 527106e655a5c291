#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "toric/fibers.hpp"
#include "toric/walks.hpp"

using namespace toric;

namespace {

int lbl(const Graph& g, const char* s) {
    int e = g.edge_by_label(s);
    REQUIRE(e >= 0);
    return e;
}

Binomial b2(const Graph& g, const char* p1, const char* p2, const char* m1, const char* m2) {
    return Binomial::of_edge_lists(g, {lbl(g, p1), lbl(g, p2)}, {lbl(g, m1), lbl(g, m2)});
}

Graph ten_gon() {
    return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                      {9, 10}, {1, 10}, {1, 5}, {2, 6}, {6, 8}});
}

}  // namespace

TEST_CASE("a_degree") {
    Graph k4 = family("complete", {4});
    CHECK(a_degree(k4, expo_zero(k4)) == DegreeVec{0, 0, 0, 0});

    Expo m = expo_of_edges(k4, {lbl(k4, "ε12"), lbl(k4, "ε34")});
    CHECK(a_degree(k4, m) == DegreeVec{1, 1, 1, 1});

    Expo sq = expo_of_edges(k4, {lbl(k4, "ε12"), lbl(k4, "ε12")});
    CHECK(a_degree(k4, sq) == DegreeVec{2, 2, 0, 0});
}

TEST_CASE("fiber enumeration") {
    Graph k4 = family("complete", {4});
    Fiber f = enumerate_fiber(k4, {1, 1, 1, 1});
    CHECK(f.monomials.size() == 3);
    CHECK(f.comps.size() == 3);  // three perfect matchings, pairwise coprime

    Fiber zero = enumerate_fiber(k4, {0, 0, 0, 0});
    CHECK(zero.monomials.size() == 1);
    CHECK(zero.comps.size() == 1);

    Graph k22 = family("complete_bipartite", {2, 2});
    Fiber f22 = enumerate_fiber(k22, {1, 1, 1, 1});
    CHECK(f22.monomials.size() == 2);
    CHECK(f22.comps.size() == 2);

    // odd degree sum: empty
    CHECK(enumerate_fiber(k4, {1, 0, 0, 0}).monomials.empty());

    // conservation: degree sum is twice each member's total degree
    Fiber big = enumerate_fiber(k4, {2, 2, 1, 1});
    for (const Expo& m : big.monomials) CHECK(2 * expo_total_degree(m) == 6);
}

TEST_CASE("primitivity by termwise divisibility") {
    Graph k4 = family("complete", {4});
    CHECK(is_primitive(k4, b2(k4, "ε12", "ε34", "ε13", "ε24")));

    // the square of a relation is never primitive
    Expo p = expo_of_edges(k4, {0, 0, 5, 5});  // eps12^2 * eps34^2
    Expo q = expo_of_edges(k4, {1, 1, 4, 4});  // eps13^2 * eps24^2
    Binomial sqr;
    sqr.plus = p;
    sqr.minus = q;
    if (q < p) std::swap(sqr.plus, sqr.minus);
    CHECK(!is_primitive(k4, sqr));

    Graph bowtie(5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
    Walk w(bowtie, {0, 1, 2, 3, 4, 5});
    CHECK(is_primitive(bowtie, w.binomial(bowtie)));
}

TEST_CASE("generator degrees") {
    Graph k4 = family("complete", {4});
    auto degs = generator_degrees(k4);
    REQUIRE(degs.size() == 1);
    CHECK(degs[0] == DegreeVec{1, 1, 1, 1});

    Graph c6 = family("cycle", {6});
    auto dc = generator_degrees(c6);
    REQUIRE(dc.size() == 1);
    CHECK(dc[0] == DegreeVec{1, 1, 1, 1, 1, 1});

    // K_{2,3}: one degree per pair of right-hand vertices
    Graph k23 = family("complete_bipartite", {2, 3});
    auto d23 = generator_degrees(k23);
    CHECK(d23.size() == 3);
    for (const DegreeVec& d : d23) {
        CHECK(d[0] == 1);
        CHECK(d[1] == 1);
        CHECK(std::count(d.begin(), d.end(), 1) == 4);
    }
}

TEST_CASE("minimal generating sets and counts") {
    CHECK(mu(family("complete", {4})) == 2);
    CHECK(mu(family("complete", {6})) == 30);
    CHECK(count_minimal_systems(family("complete", {4})).to_string() == "3");
    CHECK(count_minimal_systems(family("complete", {5})).to_string() == "243");
    CHECK(count_minimal_systems(family("cycle", {6})).to_string() == "1");
    CHECK(count_minimal_systems(family("roundabout", {3})).to_string() == "1");

    // K_{m,n} is minimally generated by the 2x2 minors
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
        Graph g = family("complete_bipartite", {m, n});
        MinimalSystem s = minimal_generating_set(g);
        CHECK(s.binomials.size() ==
              static_cast<std::size_t>(m * (m - 1) / 2 * (n * (n - 1) / 2)));
        for (const Binomial& b : s.binomials) {
            CHECK(expo_total_degree(b.plus) == 2);
            CHECK(expo_total_degree(b.minus) == 2);
        }
        CHECK(count_minimal_systems(g).to_string() == "1");
    }
}

TEST_CASE("K_n quadruple fibers: three singleton components") {
    for (int n : {6, 7}) {
        Graph kn = family("complete", {n});
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d) {
                        DegreeVec deg(static_cast<std::size_t>(n), 0);
                        deg[a - 1] = deg[b - 1] = deg[c - 1] = deg[d - 1] = 1;
                        Fiber f = enumerate_fiber(kn, deg);
                        CHECK(f.monomials.size() == 3);
                        CHECK(f.comps.size() == 3);
                    }
    }
}

TEST_CASE("indispensable monomials of quadruple fibers") {
    // in a disconnected generator fiber every singleton component is an
    // indispensable monomial; for complete graphs that is all three
    Graph k5 = family("complete", {5});
    IdealEngine eng(k5);
    for (const BettiFiber& bf : eng.profile().betti) {
        CHECK(bf.comps.size() == 3);
        for (const auto& comp : bf.comps) CHECK(comp.size() == 1);
    }
}

TEST_CASE("membership in a subgraph ideal") {
    Graph g = ten_gon();
    IdealEngine eng(g);
    MinimalSystem s = eng.profile().canonical;
    Graph gse = g.restricted_to(EdgeMask(0b1111110010001));  // e1,e5,e8,e9,e10,e11,e12,e13
    Binomial inside = Binomial::of_edge_lists(g, {4, 7, 9}, {8, 10, 12});  // e5e8e10 - e9e11e13
    CHECK(binomial_in_subgraph_ideal(inside, gse, g));

    Graph k4 = family("complete", {4});
    Binomial rel = b2(k4, "ε12", "ε34", "ε13", "ε24");
    Graph no12 = delete_edges(k4, {lbl(k4, "ε12")});
    CHECK(!binomial_in_subgraph_ideal(rel, no12, k4));

    Graph w5 = family("wheel", {4});
    Binomial spokes = b2(w5, "ε12", "ε45", "ε14", "ε25");
    Graph we = w5.restricted_to((EdgeMask(1) << lbl(w5, "ε12")) |
                                (EdgeMask(1) << lbl(w5, "ε14")) |
                                (EdgeMask(1) << lbl(w5, "ε15")) |
                                (EdgeMask(1) << lbl(w5, "ε23")) |
                                (EdgeMask(1) << lbl(w5, "ε34")) |
                                (EdgeMask(1) << lbl(w5, "ε35")));
    CHECK(!binomial_in_subgraph_ideal(spokes, we, w5));
}

TEST_CASE("generation checks") {
    Graph k4 = family("complete", {4});
    Binomial bw1 = b2(k4, "ε12", "ε34", "ε23", "ε14");
    Binomial bw2 = b2(k4, "ε12", "ε34", "ε24", "ε13");
    Binomial bw3 = b2(k4, "ε23", "ε14", "ε13", "ε24");
    CHECK(generates(k4, {bw1, bw2}));
    CHECK(generates(k4, {bw1, bw3}));
    CHECK(generates(k4, {bw2, bw3}));
    CHECK(!generates(k4, {bw1}));

    // two five-element systems over complementary missing pairs generate K5
    Graph k5 = family("complete", {5});
    std::vector<Binomial> s = {b2(k5, "ε13", "ε24", "ε14", "ε23"),
                               b2(k5, "ε14", "ε25", "ε15", "ε24"),
                               b2(k5, "ε23", "ε45", "ε24", "ε35"),
                               b2(k5, "ε13", "ε25", "ε15", "ε23"),
                               b2(k5, "ε13", "ε45", "ε14", "ε35")};
    std::vector<Binomial> t = {b2(k5, "ε12", "ε34", "ε13", "ε24"),
                               b2(k5, "ε24", "ε35", "ε25", "ε34"),
                               b2(k5, "ε13", "ε45", "ε15", "ε34"),
                               b2(k5, "ε12", "ε45", "ε15", "ε24"),
                               b2(k5, "ε12", "ε35", "ε13", "ε25")};
    std::vector<Binomial> both = s;
    both.insert(both.end(), t.begin(), t.end());
    CHECK(generates(k5, both));
    CHECK(!generates(k5, s));
    CHECK(!generates(k5, t));
}

TEST_CASE("ideal equality") {
    Graph k4 = family("complete", {4});
    // S = {B_w1, B_w2} leaves only the w1 cycle through eps23; T = {B_w1, B_w3}
    // covers everything through eps23
    int e23 = lbl(k4, "ε23");
    Binomial bw1 = b2(k4, "ε12", "ε34", "ε23", "ε14");
    Binomial bw3 = b2(k4, "ε23", "ε14", "ε13", "ε24");
    EdgeMask gte = 0;
    for (const Binomial& b : {bw1, bw3})
        if (b.uses_edge(e23)) gte |= b.support();
    Graph g_t_e = k4.restricted_to(gte);
    CHECK(ideal_equals(g_t_e, k4));

    Graph w1cycle = k4.restricted_to(bw1.support());
    CHECK(!ideal_equals(w1cycle, k4));

    CHECK(ideal_equals(k4, k4));
    CHECK_THROWS_AS(ideal_equals(family("complete", {5}), k4), std::invalid_argument);
}

TEST_CASE("random spanning selections all generate and have size mu") {
    std::mt19937 rng(2024);
    for (auto g : {family("complete", {5}), family("wheel", {5}), ten_gon()}) {
        IdealEngine eng(g);
        const IdealProfile& prof = eng.profile();
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Binomial> sel;
            for (const BettiFiber& bf : prof.betti) {
                // random spanning tree on components, random representatives
                std::vector<int> order(bf.comps.size());
                for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
                std::shuffle(order.begin(), order.end(), rng);
                for (std::size_t i = 1; i < order.size(); ++i) {
                    int target = order[static_cast<std::size_t>(rng() % i)];
                    const auto& ca = bf.comps[static_cast<std::size_t>(order[i])];
                    const auto& cb = bf.comps[static_cast<std::size_t>(target)];
                    const Expo& ma = bf.monomials[static_cast<std::size_t>(
                        ca[rng() % ca.size()])];
                    const Expo& mb = bf.monomials[static_cast<std::size_t>(
                        cb[rng() % cb.size()])];
                    sel.push_back(Binomial::make(ma, mb));
                }
            }
            CHECK(sel.size() == prof.mu);
            CHECK(eng.generates(g.alive_mask(), sel));
        }
    }
}

TEST_CASE("fiber cap raises budget_exceeded") {
    Budget tiny;
    tiny.fiber_cap = 2;
    Graph k4 = family("complete", {4});
    CHECK_THROWS_AS(enumerate_fiber(k4, {1, 1, 1, 1}, tiny), budget_error);
}

TEST_CASE("big integers") {
    CHECK(BigUint::pow(3, 15).to_string() == "14348907");
    CHECK(BigUint::pow(3, 35).to_string() == "50031545098999707");
    CHECK((BigUint::pow(2, 100) * BigUint(3)).to_string() ==
          "3802951800684688204490109616128");
    CHECK(BigUint(0).to_string() == "0");
    CHECK(BigUint(1) != BigUint(0));
}
