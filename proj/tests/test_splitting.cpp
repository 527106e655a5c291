#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "toric/splitting.hpp"

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

MinimalSystem system_of(const Graph& g, std::vector<Binomial> bins) {
    // package an externally given generating set; per-fiber data left empty
    MinimalSystem s;
    std::sort(bins.begin(), bins.end());
    s.binomials = std::move(bins);
    return s;
}

EdgeMask mask_of_labels(const Graph& g, const std::vector<const char*>& labels) {
    EdgeMask m = 0;
    for (const char* s : labels) m |= EdgeMask(1) << lbl(g, s);
    return m;
}

}  // namespace

TEST_CASE("walk subgraphs of a given system on K4") {
    Graph k4 = family("complete", {4});
    Binomial bw1 = b2(k4, "ε12", "ε34", "ε23", "ε14");
    Binomial bw2 = b2(k4, "ε12", "ε34", "ε24", "ε13");
    Binomial bw3 = b2(k4, "ε23", "ε14", "ε13", "ε24");
    int e23 = lbl(k4, "ε23");

    Graph gse = g_s_e(k4, system_of(k4, {bw1, bw2}), e23);
    CHECK(gse.alive_mask() == bw1.support());  // exactly the w1 cycle

    Graph gte = g_s_e(k4, system_of(k4, {bw1, bw3}), e23);
    CHECK(gte.alive_mask() == k4.alive_mask());  // the whole graph

    // a non-generating set is rejected
    CHECK_THROWS_AS(g_s_e(k4, system_of(k4, {bw1}), e23), std::invalid_argument);
    CHECK_THROWS_AS(g_s_e(k4, system_of(k4, {bw1, bw2}), 77), std::invalid_argument);
}

TEST_CASE("walk subgraphs over edge sets and vertices") {
    Graph k4 = family("complete", {4});
    IdealEngine eng(k4);
    MinimalSystem s = eng.profile().canonical;

    for (int e : k4.active_edges())
        CHECK(g_s_F(k4, s, {e}).alive_mask() == g_s_e(k4, s, e).alive_mask());

    std::vector<int> all = k4.active_edges();
    EdgeMask support = 0;
    for (const Binomial& b : s.binomials) support |= b.support();
    CHECK(g_s_F(k4, s, all).alive_mask() == support);

    // every generator of the wheel touches the hub
    Graph w5 = family("wheel", {4});
    IdealEngine we(w5);
    MinimalSystem ws = we.profile().canonical;
    CHECK(g_s_v(w5, ws, 5).alive_mask() == w5.alive_mask());
}

TEST_CASE("the sum identity holds for every edge of the fixtures") {
    for (auto g : {family("complete", {5}), family("wheel", {5}),
                   family("complete_bipartite", {3, 3}), family("cycle_row", {4}),
                   ten_gon()}) {
        IdealEngine eng(g);
        MinimalSystem s = eng.profile().canonical;
        for (int e : g.active_edges()) {
            Graph gse = g_s_e(g, s, e);
            Graph gme = delete_edges(g, {e});
            std::vector<Binomial> gens = minimal_generating_set(gse).binomials;
            auto more = minimal_generating_set(gme).binomials;
            gens.insert(gens.end(), more.begin(), more.end());
            CHECK(generates(g, gens));
        }
    }
}

TEST_CASE("edge splittability of the complete graphs") {
    CHECK(!is_edge_splittable(family("complete", {3})));
    for (int n : {4, 5, 6}) {
        Graph kn = family("complete", {n});
        auto w = is_edge_splittable(kn);
        REQUIRE(w.has_value());
        CHECK(kn.edge(w->edge).label == "ε12");
        CHECK(!w->walk_subgraph.edge_alive(lbl(kn, "ε13")));
        CHECK(!ideal_equals(w->walk_subgraph, kn));
    }
}

TEST_CASE("complete bipartite graphs are not splittable") {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 3}})
        CHECK(!is_subgraph_splittable(family("complete_bipartite", {m, n})));
}

TEST_CASE("wheel splittability and the rim-4 witness") {
    std::vector<std::pair<int, bool>> expected = {{3, true},  {4, true}, {5, true},
                                                  {6, false}, {7, true}, {8, false}};
    for (auto [rim, want] : expected) {
        CHECK(is_subgraph_splittable(family("wheel", {rim})) == want);
        CHECK(wheel_splittable(rim) == want);
    }

    Graph w5 = family("wheel", {4});
    auto w = is_edge_splittable(w5);
    REQUIRE(w.has_value());
    CHECK(w5.edge(w->edge).label == "ε15");
    CHECK(w->walk_subgraph.alive_mask() ==
          mask_of_labels(w5, {"ε12", "ε14", "ε15", "ε23", "ε34",
                              "ε35"}));
    CHECK(!ideal_equals(w->walk_subgraph, w5));
}

TEST_CASE("checking explicit pairs") {
    Graph k4 = family("complete", {4});
    Graph a = delete_edges(k4, {lbl(k4, "ε12"), lbl(k4, "ε34")});
    Graph b = delete_edges(k4, {lbl(k4, "ε14"), lbl(k4, "ε23")});
    SplittingReport rep = check_splitting(k4, a, b);
    CHECK(rep.is_splitting);
    CHECK(rep.is_minimal);
    CHECK(rep.is_reduced);
    CHECK(rep.mu_g1 == 1);
    CHECK(rep.mu_g2 == 1);

    Graph k5 = family("complete", {5});
    Graph a5 = delete_edges(k5, {lbl(k5, "ε12"), lbl(k5, "ε34")});
    Graph b5 = delete_edges(k5, {lbl(k5, "ε14"), lbl(k5, "ε23")});
    SplittingReport rep5 = check_splitting(k5, a5, b5);
    CHECK(rep5.is_splitting);
    CHECK(rep5.is_minimal);
    CHECK(rep5.mu_g1 == 5);
    CHECK(rep5.mu_g2 == 5);
    CHECK(!rep5.is_edge_splitting);

    // the roundabout edge splitting is a splitting but not minimal
    Graph g3 = family("roundabout", {3});
    IdealEngine eng(g3);
    Graph gse = g_s_e(g3, eng.profile().canonical, 0);
    Graph gme = delete_edges(g3, {0});
    SplittingReport rr = check_splitting(g3, gse, gme);
    CHECK(rr.is_splitting);
    CHECK(!rr.is_minimal);
    CHECK(rr.is_edge_splitting);

    CHECK_THROWS_AS(check_splitting(k4, family("complete", {5}), b), std::invalid_argument);
}

TEST_CASE("splitting enumeration") {
    CHECK(enumerate_splittings(family("cycle", {6})).empty());

    auto k4s = enumerate_splittings(family("complete", {4}));
    CHECK(k4s.size() == 3);
    for (const auto& r : k4s) {
        CHECK(r.is_minimal);
        CHECK(r.is_reduced);
        CHECK(r.is_edge_splitting);
    }

    auto row = enumerate_splittings(family("cycle_row", {4}));
    CHECK(row.size() == 25);
    std::size_t both = 0, neither = 0, one_three = 0, two_two = 0;
    for (const auto& r : row) {
        if (r.is_minimal && r.is_reduced) {
            ++both;
            if (std::min(r.mu_g1, r.mu_g2) == 1)
                ++one_three;
            else
                ++two_two;
        }
        if (!r.is_minimal && !r.is_reduced) ++neither;
    }
    CHECK(both == 7);
    CHECK(neither == 18);
    CHECK(one_three == 4);
    CHECK(two_two == 3);
}

TEST_CASE("classification of complete-graph splittings") {
    Graph k4 = family("complete", {4});
    Graph a = delete_edges(k4, {lbl(k4, "ε12"), lbl(k4, "ε34")});
    Graph b = delete_edges(k4, {lbl(k4, "ε14"), lbl(k4, "ε23")});
    KnType t = kn_classify(4, a, b);
    CHECK(t.type == 4);
    // the witnessing cycle uses the four removed edges
    EdgeMask cyc = 0;
    for (int e : t.cycle) cyc |= EdgeMask(1) << e;
    CHECK(cyc == mask_of_labels(k4, {"ε12", "ε34", "ε14", "ε23"}));

    Graph k5 = family("complete", {5});
    Graph p1 = delete_edges(k5, {lbl(k5, "ε12")});
    Graph p2 = delete_edges(k5, {lbl(k5, "ε23")});
    CHECK(kn_classify(5, p1, p2).type == 1);

    Graph q1 = delete_edges(k5, {lbl(k5, "ε12"), lbl(k5, "ε34")});
    CHECK(kn_classify(5, q1, p2).type == 2);
    CHECK(kn_classify(5, p1, delete_edges(k5, {lbl(k5, "ε23"), lbl(k5, "ε14")})).type ==
          3);

    // not a splitting: one side is the whole graph
    CHECK_THROWS_AS(kn_classify(4, k4, b), std::invalid_argument);
}

TEST_CASE("every enumerated K5 splitting classifies into exactly one type") {
    Graph k5 = family("complete", {5});
    auto all = enumerate_splittings(k5);
    CHECK(!all.empty());
    for (const auto& r : all) {
        KnType t = kn_classify(5, r.g1, r.g2);
        CHECK(t.type >= 1);
        CHECK(t.type <= 4);
        // cross-adjacency: every missing edge of one side meets every missing
        // edge of the other
        auto missing = [&](const Graph& h) {
            std::vector<int> out;
            for (int e : k5.active_edges())
                if (!h.edge_alive(e)) out.push_back(e);
            return out;
        };
        for (int x : missing(r.g1))
            for (int y : missing(r.g2)) {
                const Edge& ex = k5.edge(x);
                const Edge& ey = k5.edge(y);
                CHECK((ex.u == ey.u || ex.u == ey.v || ex.v == ey.u || ex.v == ey.v));
            }
        if (r.is_minimal) CHECK(r.is_reduced);
    }
}

TEST_CASE("double-deletion pairs over 4-cycles always split K_n") {
    for (int n : {4, 5}) {
        Graph kn = family("complete", {n});
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                for (int r = 1; r <= n; ++r)
                    for (int s = 1; s <= n; ++s) {
                        if (p >= q || p >= r || p >= s || q >= s) continue;
                        if (q == r || r == s) continue;
                        Graph a = delete_edges(kn, {kn.find_edge(p, q), kn.find_edge(r, s)});
                        Graph b = delete_edges(kn, {kn.find_edge(q, r), kn.find_edge(s, p)});
                        SplittingReport rep = check_splitting(kn, a, b);
                        CHECK(rep.is_splitting);
                        CHECK(rep.is_reduced);
                    }
    }
}

TEST_CASE("minimal splittings of complete graphs exist only for n = 4, 5") {
    CHECK(!kn_has_minimal_splitting(3));
    CHECK(kn_has_minimal_splitting(4));
    CHECK(kn_has_minimal_splitting(5));
    CHECK(!kn_has_minimal_splitting(6));
}

TEST_CASE("reduced form certificates") {
    Graph k4 = family("complete", {4});
    Graph a = delete_edges(k4, {lbl(k4, "ε12"), lbl(k4, "ε34")});
    Graph b = delete_edges(k4, {lbl(k4, "ε14"), lbl(k4, "ε23")});
    ReducedForm rf = reduced_form(k4, a, b);
    EdgeMask f = 0;
    for (int e : rf.F) f |= EdgeMask(1) << e;
    CHECK(f == mask_of_labels(k4, {"ε14", "ε23"}));
    CHECK(rf.system.binomials.size() == 2);

    // four-cycle row: single square against the other three
    Graph row = family("cycle_row", {4});
    IdealEngine eng(row);
    auto M = eng.minimal_binomials(row.alive_mask());
    REQUIRE(M.size() == 4);
    Graph side1 = row.restricted_to(M[0].support());
    EdgeMask rest = 0;
    for (std::size_t i = 1; i < M.size(); ++i) rest |= M[i].support();
    Graph side2 = row.restricted_to(rest);
    SplittingReport rep = check_splitting(row, side1, side2);
    CHECK(rep.is_splitting);
    CHECK(rep.is_minimal);
    CHECK(rep.is_reduced);
    ReducedForm rf2 = reduced_form(row, side1, side2);
    for (int e : rf2.F) CHECK(side1.edge_alive(e));  // F lies inside side1

    // an enlarged, non-reduced pair is rejected
    Graph g3 = family("roundabout", {3});
    IdealEngine eg(g3);
    Graph gse = g_s_e(g3, eg.profile().canonical, 0);
    Graph bigger = g3.restricted_to(gse.alive_mask() |
                                    (EdgeMask(1) << lbl(g3, "r1")) |
                                    (EdgeMask(1) << lbl(g3, "l1")));
    Graph gme = delete_edges(g3, {0});
    CHECK_THROWS_AS(reduced_form(g3, bigger, gme), std::invalid_argument);
}
