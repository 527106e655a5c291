#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>

#include "doctest.h"
#include "toric/graph.hpp"

using namespace toric;

TEST_CASE("families have the expected sizes") {
    Graph k4 = family("complete", {4});
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    Graph w5 = family("wheel", {4});
    CHECK(w5.vertex_count() == 5);
    CHECK(w5.edge_count() == 8);

    Graph g8 = family("roundabout", {8});
    CHECK(g8.vertex_count() == 26);
    CHECK(g8.edge_count() == 41);

    for (int n = 3; n <= 10; ++n)
        CHECK(family("roundabout", {n}).edge_count() == 5u * n + 1);
    for (int n = 2; n <= 7; ++n)
        CHECK(family("complete", {n}).edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));

    CHECK(family("cycle_row", {4}).edge_count() == 13);
    CHECK(family("cycle_row", {4}).vertex_count() == 10);
    CHECK(family("grid", {3, 3}).vertex_count() == 9);
    CHECK(family("grid", {3, 3}).edge_count() == 12);

    CHECK_THROWS_AS(family("moebius", {4}), std::invalid_argument);
    CHECK_THROWS_AS(family("wheel", {2}), std::invalid_argument);
    CHECK_THROWS_AS(family("roundabout", {1}), std::invalid_argument);
}

TEST_CASE("wheel labels follow the rim-then-spoke convention") {
    Graph w5 = family("wheel", {4});
    CHECK(w5.edge(0).label == "ε12");
    CHECK(w5.edge(3).label == "ε14");
    CHECK(w5.edge(4).label == "ε15");  // first spoke
    CHECK(w5.edge(7).label == "ε45");
}

TEST_CASE("delete_edges keeps indices and drops the right edges") {
    Graph k4 = family("complete", {4});
    Graph same = delete_edges(k4, {});
    CHECK(same == k4);

    // removing one edge of K4 leaves the five-edge graph on the others
    int e23 = k4.edge_by_label("ε23");
    Graph g = delete_edges(k4, {e23});
    CHECK(g.edge_count() == 5);
    CHECK(!g.edge_alive(e23));
    CHECK(g.edge_by_label("ε12") >= 0);
    CHECK(g.edge(g.edge_by_label("ε12")).label == "ε12");

    Graph k5 = family("complete", {5});
    Graph h = delete_edges(k5, {k5.edge_by_label("ε12"), k5.edge_by_label("ε34")});
    CHECK(h.edge_count() == 8);

    CHECK_THROWS_AS(delete_edges(k4, {17}), std::invalid_argument);
    CHECK_THROWS_AS(delete_edges(g, {e23}), std::invalid_argument);  // already gone
}

TEST_CASE("delete_vertex removes the vertex and its incident edges") {
    Graph k4 = family("complete", {4});
    Graph k3 = delete_vertex(k4, 4);
    CHECK(k3.edge_count() == 3);
    CHECK(!k3.vertex_alive(4));

    Graph w5 = family("wheel", {4});
    Graph rim = delete_vertex(w5, 5);
    CHECK(rim.edge_count() == 4);  // the rim cycle
    for (int i : rim.active_edges()) {
        CHECK(rim.edge(i).u != 5);
        CHECK(rim.edge(i).v != 5);
    }

    Graph path(3, {{1, 2}, {2, 3}});
    Graph isolated = delete_vertex(path, 2);
    CHECK(isolated.edge_count() == 0);
    CHECK(isolated.vertex_alive(1));
    CHECK(isolated.vertex_alive(3));

    CHECK_THROWS_AS(delete_vertex(path, 9), std::invalid_argument);
}

TEST_CASE("block decomposition") {
    Graph c6 = family("cycle", {6});
    BlockDecomposition bd = blocks(c6);
    CHECK(bd.blocks.size() == 1);
    CHECK(bd.cut_vertices.empty());

    // bowtie: two triangles sharing vertex 1
    Graph bowtie(5, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
    bd = blocks(bowtie);
    CHECK(bd.blocks.size() == 2);
    CHECK(bd.cut_vertices == std::vector<int>{1});

    Graph path(4, {{1, 2}, {2, 3}, {3, 4}});
    bd = blocks(path);
    CHECK(bd.blocks.size() == 3);
    CHECK(bd.cut_vertices == std::vector<int>{2, 3});
}

TEST_CASE("blocks partition the edges; deletions count down") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 2) edges.emplace_back(u, v);
        Graph g(n, edges);
        BlockDecomposition bd = blocks(g);
        std::size_t total = 0;
        EdgeMask seen = 0;
        for (const auto& blk : bd.blocks) {
            total += blk.size();
            for (int e : blk) {
                CHECK(!((seen >> e) & 1u));
                seen |= EdgeMask(1) << e;
            }
        }
        CHECK(total == g.edge_count());

        if (!edges.empty()) {
            std::vector<int> doomed{static_cast<int>(rng() % edges.size())};
            CHECK(delete_edges(g, doomed).edge_count() == g.edge_count() - 1);
        }
    }
}

TEST_CASE("text round trip") {
    Graph g8 = family("roundabout", {3});
    std::stringstream ss;
    write_graph_text(ss, g8);
    Graph back = read_graph_text(ss);
    CHECK(back.vertex_count() == g8.vertex_count());
    CHECK(back.edge_count() == g8.edge_count());
    for (int i : g8.active_edges()) {
        CHECK(back.edge(i).u == g8.edge(i).u);
        CHECK(back.edge(i).v == g8.edge(i).v);
        CHECK(back.edge(i).label == g8.edge(i).label);
    }

    std::stringstream bad("3 1\n1 1 loop\n");
    CHECK_THROWS_AS(read_graph_text(bad), std::invalid_argument);
}
