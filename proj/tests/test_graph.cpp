#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "support/data.hpp"
#include "support/oracles.hpp"
#include "uelc/error.hpp"
#include "uelc/graph.hpp"
#include "uelc/io.hpp"
#include "uelc/rng.hpp"

using namespace uelc;

namespace {

LoadedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

void check_invariants(const Graph& g) {
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        degree_sum += g.degree(v);
        for (const Incidence& inc : g.incidences(v)) {
            CHECK(g.find_edge(inc.node, v) == inc.edge);
            const Edge& e = g.edge(inc.edge);
            CHECK(((e.u == v && e.v == inc.node) || (e.v == v && e.u == inc.node)));
        }
    }
    CHECK(degree_sum == 2 * g.edge_count());
    for (const Edge& e : g.edges()) CHECK(e.u < e.v);
}

}  // namespace

TEST_CASE("load_edge_list: path graph") {
    auto lg = parse("1 2\n2 3\n");
    CHECK(lg.graph.node_count() == 3);
    CHECK(lg.graph.edge_count() == 2);
    CHECK(lg.labels.label(lg.graph.edge(0).u) == "1");
    CHECK(lg.labels.label(lg.graph.edge(0).v) == "2");
    CHECK(lg.labels.label(lg.graph.edge(1).u) == "2");
    CHECK(lg.labels.label(lg.graph.edge(1).v) == "3");
    CHECK(lg.duplicates_collapsed == 0);
}

TEST_CASE("load_edge_list: reversed duplicate is collapsed") {
    auto lg = parse("a b\nb a\n");
    CHECK(lg.graph.node_count() == 2);
    CHECK(lg.graph.edge_count() == 1);
    CHECK(lg.duplicates_collapsed == 1);
}

TEST_CASE("load_edge_list: comments, blank lines, tabs") {
    auto lg = parse("# header\n\n  x\ty  \n# mid\ny z\r\n");
    CHECK(lg.graph.edge_count() == 2);
    CHECK(lg.labels.size() == 3);
}

TEST_CASE("load_edge_list: errors") {
    CHECK_THROWS_AS(parse("1 2 3\n"), InputError);
    CHECK_THROWS_AS(parse("1\n"), InputError);
    CHECK_THROWS_AS(parse("1 1\n"), InputError);
    CHECK_THROWS_AS(parse(""), InputError);
    CHECK_THROWS_AS(parse("# only a comment\n\n"), InputError);
    CHECK_THROWS_AS(load_edge_list_file("/nonexistent/file.edges"), InputError);
}

TEST_CASE("load_edge_list: karate club") {
    auto lg = testdata::load("karate.edges");
    CHECK(lg.graph.node_count() == 34);
    CHECK(lg.graph.edge_count() == 78);
    check_invariants(lg.graph);
}

TEST_CASE("Graph rejects self-loops, duplicates and bad endpoints") {
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
}

TEST_CASE("NodeLabelMap round-trips") {
    NodeLabelMap map;
    for (std::string s : {"alpha", "beta", "7", "alpha", "gamma"}) map.intern(s);
    CHECK(map.size() == 4);
    for (NodeId i = 0; i < map.size(); ++i) CHECK(map.id(map.label(i)) == i);
    CHECK_THROWS_AS(map.id("missing"), InputError);
}

TEST_CASE("load -> write -> load keeps the canonical edge list") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = oracle::random_graph(25, 0.2, seed);
        if (g.edge_count() == 0) continue;
        const auto names = NodeLabelMap::identity(g.node_count());
        std::ostringstream out;
        write_edge_list(out, g, names);
        auto back = parse(out.str());
        REQUIRE(back.graph.edge_count() == g.edge_count());
        std::set<std::pair<std::string, std::string>> a, b;
        for (const Edge& e : g.edges()) a.emplace(names.label(e.u), names.label(e.v));
        for (const Edge& e : back.graph.edges()) {
            auto u = back.labels.label(e.u), v = back.labels.label(e.v);
            if (std::stoi(u) > std::stoi(v)) std::swap(u, v);
            b.emplace(u, v);
        }
        CHECK(a == b);
        check_invariants(back.graph);
    }
}

TEST_CASE("induced_by_edges") {
    const Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    SUBCASE("single edge") {
        const EdgeId e = 0;
        auto sub = induced_by_edges(tri, std::span(&e, 1));
        CHECK(sub.graph.node_count() == 2);
        CHECK(sub.graph.edge_count() == 1);
    }
    SUBCASE("all edges is the identity") {
        std::vector<EdgeId> all{2, 0, 1};
        auto sub = induced_by_edges(tri, all);
        CHECK(sub.graph.node_count() == 3);
        CHECK(sub.graph.edge_count() == 3);
        for (EdgeId e = 0; e < 3; ++e) {
            CHECK(sub.parent_edge[e] == e);
            CHECK(sub.graph.edge(e) == tri.edge(e));
        }
    }
    SUBCASE("empty set is an error") {
        CHECK_THROWS_AS(induced_by_edges(tri, std::span<const EdgeId>{}), InputError);
    }
}

TEST_CASE("induced_by_edges on karate matches endpoint enumeration") {
    auto lg = testdata::load("karate.edges");
    const Graph& g = lg.graph;
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<EdgeId> pick;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (rng.uniform01() < 0.15) pick.push_back(e);
        if (pick.empty()) continue;
        std::set<NodeId> ends;
        for (EdgeId e : pick) ends.insert({g.edge(e).u, g.edge(e).v});
        auto sub = induced_by_edges(g, pick);
        CHECK(sub.graph.node_count() == ends.size());
        CHECK(sub.graph.edge_count() == pick.size());
        for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
            const Edge& local = sub.graph.edge(e);
            const Edge& parent = g.edge(sub.parent_edge[e]);
            CHECK(sub.parent_node[local.u] == parent.u);
            CHECK(sub.parent_node[local.v] == parent.v);
        }
    }
}

TEST_CASE("induced_by_edges(all) preserves the degree multiset") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const Graph g = oracle::random_connected(30, 0.1, seed);
        std::vector<EdgeId> all(g.edge_count());
        for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
        auto sub = induced_by_edges(g, all);
        std::vector<std::size_t> a, b;
        for (NodeId v = 0; v < g.node_count(); ++v) a.push_back(g.degree(v));
        for (NodeId v = 0; v < sub.graph.node_count(); ++v) b.push_back(sub.graph.degree(v));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
    }
}

TEST_CASE("induced_by_nodes keeps internal edges and isolated nodes") {
    const Graph g = oracle::two_cliques_bridge(4);
    std::vector<NodeId> nodes{0, 1, 2, 3, 6};
    auto sub = induced_by_nodes(g, nodes);
    CHECK(sub.graph.node_count() == 5);
    CHECK(sub.graph.edge_count() == 6);
    CHECK(sub.graph.degree(4) == 0);
}

TEST_CASE("connected_components") {
    SUBCASE("path") {
        auto c = connected_components(oracle::path(3));
        REQUIRE(c.edge_sets.size() == 1);
        CHECK(c.edge_sets[0].size() == 2);
        CHECK(c.isolated.empty());
    }
    SUBCASE("two disjoint triangles") {
        const Graph g(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
        auto c = connected_components(g);
        REQUIRE(c.edge_sets.size() == 2);
        CHECK(c.edge_sets[0].size() == 3);
        CHECK(c.edge_sets[1].size() == 3);
    }
    SUBCASE("isolated nodes reported") {
        const Graph g(4, {{0, 1}});
        auto c = connected_components(g);
        CHECK(c.edge_sets.size() == 1);
        CHECK(c.isolated == std::vector<NodeId>{2, 3});
        CHECK(node_components(g).size() == 3);
    }
    SUBCASE("random sparse graphs match BFS") {
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            const Graph g = oracle::random_graph(50, 0.02, seed);
            std::set<std::set<EdgeId>> got;
            for (const auto& s : connected_components(g).edge_sets) got.emplace(s.begin(), s.end());
            CHECK(got == oracle::bfs_components(g));
        }
    }
}

TEST_CASE("membership files") {
    NodeLabelMap labels;
    std::istringstream in("a 0\nb 0,1\nc 1 2\n# comment\n");
    auto mf = read_membership(in, labels);
    REQUIRE(labels.size() == 3);
    CHECK(mf.membership[labels.id("a")] == std::vector<CommunityId>{0});
    CHECK(mf.membership[labels.id("b")] == std::vector<CommunityId>{0, 1});
    CHECK(mf.membership[labels.id("c")] == std::vector<CommunityId>{1, 2});
    std::istringstream bad("a x\n");
    CHECK_THROWS_AS(read_membership(bad, labels), InputError);
}
