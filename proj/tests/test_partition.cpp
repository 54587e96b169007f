#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/data.hpp"
#include "support/oracles.hpp"
#include "uelc/error.hpp"
#include "uelc/partition.hpp"

using namespace uelc;

namespace {

DetectorConfig spectral_config(std::uint64_t seed, std::size_t trials = 1) {
    DetectorConfig cfg;
    cfg.step.mode = StepMode::spectral;
    cfg.rng_seed = seed;
    cfg.seed_trials = trials;
    return cfg;
}

void check_partition(const Graph& g, const LinkPartition& p) {
    REQUIRE(p.label.size() == g.edge_count());
    std::vector<std::size_t> count(p.community_count, 0);
    for (CommunityId c : p.label) {
        REQUIRE(c < p.community_count);
        ++count[c];
    }
    for (std::size_t c = 0; c < p.community_count; ++c) {
        CHECK(count[c] > 0);
        CHECK(p.communities[c].edges == count[c]);
    }
    // Leaves of the tree are the communities; accepted sides never lose density.
    std::size_t leaves = 0;
    for (const TreeNode& node : p.tree) {
        if (node.community) {
            ++leaves;
            CHECK(node.children.empty());
            for (std::uint32_t e : node.members) CHECK(p.label[e] == *node.community);
        }
        if (node.kind == TreeNode::Kind::side && node.parent >= 0) {
            const TreeNode& parent = p.tree[static_cast<std::size_t>(node.parent)];
            CHECK(parent.kind == TreeNode::Kind::component);
            CHECK(node.density >= parent.density);
        }
    }
    CHECK(leaves == p.community_count);
}

bool same(const LinkPartition& a, const LinkPartition& b) {
    if (a.label != b.label || a.tree.size() != b.tree.size()) return false;
    for (std::size_t i = 0; i < a.tree.size(); ++i)
        if (a.tree[i].members != b.tree[i].members || a.tree[i].children != b.tree[i].children) return false;
    return true;
}

std::set<std::string> overlap_labels(const LoadedGraph& lg, const std::vector<EdgeId>& left,
                                     const std::vector<EdgeId>& right) {
    std::vector<CommunityId> label(lg.graph.edge_count());
    for (EdgeId e : right) label[e] = 1;
    (void)left;
    const NodeCover cover = node_cover_from_links(lg.graph, label, 2);
    std::set<std::string> out;
    for (NodeId v : cover.overlap_nodes()) out.insert(lg.labels.label(v));
    return out;
}

}  // namespace

TEST_CASE("elc thresholds at 1/m") {
    EdgeDistribution a{{0.5, 0.3, 0.1, 0.1}, 3};
    auto b = elc(a);
    CHECK(b.in_set == std::vector<EdgeId>{0, 1});
    CHECK(b.out_set == std::vector<EdgeId>{2, 3});
    CHECK(b.steps == 3);

    EdgeDistribution uniform{std::vector<double>(7, 1.0 / 7.0), 10};
    CHECK(elc(uniform).out_set.empty());
    // Rounding noise around the stationary value is still a tie.
    EdgeDistribution noisy{{0.25 * (1 + 1e-12), 0.25 * (1 - 1e-12), 0.25, 0.25}, 1};
    CHECK(elc(noisy).out_set.empty());
    CHECK(elc(noisy, 0.0).out_set == std::vector<EdgeId>{1});
}

TEST_CASE("ulc") {
    const Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    for (EdgeId s = 0; s < 3; ++s) {
        auto a = ulc(tri, s, 1);
        for (EdgeId e = 0; e < 3; ++e) CHECK(a.prob[e] == (e == s ? 0.5 : 0.25));
    }
    auto single = ulc(Graph(2, {{0, 1}}), 0, 5);
    CHECK(single.prob == std::vector<double>{1.0});
    CHECK_THROWS_AS(ulc(Graph(4, {{0, 1}, {2, 3}}), 0, 1), InputError);
}

TEST_CASE("link_density") {
    CHECK(link_density(4, 6) == 1.0);
    CHECK(link_density(5, 7) == 0.5);
    CHECK(link_density(2, 1) == 0.0);
    CHECK(link_density(1, 0) == 0.0);
    for (std::size_t n = 3; n <= 10; ++n) CHECK(link_density(n, n * (n - 1) / 2) == 1.0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph t = oracle::random_tree(3 + seed, seed);
        std::vector<EdgeId> all(t.edge_count());
        for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
        CHECK(edge_set_density(t, all) == 0.0);
    }
    CHECK(link_density(6, 3) < 0.0);
}

TEST_CASE("accept_split") {
    CHECK(accept_split(0.2, 0.5, 0.4));
    CHECK_FALSE(accept_split(0.2, 0.5, 0.1));
    CHECK(accept_split(0.3, 0.3, 0.3));
}

TEST_CASE("two triangles with a bridge: no seed splits a triangle") {
    const Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    const LinkTransition t(g);
    const MarkovGenerator gen(t);
    const std::size_t steps = step_bound({StepMode::spectral, 100}, &gen).steps;
    const auto dense = oracle::dense_transition(g);
    const std::set<EdgeId> left{0, 1, 2}, right{4, 5, 6};
    auto intact = [&](const std::vector<EdgeId>& side) {
        std::set<EdgeId> s(side.begin(), side.end());
        for (const auto* tri : {&left, &right}) {
            std::size_t hit = 0;
            for (EdgeId e : *tri) hit += s.count(e);
            if (hit != 0 && hit != 3) return false;
        }
        return true;
    };
    // The bridge itself (edge 3) is a symmetric source and proves nothing.
    for (EdgeId seed : {0, 1, 2, 4, 5, 6}) {
        std::vector<double> start(g.edge_count(), 0.0);
        start[seed] = 1.0;
        const auto ref = oracle::dense_walk(dense, start, steps);
        std::vector<EdgeId> in;
        for (EdgeId e = 0; e < ref.size(); ++e)
            if (ref[e] >= 1.0 / 7.0) in.push_back(e);
        CHECK(intact(in));
    }
    for (std::uint64_t rs = 0; rs < 10; ++rs) {
        Rng rng(rs);
        auto b = bipartition_once(g, t, steps, 3, kDefaultTieRtol, rng);
        REQUIRE(b.has_value());
        CHECK(intact(b->in_set));
        CHECK(!b->in_set.empty());
        CHECK(!b->out_set.empty());
        CHECK(std::binary_search(b->in_set.begin(), b->in_set.end(), b->seed));
    }
}

TEST_CASE("a lone triangle mixes to uniform and is rejected") {
    const Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
    Rng rng(1);
    CHECK_FALSE(bipartition_once(tri, LinkTransition(tri), 100, 3, kDefaultTieRtol, rng).has_value());
}

TEST_CASE("uelc: clique is one community") {
    const Graph k6 = oracle::clique(6);
    auto p = uelc::uelc(k6, DetectorConfig{});
    check_partition(k6, p);
    CHECK(p.community_count == 1);
    CHECK(p.communities[0].density == 1.0);
}

TEST_CASE("uelc: single edge") {
    const Graph g(2, {{0, 1}});
    auto p = uelc::uelc(g, DetectorConfig{});
    CHECK(p.community_count == 1);
    CHECK(p.communities[0].density == 0.0);
    CHECK(p.tree.size() == 2);
    CHECK(p.tree[1].stop_reason == "small");
}

TEST_CASE("uelc: two cliques with a bridge never mix the cliques") {
    for (std::size_t q = 4; q <= 8; ++q) {
        const Graph g = oracle::two_cliques_bridge(q);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            for (StepMode mode : {StepMode::fixed, StepMode::spectral}) {
                // Three distinct seeds guarantee at least two are not the bridge.
                DetectorConfig cfg;
                cfg.rng_seed = seed;
                cfg.step.mode = mode;
                cfg.seed_trials = 3;
                auto p = uelc::uelc(g, cfg);
                check_partition(g, p);
                CHECK(p.community_count >= 2);
                CHECK(p.community_count <= 3);
                // Label of each clique's interior edges.
                std::set<CommunityId> a, b;
                for (EdgeId e = 0; e < g.edge_count(); ++e) {
                    const Edge& ed = g.edge(e);
                    if (ed.v < q) a.insert(p.label[e]);
                    else if (ed.u >= q) b.insert(p.label[e]);
                }
                for (CommunityId c : a) CHECK(b.count(c) == 0);
            }
        }
    }
}

TEST_CASE("uelc: disconnected input runs per component") {
    std::vector<Edge> edges;
    for (NodeId i = 0; i < 5; ++i)
        for (NodeId j = i + 1; j < 5; ++j) {
            edges.push_back({i, j});
            edges.push_back({5 + i, 5 + j});
        }
    const Graph g(11, edges);  // node 10 isolated
    auto p = uelc::uelc(g, DetectorConfig{});
    check_partition(g, p);
    CHECK(p.community_count == 2);
    const auto cover = node_cover_from_links(g, p);
    CHECK(cover.unassigned_nodes() == std::vector<NodeId>{10});
}

TEST_CASE("uelc is deterministic and thread-count independent") {
    const Graph g = testdata::load("lesmis.edges").graph;
    for (std::uint64_t seed : {0, 3, 9}) {
        DetectorConfig cfg;
        cfg.rng_seed = seed;
        const auto a = uelc::uelc(g, cfg);
        const auto b = uelc::uelc(g, cfg);
        cfg.threads = 4;
        const auto c = uelc::uelc(g, cfg);
        CHECK(same(a, b));
        CHECK(same(a, c));
        check_partition(g, a);
    }
}

TEST_CASE("uelc: config validation") {
    DetectorConfig cfg;
    cfg.seed_trials = 0;
    CHECK_THROWS_AS(uelc::uelc(oracle::clique(4), cfg), InputError);
}

TEST_CASE("uelc on random graphs keeps every invariant") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Graph g = oracle::random_graph(40, 0.12, seed);
        if (g.edge_count() == 0) continue;
        DetectorConfig cfg;
        cfg.rng_seed = seed;
        cfg.step.mode = seed % 2 ? StepMode::spectral : StepMode::fixed;
        cfg.seed_trials = 1 + seed % 3;
        check_partition(g, uelc::uelc(g, cfg));
    }
}

TEST_CASE("node_cover_from_links") {
    SUBCASE("two triangles sharing a vertex") {
        const Graph g(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
        const std::vector<CommunityId> label{0, 0, 0, 1, 1, 1};
        auto cover = node_cover_from_links(g, label, 2);
        CHECK(cover.overlap_nodes() == std::vector<NodeId>{2});
        for (NodeId v : {0, 1, 3, 4}) CHECK(cover.membership[v].size() == 1);
        CHECK(cover.membership[2] == std::vector<CommunityId>{0, 1});
    }
    SUBCASE("single community") {
        const Graph g = oracle::clique(5);
        auto cover = node_cover_from_links(g, std::vector<CommunityId>(10, 0), 1);
        for (const auto& m : cover.membership) CHECK(m == std::vector<CommunityId>{0});
    }
}

TEST_CASE("karate: first split recovers the known overlap") {
    const auto lg = testdata::load("karate.edges");
    const std::set<std::string> expected{"3", "9", "14", "20", "31", "32"};
    std::size_t exact = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = uelc::uelc(lg.graph, spectral_config(seed, 5));
        check_partition(lg.graph, p);
        const auto split = p.first_split();
        REQUIRE(split.has_value());
        CHECK(p.tree[0].children.size() == 1);
        CHECK(p.tree[p.tree[0].children[0]].steps == 16);
        if (overlap_labels(lg, split->first, split->second) == expected) ++exact;
    }
    CHECK(exact >= 15);
}

TEST_CASE("karate: red seeds separate red from blue") {
    const auto lg = testdata::load("karate.edges");
    const auto p = uelc::uelc(lg.graph, spectral_config(0, 5));
    const auto split = p.first_split();
    REQUIRE(split.has_value());
    const LinkTransition t(lg.graph);
    for (const std::vector<EdgeId>* red_ptr : {&split->first, &split->second}) {
        const auto& red = *red_ptr;
        const auto& blue = red_ptr == &split->first ? split->second : split->first;
        std::size_t separated = 0;
        for (EdgeId seed : red) {
            const auto a = ulc(t, seed, 16);
            double lo = 1.0, hi = 0.0;
            for (EdgeId e : red) lo = std::min(lo, a.prob[e]);
            for (EdgeId e : blue) hi = std::max(hi, a.prob[e]);
            if (lo > hi) ++separated;
        }
        CHECK(2 * separated > red.size());
    }
}

TEST_CASE("Les Miserables: five communities for some seed") {
    const Graph g = testdata::load("lesmis.edges").graph;
    std::vector<std::size_t> counts;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = uelc::uelc(g, spectral_config(seed, 5));
        check_partition(g, p);
        counts.push_back(p.community_count);
    }
    CHECK(std::count(counts.begin(), counts.end(), 5u) >= 1);
    std::sort(counts.begin(), counts.end());
    CHECK(counts[9] >= 4);
    CHECK(counts[10] <= 6);
}
