#include "uelc/nodecomm.hpp"

#include <algorithm>

#include "uelc/error.hpp"

namespace uelc {

NodeDistribution node_probability(const Graph& g, const EdgeDistribution& alpha) {
    if (alpha.edge_count() != g.edge_count())
        throw InputError("node_probability: distribution does not match the graph");
    NodeDistribution nd;
    nd.prob.assign(g.node_count(), 0.0);
    nd.stationary.assign(g.node_count(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const double half = 0.5 * alpha.prob[e];
        nd.prob[g.edge(e).u] += half;
        nd.prob[g.edge(e).v] += half;
    }
    const double two_m = 2.0 * static_cast<double>(g.edge_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        nd.stationary[v] = static_cast<double>(g.degree(v)) / two_m;
    return nd;
}

std::vector<std::uint8_t> node_bipartition(const NodeDistribution& nd, double tie_rtol) {
    std::vector<std::uint8_t> side(nd.prob.size());
    for (std::size_t i = 0; i < side.size(); ++i)
        side[i] = nd.prob[i] >= nd.stationary[i] * (1.0 - tie_rtol) ? 0 : 1;
    return side;
}

std::size_t cut_size(const Graph& g, std::span<const std::uint8_t> side) {
    std::size_t cut = 0;
    for (const Edge& e : g.edges()) cut += side[e.u] != side[e.v];
    return cut;
}

RefineResult majority_refine(const Graph& g, std::vector<std::uint8_t> side,
                             std::size_t max_sweeps) {
    if (side.size() != g.node_count())
        throw InputError("majority_refine: assignment size does not match the graph");
    RefineResult out;
    std::size_t cut = cut_size(g, side);
    out.cut.push_back(cut);
    while (out.sweeps < max_sweeps) {
        bool moved = false;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            std::size_t same = 0;
            for (const Incidence& inc : g.incidences(v)) same += side[inc.node] == side[v];
            const std::size_t other = g.degree(v) - same;
            if (other > same) {
                side[v] ^= 1;
                cut -= other - same;
                moved = true;
            }
        }
        if (!moved) break;
        ++out.sweeps;
        out.cut.push_back(cut);
    }
    out.side = std::move(side);
    return out;
}

double node_set_density(const Graph& g, std::span<const NodeId> nodes) {
    const Subgraph sub = induced_by_nodes(g, nodes);
    return link_density(sub.graph.node_count(), sub.graph.edge_count());
}

namespace {

struct Built {
    TreeNode node;
    std::vector<Built> children;
};

struct NodeSplit {
    std::vector<NodeId> parts[2];  // local ids
    double density[2];
};

class NodeDetector {
public:
    NodeDetector(const Graph& g, const DetectorConfig& cfg) : g_(g), cfg_(cfg) {}

    Built component(std::vector<NodeId> nodes, std::uint64_t seed) {
        Built out;
        TreeNode& node = out.node;
        node.kind = TreeNode::Kind::component;
        const Subgraph sub = induced_by_nodes(g_, nodes);
        node.members = std::move(nodes);
        node.nodes = sub.graph.node_count();
        node.edges = sub.graph.edge_count();
        node.density = link_density(node.nodes, node.edges);
        if (node.edges < cfg_.min_edges_leaf || node.edges < 2 || node.nodes <= 2) {
            node.stop_reason = "small";
            return out;
        }

        const LinkTransition t(sub.graph);
        const MarkovGenerator gen(t);
        const StepBound bound = step_bound(cfg_.step, &gen);
        node.steps = bound.steps;
        node.step_fallback = bound.fell_back;

        Rng rng(seed);
        std::optional<NodeSplit> best;
        double best_score = 0.0;
        for (std::size_t s : rng.sample_distinct(sub.graph.edge_count(), cfg_.seed_trials)) {
            const EdgeDistribution alpha = ulc(t, static_cast<EdgeId>(s), bound.steps);
            auto side = node_bipartition(node_probability(sub.graph, alpha), cfg_.tie_rtol);
            if (std::all_of(side.begin(), side.end(), [&](auto x) { return x == side[0]; }))
                continue;
            side = majority_refine(sub.graph, std::move(side)).side;
            NodeSplit cand;
            for (NodeId v = 0; v < side.size(); ++v) cand.parts[side[v]].push_back(v);
            if (cand.parts[0].empty() || cand.parts[1].empty()) continue;
            for (int h = 0; h < 2; ++h) cand.density[h] = node_set_density(sub.graph, cand.parts[h]);
            const double score = std::min(cand.density[0], cand.density[1]);
            if (!best || score > best_score) {
                best_score = score;
                best = std::move(cand);
            }
        }
        if (!best) {
            node.stop_reason = "reject";
            return out;
        }
        if (!accept_split(node.density, best->density[0], best->density[1])) {
            node.stop_reason = "density";
            return out;
        }

        out.children.resize(2);
        for (int h = 0; h < 2; ++h) {
            Built& side = out.children[h];
            side.node.kind = TreeNode::Kind::side;
            side.node.density = best->density[h];
            for (NodeId v : best->parts[h]) side.node.members.push_back(sub.parent_node[v]);
            const Subgraph side_sub = induced_by_nodes(sub.graph, best->parts[h]);
            side.node.nodes = side_sub.graph.node_count();
            side.node.edges = side_sub.graph.edge_count();
            const std::uint64_t side_seed = derive_seed(seed, h);
            const auto comps = node_components(side_sub.graph);
            for (std::size_t c = 0; c < comps.size(); ++c) {
                std::vector<NodeId> global;
                for (NodeId v : comps[c]) global.push_back(sub.parent_node[side_sub.parent_node[v]]);
                side.children.push_back(component(std::move(global), derive_seed(side_seed, c)));
            }
        }
        return out;
    }

private:
    const Graph& g_;
    const DetectorConfig& cfg_;
};

void flatten(Built& b, int parent, std::vector<TreeNode>& tree, std::vector<CommunityStats>& stats) {
    const std::size_t index = tree.size();
    tree.push_back(std::move(b.node));
    tree[index].parent = parent;
    if (parent >= 0) tree[static_cast<std::size_t>(parent)].children.push_back(index);
    if (tree[index].kind == TreeNode::Kind::component && b.children.empty()) {
        tree[index].community = static_cast<CommunityId>(stats.size());
        stats.push_back({tree[index].edges, tree[index].nodes, tree[index].density});
    }
    for (Built& child : b.children) flatten(child, static_cast<int>(index), tree, stats);
}

}  // namespace

NodePartition uelc_nodes(const Graph& g, const DetectorConfig& cfg) {
    validate(cfg);
    if (g.node_count() == 0) throw InputError("uelc_nodes: graph has no nodes");

    NodeDetector detector(g, cfg);
    Built root;
    root.node.kind = TreeNode::Kind::side;
    root.node.members.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) root.node.members[v] = v;
    root.node.nodes = g.node_count();
    root.node.edges = g.edge_count();
    root.node.density = link_density(root.node.nodes, root.node.edges);
    const auto comps = node_components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        root.children.push_back(detector.component(comps[c], derive_seed(cfg.rng_seed, c)));

    NodePartition out;
    flatten(root, -1, out.tree, out.communities);
    out.labels.community_count = out.communities.size();
    out.labels.label.assign(g.node_count(), 0);
    for (const TreeNode& node : out.tree)
        if (node.community)
            for (NodeId v : node.members) out.labels.label[v] = *node.community;
    return out;
}

}  // namespace uelc
