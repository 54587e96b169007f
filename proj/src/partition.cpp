#include "uelc/partition.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <string>

#include "uelc/error.hpp"

namespace uelc {

void validate(const DetectorConfig& cfg) {
    if (cfg.seed_trials < 1) throw InputError("seed_trials must be >= 1");
    if (cfg.step.cap < 1) throw InputError("step cap must be >= 1");
    if (cfg.min_edges_leaf < 1) throw InputError("min_edges_leaf must be >= 1");
    if (cfg.threads < 1) throw InputError("threads must be >= 1");
    if (!(cfg.tie_rtol >= 0.0 && cfg.tie_rtol < 1.0)) throw InputError("tie_rtol must be in [0, 1)");
}

EdgeDistribution ulc(const LinkTransition& t, EdgeId seed, std::size_t steps) {
    return propagate(t, unit_distribution(t.edge_count(), seed), steps);
}

EdgeDistribution ulc(const Graph& sub, EdgeId seed, std::size_t steps) {
    if (connected_components(sub).edge_sets.size() != 1)
        throw InputError("ulc: subnetwork must be connected");
    return ulc(LinkTransition(sub), seed, steps);
}

LinkBipartition elc(const EdgeDistribution& alpha, double tie_rtol) {
    LinkBipartition out;
    out.steps = alpha.step;
    const double eps = 1.0 / static_cast<double>(alpha.edge_count());
    const double threshold = eps * (1.0 - tie_rtol);
    for (EdgeId e = 0; e < alpha.edge_count(); ++e)
        (alpha.prob[e] >= threshold ? out.in_set : out.out_set).push_back(e);
    out.alpha = alpha;
    return out;
}

double link_density(std::size_t n_s, std::size_t m_s) {
    if (n_s <= 2) return 0.0;
    const double n = static_cast<double>(n_s);
    const double m = static_cast<double>(m_s);
    return (m - (n - 1.0)) / (n * (n - 1.0) / 2.0 - (n - 1.0));
}

double edge_set_density(const Graph& g, std::span<const EdgeId> edges) {
    std::vector<NodeId> ends;
    ends.reserve(2 * edges.size());
    for (EdgeId e : edges) {
        ends.push_back(g.edge(e).u);
        ends.push_back(g.edge(e).v);
    }
    std::sort(ends.begin(), ends.end());
    const auto n = static_cast<std::size_t>(std::unique(ends.begin(), ends.end()) - ends.begin());
    return link_density(n, edges.size());
}

std::optional<LinkBipartition> bipartition_once(const Graph& sub, const LinkTransition& t,
                                                std::size_t steps, std::size_t trials,
                                                double tie_rtol, Rng& rng) {
    std::optional<LinkBipartition> best;
    double best_score = 0.0;
    for (std::size_t seed : rng.sample_distinct(sub.edge_count(), trials)) {
        LinkBipartition cand = elc(ulc(t, static_cast<EdgeId>(seed), steps), tie_rtol);
        cand.seed = static_cast<EdgeId>(seed);
        if (cand.in_set.empty() || cand.out_set.empty()) continue;
        const double score = std::min(edge_set_density(sub, cand.in_set),
                                      edge_set_density(sub, cand.out_set));
        if (!best || score > best_score) {
            best_score = score;
            best = std::move(cand);
        }
    }
    return best;
}

std::optional<LinkBipartition> bipartition_once(const Graph& sub, const DetectorConfig& cfg,
                                                Rng& rng) {
    const LinkTransition t(sub);
    const MarkovGenerator gen(t);
    const StepBound bound = step_bound(cfg.step, &gen);
    return bipartition_once(sub, t, bound.steps, cfg.seed_trials, cfg.tie_rtol, rng);
}

namespace {

struct Built {
    TreeNode node;
    std::vector<Built> children;
};

class LinkDetector {
public:
    LinkDetector(const Graph& g, const DetectorConfig& cfg)
        : g_(g), cfg_(cfg), spare_threads_(static_cast<int>(cfg.threads) - 1) {}

    Built component(std::vector<EdgeId> edges, std::uint64_t seed) {
        Built out;
        TreeNode& node = out.node;
        node.kind = TreeNode::Kind::component;
        const Subgraph sub = induced_by_edges(g_, edges);
        node.members = std::move(edges);
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
        auto split = bipartition_once(sub.graph, t, bound.steps, cfg_.seed_trials,
                                      cfg_.tie_rtol, rng);
        if (!split) {
            node.stop_reason = "reject";
            return out;
        }
        const double d_in = edge_set_density(sub.graph, split->in_set);
        const double d_out = edge_set_density(sub.graph, split->out_set);
        if (!accept_split(node.density, d_in, d_out)) {
            node.stop_reason = "density";
            return out;
        }

        const std::vector<EdgeId>* halves[2] = {&split->in_set, &split->out_set};
        const double densities[2] = {d_in, d_out};
        out.children.resize(2);
        std::vector<std::vector<EdgeId>> parts[2];
        for (int h = 0; h < 2; ++h) {
            TreeNode& side = out.children[h].node;
            side.kind = TreeNode::Kind::side;
            side.density = densities[h];
            for (EdgeId local : *halves[h]) side.members.push_back(sub.parent_edge[local]);
            side.edges = side.members.size();
            const Subgraph side_sub = induced_by_edges(g_, side.members);
            side.nodes = side_sub.graph.node_count();
            for (const auto& comp : connected_components(side_sub.graph).edge_sets) {
                std::vector<EdgeId> global;
                global.reserve(comp.size());
                for (EdgeId e : comp) global.push_back(side_sub.parent_edge[e]);
                parts[h].push_back(std::move(global));
            }
        }
        for (int h = 0; h < 2; ++h)
            out.children[h].children = run_all(std::move(parts[h]), derive_seed(seed, h));
        return out;
    }

    // Components of one side; some may run on spare threads. Results are
    // collected in index order, so scheduling never changes the output.
    std::vector<Built> run_all(std::vector<std::vector<EdgeId>> parts, std::uint64_t seed) {
        std::vector<Built> results(parts.size());
        std::vector<std::pair<std::size_t, std::future<Built>>> pending;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            const std::uint64_t child_seed = derive_seed(seed, c);
            if (c + 1 < parts.size() && acquire_thread()) {
                pending.emplace_back(
                    c, std::async(std::launch::async,
                                  [this, edges = std::move(parts[c]), child_seed]() mutable {
                                      Built b = component(std::move(edges), child_seed);
                                      release_thread();
                                      return b;
                                  }));
            } else {
                results[c] = component(std::move(parts[c]), child_seed);
            }
        }
        for (auto& [c, fut] : pending) results[c] = fut.get();
        return results;
    }

private:
    bool acquire_thread() {
        int n = spare_threads_.load();
        while (n > 0)
            if (spare_threads_.compare_exchange_weak(n, n - 1)) return true;
        return false;
    }
    void release_thread() { spare_threads_.fetch_add(1); }

    const Graph& g_;
    const DetectorConfig& cfg_;
    std::atomic<int> spare_threads_;
};

// Pre-order flattening; leaves get community ids in discovery order.
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

std::optional<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> LinkPartition::first_split()
    const {
    for (const TreeNode& node : tree) {
        if (node.kind == TreeNode::Kind::component && node.children.size() == 2)
            return std::make_pair(tree[node.children[0]].members, tree[node.children[1]].members);
    }
    return std::nullopt;
}

LinkPartition uelc(const Graph& g, const DetectorConfig& cfg) {
    validate(cfg);
    if (g.edge_count() == 0) throw InputError("uelc: graph has no edges");

    LinkDetector detector(g, cfg);
    Built root;
    root.node.kind = TreeNode::Kind::side;
    root.node.members.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) root.node.members[e] = e;
    root.node.edges = g.edge_count();
    root.node.nodes = g.node_count() - connected_components(g).isolated.size();
    root.node.density = link_density(root.node.nodes, root.node.edges);
    root.children = detector.run_all(connected_components(g).edge_sets, cfg.rng_seed);

    LinkPartition out;
    flatten(root, -1, out.tree, out.communities);
    out.community_count = out.communities.size();
    out.label.assign(g.edge_count(), 0);
    for (const TreeNode& node : out.tree)
        if (node.community)
            for (EdgeId e : node.members) out.label[e] = *node.community;
    return out;
}

NodeCover node_cover_from_links(const Graph& g, std::span<const CommunityId> edge_labels,
                                std::size_t community_count) {
    if (edge_labels.size() != g.edge_count())
        throw InputError("node_cover_from_links: label count does not match edge count");
    NodeCover cover;
    cover.community_count = community_count;
    cover.membership.resize(g.node_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        cover.membership[g.edge(e).u].push_back(edge_labels[e]);
        cover.membership[g.edge(e).v].push_back(edge_labels[e]);
    }
    for (auto& set : cover.membership) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    return cover;
}

NodeCover node_cover_from_links(const Graph& g, const LinkPartition& p) {
    return node_cover_from_links(g, p.label, p.community_count);
}

}  // namespace uelc
