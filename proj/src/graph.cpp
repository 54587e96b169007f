#include "uelc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "uelc/error.hpp"

namespace uelc {

Graph::Graph(std::size_t node_count, std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.u == e.v) throw InputError("self-loop on node " + std::to_string(e.u));
        if (e.u >= node_count || e.v >= node_count)
            throw InputError("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    {
        std::vector<Edge> sorted = edges_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw InputError("duplicate edge");
    }

    degree_.assign(node_count, 0);
    for (const Edge& e : edges_) {
        ++degree_[e.u];
        ++degree_[e.v];
    }
    offsets_.assign(node_count + 1, 0);
    for (std::size_t v = 0; v < node_count; ++v) offsets_[v + 1] = offsets_[v] + degree_[v];
    adjacency_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adjacency_[fill[e.u]++] = {e.v, id};
        adjacency_[fill[e.v]++] = {e.u, id};
    }
    for (std::size_t v = 0; v < node_count; ++v) {
        std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1],
                  [](const Incidence& a, const Incidence& b) { return a.node < b.node; });
    }
}

std::size_t Graph::max_degree() const {
    return degree_.empty() ? 0 : *std::max_element(degree_.begin(), degree_.end());
}

EdgeId Graph::find_edge(NodeId u, NodeId v) const {
    if (u >= node_count() || v >= node_count()) return static_cast<EdgeId>(edge_count());
    auto inc = incidences(u);
    auto it = std::lower_bound(inc.begin(), inc.end(), v,
                               [](const Incidence& a, NodeId x) { return a.node < x; });
    if (it != inc.end() && it->node == v) return it->edge;
    return static_cast<EdgeId>(edge_count());
}

NodeId NodeLabelMap::intern(std::string_view label) {
    std::string key(label);
    auto [it, inserted] = ids_.try_emplace(key, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(std::move(key));
    return it->second;
}

bool NodeLabelMap::contains(std::string_view label) const {
    return ids_.find(std::string(label)) != ids_.end();
}

NodeId NodeLabelMap::id(std::string_view label) const {
    auto it = ids_.find(std::string(label));
    if (it == ids_.end()) throw InputError("unknown node label '" + std::string(label) + "'");
    return it->second;
}

NodeLabelMap NodeLabelMap::identity(std::size_t n) {
    NodeLabelMap map;
    for (std::size_t i = 0; i < n; ++i) map.intern(std::to_string(i));
    return map;
}

Subgraph induced_by_edges(const Graph& g, std::span<const EdgeId> edges) {
    if (edges.empty()) throw InputError("induced_by_edges: empty edge set");
    Subgraph sub;
    sub.parent_edge.assign(edges.begin(), edges.end());
    std::sort(sub.parent_edge.begin(), sub.parent_edge.end());
    sub.parent_edge.erase(std::unique(sub.parent_edge.begin(), sub.parent_edge.end()),
                          sub.parent_edge.end());
    for (EdgeId e : sub.parent_edge) {
        if (e >= g.edge_count()) throw InputError("induced_by_edges: edge id out of range");
        sub.parent_node.push_back(g.edge(e).u);
        sub.parent_node.push_back(g.edge(e).v);
    }
    std::sort(sub.parent_node.begin(), sub.parent_node.end());
    sub.parent_node.erase(std::unique(sub.parent_node.begin(), sub.parent_node.end()),
                          sub.parent_node.end());
    auto local = [&](NodeId v) {
        return static_cast<NodeId>(
            std::lower_bound(sub.parent_node.begin(), sub.parent_node.end(), v) -
            sub.parent_node.begin());
    };
    std::vector<Edge> local_edges;
    local_edges.reserve(sub.parent_edge.size());
    for (EdgeId e : sub.parent_edge) local_edges.push_back({local(g.edge(e).u), local(g.edge(e).v)});
    sub.graph = Graph(sub.parent_node.size(), std::move(local_edges));
    return sub;
}

Subgraph induced_by_nodes(const Graph& g, std::span<const NodeId> nodes) {
    Subgraph sub;
    sub.parent_node.assign(nodes.begin(), nodes.end());
    std::sort(sub.parent_node.begin(), sub.parent_node.end());
    sub.parent_node.erase(std::unique(sub.parent_node.begin(), sub.parent_node.end()),
                          sub.parent_node.end());
    constexpr NodeId absent = ~NodeId{0};
    std::vector<NodeId> local(g.node_count(), absent);
    for (NodeId i = 0; i < sub.parent_node.size(); ++i) {
        if (sub.parent_node[i] >= g.node_count())
            throw InputError("induced_by_nodes: node id out of range");
        local[sub.parent_node[i]] = i;
    }
    std::vector<Edge> local_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (local[edge.u] != absent && local[edge.v] != absent) {
            sub.parent_edge.push_back(e);
            local_edges.push_back({local[edge.u], local[edge.v]});
        }
    }
    sub.graph = Graph(sub.parent_node.size(), std::move(local_edges));
    return sub;
}

namespace {

// Component index per node via iterative DFS; isolated nodes get their own.
std::vector<std::size_t> label_components(const Graph& g, std::size_t& count) {
    constexpr std::size_t unset = ~std::size_t{0};
    std::vector<std::size_t> comp(g.node_count(), unset);
    std::vector<NodeId> stack;
    count = 0;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (comp[s] != unset) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            NodeId v = stack.back();
            stack.pop_back();
            for (const Incidence& inc : g.incidences(v)) {
                if (comp[inc.node] == unset) {
                    comp[inc.node] = count;
                    stack.push_back(inc.node);
                }
            }
        }
        ++count;
    }
    return comp;
}

}  // namespace

Components connected_components(const Graph& g) {
    std::size_t count = 0;
    const auto comp = label_components(g, count);
    constexpr std::size_t unset = ~std::size_t{0};
    std::vector<std::size_t> slot(count, unset);
    Components out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const std::size_t c = comp[g.edge(e).u];
        if (slot[c] == unset) {
            slot[c] = out.edge_sets.size();
            out.edge_sets.emplace_back();
        }
        out.edge_sets[slot[c]].push_back(e);
    }
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree(v) == 0) out.isolated.push_back(v);
    return out;
}

std::vector<std::vector<NodeId>> node_components(const Graph& g) {
    std::size_t count = 0;
    const auto comp = label_components(g, count);
    std::vector<std::vector<NodeId>> out(count);
    for (NodeId v = 0; v < g.node_count(); ++v) out[comp[v]].push_back(v);
    return out;
}

}  // namespace uelc
