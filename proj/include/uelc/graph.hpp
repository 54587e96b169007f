#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace uelc {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One adjacency entry: the neighbor and the edge that reaches it.
struct Incidence {
    NodeId node;
    EdgeId edge;
};

/**
 * Simple undirected graph with dense node ids 0..n-1 and dense edge ids
 * 0..m-1. Edges are stored canonically (u < v); adjacency lists are sorted
 * by neighbor id. Immutable once constructed.
 */
class Graph {
public:
    Graph() = default;

    /// Builds from canonical or non-canonical pairs. Throws InputError on
    /// self-loops, duplicate edges, or endpoints >= node_count.
    Graph(std::size_t node_count, std::vector<Edge> edges);

    std::size_t node_count() const { return degree_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::span<const Incidence> incidences(NodeId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return degree_[v]; }
    std::size_t max_degree() const;

    /// Edge id joining u and v, or edge_count() if absent.
    EdgeId find_edge(NodeId u, NodeId v) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Incidence> adjacency_;
    std::vector<std::size_t> degree_;
};

/// Bijection between external string labels and dense node ids.
class NodeLabelMap {
public:
    /// Returns the id for `label`, assigning the next dense id if new.
    NodeId intern(std::string_view label);
    bool contains(std::string_view label) const;
    NodeId id(std::string_view label) const;  // throws InputError if unknown
    const std::string& label(NodeId id) const { return labels_[id]; }
    std::size_t size() const { return labels_.size(); }

    /// Map with labels "0".."n-1".
    static NodeLabelMap identity(std::size_t n);

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> ids_;
};

/// A graph cut out of a parent, with local -> parent id maps.
struct Subgraph {
    Graph graph;
    std::vector<NodeId> parent_node;
    std::vector<EdgeId> parent_edge;
};

/// Subgraph on exactly the endpoints of `edges`. Local node ids follow the
/// parent id order and local edge ids follow ascending parent edge id.
Subgraph induced_by_edges(const Graph& g, std::span<const EdgeId> edges);

/// Subgraph on `nodes` with every parent edge whose endpoints are both
/// selected. Isolated selected nodes are kept.
Subgraph induced_by_nodes(const Graph& g, std::span<const NodeId> nodes);

struct Components {
    std::vector<std::vector<EdgeId>> edge_sets;  // ordered by smallest edge id
    std::vector<NodeId> isolated;                // nodes with no edges
};

Components connected_components(const Graph& g);

/// Node sets of connected components (isolated nodes form singletons),
/// ordered by smallest node id.
std::vector<std::vector<NodeId>> node_components(const Graph& g);

}  // namespace uelc
