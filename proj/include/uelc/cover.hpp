#pragma once

#include <cstdint>
#include <vector>

#include "uelc/graph.hpp"

namespace uelc {

using CommunityId = std::uint32_t;

/// Overlapping node membership. membership[i] is sorted and duplicate-free;
/// an empty set marks a node that belongs to no community.
struct NodeCover {
    std::vector<std::vector<CommunityId>> membership;
    std::size_t community_count = 0;

    std::size_t node_count() const { return membership.size(); }
    /// Nodes in two or more communities, ascending.
    std::vector<NodeId> overlap_nodes() const;
    std::vector<NodeId> unassigned_nodes() const;
};

/// Planted truth for benchmark instances uses the same representation.
using GroundTruthCover = NodeCover;

/// Non-overlapping node labels, dense 0..community_count-1.
struct NodeLabels {
    std::vector<CommunityId> label;
    std::size_t community_count = 0;
};

}  // namespace uelc
