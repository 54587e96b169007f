#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "uelc/cover.hpp"
#include "uelc/graph.hpp"
#include "uelc/linkdyn.hpp"
#include "uelc/partition.hpp"

namespace uelc {

/// Probability of reaching each node on the next half-step, and its
/// stationary value d_i / 2m.
struct NodeDistribution {
    std::vector<double> prob;
    std::vector<double> stationary;
};

/// psi(i) = 1/2 * sum over incident edges of alpha(e).
NodeDistribution node_probability(const Graph& g, const EdgeDistribution& alpha);

/// side[i] == 0 (in) iff psi(i) >= stationary(i) within the tie band.
std::vector<std::uint8_t> node_bipartition(const NodeDistribution& nd,
                                           double tie_rtol = kDefaultTieRtol);

struct RefineResult {
    std::vector<std::uint8_t> side;
    std::size_t sweeps = 0;        // sweeps that moved at least one node
    std::vector<std::size_t> cut;  // cut size before the first sweep and after each
};

/// Sequential sweeps in ascending node order, moving a node to the other
/// side when strictly more of its neighbors live there. Stops at a fixed
/// point or after max_sweeps.
RefineResult majority_refine(const Graph& g, std::vector<std::uint8_t> side,
                             std::size_t max_sweeps = 100);

std::size_t cut_size(const Graph& g, std::span<const std::uint8_t> side);

/// Density of the subgraph induced by `nodes` (n_s = |nodes|).
double node_set_density(const Graph& g, std::span<const NodeId> nodes);

struct NodePartition {
    NodeLabels labels;
    std::vector<CommunityStats> communities;
    std::vector<TreeNode> tree;  // members are node ids
};

/// Recursive node bisection: walk from a random edge, threshold psi
/// against d_i/2m, majority-refine, accept by the same density rule as
/// the link detector.
NodePartition uelc_nodes(const Graph& g, const DetectorConfig& cfg);

}  // namespace uelc
