#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uelc/cover.hpp"
#include "uelc/graph.hpp"
#include "uelc/partition.hpp"

namespace uelc {

/// Two planted communities: x nodes only in community 0, y only in 1, z
/// in both. Every node has expected (multigraph) degree k_expected.
struct BknConfig {
    std::size_t x = 475;
    std::size_t y = 475;
    std::size_t z = 50;
    double k_expected = 12.0;
    std::uint64_t seed = 0;
};

void validate(const BknConfig& cfg);

struct BknInstance {
    Graph graph;  // node ids: 0..x-1 pure 0, x..x+y-1 pure 1, then overlap
    GroundTruthCover truth;
    std::vector<std::size_t> multigraph_degree;  // before collapsing
    std::size_t multi_edges = 0;                 // sampled edge events
    std::size_t collapsed = 0;                   // events merged into an existing edge
    /// Set when pair rates are large enough that collapsing to a simple
    /// graph noticeably lowers degrees (max pair rate > 0.1).
    bool collapse_bias = false;
};

/**
 * Node weights per community u: theta = t_u = sqrt(k / (x_u + z/2)) for
 * pure members and t_u / 2 for overlap members. Each unordered pair gets
 * Poisson(sum_u theta_iu theta_ju) edge events, sampled per pair class
 * by Poisson splitting; the simple graph keeps pairs with >= 1 event.
 */
BknInstance generate_bkn(const BknConfig& cfg);

/// Fraction of nodes whose whole membership set is right, maximized over
/// the two label permutations. Both covers must use at most 2 communities
/// (InputError otherwise) and have the same node count.
double fvcc(const NodeCover& pred, const GroundTruthCover& truth);

struct JaccardResult {
    double value = 0.0;
    bool both_empty = false;  // value is 1 by convention
};
JaccardResult jaccard_overlap(std::span<const NodeId> predicted, std::span<const NodeId> truth);

/// Normalized mutual information (natural log) between two labelings of the
/// same nodes. 1 when both are single-community.
double nmi(std::span<const CommunityId> a, std::span<const CommunityId> b);
double nmi(const NodeLabels& a, const NodeLabels& b);

struct CumulativePoint {
    std::size_t value;
    double prob;  // P(X >= value)
};
using CumulativeDistribution = std::vector<CumulativePoint>;

CumulativeDistribution cumulative_distribution(std::span<const std::size_t> samples);

struct CoverStatistics {
    CumulativeDistribution community_size;    // nodes per community
    CumulativeDistribution overlap_size;      // shared nodes per overlapping pair
    CumulativeDistribution membership;        // communities per assigned node
    CumulativeDistribution community_degree;  // communities sharing a node with each
    std::vector<std::size_t> raw_community_size;
    std::vector<std::size_t> raw_overlap_size;
    std::vector<std::size_t> raw_membership;
    std::vector<std::size_t> raw_community_degree;
};

CoverStatistics cover_statistics(const NodeCover& cover);

/// Two-community cover from the first split of the largest connected
/// component, as compared against planted truth. Nodes outside that
/// component are left unassigned. A rejected split yields one community.
NodeCover bipartition_cover(const Graph& g, const DetectorConfig& cfg);

struct MetricReport {
    std::optional<double> fvcc;
    std::optional<JaccardResult> jaccard;
    std::optional<double> nmi;
    std::vector<std::size_t> community_sizes;
};

enum class SweepParam { k, x, z };
enum class SweepMode { links, nodes };

struct SweepRow {
    double param = 0.0;
    std::size_t instance = 0;
    std::optional<double> fvcc;
    std::optional<double> jaccard;
    std::optional<double> nmi;
};

/**
 * Benchmark sweep. For SweepParam::x the value is the size of community 0,
 * with y = n - z - x and n = base.x + base.y + base.z held fixed. Instance
 * seeds derive from (base.seed, param index, instance index), so rows do
 * not depend on `threads`.
 */
std::vector<SweepRow> run_sweep(const BknConfig& base, SweepParam param,
                                std::span<const double> values, std::size_t instances,
                                SweepMode mode, const DetectorConfig& cfg,
                                std::size_t threads = 1);

/// Primary community per node (lowest id), for NMI against a cover.
NodeLabels primary_labels(const NodeCover& cover);

}  // namespace uelc
