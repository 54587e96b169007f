#pragma once

#include <iosfwd>
#include <optional>
#include <span>

#include <json.hpp>

#include "uelc/bench.hpp"
#include "uelc/graph.hpp"
#include "uelc/nodecomm.hpp"
#include "uelc/partition.hpp"
#include "uelc/spectral.hpp"

namespace uelc::report {

using Json = nlohmann::ordered_json;

Json config_json(const DetectorConfig& cfg);

/// Nested recursion tree rooted at tree[index].
Json tree_json(std::span<const TreeNode> tree, std::size_t index = 0);

Json link_summary(const LinkPartition& p, const DetectorConfig& cfg);
Json node_summary(const NodePartition& p, const DetectorConfig& cfg);
Json lambda2_json(std::size_t m, const Lambda2Estimate& est);
Json metric_json(const MetricReport& r);

/// `<label_u> <label_v> <community_id>` per edge.
void write_link_partition(std::ostream& out, const Graph& g, const NodeLabelMap& labels,
                          std::span<const CommunityId> edge_labels);

/// `value,cumulative_prob` with a header line.
void write_distribution_csv(std::ostream& out, const CumulativeDistribution& dist);

/// `edge_u,edge_v,probability[,community]` with header, followed by the
/// stationary reference as a comment line `# epsilon=<1/m>`.
void write_alpha_csv(std::ostream& out, const Graph& g, const NodeLabelMap& labels,
                     const EdgeDistribution& alpha,
                     std::optional<std::span<const CommunityId>> edge_labels = std::nullopt);

/// `param,instance,fvcc,jaccard,nmi`; metrics that do not apply are empty.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace uelc::report
