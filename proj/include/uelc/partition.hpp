#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uelc/cover.hpp"
#include "uelc/graph.hpp"
#include "uelc/linkdyn.hpp"
#include "uelc/rng.hpp"
#include "uelc/spectral.hpp"

namespace uelc {

/// Relative band around the threshold that counts as a tie. After enough
/// steps on a subnetwork with no structure, the walk equals the stationary
/// distribution up to rounding; the band keeps such inputs unsplittable.
inline constexpr double kDefaultTieRtol = 1e-8;

struct DetectorConfig {
    StepPolicy step;
    std::uint64_t rng_seed = 0;
    std::size_t seed_trials = 1;
    std::size_t min_edges_leaf = 2;
    double tie_rtol = kDefaultTieRtol;
    /// Worker threads for sibling subtrees. Results do not depend on it.
    std::size_t threads = 1;
};

/// Throws InputError when a field is out of range.
void validate(const DetectorConfig& cfg);

struct LinkBipartition {
    EdgeId seed = 0;
    std::size_t steps = 0;
    std::vector<EdgeId> in_set;   // ascending
    std::vector<EdgeId> out_set;  // ascending
    EdgeDistribution alpha;
};

/// Walk distribution after `steps` from a one-hot start at `seed`. The
/// graph must be connected (InputError otherwise).
EdgeDistribution ulc(const Graph& sub, EdgeId seed, std::size_t steps);
EdgeDistribution ulc(const LinkTransition& t, EdgeId seed, std::size_t steps);

/// Threshold at the stationary value 1/m: alpha(e) >= 1/m (within the tie
/// band) goes to in_set, the rest to out_set.
LinkBipartition elc(const EdgeDistribution& alpha, double tie_rtol = kDefaultTieRtol);

/// Edge count normalized between a tree (0) and a clique (1) on n_s nodes;
/// defined as 0 for n_s <= 2. Negative for forests.
double link_density(std::size_t n_s, std::size_t m_s);
/// Density with n_s = number of distinct endpoints of `edges`.
double edge_set_density(const Graph& g, std::span<const EdgeId> edges);

/// Best of `trials` distinct random seed edges, scored by
/// min(D(in), D(out)); nullopt when every candidate has an empty side.
std::optional<LinkBipartition> bipartition_once(const Graph& sub, const LinkTransition& t,
                                                std::size_t steps, std::size_t trials,
                                                double tie_rtol, Rng& rng);
/// Same, with the transition and step count derived from `cfg`.
std::optional<LinkBipartition> bipartition_once(const Graph& sub, const DetectorConfig& cfg,
                                                Rng& rng);

/// Accept a split unless one side is strictly less dense than the parent.
inline bool accept_split(double parent_density, double left_density, double right_density) {
    return left_density >= parent_density && right_density >= parent_density;
}

/// Recursion record. Component nodes are connected subnetworks that were
/// either split or kept as a community; side nodes are the two halves of
/// an accepted split, each owning the connected components it breaks into.
/// tree[0] is the root side (the whole input).
struct TreeNode {
    enum class Kind { side, component };
    Kind kind = Kind::side;
    int parent = -1;
    std::vector<std::size_t> children;
    std::vector<std::uint32_t> members;  // parent-graph edge or node ids, ascending
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double density = 0.0;
    // Component nodes only.
    std::optional<CommunityId> community;  // set on leaves
    std::string stop_reason;               // leaves: "small", "reject", "density"
    std::size_t steps = 0;
    bool step_fallback = false;
};

struct CommunityStats {
    std::size_t edges = 0;
    std::size_t nodes = 0;
    double density = 0.0;
};

struct LinkPartition {
    std::vector<CommunityId> label;  // per edge
    std::size_t community_count = 0;
    std::vector<CommunityStats> communities;
    std::vector<TreeNode> tree;

    /// The two sides of the first accepted split, if any.
    std::optional<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> first_split() const;
};

/// Recursive density-gated bisection of the edge set, run independently on
/// each connected component. Deterministic for a fixed cfg.rng_seed,
/// regardless of cfg.threads.
LinkPartition uelc(const Graph& g, const DetectorConfig& cfg);

/// Node i joins community c iff some incident edge carries label c.
NodeCover node_cover_from_links(const Graph& g, std::span<const CommunityId> edge_labels,
                                std::size_t community_count);
NodeCover node_cover_from_links(const Graph& g, const LinkPartition& p);

}  // namespace uelc
