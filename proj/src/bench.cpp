#include "uelc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iterator>
#include <map>
#include <thread>
#include <utility>

#include "uelc/error.hpp"
#include "uelc/nodecomm.hpp"
#include "uelc/rng.hpp"

namespace uelc {

void validate(const BknConfig& cfg) {
    if (cfg.x + cfg.y + cfg.z < 3) throw InputError("BKN: need x + y + z >= 3");
    if (!(cfg.k_expected > 0.0)) throw InputError("BKN: expected degree must be positive");
}

namespace {

// Node id range [begin, begin + size).
struct Block {
    NodeId begin;
    std::size_t size;
};

// Samples Poisson(rate) events on every unordered pair within one block or
// between two blocks, appending one (u, v) per event.
void sample_pairs(Rng& rng, Block a, Block b, bool same_block, double rate,
                  std::vector<Edge>& events, double& max_rate) {
    const double pairs = same_block ? 0.5 * static_cast<double>(a.size) *
                                          (static_cast<double>(a.size) - 1.0)
                                    : static_cast<double>(a.size) * static_cast<double>(b.size);
    if (pairs <= 0.0 || rate <= 0.0) return;
    max_rate = std::max(max_rate, rate);
    const std::uint64_t count = rng.poisson(rate * pairs);
    for (std::uint64_t k = 0; k < count; ++k) {
        NodeId u, v;
        if (same_block) {
            u = static_cast<NodeId>(rng.uniform_index(a.size));
            v = static_cast<NodeId>(rng.uniform_index(a.size - 1));
            if (v >= u) ++v;
            u += a.begin;
            v += a.begin;
        } else {
            u = a.begin + static_cast<NodeId>(rng.uniform_index(a.size));
            v = b.begin + static_cast<NodeId>(rng.uniform_index(b.size));
        }
        events.push_back({std::min(u, v), std::max(u, v)});
    }
}

}  // namespace

BknInstance generate_bkn(const BknConfig& cfg) {
    validate(cfg);
    const std::size_t n = cfg.x + cfg.y + cfg.z;
    const Block pure[2] = {{0, cfg.x}, {static_cast<NodeId>(cfg.x), cfg.y}};
    const Block overlap{static_cast<NodeId>(cfg.x + cfg.y), cfg.z};

    Rng rng(cfg.seed);
    std::vector<Edge> events;
    double max_rate = 0.0;
    for (int u = 0; u < 2; ++u) {
        const double span = static_cast<double>(pure[u].size) + 0.5 * static_cast<double>(cfg.z);
        if (span <= 0.0) continue;
        const double t = std::sqrt(cfg.k_expected / span);
        sample_pairs(rng, pure[u], pure[u], true, t * t, events, max_rate);
        sample_pairs(rng, pure[u], overlap, false, t * t / 2.0, events, max_rate);
        sample_pairs(rng, overlap, overlap, true, t * t / 4.0, events, max_rate);
    }

    BknInstance out;
    out.multi_edges = events.size();
    out.multigraph_degree.assign(n, 0);
    for (const Edge& e : events) {
        ++out.multigraph_degree[e.u];
        ++out.multigraph_degree[e.v];
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    out.collapsed = out.multi_edges - events.size();
    out.collapse_bias = max_rate > 0.1;
    out.graph = Graph(n, std::move(events));

    out.truth.community_count = 2;
    out.truth.membership.resize(n);
    for (NodeId v = 0; v < n; ++v) {
        if (v < cfg.x) out.truth.membership[v] = {0};
        else if (v < cfg.x + cfg.y) out.truth.membership[v] = {1};
        else out.truth.membership[v] = {0, 1};
    }
    return out;
}

double fvcc(const NodeCover& pred, const GroundTruthCover& truth) {
    if (pred.community_count > 2 || truth.community_count > 2)
        throw InputError("FVCC compares two-community covers only");
    if (pred.node_count() != truth.node_count())
        throw InputError("FVCC: covers have different node counts");
    if (truth.node_count() == 0) throw InputError("FVCC: empty cover");
    std::size_t direct = 0, swapped = 0;
    for (std::size_t v = 0; v < pred.node_count(); ++v) {
        const auto& p = pred.membership[v];
        const auto& t = truth.membership[v];
        direct += p == t;
        std::vector<CommunityId> flipped;
        for (CommunityId c : p) flipped.push_back(1 - c);
        std::sort(flipped.begin(), flipped.end());
        swapped += flipped == t;
    }
    return static_cast<double>(std::max(direct, swapped)) / static_cast<double>(pred.node_count());
}

JaccardResult jaccard_overlap(std::span<const NodeId> predicted, std::span<const NodeId> truth) {
    std::vector<NodeId> a(predicted.begin(), predicted.end()), b(truth.begin(), truth.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (a.empty() && b.empty()) return {1.0, true};
    std::vector<NodeId> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    const double uni = static_cast<double>(a.size() + b.size() - inter.size());
    return {static_cast<double>(inter.size()) / uni, false};
}

double nmi(std::span<const CommunityId> a, std::span<const CommunityId> b) {
    if (a.size() != b.size()) throw InputError("NMI: partitions cover different node sets");
    if (a.empty()) throw InputError("NMI: empty partition");
    std::map<CommunityId, double> na, nb;
    std::map<std::pair<CommunityId, CommunityId>, double> joint;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na[a[i]] += 1.0;
        nb[b[i]] += 1.0;
        joint[{a[i], b[i]}] += 1.0;
    }
    // One joint cell per community on both sides means the partitions are
    // equal up to relabeling; answer exactly rather than to rounding.
    if (joint.size() == na.size() && joint.size() == nb.size()) return 1.0;
    const double n = static_cast<double>(a.size());
    double num = 0.0;
    for (const auto& [key, nij] : joint) num += nij * std::log(nij * n / (na[key.first] * nb[key.second]));
    double den = 0.0;
    for (const auto& [k, ni] : na) den += ni * std::log(ni / n);
    for (const auto& [k, nj] : nb) den += nj * std::log(nj / n);
    return std::clamp(-2.0 * num / den, 0.0, 1.0);
}

double nmi(const NodeLabels& a, const NodeLabels& b) { return nmi(a.label, b.label); }

CumulativeDistribution cumulative_distribution(std::span<const std::size_t> samples) {
    std::vector<std::size_t> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    CumulativeDistribution out;
    const double total = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        out.push_back({sorted[i], static_cast<double>(sorted.size() - i) / total});
        i = j;
    }
    return out;
}

CoverStatistics cover_statistics(const NodeCover& cover) {
    CoverStatistics s;
    s.raw_community_size.assign(cover.community_count, 0);
    std::map<std::pair<CommunityId, CommunityId>, std::size_t> shared;
    for (const auto& set : cover.membership) {
        if (set.empty()) continue;
        s.raw_membership.push_back(set.size());
        for (std::size_t i = 0; i < set.size(); ++i) {
            ++s.raw_community_size.at(set[i]);
            for (std::size_t j = i + 1; j < set.size(); ++j) ++shared[{set[i], set[j]}];
        }
    }
    s.raw_community_degree.assign(cover.community_count, 0);
    for (const auto& [pair, count] : shared) {
        s.raw_overlap_size.push_back(count);
        ++s.raw_community_degree[pair.first];
        ++s.raw_community_degree[pair.second];
    }
    s.community_size = cumulative_distribution(s.raw_community_size);
    s.overlap_size = cumulative_distribution(s.raw_overlap_size);
    s.membership = cumulative_distribution(s.raw_membership);
    s.community_degree = cumulative_distribution(s.raw_community_degree);
    return s;
}

NodeCover bipartition_cover(const Graph& g, const DetectorConfig& cfg) {
    validate(cfg);
    const auto comps = connected_components(g);
    if (comps.edge_sets.empty()) throw InputError("bipartition_cover: graph has no edges");
    const auto largest = std::max_element(
        comps.edge_sets.begin(), comps.edge_sets.end(),
        [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const Subgraph sub = induced_by_edges(g, *largest);

    Rng rng(derive_seed(cfg.rng_seed, 0));
    std::vector<CommunityId> local_label(sub.graph.edge_count(), 0);
    std::size_t count = 1;
    if (sub.graph.edge_count() >= cfg.min_edges_leaf && sub.graph.node_count() > 2) {
        if (auto split = bipartition_once(sub.graph, cfg, rng)) {
            for (EdgeId e : split->out_set) local_label[e] = 1;
            count = 2;
        }
    }
    NodeCover cover;
    cover.community_count = count;
    cover.membership.resize(g.node_count());
    for (EdgeId e = 0; e < sub.graph.edge_count(); ++e) {
        const Edge& edge = g.edge(sub.parent_edge[e]);
        cover.membership[edge.u].push_back(local_label[e]);
        cover.membership[edge.v].push_back(local_label[e]);
    }
    for (auto& set : cover.membership) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    return cover;
}

NodeLabels primary_labels(const NodeCover& cover) {
    NodeLabels out;
    out.community_count = cover.community_count;
    out.label.resize(cover.node_count());
    bool unassigned = false;
    for (std::size_t v = 0; v < cover.node_count(); ++v) {
        if (cover.membership[v].empty()) {
            out.label[v] = static_cast<CommunityId>(cover.community_count);
            unassigned = true;
        } else {
            out.label[v] = cover.membership[v].front();
        }
    }
    if (unassigned) ++out.community_count;
    return out;
}

std::vector<SweepRow> run_sweep(const BknConfig& base, SweepParam param,
                                std::span<const double> values, std::size_t instances,
                                SweepMode mode, const DetectorConfig& cfg, std::size_t threads) {
    validate(cfg);
    const std::size_t n = base.x + base.y + base.z;
    std::vector<SweepRow> rows(values.size() * instances);

    auto run_one = [&](std::size_t index) {
        const std::size_t p = index / instances;
        const std::size_t i = index % instances;
        BknConfig bcfg = base;
        switch (param) {
            case SweepParam::k: bcfg.k_expected = values[p]; break;
            case SweepParam::z:
                bcfg.z = static_cast<std::size_t>(values[p]);
                break;
            case SweepParam::x: {
                bcfg.x = static_cast<std::size_t>(values[p]);
                if (bcfg.x + bcfg.z > n) throw InputError("sweep: x + z exceeds n");
                bcfg.y = n - bcfg.z - bcfg.x;
                break;
            }
        }
        bcfg.seed = derive_seed(derive_seed(base.seed, p), i);
        DetectorConfig dcfg = cfg;
        dcfg.rng_seed = derive_seed(cfg.rng_seed, bcfg.seed);
        dcfg.threads = 1;
        const BknInstance inst = generate_bkn(bcfg);

        SweepRow row;
        row.param = values[p];
        row.instance = i;
        if (mode == SweepMode::links) {
            const NodeCover cover = bipartition_cover(inst.graph, dcfg);
            row.fvcc = fvcc(cover, inst.truth);
            const auto pred_overlap = cover.overlap_nodes();
            const auto true_overlap = inst.truth.overlap_nodes();
            row.jaccard = jaccard_overlap(pred_overlap, true_overlap).value;
        } else {
            const NodePartition part = uelc_nodes(inst.graph, dcfg);
            row.nmi = nmi(part.labels, primary_labels(inst.truth));
        }
        rows[index] = row;
    };

    const std::size_t total = rows.size();
    if (threads <= 1) {
        for (std::size_t k = 0; k < total; ++k) run_one(k);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (std::size_t w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t k; (k = next.fetch_add(1)) < total;) {
                try {
                    run_one(k);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace uelc
