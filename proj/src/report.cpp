#include "uelc/report.hpp"

#include <ostream>

#include "uelc/io.hpp"

namespace uelc::report {

Json config_json(const DetectorConfig& cfg) {
    Json j;
    j["step_mode"] = cfg.step.mode == StepMode::spectral ? "spectral" : "fixed";
    j["step_cap"] = cfg.step.cap;
    j["eigen_tol"] = cfg.step.tol;
    j["eigen_max_iter"] = cfg.step.max_iter;
    j["seed_trials"] = cfg.seed_trials;
    j["rng_seed"] = cfg.rng_seed;
    j["min_edges"] = cfg.min_edges_leaf;
    j["tie_rtol"] = cfg.tie_rtol;
    return j;
}

Json tree_json(std::span<const TreeNode> tree, std::size_t index) {
    const TreeNode& node = tree[index];
    Json j;
    j["kind"] = node.kind == TreeNode::Kind::side ? "side" : "component";
    j["n_s"] = node.nodes;
    j["m_s"] = node.edges;
    j["D_s"] = node.density;
    if (node.kind == TreeNode::Kind::component) {
        if (node.steps) j["steps"] = node.steps;
        if (node.step_fallback) j["step_fallback"] = true;
        if (node.community) {
            j["community"] = *node.community;
            j["stop"] = node.stop_reason;
        }
    }
    if (!node.children.empty()) {
        Json kids = Json::array();
        for (std::size_t c : node.children) kids.push_back(tree_json(tree, c));
        j["children"] = std::move(kids);
    }
    return j;
}

namespace {

Json communities_json(std::span<const CommunityStats> stats) {
    Json arr = Json::array();
    for (std::size_t c = 0; c < stats.size(); ++c) {
        Json j;
        j["id"] = c;
        j["m_s"] = stats[c].edges;
        j["n_s"] = stats[c].nodes;
        j["D_s"] = stats[c].density;
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace

Json link_summary(const LinkPartition& p, const DetectorConfig& cfg) {
    Json j;
    j["T"] = p.community_count;
    j["communities"] = communities_json(p.communities);
    j["tree"] = tree_json(p.tree);
    j["config"] = config_json(cfg);
    return j;
}

Json node_summary(const NodePartition& p, const DetectorConfig& cfg) {
    Json j;
    j["communities_count"] = p.labels.community_count;
    j["communities"] = communities_json(p.communities);
    j["tree"] = tree_json(p.tree);
    j["config"] = config_json(cfg);
    return j;
}

Json lambda2_json(std::size_t m, const Lambda2Estimate& est) {
    Json j;
    j["m"] = m;
    j["lambda2"] = est.lambda2;
    j["inv_lambda2"] = 1.0 / est.lambda2;
    j["steps"] = steps_for_lambda2(est.lambda2);
    j["iterations"] = est.iterations;
    j["residual"] = est.residual;
    return j;
}

Json metric_json(const MetricReport& r) {
    Json j;
    if (r.fvcc) j["fvcc"] = *r.fvcc;
    if (r.jaccard) {
        j["jaccard"] = r.jaccard->value;
        if (r.jaccard->both_empty) j["jaccard_both_empty"] = true;
    }
    if (r.nmi) j["nmi"] = *r.nmi;
    j["community_sizes"] = r.community_sizes;
    return j;
}

void write_link_partition(std::ostream& out, const Graph& g, const NodeLabelMap& labels,
                          std::span<const CommunityId> edge_labels) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out << labels.label(g.edge(e).u) << ' ' << labels.label(g.edge(e).v) << ' '
            << edge_labels[e] << '\n';
}

void write_distribution_csv(std::ostream& out, const CumulativeDistribution& dist) {
    out << "value,cumulative_prob\n";
    for (const auto& pt : dist) out << pt.value << ',' << format_double(pt.prob) << '\n';
}

void write_alpha_csv(std::ostream& out, const Graph& g, const NodeLabelMap& labels,
                     const EdgeDistribution& alpha,
                     std::optional<std::span<const CommunityId>> edge_labels) {
    out << "edge_u,edge_v,probability" << (edge_labels ? ",community" : "") << '\n';
    for (EdgeId e = 0; e < alpha.edge_count(); ++e) {
        out << labels.label(g.edge(e).u) << ',' << labels.label(g.edge(e).v) << ','
            << format_double(alpha.prob[e]);
        if (edge_labels) out << ',' << (*edge_labels)[e];
        out << '\n';
    }
    out << "# epsilon=" << format_double(1.0 / static_cast<double>(alpha.edge_count())) << '\n';
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
    auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
    out << "param,instance,fvcc,jaccard,nmi\n";
    for (const SweepRow& r : rows)
        out << format_double(r.param) << ',' << r.instance << ',' << opt(r.fvcc) << ','
            << opt(r.jaccard) << ',' << opt(r.nmi) << '\n';
}

}  // namespace uelc::report
