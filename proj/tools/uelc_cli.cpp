// uelc: command-line front end for link and node community detection.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "uelc/bench.hpp"
#include "uelc/error.hpp"
#include "uelc/io.hpp"
#include "uelc/nodecomm.hpp"
#include "uelc/partition.hpp"
#include "uelc/report.hpp"
#include "uelc/spectral.hpp"

#ifndef UELC_VERSION
#define UELC_VERSION "0.0.0"
#endif

using namespace uelc;
using report::Json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kNumerical = 3 };

struct Options {
    // detector
    std::string step_mode = "fixed";
    std::size_t step_cap = 100;
    std::size_t seed_trials = 1;
    std::uint64_t rng_seed = 0;
    std::size_t min_edges = 2;
    std::size_t threads = 1;
    double eigen_tol = 1e-8;
    std::size_t eigen_max_iter = 1000;
    bool strict_spectral = false;
    // output
    std::string format = "text";
    std::string out;
    std::string manifest;
    // inputs
    std::string edges;
    std::string truth;
    std::string pred;
    std::string cover;
    std::string partition;
    std::string eval_mode = "cover";
    std::string rerun_manifest;
    // dump-alpha
    std::vector<std::string> seed_edge;
    long long seed_index = -1;
    long long steps = -1;
    // bkn / sweep
    std::size_t x = 475, y = 475, z = 50;
    double k = 12.0;
    std::uint64_t bkn_seed = 0;
    std::string sweep_param = "k";
    std::string sweep_mode = "links";
    std::vector<double> values;
    std::size_t instances = 20;
};

/// Outputs collected by a command. Files are written only after the
/// command succeeds, so a failing run leaves nothing half-written.
struct Run {
    Json config = Json::object();
    std::vector<std::string> inputs;
    std::vector<std::pair<std::string, std::string>> files;
    std::string stdout_text;

    void file(const std::string& path, const std::string& body) { files.emplace_back(path, body); }
};

DetectorConfig detector(const Options& o) {
    DetectorConfig cfg;
    cfg.step.mode = o.step_mode == "spectral" ? StepMode::spectral : StepMode::fixed;
    cfg.step.cap = o.step_cap;
    cfg.step.tol = o.eigen_tol;
    cfg.step.max_iter = o.eigen_max_iter;
    cfg.seed_trials = o.seed_trials;
    cfg.rng_seed = o.rng_seed;
    cfg.min_edges_leaf = o.min_edges;
    cfg.threads = o.threads;
    validate(cfg);
    return cfg;
}

BknConfig bkn(const Options& o) { return BknConfig{o.x, o.y, o.z, o.k, o.bkn_seed}; }

Json bkn_json(const BknConfig& b) {
    return Json{{"x", b.x}, {"y", b.y}, {"z", b.z}, {"k", b.k_expected}, {"seed", b.seed}};
}

std::string need_out(const Options& o, const char* cmd) {
    if (o.out.empty()) throw InputError(std::string(cmd) + " requires --out PREFIX");
    return o.out;
}

void check_fallback(const Options& o, std::span<const TreeNode> tree) {
    if (!o.strict_spectral) return;
    for (const TreeNode& n : tree)
        if (n.step_fallback)
            throw NumericalError("eigensolver failed on a subnetwork and --strict-spectral is set");
}

std::string community_lines(std::span<const CommunityStats> stats) {
    std::ostringstream s;
    for (std::size_t c = 0; c < stats.size(); ++c)
        s << "community " << c << " m_s=" << stats[c].edges << " n_s=" << stats[c].nodes
          << " D_s=" << format_double(stats[c].density) << '\n';
    return s.str();
}

// ---------------------------------------------------------------- commands

void cmd_detect_links(const Options& o, Run& run) {
    const DetectorConfig cfg = detector(o);
    run.inputs = {o.edges};
    run.config = report::config_json(cfg);
    const LoadedGraph lg = load_edge_list_file(o.edges);
    const LinkPartition p = uelc::uelc(lg.graph, cfg);
    check_fallback(o, p.tree);
    const NodeCover cover = node_cover_from_links(lg.graph, p);
    Json summary = report::link_summary(p, cfg);

    std::vector<std::string> overlap;
    if (auto split = p.first_split()) {
        std::vector<CommunityId> side(lg.graph.edge_count(), 0);
        for (EdgeId e : split->second) side[e] = 1;
        // Edges of other components sit on side 0; only nodes of the split
        // component can be shared.
        std::vector<char> involved(lg.graph.node_count(), 0);
        for (const auto* half : {&split->first, &split->second})
            for (EdgeId e : *half) involved[lg.graph.edge(e).u] = involved[lg.graph.edge(e).v] = 1;
        const NodeCover two = node_cover_from_links(lg.graph, side, 2);
        for (NodeId v : two.overlap_nodes())
            if (involved[v]) overlap.push_back(lg.labels.label(v));
    }
    summary["first_split_overlap"] = overlap;
    if (lg.duplicates_collapsed) summary["duplicates_collapsed"] = lg.duplicates_collapsed;

    if (o.format == "json") {
        run.stdout_text = summary.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "communities " << p.community_count << '\n' << community_lines(p.communities);
        s << "first_split_overlap";
        for (const auto& v : overlap) s << ' ' << v;
        s << '\n';
        run.stdout_text = s.str();
    }
    if (!o.out.empty()) {
        std::ostringstream links, cov;
        report::write_link_partition(links, lg.graph, lg.labels, p.label);
        write_cover(cov, cover, lg.labels);
        run.file(o.out + ".links", links.str());
        run.file(o.out + ".cover", cov.str());
        run.file(o.out + ".summary.json", summary.dump(2) + "\n");
    }
}

NodeLabels read_labels(const std::string& path, NodeLabelMap& names, std::size_t n_hint) {
    const MembershipFile mf = read_membership_file(path, names);
    std::map<CommunityId, CommunityId> dense;
    NodeLabels out;
    out.label.assign(std::max(n_hint, names.size()), 0);
    std::vector<char> seen(out.label.size(), 0);
    for (NodeId v = 0; v < mf.membership.size(); ++v) {
        if (mf.membership[v].empty()) continue;
        if (mf.membership[v].size() != 1)
            throw InputError(path + ": node '" + names.label(v) + "' has more than one community");
        dense.emplace(mf.membership[v][0], 0);
    }
    CommunityId next = 0;
    for (auto& [id, d] : dense) d = next++;
    for (NodeId v = 0; v < mf.membership.size(); ++v) {
        if (mf.membership[v].empty()) continue;
        out.label[v] = dense[mf.membership[v][0]];
        seen[v] = 1;
    }
    for (NodeId v = 0; v < out.label.size(); ++v)
        if (!seen[v])
            throw InputError(path + ": no community for node '" + names.label(v) + "'");
    out.community_count = dense.size();
    return out;
}

void cmd_detect_nodes(const Options& o, Run& run) {
    const DetectorConfig cfg = detector(o);
    run.inputs = {o.edges};
    run.config = report::config_json(cfg);
    const LoadedGraph lg = load_edge_list_file(o.edges);
    const NodePartition p = uelc_nodes(lg.graph, cfg);
    check_fallback(o, p.tree);
    Json summary = report::node_summary(p, cfg);
    std::optional<double> score;
    if (!o.truth.empty()) {
        run.inputs.push_back(o.truth);
        NodeLabelMap names = lg.labels;
        const NodeLabels truth = read_labels(o.truth, names, lg.graph.node_count());
        if (names.size() != lg.graph.node_count())
            throw InputError(o.truth + ": contains nodes absent from the edge list");
        score = nmi(p.labels, truth);
        summary["nmi"] = *score;
    }
    if (o.format == "json") {
        run.stdout_text = summary.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "communities " << p.labels.community_count << '\n' << community_lines(p.communities);
        if (score) s << "nmi " << format_double(*score) << '\n';
        run.stdout_text = s.str();
    }
    if (!o.out.empty()) {
        std::ostringstream labels;
        write_node_labels(labels, p.labels, lg.labels);
        run.file(o.out + ".labels", labels.str());
        run.file(o.out + ".summary.json", summary.dump(2) + "\n");
    }
}

void cmd_gen_bkn(const Options& o, Run& run) {
    const BknConfig b = bkn(o);
    run.config = bkn_json(b);
    const std::string prefix = need_out(o, "gen-bkn");
    const BknInstance inst = generate_bkn(b);
    const auto names = NodeLabelMap::identity(inst.graph.node_count());
    std::ostringstream edges, truth;
    write_edge_list(edges, inst.graph, names);
    write_cover(truth, inst.truth, names);
    run.file(prefix + ".edges", edges.str());
    run.file(prefix + ".truth", truth.str());
    Json info{{"n", inst.graph.node_count()},
              {"m", inst.graph.edge_count()},
              {"multi_edges", inst.multi_edges},
              {"collapsed", inst.collapsed},
              {"collapse_bias", inst.collapse_bias},
              {"overlap_nodes", inst.truth.overlap_nodes().size()}};
    if (inst.collapse_bias)
        std::cerr << "warning: large pair rates; collapsing to a simple graph lowers degrees\n";
    if (o.format == "json") {
        run.stdout_text = info.dump(2) + "\n";
    } else {
        std::ostringstream s;
        for (auto it = info.begin(); it != info.end(); ++it) s << it.key() << ' ' << it.value().dump() << '\n';
        run.stdout_text = s.str();
    }
}

/// Reads a cover file into dense community ids in ascending original order.
NodeCover read_cover(const std::string& path, NodeLabelMap& names) {
    const MembershipFile mf = read_membership_file(path, names);
    std::map<CommunityId, CommunityId> dense;
    for (const auto& set : mf.membership)
        for (CommunityId c : set) dense.emplace(c, 0);
    CommunityId next = 0;
    for (auto& [id, d] : dense) d = next++;
    NodeCover cover;
    cover.community_count = dense.size();
    for (const auto& set : mf.membership) {
        std::vector<CommunityId> m;
        for (CommunityId c : set) m.push_back(dense[c]);
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        cover.membership.push_back(std::move(m));
    }
    return cover;
}

void cmd_eval(const Options& o, Run& run) {
    run.inputs = {o.pred, o.truth};
    run.config = Json{{"mode", o.eval_mode}};
    NodeLabelMap names;
    MetricReport r;
    Json extra = Json::object();
    if (o.eval_mode == "cover") {
        NodeCover truth = read_cover(o.truth, names);
        NodeCover pred = read_cover(o.pred, names);
        truth.membership.resize(names.size());
        pred.membership.resize(names.size());
        if (pred.community_count <= 2 && truth.community_count <= 2) {
            r.fvcc = fvcc(pred, truth);
        } else {
            extra["fvcc_skipped"] = "needs covers with at most two communities";
        }
        const auto po = pred.overlap_nodes(), to = truth.overlap_nodes();
        r.jaccard = jaccard_overlap(po, to);
        for (std::size_t c = 0; c < pred.community_count; ++c) {
            std::size_t size = 0;
            for (const auto& set : pred.membership) size += std::binary_search(set.begin(), set.end(), c);
            r.community_sizes.push_back(size);
        }
    } else {
        const NodeLabels truth = read_labels(o.truth, names, 0);
        const std::size_t known = names.size();
        const NodeLabels pred = read_labels(o.pred, names, known);
        if (names.size() != known) throw InputError(o.pred + ": contains nodes absent from the truth file");
        r.nmi = nmi(pred, truth);
        r.community_sizes.assign(pred.community_count, 0);
        for (CommunityId c : pred.label) ++r.community_sizes[c];
    }
    Json j = report::metric_json(r);
    j.update(extra);
    if (o.format == "json") {
        run.stdout_text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        if (r.fvcc) s << "fvcc " << format_double(*r.fvcc) << '\n';
        if (r.jaccard)
            s << "jaccard " << format_double(r.jaccard->value)
              << (r.jaccard->both_empty ? " (both overlap sets empty)" : "") << '\n';
        if (r.nmi) s << "nmi " << format_double(*r.nmi) << '\n';
        s << "communities " << r.community_sizes.size() << '\n';
        run.stdout_text = s.str();
    }
    if (!o.out.empty()) run.file(o.out + ".metrics.json", j.dump(2) + "\n");
}

void cmd_spectral(const Options& o, Run& run) {
    run.inputs = {o.edges};
    run.config = Json{{"eigen_tol", o.eigen_tol}, {"eigen_max_iter", o.eigen_max_iter}};
    const LoadedGraph lg = load_edge_list_file(o.edges);
    const LinkTransition t(lg.graph);
    const Lambda2Estimate est = estimate_lambda2(MarkovGenerator(t), o.eigen_tol, o.eigen_max_iter);
    const Json j = report::lambda2_json(lg.graph.edge_count(), est);
    if (o.format == "json") {
        run.stdout_text = j.dump(2) + "\n";
    } else {
        std::ostringstream s;
        s << "m " << lg.graph.edge_count() << "\nlambda2 " << format_double(est.lambda2)
          << "\ninv_lambda2 " << format_double(1.0 / est.lambda2) << "\nsteps "
          << steps_for_lambda2(est.lambda2) << "\niterations " << est.iterations << '\n';
        run.stdout_text = s.str();
    }
    if (!o.out.empty()) run.file(o.out + ".spectral.json", j.dump(2) + "\n");
}

void cmd_dump_alpha(const Options& o, Run& run) {
    const DetectorConfig cfg = detector(o);
    run.inputs = {o.edges};
    const LoadedGraph lg = load_edge_list_file(o.edges);
    const Graph& g = lg.graph;

    EdgeId seed = 0;
    if (!o.seed_edge.empty()) {
        if (!lg.labels.contains(o.seed_edge[0]) || !lg.labels.contains(o.seed_edge[1]))
            throw InputError("seed edge endpoint not in the graph");
        const auto e = g.find_edge(lg.labels.id(o.seed_edge[0]), lg.labels.id(o.seed_edge[1]));
        if (e == g.edge_count()) throw InputError("seed edge not in the graph");
        seed = e;
    } else if (o.seed_index >= 0) {
        seed = static_cast<EdgeId>(o.seed_index);
    }
    const LinkTransition t(g);
    std::size_t steps = 0;
    bool fell_back = false;
    if (o.steps >= 0) {
        steps = static_cast<std::size_t>(o.steps);
    } else {
        const MarkovGenerator gen(t);
        const StepBound b = step_bound(cfg.step, &gen);
        if (b.fell_back && o.strict_spectral)
            throw NumericalError("eigensolver failed and --strict-spectral is set");
        steps = b.steps;
        fell_back = b.fell_back;
    }
    run.config = report::config_json(cfg);
    run.config["seed_edge"] = seed;
    run.config["steps"] = steps;
    if (fell_back) run.config["step_fallback"] = true;
    const EdgeDistribution alpha = propagate(t, unit_distribution(g.edge_count(), seed), steps);

    std::optional<std::vector<CommunityId>> labels;
    if (!o.partition.empty()) {
        run.inputs.push_back(o.partition);
        std::ifstream in(o.partition);
        if (!in) throw InputError("cannot open " + o.partition);
        labels.emplace(g.edge_count(), 0);
        std::vector<char> seen(g.edge_count(), 0);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string u, v;
            long long c;
            if (!(ls >> u >> v >> c) || c < 0)
                throw InputError(o.partition + ":" + std::to_string(lineno) + ": expected '<u> <v> <community>'");
            if (!lg.labels.contains(u) || !lg.labels.contains(v))
                throw InputError(o.partition + ":" + std::to_string(lineno) + ": unknown node");
            const auto e = g.find_edge(lg.labels.id(u), lg.labels.id(v));
            if (e == g.edge_count())
                throw InputError(o.partition + ":" + std::to_string(lineno) + ": edge not in the graph");
            (*labels)[e] = static_cast<CommunityId>(c);
            seen[e] = 1;
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw InputError(o.partition + ": does not label every edge");
    }
    std::ostringstream csv;
    if (labels)
        report::write_alpha_csv(csv, g, lg.labels, alpha, std::span<const CommunityId>(*labels));
    else
        report::write_alpha_csv(csv, g, lg.labels, alpha);
    if (o.out.empty()) run.stdout_text = csv.str();
    else run.file(o.out + ".alpha.csv", csv.str());
}

void cmd_sweep(const Options& o, Run& run) {
    const DetectorConfig cfg = detector(o);
    const BknConfig base = bkn(o);
    if (o.values.empty()) throw InputError("sweep needs --values");
    if (o.instances == 0) throw InputError("--instances must be >= 1");
    const SweepParam param = o.sweep_param == "x" ? SweepParam::x : o.sweep_param == "z" ? SweepParam::z : SweepParam::k;
    const SweepMode mode = o.sweep_mode == "nodes" ? SweepMode::nodes : SweepMode::links;
    run.config = report::config_json(cfg);
    run.config["bkn"] = bkn_json(base);
    run.config["param"] = o.sweep_param;
    run.config["values"] = o.values;
    run.config["instances"] = o.instances;
    run.config["mode"] = o.sweep_mode;
    const auto rows = run_sweep(base, param, o.values, o.instances, mode, cfg, o.threads);
    std::ostringstream csv;
    report::write_sweep_csv(csv, rows);
    if (o.out.empty()) run.stdout_text = csv.str();
    else run.file(o.out + ".sweep.csv", csv.str());
}

void cmd_stats(const Options& o, Run& run) {
    const std::string prefix = need_out(o, "stats");
    NodeCover cover;
    if (!o.cover.empty()) {
        run.inputs = {o.cover};
        NodeLabelMap names;
        cover = read_cover(o.cover, names);
    } else {
        if (o.edges.empty()) throw InputError("stats needs an edge file or --cover");
        const DetectorConfig cfg = detector(o);
        run.inputs = {o.edges};
        run.config = report::config_json(cfg);
        const LoadedGraph lg = load_edge_list_file(o.edges);
        const LinkPartition p = uelc::uelc(lg.graph, cfg);
        check_fallback(o, p.tree);
        cover = node_cover_from_links(lg.graph, p);
    }
    const CoverStatistics s = cover_statistics(cover);
    const std::pair<const char*, const CumulativeDistribution*> dists[] = {
        {"community_size", &s.community_size},
        {"overlap_size", &s.overlap_size},
        {"membership", &s.membership},
        {"community_degree", &s.community_degree}};
    std::ostringstream text;
    for (const auto& [name, dist] : dists) {
        std::ostringstream csv;
        report::write_distribution_csv(csv, *dist);
        run.file(prefix + "." + name + ".csv", csv.str());
        text << name << ' ' << dist->size() << " points\n";
    }
    text << "communities " << cover.community_count << "\noverlap_nodes " << cover.overlap_nodes().size() << '\n';
    run.stdout_text = text.str();
}

// ---------------------------------------------------------------- driver

void write_outputs(const Run& run) {
    for (const auto& [path, body] : run.files) {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw InputError("cannot write " + path);
        f << body;
    }
    std::cout << run.stdout_text;
}

void write_manifest(const Options& o, const std::string& command, const std::vector<std::string>& args,
                    const Run& run, double seconds) {
    Json m;
    m["tool"] = "uelc";
    m["version"] = UELC_VERSION;
    m["command"] = command;
    m["argv"] = args;
    m["inputs"] = run.inputs;
    m["config"] = run.config;
    Json outputs = Json::array();
    for (const auto& f : run.files) outputs.push_back(f.first);
    m["outputs"] = outputs;
    m["wall_time_s"] = seconds;
    std::string path = o.manifest;
    if (path.empty() && !o.out.empty()) path = o.out + ".manifest.json";
    if (path.empty()) {
        std::cerr << "manifest " << m.dump() << '\n';
        return;
    }
    std::ofstream f(path);
    if (!f) throw InputError("cannot write manifest " + path);
    f << m.dump(2) << '\n';
}

void add_detector_flags(CLI::App* sub, Options& o) {
    sub->add_option("--step-mode", o.step_mode, "Walk length rule: fixed uses the cap, spectral uses ceil(1/lambda2) capped")
        ->check(CLI::IsMember({"fixed", "spectral"}))
        ->capture_default_str();
    sub->add_option("--step-cap", o.step_cap, "Walk length in fixed mode; upper bound in spectral mode")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed-trials", o.seed_trials, "Random seed edges tried per bipartition; best split wins")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--rng-seed", o.rng_seed, "Master random seed")->capture_default_str();
    sub->add_option("--min-edges", o.min_edges, "Subnetworks with fewer edges are never split")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--threads", o.threads, "Worker threads; results do not depend on this")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--eigen-tol", o.eigen_tol, "Absolute tolerance on lambda2")->capture_default_str();
    sub->add_option("--eigen-max-iter", o.eigen_max_iter, "Lanczos iteration limit")->capture_default_str();
    sub->add_flag("--strict-spectral", o.strict_spectral,
                  "Fail with exit code 3 instead of falling back to the cap when the eigensolver fails");
}

void add_output_flags(CLI::App* sub, Options& o, bool with_format = true) {
    if (with_format)
        sub->add_option("--format", o.format, "Summary format on stdout")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    sub->add_option("--out", o.out, "Write output files with this path prefix");
    sub->add_option("--manifest", o.manifest,
                    "Manifest path (default PREFIX.manifest.json with --out, else one line on stderr)");
}

void add_bkn_flags(CLI::App* sub, Options& o) {
    sub->add_option("--x", o.x, "Nodes only in community 0")->capture_default_str();
    sub->add_option("--y", o.y, "Nodes only in community 1")->capture_default_str();
    sub->add_option("--z", o.z, "Nodes in both communities")->capture_default_str();
    sub->add_option("--k", o.k, "Expected degree")->capture_default_str();
    sub->add_option("--seed", o.bkn_seed, "Generator seed")->capture_default_str();
}

int run_cli(std::vector<std::string> args);

int dispatch(CLI::App& app, Options& o, const std::vector<std::string>& args) {
    const auto start = std::chrono::steady_clock::now();
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "rerun") {
        std::ifstream in(o.rerun_manifest);
        if (!in) throw InputError("cannot open manifest " + o.rerun_manifest);
        Json m;
        try {
            m = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InputError("bad manifest: " + std::string(e.what()));
        }
        if (!m.contains("argv") || !m["argv"].is_array()) throw InputError("manifest has no argv");
        auto argv = m["argv"].get<std::vector<std::string>>();
        if (!argv.empty() && argv.front() == "rerun") throw InputError("manifest records a rerun");
        return run_cli(std::move(argv));
    }
    Run run;
    if (name == "detect-links") cmd_detect_links(o, run);
    else if (name == "detect-nodes") cmd_detect_nodes(o, run);
    else if (name == "gen-bkn") cmd_gen_bkn(o, run);
    else if (name == "eval") cmd_eval(o, run);
    else if (name == "spectral") cmd_spectral(o, run);
    else if (name == "dump-alpha") cmd_dump_alpha(o, run);
    else if (name == "sweep") cmd_sweep(o, run);
    else if (name == "stats") cmd_stats(o, run);
    write_outputs(run);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(o, name, args, run, seconds);
    return kOk;
}

int run_cli(std::vector<std::string> args) {
    Options o;
    CLI::App app{"Link and node community detection by unfolding and extending link communities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", UELC_VERSION);

    auto* links = app.add_subcommand("detect-links", "Recursive link partition, node cover and recursion tree");
    links->add_option("edges", o.edges, "Edge list file")->required();
    add_detector_flags(links, o);
    add_output_flags(links, o);

    auto* nodes = app.add_subcommand("detect-nodes", "Recursive node partition");
    nodes->add_option("edges", o.edges, "Edge list file")->required();
    nodes->add_option("--truth", o.truth, "Ground-truth labels; prints NMI");
    add_detector_flags(nodes, o);
    add_output_flags(nodes, o);

    auto* gen = app.add_subcommand("gen-bkn", "Generate a two-community benchmark with planted overlap");
    add_bkn_flags(gen, o);
    add_output_flags(gen, o);

    auto* eval = app.add_subcommand("eval", "Compare predictions with ground truth");
    eval->add_option("--pred", o.pred, "Predicted cover or labels")->required();
    eval->add_option("--truth", o.truth, "Ground truth cover or labels")->required();
    eval->add_option("--mode", o.eval_mode, "cover: FVCC and overlap Jaccard; partition: NMI")
        ->check(CLI::IsMember({"cover", "partition"}))
        ->capture_default_str();
    add_output_flags(eval, o);

    auto* eig = app.add_subcommand("spectral", "Second-smallest eigenvalue of the line-graph generator");
    eig->add_option("edges", o.edges, "Edge list file")->required();
    eig->add_option("--eigen-tol", o.eigen_tol, "Absolute tolerance on lambda2")->capture_default_str();
    eig->add_option("--eigen-max-iter", o.eigen_max_iter, "Lanczos iteration limit")->capture_default_str();
    add_output_flags(eig, o);

    auto* alpha = app.add_subcommand("dump-alpha", "Walk distribution over edges from one seed edge, as CSV");
    alpha->add_option("edges", o.edges, "Edge list file")->required();
    auto* by_label = alpha->add_option("--seed-edge", o.seed_edge, "Seed edge by endpoint labels")
                         ->expected(2)
                         ->type_name("U V");
    alpha->add_option("--seed-index", o.seed_index, "Seed edge by canonical edge index")->excludes(by_label);
    alpha->add_option("--steps", o.steps, "Walk length (default: from --step-mode and --step-cap)");
    alpha->add_option("--partition", o.partition, "Link partition file; adds a community column");
    add_detector_flags(alpha, o);
    add_output_flags(alpha, o, false);

    auto* sweep = app.add_subcommand("sweep", "Benchmark sweep over one generator parameter, as CSV");
    add_bkn_flags(sweep, o);
    sweep->add_option("--param", o.sweep_param, "Swept parameter; x keeps x + y + z fixed")
        ->check(CLI::IsMember({"k", "x", "z"}))
        ->capture_default_str();
    sweep->add_option("--values", o.values, "Comma-separated parameter values")->delimiter(',')->required();
    sweep->add_option("--instances", o.instances, "Instances per value")->capture_default_str();
    sweep->add_option("--mode", o.sweep_mode, "links: FVCC and Jaccard; nodes: NMI")
        ->check(CLI::IsMember({"links", "nodes"}))
        ->capture_default_str();
    add_detector_flags(sweep, o);
    add_output_flags(sweep, o, false);

    auto* stats = app.add_subcommand("stats", "Cumulative distributions of cover statistics, as CSV files");
    stats->add_option("edges", o.edges, "Edge list file (runs detect-links)");
    stats->add_option("--cover", o.cover, "Use an existing cover file instead");
    add_detector_flags(stats, o);
    add_output_flags(stats, o, false);

    auto* rerun = app.add_subcommand("rerun", "Repeat the run recorded in a manifest");
    rerun->add_option("manifest", o.rerun_manifest, "Manifest file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return dispatch(app, o, args);
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(std::move(args));
}
