#include "uelc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "uelc/error.hpp"

namespace uelc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

bool skippable(std::string_view line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    return in;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in) {
    LoadedGraph out;
    std::set<std::pair<NodeId, NodeId>> seen;
    std::vector<Edge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        const auto tokens = split_ws(line);
        if (tokens.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 2 tokens, got " +
                             std::to_string(tokens.size()));
        if (tokens[0] == tokens[1])
            throw InputError("line " + std::to_string(line_no) + ": self-loop on '" +
                             std::string(tokens[0]) + "'");
        NodeId u = out.labels.intern(tokens[0]);
        NodeId v = out.labels.intern(tokens[1]);
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second) {
            ++out.duplicates_collapsed;
            continue;
        }
        edges.push_back({u, v});
    }
    if (edges.empty()) throw InputError("edge list is empty");
    out.graph = Graph(out.labels.size(), std::move(edges));
    return out;
}

LoadedGraph load_edge_list_file(const std::filesystem::path& path) {
    auto in = open_input(path);
    return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelMap& labels) {
    for (const Edge& e : g.edges()) out << labels.label(e.u) << ' ' << labels.label(e.v) << '\n';
}

MembershipFile read_membership(std::istream& in, NodeLabelMap& labels) {
    MembershipFile out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (skippable(line)) continue;
        auto tokens = split_ws(line);
        if (tokens.size() < 2)
            throw InputError("line " + std::to_string(line_no) + ": expected '<node> <ids>'");
        const NodeId node = labels.intern(tokens[0]);
        if (out.membership.size() < labels.size()) out.membership.resize(labels.size());
        auto& set = out.membership[node];
        for (std::size_t t = 1; t < tokens.size(); ++t) {
            std::string_view rest = tokens[t];
            while (!rest.empty()) {
                const auto comma = rest.find(',');
                const std::string_view item = rest.substr(0, comma);
                if (!item.empty()) {
                    CommunityId id = 0;
                    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
                    if (ec != std::errc{} || ptr != item.data() + item.size())
                        throw InputError("line " + std::to_string(line_no) +
                                         ": bad community id '" + std::string(item) + "'");
                    set.push_back(id);
                }
                if (comma == std::string_view::npos) break;
                rest.remove_prefix(comma + 1);
            }
        }
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
    }
    out.membership.resize(labels.size());
    return out;
}

MembershipFile read_membership_file(const std::filesystem::path& path, NodeLabelMap& labels) {
    auto in = open_input(path);
    return read_membership(in, labels);
}

void write_cover(std::ostream& out, const NodeCover& cover, const NodeLabelMap& labels) {
    for (NodeId v = 0; v < cover.node_count(); ++v) {
        const auto& set = cover.membership[v];
        if (set.empty()) continue;  // unassigned nodes have no line
        out << labels.label(v) << ' ';
        for (std::size_t i = 0; i < set.size(); ++i) out << (i ? "," : "") << set[i];
        out << '\n';
    }
}

void write_node_labels(std::ostream& out, const NodeLabels& labels, const NodeLabelMap& names) {
    for (NodeId v = 0; v < labels.label.size(); ++v)
        out << names.label(v) << ' ' << labels.label[v] << '\n';
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

std::vector<NodeId> NodeCover::overlap_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < membership.size(); ++v)
        if (membership[v].size() >= 2) out.push_back(v);
    return out;
}

std::vector<NodeId> NodeCover::unassigned_nodes() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < membership.size(); ++v)
        if (membership[v].empty()) out.push_back(v);
    return out;
}

}  // namespace uelc
