#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "uelc/cover.hpp"
#include "uelc/graph.hpp"

namespace uelc {

struct LoadedGraph {
    Graph graph;
    NodeLabelMap labels;
    std::size_t duplicates_collapsed = 0;
};

/**
 * Parses the edge-list format: one `<label_u> <label_v>` pair per line,
 * whitespace separated. Blank lines and lines starting with '#' are
 * skipped. Node ids are assigned in order of first appearance. Duplicate
 * edges (in either orientation) are collapsed and counted.
 *
 * Throws InputError on a wrong token count, a self-loop, or empty input.
 */
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g, const NodeLabelMap& labels);

/// Membership lines `<node_label> <id>[,<id>...]`; further ids separated by
/// whitespace are also accepted (LFR community files). Labels unknown to
/// `labels` are interned.
struct MembershipFile {
    std::vector<std::vector<CommunityId>> membership;  // indexed by NodeLabelMap id
};
MembershipFile read_membership(std::istream& in, NodeLabelMap& labels);
MembershipFile read_membership_file(const std::filesystem::path& path, NodeLabelMap& labels);

void write_cover(std::ostream& out, const NodeCover& cover, const NodeLabelMap& labels);
void write_node_labels(std::ostream& out, const NodeLabels& labels, const NodeLabelMap& names);

/// Shortest round-trip decimal representation.
std::string format_double(double x);

}  // namespace uelc
