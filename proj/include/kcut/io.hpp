#pragma once

#include "kcut/graph.hpp"
#include "kcut/minkcut.hpp"

#include <iosfwd>
#include <string>

namespace kcut {

enum class GraphFormat { autodetect, edgelist, dimacs };

/// Edge list: lines "u v w" with 0-based ids, '#' comments.
/// DIMACS-like: "p <n> <m>" header, then "e u v w" lines with 1-based ids;
/// 'c' and '#' lines are comments. Autodetection keys on the 'p' header.
WeightedGraph parse_graph(std::istream& in, GraphFormat format = GraphFormat::autodetect);
WeightedGraph parse_graph_file(const std::string& path, GraphFormat format = GraphFormat::autodetect);

/// Canonical edge-list echo; reparsing yields an identical graph.
void write_graph_edgelist(std::ostream& out, const WeightedGraph& g);

/// Human-readable result block: optimum weight plus one partition per line.
void write_partitions_text(std::ostream& out, Weight weight, const PartitionSet& parts);

/// Structured output: {"weight": W, "partitions": [[[ids...],...],...]}.
std::string partitions_json(Weight weight, const PartitionSet& parts);

}  // namespace kcut
