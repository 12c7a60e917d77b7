#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "rainbow/graph.hpp"

namespace rainbow {

// Text format, one graph per file:
//   ecg <n>            header for an edge-colored graph, then `e u v c` lines
//   dig <n>            header for a digraph, then `a u v` lines
//   tri <n>            header for a tri-partition, then `p v k` lines
// `#` starts a comment anywhere on a line.

using AnyGraph = std::variant<EdgeColoredGraph, Digraph>;

std::string write_text(const EdgeColoredGraph& g);
std::string write_text(const Digraph& d);
std::string write_text(const TriPartition& p);

AnyGraph read_graph_text(std::istream& in);
AnyGraph read_graph_text(const std::string& text);
TriPartition read_partition_text(const std::string& text);

// JSON mirror: {kind, n, edges:[[u,v,c]], arcs:[[u,v]], palette:{id:name}}
// and {kind:"tri", n, part:[...]} for partitions.
std::string write_json(const EdgeColoredGraph& g);
std::string write_json(const Digraph& d);
std::string write_json(const TriPartition& p);

AnyGraph read_graph_json(const std::string& text);
TriPartition read_partition_json(const std::string& text);

// Reads a file in either format (JSON when the first non-space byte is '{').
AnyGraph load_graph(const std::string& path);
TriPartition load_partition(const std::string& path);
void save_text(const std::string& path, const std::string& content);

}  // namespace rainbow
