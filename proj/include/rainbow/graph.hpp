#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rainbow/bitset.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

using VertexId = int;
using ColorId = int;

// Optional color names ("v3", "*") attached to integer color ids.
using Palette = std::map<ColorId, std::string>;

struct ColoredEdge {
    VertexId u;
    VertexId v;  // u < v
    ColorId color;

    bool operator==(const ColoredEdge&) const = default;
};

// Simple undirected graph with one color per edge.  Immutable once built;
// loops and parallel edges are rejected at construction.
class EdgeColoredGraph {
public:
    struct IncidentEdge {
        VertexId to;
        int color_index;  // dense index into color_ids()
    };

    EdgeColoredGraph() = default;
    EdgeColoredGraph(int n, std::vector<std::tuple<VertexId, VertexId, ColorId>> edges,
                     Palette palette = {});

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<ColoredEdge>& edges() const { return edges_; }

    bool has_edge(VertexId u, VertexId v) const;
    ColorId edge_color(VertexId u, VertexId v) const;  // input_error if absent

    const std::vector<IncidentEdge>& incident(VertexId v) const {
        check_vertex(v);
        return adj_[v];
    }
    const Bitset& neighbor_mask(VertexId v) const {
        check_vertex(v);
        return mask_[v];
    }

    // Distinct colors appearing in the graph, ascending.
    const std::vector<ColorId>& color_ids() const { return color_ids_; }
    int color_count() const { return static_cast<int>(color_ids_.size()); }
    ColorId color_id(int color_index) const { return color_ids_[color_index]; }

    const Palette& palette() const { return palette_; }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
    }

    bool operator==(const EdgeColoredGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && palette_ == o.palette_;
    }

private:
    int n_ = 0;
    std::vector<ColoredEdge> edges_;                 // sorted, u < v
    std::vector<std::vector<IncidentEdge>> adj_;     // sorted by neighbor
    std::vector<Bitset> mask_;
    std::vector<ColorId> color_ids_;
    Palette palette_;
};

// Directed graph on 0..n-1.  Arc set only (no multiplicities), no loops.
// "Oriented" (no 2-cycles) is a queryable property, not an invariant.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<VertexId, VertexId>> arcs);

    int vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<std::pair<VertexId, VertexId>>& arcs() const { return arcs_; }

    bool has_arc(VertexId u, VertexId v) const;

    const std::vector<VertexId>& out_neighbors(VertexId v) const {
        check_vertex(v);
        return out_[v];
    }
    const std::vector<VertexId>& in_neighbors(VertexId v) const {
        check_vertex(v);
        return in_[v];
    }
    const Bitset& out_mask(VertexId v) const {
        check_vertex(v);
        return out_mask_[v];
    }
    const Bitset& in_mask(VertexId v) const {
        check_vertex(v);
        return in_mask_[v];
    }

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= n_)
            throw input_error("vertex " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
    }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> arcs_;  // sorted
    std::vector<std::vector<VertexId>> out_, in_;      // sorted
    std::vector<Bitset> out_mask_, in_mask_;
};

// Total assignment V -> {0,1,2}.  Parts may be empty.
class TriPartition {
public:
    TriPartition() = default;
    explicit TriPartition(std::vector<std::uint8_t> part);

    // Balanced index-block partition: |V2| <= |V1| <= |V0| <= |V2|+1,
    // part 0 first, then 1, then 2.
    static TriPartition index_blocks(int n);

    int size() const { return static_cast<int>(part_.size()); }
    int part_of(VertexId v) const;
    int part_size(int i) const { return sizes_[check_part(i)]; }
    Bitset members(int i) const;
    const std::vector<std::uint8_t>& assignment() const { return part_; }

    bool operator==(const TriPartition& o) const { return part_ == o.part_; }

private:
    static int check_part(int i) {
        if (i < 0 || i > 2) throw input_error("part index must be 0, 1 or 2");
        return i;
    }
    std::vector<std::uint8_t> part_;
    int sizes_[3] = {0, 0, 0};
};

// --- degree and counting primitives -------------------------------------

int degree(const EdgeColoredGraph& g, VertexId v);
int color_degree(const EdgeColoredGraph& g, VertexId v);
int min_color_degree(const EdgeColoredGraph& g);

// Distinct colors on edges from v into S; S lives on the same vertex universe.
int color_degree_into(const EdgeColoredGraph& g, VertexId v, const Bitset& s);
int degree_into(const EdgeColoredGraph& g, VertexId v, const Bitset& s);

int out_degree(const Digraph& d, VertexId v);
int in_degree(const Digraph& d, VertexId v);
int min_out_degree(const Digraph& d);
int min_in_degree(const Digraph& d);
int min_semidegree(const Digraph& d);
int max_in_degree(const Digraph& d);

bool is_oriented(const Digraph& d);

std::int64_t arcs_between(const Digraph& d, const Bitset& a, const Bitset& b);

}  // namespace rainbow
