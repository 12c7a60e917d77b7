#include "rainbow/graph.hpp"

#include <algorithm>

namespace rainbow {

EdgeColoredGraph::EdgeColoredGraph(int n,
                                   std::vector<std::tuple<VertexId, VertexId, ColorId>> edges,
                                   Palette palette)
    : n_(n), palette_(std::move(palette)) {
    if (n < 0) throw input_error("negative vertex count");
    edges_.reserve(edges.size());
    for (auto& [u, v, c] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v) throw input_error("loop edge at vertex " + std::to_string(u));
        if (c < 0) throw input_error("negative color id");
        if (u > v) std::swap(u, v);
        edges_.push_back({u, v, c});
    }
    std::sort(edges_.begin(), edges_.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
            throw input_error("parallel edge (" + std::to_string(edges_[i].u) + "," +
                              std::to_string(edges_[i].v) + ")");

    for (const auto& e : edges_) color_ids_.push_back(e.color);
    std::sort(color_ids_.begin(), color_ids_.end());
    color_ids_.erase(std::unique(color_ids_.begin(), color_ids_.end()), color_ids_.end());

    adj_.assign(n_, {});
    mask_.assign(n_, Bitset(n_));
    for (const auto& e : edges_) {
        int ci = static_cast<int>(
            std::lower_bound(color_ids_.begin(), color_ids_.end(), e.color) - color_ids_.begin());
        adj_[e.u].push_back({e.v, ci});
        adj_[e.v].push_back({e.u, ci});
        mask_[e.u].set(e.v);
        mask_[e.v].set(e.u);
    }
    for (auto& a : adj_)
        std::sort(a.begin(), a.end(),
                  [](const IncidentEdge& x, const IncidentEdge& y) { return x.to < y.to; });
}

bool EdgeColoredGraph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && mask_[u].test(v);
}

ColorId EdgeColoredGraph::edge_color(VertexId u, VertexId v) const {
    if (!has_edge(u, v))
        throw input_error("no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v,
                               [](const IncidentEdge& e, VertexId w) { return e.to < w; });
    return color_ids_[it->color_index];
}

Digraph::Digraph(int n, std::vector<std::pair<VertexId, VertexId>> arcs) : n_(n) {
    if (n < 0) throw input_error("negative vertex count");
    for (auto& [u, v] : arcs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("arc endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v) throw input_error("loop arc at vertex " + std::to_string(u));
    }
    std::sort(arcs.begin(), arcs.end());
    for (std::size_t i = 1; i < arcs.size(); ++i)
        if (arcs[i] == arcs[i - 1])
            throw input_error("duplicate arc (" + std::to_string(arcs[i].first) + "," +
                              std::to_string(arcs[i].second) + ")");
    arcs_ = std::move(arcs);

    out_.assign(n_, {});
    in_.assign(n_, {});
    out_mask_.assign(n_, Bitset(n_));
    in_mask_.assign(n_, Bitset(n_));
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
        out_mask_[u].set(v);
        in_mask_[v].set(u);
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Digraph::has_arc(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && out_mask_[u].test(v);
}

TriPartition::TriPartition(std::vector<std::uint8_t> part) : part_(std::move(part)) {
    for (auto p : part_) {
        if (p > 2) throw input_error("tri-partition value out of range");
        ++sizes_[p];
    }
}

TriPartition TriPartition::index_blocks(int n) {
    if (n < 0) throw input_error("negative vertex count");
    int m = n / 3, r = n % 3;
    int s0 = m + (r >= 1 ? 1 : 0);
    int s1 = m + (r >= 2 ? 1 : 0);
    std::vector<std::uint8_t> part(n, 2);
    for (int v = 0; v < n; ++v) part[v] = v < s0 ? 0 : (v < s0 + s1 ? 1 : 2);
    return TriPartition(std::move(part));
}

int TriPartition::part_of(VertexId v) const {
    if (v < 0 || v >= size()) throw input_error("vertex out of partition range");
    return part_[v];
}

Bitset TriPartition::members(int i) const {
    check_part(i);
    Bitset s(size());
    for (int v = 0; v < size(); ++v)
        if (part_[v] == i) s.set(v);
    return s;
}

int degree(const EdgeColoredGraph& g, VertexId v) {
    return static_cast<int>(g.incident(v).size());
}

int color_degree(const EdgeColoredGraph& g, VertexId v) {
    Bitset seen(g.color_count());
    for (const auto& e : g.incident(v)) seen.set(e.color_index);
    return seen.count();
}

int min_color_degree(const EdgeColoredGraph& g) {
    if (g.vertex_count() == 0) throw input_error("min color degree of empty graph");
    int best = color_degree(g, 0);
    for (VertexId v = 1; v < g.vertex_count(); ++v) best = std::min(best, color_degree(g, v));
    return best;
}

int color_degree_into(const EdgeColoredGraph& g, VertexId v, const Bitset& s) {
    g.check_vertex(v);
    if (s.universe() != g.vertex_count())
        throw input_error("vertex set universe does not match graph");
    Bitset seen(g.color_count());
    for (const auto& e : g.incident(v))
        if (s.test(e.to)) seen.set(e.color_index);
    return seen.count();
}

int degree_into(const EdgeColoredGraph& g, VertexId v, const Bitset& s) {
    g.check_vertex(v);
    if (s.universe() != g.vertex_count())
        throw input_error("vertex set universe does not match graph");
    int d = 0;
    for (const auto& e : g.incident(v)) d += s.test(e.to) ? 1 : 0;
    return d;
}

int out_degree(const Digraph& d, VertexId v) { return static_cast<int>(d.out_neighbors(v).size()); }
int in_degree(const Digraph& d, VertexId v) { return static_cast<int>(d.in_neighbors(v).size()); }

namespace {
template <typename Fn>
int degree_aggregate(const Digraph& d, Fn&& fn, bool want_min, const char* what) {
    if (d.vertex_count() == 0) throw input_error(std::string(what) + " of empty digraph");
    int best = fn(0);
    for (VertexId v = 1; v < d.vertex_count(); ++v)
        best = want_min ? std::min(best, fn(v)) : std::max(best, fn(v));
    return best;
}
}  // namespace

int min_out_degree(const Digraph& d) {
    return degree_aggregate(d, [&](VertexId v) { return out_degree(d, v); }, true, "min out-degree");
}
int min_in_degree(const Digraph& d) {
    return degree_aggregate(d, [&](VertexId v) { return in_degree(d, v); }, true, "min in-degree");
}
int min_semidegree(const Digraph& d) { return std::min(min_out_degree(d), min_in_degree(d)); }
int max_in_degree(const Digraph& d) {
    return degree_aggregate(d, [&](VertexId v) { return in_degree(d, v); }, false, "max in-degree");
}

bool is_oriented(const Digraph& d) {
    for (auto [u, v] : d.arcs())
        if (d.has_arc(v, u)) return false;
    return true;
}

std::int64_t arcs_between(const Digraph& d, const Bitset& a, const Bitset& b) {
    if (a.universe() != d.vertex_count() || b.universe() != d.vertex_count())
        throw input_error("vertex set universe does not match digraph");
    std::int64_t c = 0;
    a.for_each([&](int u) { c += (d.out_mask(u) & b).count(); });
    return c;
}

}  // namespace rainbow
