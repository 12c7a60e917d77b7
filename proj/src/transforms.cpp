#include "rainbow/transforms.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

namespace rainbow {

Digraph associated_digraph(const EdgeColoredGraph& g, const RepresentativePolicy& policy) {
    std::mt19937_64 rng(policy.seed);
    std::vector<std::pair<VertexId, VertexId>> arcs;
    std::vector<std::vector<VertexId>> classes;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        classes.assign(g.color_count(), {});
        for (const auto& e : g.incident(v)) classes[e.color_index].push_back(e.to);
        for (const auto& members : classes) {
            if (members.empty()) continue;
            VertexId rep;
            if (policy.mode == RepresentativeMode::LowestNeighbor) {
                rep = *std::min_element(members.begin(), members.end());
            } else {
                std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
                rep = members[pick(rng)];
            }
            arcs.emplace_back(v, rep);
        }
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

EdgeColoredGraph determined_colored_graph(const Digraph& d) {
    if (!is_oriented(d))
        throw contract_error("determined colored graph requires an oriented digraph");
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    edges.reserve(d.arc_count());
    Palette palette;
    for (auto [v, w] : d.arcs()) {
        edges.emplace_back(v, w, w);
        palette.emplace(w, "v" + std::to_string(w));
    }
    return EdgeColoredGraph(d.vertex_count(), std::move(edges), std::move(palette));
}

LiReport verify_li_correspondence(const Digraph& d, int length, SearchBudget* budget) {
    if (!is_oriented(d))
        throw contract_error("Li correspondence check requires an oriented digraph");
    LiReport report;
    report.length = length;
    report.directed_cycles = count_directed_cycles(d, length, budget);
    EdgeColoredGraph determined = determined_colored_graph(d);
    report.rainbow_cycles = count_rainbow_cycles(determined, length, budget);
    report.properly_colored_cycles = count_properly_colored_cycles(determined, length, budget);
    report.directed_at_most_rainbow = report.directed_cycles <= report.rainbow_cycles;
    report.rainbow_equals_properly_colored =
        report.rainbow_cycles == report.properly_colored_cycles;
    return report;
}

namespace {

unsigned long long saturating_power(unsigned long long base, int exp) {
    unsigned long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<unsigned long long>::max() / base)
            return std::numeric_limits<unsigned long long>::max();
        out *= base;
    }
    return out;
}

}  // namespace

NonRainbowBound non_rainbow_bound_check(const EdgeColoredGraph& g,
                                        const RepresentativePolicy& policy, int length,
                                        SearchBudget* budget) {
    NonRainbowBound report;
    report.length = length;
    Digraph assoc = associated_digraph(g, policy);
    SearchBudget local;
    SearchBudget& b = budget ? *budget : local;
    enumerate_directed_cycles(assoc, length, b, [&](const CycleWitness& w) {
        report.directed_cycles++;
        // Arcs of the associated digraph are edges of g, so the sequence is a
        // cycle of g; rainbow or not is decided by g's own colors.
        Bitset seen(g.color_count());
        bool rainbow = true;
        for (int k = 0; k < length && rainbow; ++k) {
            VertexId a = w.vertices[k];
            VertexId b2 = w.vertices[(k + 1) % length];
            const auto& inc = g.incident(a);
            auto it = std::lower_bound(
                inc.begin(), inc.end(), b2,
                [](const EdgeColoredGraph::IncidentEdge& e, VertexId x) { return e.to < x; });
            int ci = it->color_index;
            if (seen.test(ci))
                rainbow = false;
            else
                seen.set(ci);
        }
        if (!rainbow) report.non_rainbow++;
        return true;
    });
    report.bound = saturating_power(static_cast<unsigned long long>(g.vertex_count()), length - 1);
    report.holds = static_cast<unsigned long long>(report.non_rainbow) <= report.bound;
    return report;
}

}  // namespace rainbow
