#include "rainbow/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rainbow/transforms.hpp"

namespace rainbow {

namespace {

Palette vertex_palette(int n, bool with_star) {
    Palette p;
    for (int v = 0; v < n; ++v) p.emplace(v, "v" + std::to_string(v));
    if (with_star) p.emplace(n, "*");
    return p;
}

// Endpoint of {a,b} lying in the cyclically next part, i.e. the c+ color.
VertexId forward_endpoint(const TriPartition& parts, VertexId a, VertexId b) {
    int pa = parts.part_of(a), pb = parts.part_of(b);
    return pb == (pa + 1) % 3 ? b : a;
}

void require_residue_two(int n, const char* kind) {
    if (n < 8 || n % 3 != 2)
        throw input_error(std::string(kind) + " construction needs n = 2 (mod 3) and n >= 8, got " +
                          std::to_string(n));
}

}  // namespace

ColoredConstruction build_cplus(int n) {
    if (n < 3) throw input_error("cplus construction needs n >= 3");
    TriPartition parts = TriPartition::index_blocks(n);
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (parts.part_of(a) == parts.part_of(b)) continue;
            edges.emplace_back(a, b, forward_endpoint(parts, a, b));
        }
    ColoredConstruction out{EdgeColoredGraph(n, std::move(edges), vertex_palette(n, false)),
                            parts,
                            {},
                            std::nullopt,
                            std::nullopt,
                            std::nullopt};
    return out;
}

ColoredConstruction build_matching(int n) {
    require_residue_two(n, "matching");
    TriPartition parts = TriPartition::index_blocks(n);
    const int m = n / 3;
    const ColorId star = n;
    std::vector<VertexId> v0 = parts.members(0).to_vector();
    std::vector<VertexId> v1 = parts.members(1).to_vector();
    // M pairs the a-th vertex of V0 with the a-th vertex of V1.
    std::vector<int> partner_index(n, -1);
    std::vector<std::pair<VertexId, VertexId>> matching;
    for (int a = 0; a <= m; ++a) {
        matching.emplace_back(v0[a], v1[a]);
        partner_index[v1[a]] = a;
    }
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            int pa = parts.part_of(a), pb = parts.part_of(b);
            if (pa == pb) continue;
            bool v0v1 = (pa == 0 && pb == 1) || (pa == 1 && pb == 0);
            if (!v0v1) {
                edges.emplace_back(a, b, forward_endpoint(parts, a, b));
                continue;
            }
            VertexId xa = pa == 0 ? a : b;
            VertexId yb = pa == 0 ? b : a;
            if (partner_index[yb] >= 0 && v0[partner_index[yb]] == xa)
                edges.emplace_back(a, b, star);
            else
                edges.emplace_back(a, b, v0[partner_index[yb]]);
        }
    ColoredConstruction out{EdgeColoredGraph(n, std::move(edges), vertex_palette(n, true)),
                            parts,
                            std::move(matching),
                            std::nullopt,
                            std::nullopt,
                            star};
    return out;
}

ColoredConstruction build_hard(int n) {
    require_residue_two(n, "hard");
    TriPartition parts = TriPartition::index_blocks(n);
    const ColorId star = n;
    std::vector<VertexId> v0 = parts.members(0).to_vector();
    std::vector<VertexId> v1 = parts.members(1).to_vector();
    const VertexId x = v0.back();
    const VertexId y = v1.back();
    Bitset u0 = parts.members(0);
    u0.reset(x);
    Bitset u1 = parts.members(1);
    u1.reset(y);
    Bitset u2 = parts.members(2);

    auto same_u_block = [&](VertexId a, VertexId b) {
        return (u0.test(a) && u0.test(b)) || (u1.test(a) && u1.test(b)) ||
               (u2.test(a) && u2.test(b));
    };
    auto is_y_u0 = [&](VertexId a, VertexId b) {
        return (a == y && u0.test(b)) || (b == y && u0.test(a));
    };

    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (same_u_block(a, b) || is_y_u0(a, b)) continue;
            bool new_edge = parts.part_of(a) == parts.part_of(b);  // x-U0 or y-U1
            bool x_u2 = (a == x && u2.test(b)) || (b == x && u2.test(a));
            ColorId c = (new_edge || x_u2) ? star : forward_endpoint(parts, a, b);
            edges.emplace_back(a, b, c);
        }
    ColoredConstruction out{EdgeColoredGraph(n, std::move(edges), vertex_palette(n, true)),
                            parts,
                            {},
                            x,
                            y,
                            star};
    return out;
}

OrientedConstruction build_blowup(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw input_error("blow-up parts must be nonempty");
    int n = a + b + c;
    std::vector<std::uint8_t> assign(n);
    for (int v = 0; v < n; ++v) assign[v] = v < a ? 0 : (v < a + b ? 1 : 2);
    TriPartition parts(std::move(assign));
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId w = 0; w < n; ++w) {
            if (u == w) continue;
            if (parts.part_of(w) == (parts.part_of(u) + 1) % 3) arcs.emplace_back(u, w);
        }
    return OrientedConstruction{Digraph(n, std::move(arcs)), parts, std::nullopt, std::nullopt};
}

namespace {

OrientedConstruction build_appendix(int s0, int s1, int s2, bool variant_one) {
    if (s0 < 1 || s1 < 1 || s2 < 1) throw input_error("appendix parts must be nonempty");
    const int base = s0 + s1 + s2;
    const int n = base + 2;
    const VertexId x = base;
    const VertexId y = base + 1;
    auto in_part = [&](VertexId v, int i) {
        if (i == 0) return v < s0;
        if (i == 1) return v >= s0 && v < s0 + s1;
        return v >= s0 + s1 && v < base;
    };
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId u = 0; u < base; ++u)
        for (VertexId w = 0; w < base; ++w)
            for (int i = 0; i < 3; ++i)
                if (in_part(u, i) && in_part(w, (i + 1) % 3)) arcs.emplace_back(u, w);
    if (variant_one) {
        // U0 x U1, U1 x U2, U2 x U0, (U0 u U2) x {x}, {x} x ({y} u U1), {y} x U2
        for (VertexId u = 0; u < base; ++u) {
            if (in_part(u, 0) || in_part(u, 2)) arcs.emplace_back(u, x);
            if (in_part(u, 1)) arcs.emplace_back(x, u);
            if (in_part(u, 2)) arcs.emplace_back(y, u);
        }
        arcs.emplace_back(x, y);
    } else {
        // U0 x U1, U1 x U2, U2 x U0, {x} x U1, U1 x {y}, {y} x ({x} u U2)
        for (VertexId u = 0; u < base; ++u) {
            if (in_part(u, 1)) {
                arcs.emplace_back(x, u);
                arcs.emplace_back(u, y);
            }
            if (in_part(u, 2)) arcs.emplace_back(y, u);
        }
        arcs.emplace_back(y, x);
    }
    std::vector<std::uint8_t> assign(n);
    for (int v = 0; v < base; ++v) assign[v] = in_part(v, 0) ? 0 : (in_part(v, 1) ? 1 : 2);
    assign[x] = 0;
    assign[y] = 1;
    return OrientedConstruction{Digraph(n, std::move(arcs)), TriPartition(std::move(assign)), x, y};
}

}  // namespace

OrientedConstruction build_appendix_g1(int s0, int s1, int s2) {
    return build_appendix(s0, s1, s2, true);
}

OrientedConstruction build_appendix_g2(int s0, int s1, int s2) {
    return build_appendix(s0, s1, s2, false);
}

EdgeColoredGraph build_canonical(const TriPartition& parts,
                                 const std::vector<ColorId>& vertex_color) {
    const int n = parts.size();
    if (static_cast<int>(vertex_color.size()) != n)
        throw input_error("canonical coloring needs one color per vertex");
    for (int i = 0; i < 3; ++i) {
        std::set<ColorId> used;
        for (VertexId v : parts.members(i).to_vector())
            if (!used.insert(vertex_color[v]).second)
                throw input_error("canonical coloring must be injective within part " +
                                  std::to_string(i));
    }
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) {
            if (parts.part_of(a) == parts.part_of(b)) continue;
            edges.emplace_back(a, b, vertex_color[forward_endpoint(parts, a, b)]);
        }
    Palette palette;
    for (VertexId v = 0; v < n; ++v) palette.emplace(vertex_color[v], "v" + std::to_string(v));
    return EdgeColoredGraph(n, std::move(edges), std::move(palette));
}

EdgeColoredGraph build_canonical(const TriPartition& parts) {
    std::vector<ColorId> identity(parts.size());
    for (int v = 0; v < parts.size(); ++v) identity[v] = v;
    return build_canonical(parts, identity);
}

namespace {

std::int64_t falling_factorial(int x, int k) {
    std::int64_t out = 1;
    for (int i = 0; i < k; ++i) out *= (x - i);
    return out < 0 ? 0 : out;
}

void push(ConstructionChecklist& list, const std::string& name, bool ok,
          const std::string& detail) {
    list.checks.push_back({name, ok ? "pass" : "fail", detail});
}

void push_measured(ConstructionChecklist& list, const std::string& name,
                   const std::string& detail) {
    list.checks.push_back({name, "vacuous", detail});
}

void colored_length_checks(ConstructionChecklist& list, const EdgeColoredGraph& g,
                           const std::vector<int>& lengths, int claimed_residue,
                           SearchBudget& budget) {
    for (int ell : lengths) {
        if (ell < 3) continue;
        std::int64_t count = count_rainbow_cycles(g, ell, &budget);
        std::string name = "no rainbow C" + std::to_string(ell);
        bool claimed = ell % 3 != 0 && (claimed_residue < 0 || ell % 3 == claimed_residue);
        if (claimed)
            push(list, name, count == 0, "rainbow count " + std::to_string(count));
        else
            push_measured(list, "rainbow C" + std::to_string(ell) + " count (not claimed)",
                          std::to_string(count));
    }
}

}  // namespace

ConstructionChecklist verify_construction(const ConstructionSpecDesc& spec,
                                          const std::vector<int>& lengths, SearchBudget& budget) {
    ConstructionChecklist list;
    list.spec = spec;
    if (spec.kind == "cplus" || spec.kind == "canonical") {
        ColoredConstruction built = build_cplus(spec.n);
        if (spec.kind == "canonical") built.graph = build_canonical(built.parts);
        const EdgeColoredGraph& g = built.graph;
        const int m = spec.n / 3;
        push(list, "min color degree = m+1", min_color_degree(g) == m + 1,
             "delta^c = " + std::to_string(min_color_degree(g)));
        bool v1_attains = true;
        for (VertexId v : built.parts.members(1).to_vector())
            v1_attains = v1_attains && color_degree(g, v) == m + 1;
        push(list, "every V1 vertex attains m+1", v1_attains, "");
        bool fwd = true, bwd = true;
        for (int i = 0; i < 3; ++i) {
            Bitset next = built.parts.members((i + 1) % 3);
            Bitset prev = built.parts.members((i + 2) % 3);
            for (VertexId v : built.parts.members(i).to_vector()) {
                fwd = fwd && color_degree_into(g, v, next) == built.parts.part_size((i + 1) % 3);
                bwd = bwd && color_degree_into(g, v, prev) == 1;
            }
        }
        push(list, "forward colors all distinct", fwd, "");
        push(list, "backward colors common", bwd, "");
        colored_length_checks(list, g, lengths, -1, budget);
    } else if (spec.kind == "matching" || spec.kind == "hard") {
        ColoredConstruction built =
            spec.kind == "matching" ? build_matching(spec.n) : build_hard(spec.n);
        const int m = spec.n / 3;
        bool regular = true;
        for (VertexId v = 0; v < spec.n; ++v)
            regular = regular && color_degree(built.graph, v) == m + 2;
        push(list, "(m+2)-color-regular", regular, "m+2 = " + std::to_string(m + 2));
        if (spec.kind == "matching") {
            std::int64_t stars = 0;
            for (const auto& e : built.graph.edges())
                if (e.color == *built.star) ++stars;
            push(list, "star edges = m+1", stars == m + 1, std::to_string(stars) + " star edges");
            colored_length_checks(list, built.graph, lengths, 1, budget);
        } else {
            // The hard graph differs from K[V0,V1,V2] in exactly 3m = n-2 pairs.
            std::int64_t diff = 0;
            for (VertexId a = 0; a < spec.n; ++a)
                for (VertexId b = a + 1; b < spec.n; ++b) {
                    bool in_k = built.parts.part_of(a) != built.parts.part_of(b);
                    if (in_k != built.graph.has_edge(a, b)) ++diff;
                }
            push(list, "differs from K[V0,V1,V2] in 3m pairs", diff == 3 * m,
                 std::to_string(diff) + " differing pairs");
            colored_length_checks(list, built.graph, lengths, 2, budget);
        }
    } else if (spec.kind == "blowup") {
        auto [a, b, c] = spec.sizes;
        OrientedConstruction built = build_blowup(a, b, c);
        push(list, "oriented", is_oriented(built.graph), "");
        push(list, "min out-degree = smallest part",
             min_out_degree(built.graph) == std::min({a, b, c}),
             "delta+ = " + std::to_string(min_out_degree(built.graph)));
        for (int ell : lengths) {
            if (ell < 2) continue;
            std::int64_t count = count_directed_cycles(built.graph, ell, &budget);
            if (ell % 3 != 0) {
                push(list, "no directed C" + std::to_string(ell), count == 0,
                     "count " + std::to_string(count));
            } else {
                int k = ell / 3;
                std::int64_t product = falling_factorial(a, k) * falling_factorial(b, k) *
                                       falling_factorial(c, k);
                push(list, "directed C" + std::to_string(ell) + " count matches product",
                     count * k == product,
                     std::to_string(count) + " cycles x k = " + std::to_string(count * k) +
                         ", product " + std::to_string(product));
            }
        }
    } else if (spec.kind == "appendix-g1" || spec.kind == "appendix-g2") {
        auto [a, b, c] = spec.sizes;
        OrientedConstruction built = spec.kind == "appendix-g1" ? build_appendix_g1(a, b, c)
                                                                : build_appendix_g2(a, b, c);
        push(list, "oriented", is_oriented(built.graph), "");
        for (int ell : lengths) {
            if (ell < 2) continue;
            std::int64_t count = count_directed_cycles(built.graph, ell, &budget);
            if (ell % 3 == 2)
                push(list, "no directed C" + std::to_string(ell), count == 0,
                     "count " + std::to_string(count));
            else
                push_measured(list,
                              "directed C" + std::to_string(ell) + " count (not claimed)",
                              std::to_string(count));
        }
    } else {
        throw input_error("unknown construction kind: " + spec.kind);
    }
    return list;
}

AppendixUnionReport appendix_union_check(int n) {
    require_residue_two(n, "appendix union");
    AppendixUnionReport report;
    report.n = n;
    const int m = n / 3;
    ColoredConstruction hard = build_hard(n);
    const EdgeColoredGraph& g = hard.graph;
    const VertexId x = *hard.x;
    const VertexId y = *hard.y;
    Bitset u0 = hard.parts.members(0);
    u0.reset(x);
    Bitset u1 = hard.parts.members(1);
    u1.reset(y);
    Bitset u2 = hard.parts.members(2);

    auto removed_for_g1 = [&](const ColoredEdge& e) {  // edges between U1 and y
        return (e.u == y && u1.test(e.v)) || (e.v == y && u1.test(e.u));
    };
    auto removed_for_g2 = [&](const ColoredEdge& e) {  // edges between U0 u U2 and x
        auto other_side = [&](VertexId o) { return u0.test(o) || u2.test(o); };
        return (e.u == x && other_side(e.v)) || (e.v == x && other_side(e.u));
    };

    std::set<std::pair<VertexId, VertexId>> e_full, e1, e2;
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges1, edges2;
    bool star_diff = true;
    for (const auto& e : g.edges()) {
        e_full.insert({e.u, e.v});
        bool in1 = !removed_for_g1(e);
        bool in2 = !removed_for_g2(e);
        if (in1) {
            e1.insert({e.u, e.v});
            edges1.emplace_back(e.u, e.v, e.color);
        }
        if (in2) {
            e2.insert({e.u, e.v});
            edges2.emplace_back(e.u, e.v, e.color);
        }
        if (in1 != in2 && e.color != *hard.star) star_diff = false;
    }
    std::set<std::pair<VertexId, VertexId>> joined = e1;
    joined.insert(e2.begin(), e2.end());
    report.union_identity = joined == e_full;
    report.symmetric_difference_all_star = star_diff;

    EdgeColoredGraph g1(n, std::move(edges1), g.palette());
    EdgeColoredGraph g2(n, std::move(edges2), g.palette());

    // Label map onto the appendix layout: U0 first, then U1, U2, x, y.
    std::vector<VertexId> to_appendix(n, -1);
    {
        int next = 0;
        for (VertexId v : u0.to_vector()) to_appendix[v] = next++;
        for (VertexId v : u1.to_vector()) to_appendix[v] = next++;
        for (VertexId v : u2.to_vector()) to_appendix[v] = next++;
        to_appendix[x] = next++;
        to_appendix[y] = next++;
    }

    auto colored_isomorphic = [&](const EdgeColoredGraph& sub, const Digraph& digraph) {
        EdgeColoredGraph det = determined_colored_graph(digraph);
        if (sub.edge_count() != det.edge_count()) return false;
        std::map<ColorId, ColorId> fwd, bwd;
        for (const auto& e : sub.edges()) {
            VertexId a = to_appendix[e.u], b = to_appendix[e.v];
            if (!det.has_edge(a, b)) return false;
            ColorId dc = det.edge_color(a, b);
            auto [itf, newf] = fwd.emplace(e.color, dc);
            if (!newf && itf->second != dc) return false;
            auto [itb, newb] = bwd.emplace(dc, e.color);
            if (!newb && itb->second != e.color) return false;
        }
        return true;
    };

    report.g1_isomorphic = colored_isomorphic(g1, build_appendix_g1(m, m, m).graph);
    report.g2_isomorphic = colored_isomorphic(g2, build_appendix_g2(m, m, m).graph);
    report.detail = "n=" + std::to_string(n) + ", m=" + std::to_string(m);
    return report;
}

}  // namespace rainbow
