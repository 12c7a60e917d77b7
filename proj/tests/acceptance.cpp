// Acceptance battery: exact finite claims, one pass/fail line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/suite.hpp"
#include "rainbow/transforms.hpp"

using namespace rainbow;

namespace {

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    bool passed;
    double seconds;
    std::string detail;
};

std::vector<Criterion> results;

template <typename Fn>
void criterion(int id, const std::string& title, double limit_seconds, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        std::tie(ok, detail) = fn();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > limit_seconds) {
        ok = false;
        detail += " (exceeded " + std::to_string(limit_seconds) + "s limit)";
    }
    results.push_back({id, title, limit_seconds, ok, secs, detail});
    std::printf("criterion %2d [%s] %6.2fs  %s%s%s\n", id, ok ? "PASS" : "FAIL", secs,
                title.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

Digraph random_oriented(int n, std::mt19937_64& rng) {
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            switch (rng() % 3) {
                case 0: arcs.emplace_back(u, v); break;
                case 1: arcs.emplace_back(v, u); break;
                default: break;
            }
        }
    return Digraph(n, arcs);
}

EdgeColoredGraph random_colored(int n, int palette, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v, static_cast<ColorId>(rng() % palette));
    return EdgeColoredGraph(n, edges);
}

std::int64_t falling(int x, int k) {
    std::int64_t out = 1;
    for (int i = 0; i < k; ++i) out *= (x - i);
    return out < 0 ? 0 : out;
}

}  // namespace

int main() {
    criterion(1, "case 1 sharpness: cplus(9..10) degree and rainbow-freeness", 30.0, [] {
        for (int n : {9, 10}) {
            ColoredConstruction c = build_cplus(n);
            if (min_color_degree(c.graph) != n / 3 + 1)
                return std::make_pair(false, "delta^c wrong at n=" + std::to_string(n));
            for (int ell : {4, 5, 7, 8}) {
                std::int64_t count = count_rainbow_cycles(c.graph, ell);
                if (count != 0)
                    return std::make_pair(false, "rainbow C" + std::to_string(ell) + " at n=" +
                                                     std::to_string(n));
            }
        }
        return std::make_pair(true, std::string("delta^c = m+1, no rainbow C4/C5/C7/C8"));
    });

    criterion(2, "case 2 sharpness: matching(8), matching(11)", 60.0, [] {
        for (int n : {8, 11}) {
            ColoredConstruction c = build_matching(n);
            int m = n / 3;
            for (VertexId v = 0; v < n; ++v)
                if (color_degree(c.graph, v) != m + 2)
                    return std::make_pair(false, "vertex " + std::to_string(v) + " not " +
                                                     std::to_string(m + 2) + "-regular at n=" +
                                                     std::to_string(n));
            for (int ell : {4, 7})
                if (count_rainbow_cycles(c.graph, ell) != 0)
                    return std::make_pair(false, "rainbow C" + std::to_string(ell) + " at n=" +
                                                     std::to_string(n));
        }
        return std::make_pair(true, std::string("(m+2)-color-regular, no rainbow C4/C7"));
    });

    criterion(3, "case 3 sharpness: hard(8)", 60.0, [] {
        ColoredConstruction c = build_hard(8);
        for (VertexId v = 0; v < 8; ++v)
            if (color_degree(c.graph, v) != 4)
                return std::make_pair(false, "vertex " + std::to_string(v) + " not 4-regular");
        if (count_rainbow_cycles(c.graph, 5) != 0)
            return std::make_pair(false, std::string("rainbow C5 found"));
        return std::make_pair(true, std::string("(m+2)-color-regular, no rainbow C5"));
    });

    criterion(4, "directed sharpness: blow-ups up to (3,3,3)", 60.0, [] {
        for (int a = 1; a <= 3; ++a)
            for (int b = 1; b <= 3; ++b)
                for (int c = 1; c <= 3; ++c) {
                    OrientedConstruction blow = build_blowup(a, b, c);
                    for (int ell = 2; ell <= 9; ++ell) {
                        std::int64_t count = count_directed_cycles(blow.graph, ell);
                        std::string at = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                                         std::to_string(c) + ") l=" + std::to_string(ell);
                        if (ell % 3 != 0) {
                            if (count != 0) return std::make_pair(false, "nonzero count at " + at);
                        } else {
                            int k = ell / 3;
                            std::int64_t product =
                                falling(a, k) * falling(b, k) * falling(c, k);
                            if (count * k != product)
                                return std::make_pair(false, "count mismatch at " + at);
                        }
                    }
                }
        return std::make_pair(true,
                              std::string("zero off-residue, falling-factorial match at l=3,6,9"));
    });

    criterion(5, "appendix: union identity and cycle-free digraphs", 30.0, [] {
        AppendixUnionReport rep = appendix_union_check(8);
        if (!rep.union_identity) return std::make_pair(false, std::string("union identity"));
        if (!rep.symmetric_difference_all_star)
            return std::make_pair(false, std::string("symmetric difference not all-star"));
        if (!rep.g1_isomorphic || !rep.g2_isomorphic)
            return std::make_pair(false, std::string("colored isomorphism"));
        auto g1 = build_appendix_g1(2, 2, 2);
        auto g2 = build_appendix_g2(2, 2, 2);
        for (int ell : {5, 8}) {
            if (count_directed_cycles(g1.graph, ell) != 0)
                return std::make_pair(false, "G1 has directed C" + std::to_string(ell));
            if (count_directed_cycles(g2.graph, ell) != 0)
                return std::make_pair(false, "G2 has directed C" + std::to_string(ell));
        }
        return std::make_pair(true, std::string("all three sub-claims, no directed C5/C8"));
    });

    criterion(6, "correspondence: 200 random oriented digraphs, l <= 6", 120.0, [] {
        std::mt19937_64 rng(4201);
        for (int t = 0; t < 200; ++t) {
            int n = 4 + static_cast<int>(rng() % 6);  // up to 9
            Digraph d = random_oriented(n, rng);
            EdgeColoredGraph det = determined_colored_graph(d);
            for (int ell = 3; ell <= 6; ++ell) {
                std::int64_t directed = count_directed_cycles(d, ell);
                std::int64_t rainbow = count_rainbow_cycles(det, ell);
                std::int64_t proper = count_properly_colored_cycles(det, ell);
                if (directed != rainbow || rainbow != proper)
                    return std::make_pair(false, "mismatch in trial " + std::to_string(t) +
                                                     " l=" + std::to_string(ell));
            }
        }
        return std::make_pair(true, std::string("directed = rainbow = properly colored"));
    });

    criterion(7, "Fact 2.2 bound: 100 random colorings, l <= 5", 120.0, [] {
        std::mt19937_64 rng(4202);
        for (int t = 0; t < 100; ++t) {
            int n = 4 + static_cast<int>(rng() % 5);  // up to 8
            EdgeColoredGraph g = random_colored(n, 2 + static_cast<int>(rng() % 4), 0.7, rng);
            for (int ell = 3; ell <= 5; ++ell) {
                NonRainbowBound rep = non_rainbow_bound_check(g, {}, ell);
                if (!rep.holds)
                    return std::make_pair(false, "bound broken in trial " + std::to_string(t));
            }
        }
        return std::make_pair(true, std::string("non-rainbow directed cycles <= n^(l-1)"));
    });

    criterion(8, "reversal parity: 500 random 3-partite cycles", 30.0, [] {
        std::mt19937_64 rng(4203);
        int produced = 0;
        while (produced < 500) {
            int n = 9 + static_cast<int>(rng() % 6);
            int ell = 3 + static_cast<int>(rng() % 6);
            TriPartition parts = TriPartition::index_blocks(n);
            std::vector<VertexId> cyc;
            std::vector<bool> used(n, false);
            int part = static_cast<int>(rng() % 3);
            bool ok = true;
            for (int k = 0; k < ell && ok; ++k) {
                std::vector<VertexId> options;
                for (VertexId v = 0; v < n; ++v)
                    if (!used[v] && parts.part_of(v) == part) options.push_back(v);
                if (options.empty()) {
                    ok = false;
                    break;
                }
                VertexId v = options[rng() % options.size()];
                cyc.push_back(v);
                used[v] = true;
                part = (rng() % 2) ? (part + 1) % 3 : (part + 2) % 3;
            }
            if (!ok || parts.part_of(cyc.front()) == parts.part_of(cyc.back())) continue;
            ++produced;
            CycleWitness w;
            w.vertices = cyc;
            ReversalProfile prof = reversal_profile(w, parts);
            if (prof.backward != prof.forward)
                return std::make_pair(false, "parity broken at sample " + std::to_string(produced));
            if (ell % 3 != 0 && prof.backward < 1)
                return std::make_pair(false,
                                      "missing backward reversal at sample " +
                                          std::to_string(produced));
        }
        return std::make_pair(true, std::string("backward = forward, off-residue backward >= 1"));
    });

    criterion(9, "structure suite: cplus(9..12) reports and amenability", 120.0, [] {
        for (int n = 9; n <= 12; ++n) {
            ColoredConstruction c = build_cplus(n);
            StructureReport rep = structure_report(c.graph, c.parts, Rational(1, 100));
            for (int i = 0; i < 3; ++i) {
                if (!rep.u_bad[i].empty())
                    return std::make_pair(false, "bad vertex at n=" + std::to_string(n));
                for (const auto& d : rep.good_detail[i]) {
                    if (!d.primary || *d.primary != d.v)
                        return std::make_pair(false, "wrong primary at n=" + std::to_string(n));
                    if (d.special_count != 0)
                        return std::make_pair(false,
                                              "nonempty special set at n=" + std::to_string(n));
                }
            }
            if (rep.amenable.empty())
                return std::make_pair(false, "empty amenable set at n=" + std::to_string(n));
        }
        std::mt19937_64 rng(4204);
        for (int t = 0; t < 500; ++t) {
            int n = 3 + static_cast<int>(rng() % 40);
            std::array<std::array<int, 3>, 3> sizes{};
            for (int v = 0; v < n; ++v) sizes[rng() % 3][rng() % 3]++;
            auto verdicts = amenability_verdicts(sizes, n);
            if (!verdicts[0].amenable() && !verdicts[1].amenable() && !verdicts[2].amenable())
                return std::make_pair(false,
                                      "amenability counterexample at trial " + std::to_string(t));
        }
        return std::make_pair(true,
                              std::string("all-good reports, own primaries, amenable nonempty; "
                                          "500 random partitions amenable"));
    });

    criterion(10, "oracle confluence: core orders and partition scans", 120.0, [] {
        std::mt19937_64 rng(4205);
        for (int t = 0; t < 20; ++t) {
            int n = 5 + static_cast<int>(rng() % 5);
            std::vector<std::pair<VertexId, VertexId>> arcs;
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = 0; v < n; ++v)
                    if (u != v && rng() % 4 == 0) arcs.emplace_back(u, v);
            Digraph d(n, arcs);
            CoreResult mine = positive_indegree_core(d);
            for (int order = 0; order < 50; ++order) {
                std::vector<int> priority(n);
                for (int i = 0; i < n; ++i) priority[i] = i;
                std::shuffle(priority.begin(), priority.end(), rng);
                if (oracle::peel_core(d, priority) != mine.kept)
                    return std::make_pair(false, std::string("core differs under a deletion order"));
            }
            if (!mine.out_degrees_preserved)
                return std::make_pair(false, std::string("survivor out-degree changed"));
        }
        for (int t = 0; t < 50; ++t) {
            int n = 4 + static_cast<int>(rng() % 5);  // up to 8
            std::vector<std::pair<VertexId, VertexId>> arcs;
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = 0; v < n; ++v)
                    if (u != v && rng() % 2 == 0) arcs.emplace_back(u, v);
            Digraph d(n, arcs);
            Rational lambda(static_cast<std::int64_t>(rng() % 10), 100);
            PartitionSearchResult mine = find_extremal_partition(
                d, lambda, PartitionSearchMode::Exhaustive, 1'000'000'000);
            auto naive = oracle::extremal_partition_scan(d, lambda.num, lambda.den);
            if (mine.found.has_value() != naive.has_value())
                return std::make_pair(false, "scan disagreement in trial " + std::to_string(t));
            if (mine.found && !is_lambda_extremal(d, mine.found->partition, lambda).first)
                return std::make_pair(false, "invalid witness in trial " + std::to_string(t));
        }
        return std::make_pair(true, std::string("50 deletion orders stable, 50 scans agree"));
    });

    int failures = 0;
    for (const auto& r : results) failures += r.passed ? 0 : 1;
    std::printf("%zu criteria, %d failed\n", results.size(), failures);
    return failures == 0 ? 0 : 1;
}
