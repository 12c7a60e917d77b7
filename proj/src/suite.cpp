#include "rainbow/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <random>
#include <sstream>

#include "rainbow/constructions.hpp"
#include "rainbow/structure.hpp"
#include "rainbow/transforms.hpp"

namespace rainbow {

namespace {

class SuiteRunner {
public:
    SuiteRunner(VerificationSuite& suite, std::uint64_t budget) : suite_(suite), budget_(budget) {}

    // Runs one named check; fn returns {ok, detail}.  Budget exhaustion turns
    // into an inconclusive entry instead of aborting the battery.
    template <typename Fn>
    void run(const std::string& name, Fn&& fn) {
        auto start = std::chrono::steady_clock::now();
        SuiteCheck check;
        check.name = name;
        try {
            auto [ok, detail] = fn();
            check.status = ok ? "pass" : "fail";
            check.detail = detail;
        } catch (const budget_error& e) {
            check.status = "inconclusive";
            check.detail = e.what();
        }
        check.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        suite_.checks.push_back(std::move(check));
    }

    void skip(const std::string& name, const std::string& why) {
        suite_.checks.push_back({name, "vacuous", "skipped: " + why, 0.0});
    }

    SearchBudget fresh_budget() const { return SearchBudget(budget_); }

private:
    VerificationSuite& suite_;
    std::uint64_t budget_;
};

std::pair<bool, std::string> checklist_outcome(const ConstructionChecklist& list) {
    std::ostringstream detail;
    bool ok = true;
    for (const auto& c : list.checks) {
        if (c.status == "fail") {
            ok = false;
            detail << "FAIL " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")") << "; ";
        }
    }
    if (ok) detail << list.checks.size() << " claims checked";
    return {ok, detail.str()};
}

Digraph random_oriented(int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> three(0, 2);
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
            switch (three(rng)) {
                case 0: arcs.emplace_back(u, v); break;
                case 1: arcs.emplace_back(v, u); break;
                default: break;
            }
        }
    return Digraph(n, std::move(arcs));
}

EdgeColoredGraph random_colored(int n, int palette, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> color(0, palette - 1);
    std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v, color(rng));
    return EdgeColoredGraph(n, std::move(edges));
}

// Random part-respecting closed vertex sequence in a balanced host; the cycle
// steps to a neighboring part each time, so every edge type is defined.
std::optional<std::pair<CycleWitness, TriPartition>> random_tripartite_cycle(
    std::mt19937_64& rng) {
    int n = 9 + static_cast<int>(rng() % 6);
    int ell = 3 + static_cast<int>(rng() % 6);
    TriPartition parts = TriPartition::index_blocks(n);
    std::vector<VertexId> cycle;
    std::vector<bool> used(n, false);
    int part = static_cast<int>(rng() % 3);
    for (int k = 0; k < ell; ++k) {
        std::vector<VertexId> options;
        for (VertexId v = 0; v < n; ++v)
            if (!used[v] && parts.part_of(v) == part) options.push_back(v);
        if (options.empty()) return std::nullopt;
        VertexId v = options[rng() % options.size()];
        cycle.push_back(v);
        used[v] = true;
        part = (rng() % 2) ? (part + 1) % 3 : (part + 2) % 3;
    }
    if (parts.part_of(cycle.front()) == parts.part_of(cycle.back())) return std::nullopt;
    CycleWitness w;
    w.vertices = std::move(cycle);
    return std::make_pair(std::move(w), std::move(parts));
}

}  // namespace

VerificationSuite run_paper_suite(int max_n, const std::vector<int>& lengths,
                                  std::uint64_t budget, std::uint64_t seed) {
    VerificationSuite suite;
    SuiteRunner runner(suite, budget);
    std::mt19937_64 rng(seed);

    // Sharpness constructions at every feasible n.
    for (int n = 3; n <= max_n; ++n) {
        runner.run("cplus n=" + std::to_string(n), [&] {
            SearchBudget b = runner.fresh_budget();
            return checklist_outcome(verify_construction({"cplus", n, {}}, lengths, b));
        });
    }
    bool any_residue_two = false;
    for (int n = 8; n <= max_n; ++n) {
        if (n % 3 != 2) continue;
        any_residue_two = true;
        runner.run("matching n=" + std::to_string(n), [&] {
            SearchBudget b = runner.fresh_budget();
            return checklist_outcome(verify_construction({"matching", n, {}}, lengths, b));
        });
        runner.run("hard n=" + std::to_string(n), [&] {
            SearchBudget b = runner.fresh_budget();
            return checklist_outcome(verify_construction({"hard", n, {}}, lengths, b));
        });
        runner.run("appendix union n=" + std::to_string(n), [&] {
            AppendixUnionReport rep = appendix_union_check(n);
            return std::make_pair(rep.all_hold(), rep.detail);
        });
    }
    if (!any_residue_two) {
        runner.skip("matching/hard/appendix", "no feasible n = 2 (mod 3), n >= 8, below max_n");
    }

    for (int s = 1; s <= std::max(1, (max_n - 2) / 3); ++s) {
        std::array<int, 3> sizes{s, s, s};
        runner.run("blowup (" + std::to_string(s) + "," + std::to_string(s) + "," +
                       std::to_string(s) + ")",
                   [&] {
                       SearchBudget b = runner.fresh_budget();
                       return checklist_outcome(verify_construction({"blowup", 0, sizes}, lengths, b));
                   });
        runner.run("appendix digraphs |U_i|=" + std::to_string(s), [&] {
            SearchBudget b = runner.fresh_budget();
            auto l1 = verify_construction({"appendix-g1", 0, sizes}, lengths, b);
            auto l2 = verify_construction({"appendix-g2", 0, sizes}, lengths, b);
            auto [ok1, d1] = checklist_outcome(l1);
            auto [ok2, d2] = checklist_outcome(l2);
            return std::make_pair(ok1 && ok2, "g1: " + d1 + " | g2: " + d2);
        });
    }

    // Transform invariants on random instances.
    runner.run("associated digraph out-degree = color degree", [&] {
        for (int t = 0; t < 25; ++t) {
            int n = 3 + static_cast<int>(rng() % 6);
            EdgeColoredGraph g = random_colored(n, 3 + static_cast<int>(rng() % 4), 0.6, rng);
            Digraph a = associated_digraph(g);
            for (VertexId v = 0; v < n; ++v)
                if (out_degree(a, v) != color_degree(g, v))
                    return std::make_pair(false, "vertex " + std::to_string(v) + " in trial " +
                                                     std::to_string(t));
        }
        return std::make_pair(true, std::string("25 random instances"));
    });

    runner.run("Li correspondence on random oriented digraphs", [&] {
        SearchBudget b = runner.fresh_budget();
        for (int t = 0; t < 30; ++t) {
            int n = 4 + static_cast<int>(rng() % 5);
            Digraph d = random_oriented(n, rng);
            for (int ell = 3; ell <= 5; ++ell) {
                LiReport rep = verify_li_correspondence(d, ell, &b);
                if (rep.directed_cycles != rep.rainbow_cycles ||
                    !rep.rainbow_equals_properly_colored)
                    return std::make_pair(false, "trial " + std::to_string(t) + " l=" +
                                                     std::to_string(ell));
            }
        }
        return std::make_pair(true, std::string("30 digraphs, l in 3..5"));
    });

    runner.run("non-rainbow directed cycles within n^(l-1)", [&] {
        SearchBudget b = runner.fresh_budget();
        for (int t = 0; t < 30; ++t) {
            int n = 4 + static_cast<int>(rng() % 4);
            EdgeColoredGraph g = random_colored(n, 2 + static_cast<int>(rng() % 3), 0.7, rng);
            for (int ell = 3; ell <= 4; ++ell) {
                NonRainbowBound rep = non_rainbow_bound_check(g, {}, ell, &b);
                if (!rep.holds)
                    return std::make_pair(false, "trial " + std::to_string(t) + " l=" +
                                                     std::to_string(ell));
            }
        }
        return std::make_pair(true, std::string("30 colorings, l in 3..4"));
    });

    // Reversal parity on random 3-partite cycles.
    runner.run("reversal parity and nonzero backward count", [&] {
        int produced = 0;
        for (int attempt = 0; attempt < 5000 && produced < 200; ++attempt) {
            auto cycle = random_tripartite_cycle(rng);
            if (!cycle) continue;
            ++produced;
            auto& [w, parts] = *cycle;
            ReversalProfile prof = reversal_profile(w, parts);
            if (prof.backward != prof.forward)
                return std::make_pair(false, "parity broken at sample " + std::to_string(produced));
            if (w.length() % 3 != 0 && prof.backward < 1)
                return std::make_pair(false,
                                      "no backward reversal at sample " + std::to_string(produced));
        }
        return std::make_pair(produced >= 200,
                              std::to_string(produced) + " random 3-partite cycles");
    });

    // Amenability arithmetic on random bucket sizes.
    runner.run("amenability: some j satisfies all three conclusions", [&] {
        for (int t = 0; t < 300; ++t) {
            int n = 3 + static_cast<int>(rng() % 30);
            std::array<std::array<int, 3>, 3> sizes{};
            for (int v = 0; v < n; ++v) sizes[rng() % 3][rng() % 3]++;
            auto verdicts = amenability_verdicts(sizes, n);
            if (!verdicts[0].amenable() && !verdicts[1].amenable() && !verdicts[2].amenable())
                return std::make_pair(false, "no amenable index at trial " + std::to_string(t));
        }
        return std::make_pair(true, std::string("300 random partitions"));
    });

    // j-special audit on the paper constructions: nothing may be flagged as a
    // rainbow 4-cycle candidate.
    runner.run("j-special audit on constructions", [&] {
        SearchBudget b = runner.fresh_budget();
        for (int n = 8; n <= max_n; ++n) {
            std::vector<ColoredConstruction> instances;
            instances.push_back(build_cplus(n));
            if (n % 3 == 2) {
                instances.push_back(build_matching(n));
                instances.push_back(build_hard(n));
            }
            for (const auto& inst : instances) {
                StructureReport rep = structure_report(inst.graph, inst.parts, Rational(1, 100));
                for (int j = 0; j < 3; ++j)
                    for (const auto& cyc : find_j_special_4cycles(inst.graph, rep, j, b))
                        if (cyc.rainbow_candidate)
                            return std::make_pair(false, "rainbow candidate at n=" +
                                                             std::to_string(n));
            }
        }
        return std::make_pair(true, std::string("no rainbow 4-cycle candidates"));
    });

    return suite;
}

ThresholdReport explore_threshold(int n, int length, int trials, std::uint64_t seed) {
    if (n < 3) throw input_error("explore needs n >= 3");
    if (length < 3) throw input_error("explore needs length >= 3");
    if (trials < 0) throw input_error("negative trial count");
    ThresholdReport report;
    report.n = n;
    report.length = length;
    report.trials = trials;
    report.seed = seed;
    report.threshold = (n + 5 + 2) / 3;  // ceil((n+5)/3)
    report.palette_size = report.threshold;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> color(0, report.palette_size - 1);
    constexpr int kMaxRejections = 2000;
    for (int t = 0; t < trials; ++t) {
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxRejections && !accepted; ++attempt) {
            std::vector<std::tuple<VertexId, VertexId, ColorId>> edges;
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v, color(rng));
            EdgeColoredGraph g(n, std::move(edges));
            if (min_color_degree(g) < report.threshold) {
                report.rejected++;
                continue;
            }
            accepted = true;
            report.accepted++;
            if (find_rainbow_cycle(g, length)) report.with_rainbow++;
        }
    }
    report.hit_rate = report.accepted == 0
                          ? 0.0
                          : static_cast<double>(report.with_rainbow) / report.accepted;
    return report;
}

}  // namespace rainbow
