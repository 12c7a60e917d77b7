#include "rainbow/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

namespace rainbow {

namespace {

ExtremalityResult evaluate_partition(const Digraph& d, const TriPartition& parts) {
    const int n = d.vertex_count();
    ExtremalityResult r;
    r.partition = parts;
    std::array<Bitset, 3> members = {parts.members(0), parts.members(1), parts.members(2)};
    for (int i = 0; i < 3; ++i)
        r.cyclic_counts[i] = arcs_between(d, members[i], members[(i + 1) % 3]);
    std::int64_t min_count = std::min({r.cyclic_counts[0], r.cyclic_counts[1], r.cyclic_counts[2]});
    std::int64_t n2 = static_cast<std::int64_t>(n) * n;
    r.min_cyclic_density = n2 == 0 ? Rational(0) : Rational(min_count, n2);
    Rational gap = Rational(1, 9) - r.min_cyclic_density;
    r.extremal_at = gap.num < 0 ? Rational(0) : gap;
    return r;
}

bool meets_threshold(const std::array<std::int64_t, 3>& counts, const Rational& lambda,
                     std::int64_t n) {
    // e >= (1/9 - lambda) n^2  <=>  9 q e >= (q - 9p) n^2
    __int128 rhs = static_cast<__int128>(lambda.den - 9 * lambda.num) * n * n;
    for (auto e : counts)
        if (static_cast<__int128>(9) * lambda.den * e < rhs) return false;
    return true;
}

}  // namespace

std::pair<bool, ExtremalityResult> is_lambda_extremal(const Digraph& d, const TriPartition& parts,
                                                      const Rational& lambda) {
    if (lambda.num < 0) throw input_error("lambda must be nonnegative");
    if (parts.size() != d.vertex_count())
        throw input_error("partition size does not match digraph");
    ExtremalityResult r = evaluate_partition(d, parts);
    return {meets_threshold(r.cyclic_counts, lambda, d.vertex_count()), r};
}

namespace {

class ExhaustiveScan {
public:
    ExhaustiveScan(const Digraph& d, const Rational& lambda) : d_(d), lambda_(lambda) {
        n_ = d.vertex_count();
        assign_.assign(n_, 0);
        for (auto& row : counts_) row.fill(0);
    }

    std::optional<std::vector<std::uint8_t>> run(std::uint64_t budget, std::uint64_t& evaluated) {
        if (n_ > 40) throw budget_error(budget, 0, 0);
        std::uint64_t needed = 1;
        for (int i = 0; i < n_; ++i) {
            needed *= 3;
            if (needed > budget)
                throw budget_error(budget, needed, 0);
        }
        found_.reset();
        evaluated_ = 0;
        place(0);
        evaluated = evaluated_;
        return found_;
    }

private:
    void place(int v) {
        if (found_) return;
        if (v == n_) {
            ++evaluated_;
            std::array<std::int64_t, 3> cyclic = {counts_[0][1], counts_[1][2], counts_[2][0]};
            if (meets_threshold(cyclic, lambda_, n_)) found_ = assign_;
            return;
        }
        for (std::uint8_t p = 0; p < 3; ++p) {
            assign_[v] = p;
            apply(v, p, 1);
            place(v + 1);
            apply(v, p, -1);
            if (found_) return;
        }
    }

    void apply(int v, int p, int sign) {
        for (VertexId w : d_.out_neighbors(v))
            if (w < v) counts_[p][assign_[w]] += sign;
        for (VertexId w : d_.in_neighbors(v))
            if (w < v) counts_[assign_[w]][p] += sign;
    }

    const Digraph& d_;
    Rational lambda_;
    int n_ = 0;
    std::vector<std::uint8_t> assign_;
    std::array<std::array<std::int64_t, 3>, 3> counts_;
    std::optional<std::vector<std::uint8_t>> found_;
    std::uint64_t evaluated_ = 0;
};

}  // namespace

PartitionSearchResult find_extremal_partition(const Digraph& d, const Rational& lambda,
                                              PartitionSearchMode mode, std::uint64_t budget,
                                              std::uint64_t seed) {
    if (lambda.num < 0) throw input_error("lambda must be nonnegative");
    PartitionSearchResult result;
    const int n = d.vertex_count();
    if (n == 0) {
        result.complete = true;
        return result;
    }
    if (mode == PartitionSearchMode::Exhaustive) {
        ExhaustiveScan scan(d, lambda);
        auto assignment = scan.run(budget, result.evaluated);
        result.complete = true;
        if (assignment) {
            auto [ok, eval] = is_lambda_extremal(d, TriPartition(*assignment), lambda);
            if (!ok) throw contract_error("exhaustive scan returned a non-extremal partition");
            result.found = eval;
        }
        return result;
    }

    // Steepest-ascent on the minimum cyclic count, single-vertex moves,
    // random restarts until the budget runs out.
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_part(0, 2);
    while (result.evaluated < budget) {
        std::vector<std::uint8_t> assign(n);
        for (auto& p : assign) p = static_cast<std::uint8_t>(pick_part(rng));
        bool improved = true;
        while (improved && result.evaluated < budget) {
            improved = false;
            TriPartition current(assign);
            auto [ok, eval] = is_lambda_extremal(d, current, lambda);
            ++result.evaluated;
            if (ok) {
                result.found = eval;
                return result;
            }
            std::int64_t best = std::min(
                {eval.cyclic_counts[0], eval.cyclic_counts[1], eval.cyclic_counts[2]});
            int best_v = -1, best_p = -1;
            for (int v = 0; v < n && result.evaluated < budget; ++v) {
                std::uint8_t orig = assign[v];
                for (std::uint8_t p = 0; p < 3; ++p) {
                    if (p == orig) continue;
                    assign[v] = p;
                    auto [ok2, eval2] = is_lambda_extremal(d, TriPartition(assign), lambda);
                    ++result.evaluated;
                    if (ok2) {
                        result.found = eval2;
                        return result;
                    }
                    std::int64_t score = std::min({eval2.cyclic_counts[0], eval2.cyclic_counts[1],
                                                   eval2.cyclic_counts[2]});
                    if (score > best) {
                        best = score;
                        best_v = v;
                        best_p = p;
                    }
                }
                assign[v] = orig;
            }
            if (best_v >= 0) {
                assign[best_v] = static_cast<std::uint8_t>(best_p);
                improved = true;
            }
        }
    }
    result.complete = false;  // absence is inconclusive
    return result;
}

ExtremalCycleCountReport extremal_cycle_count_check(const Digraph& d, const TriPartition& parts,
                                                    int length, SearchBudget* budget) {
    if (length < 3 || length % 3 != 0)
        throw input_error("extremal cycle count needs a positive length divisible by 3");
    if (parts.size() != d.vertex_count())
        throw input_error("partition size does not match digraph");
    ExtremalCycleCountReport report;
    report.length = length;
    report.k = length / 3;

    SearchBudget local;
    SearchBudget& b = budget ? *budget : local;
    enumerate_directed_cycles(d, length, b, [&](const CycleWitness& w) {
        report.total_cycles++;
        std::array<int, 3> visits{0, 0, 0};
        for (VertexId v : w.vertices) visits[parts.part_of(v)]++;
        if (visits[0] == report.k && visits[1] == report.k && visits[2] == report.k)
            report.part_balanced_cycles++;
        return true;
    });

    std::int64_t product = 1;
    for (int i = 0; i < 3; ++i) {
        std::int64_t ff = 1;
        for (int t = 0; t < report.k; ++t) ff *= (parts.part_size(i) - t);
        product *= std::max<std::int64_t>(ff, 0);
    }
    report.falling_factorial_product = product;

    bool complete = true;
    for (VertexId u = 0; u < d.vertex_count() && complete; ++u)
        for (VertexId w = 0; w < d.vertex_count() && complete; ++w) {
            if (u == w) continue;
            bool should = parts.part_of(w) == (parts.part_of(u) + 1) % 3;
            if (d.has_arc(u, w) != should) complete = false;
        }
    report.is_complete_blowup = complete;
    report.product_matches =
        report.part_balanced_cycles * report.k == report.falling_factorial_product;
    return report;
}

GoodBadSplit classify_good_vertices(const EdgeColoredGraph& g, const TriPartition& parts,
                                    const Rational& lambda) {
    if (lambda.num <= 0) throw input_error("good-vertex classification needs lambda > 0");
    if (parts.size() != g.vertex_count())
        throw input_error("partition size does not match graph");
    const int n = g.vertex_count();
    GoodBadSplit split;
    std::array<Bitset, 3> members;
    for (int i = 0; i < 3; ++i) {
        members[i] = parts.members(i);
        split.good[i] = Bitset(n);
        split.bad[i] = Bitset(n);
    }
    for (VertexId v = 0; v < n; ++v) {
        int i = parts.part_of(v);
        const Bitset& next = members[(i + 1) % 3];
        const Bitset& prev = members[(i + 2) % 3];
        // deficit <= lambda^(1/4) n on both sides
        bool fwd = within_quartic_slack(next.count() - color_degree_into(g, v, next), 1, lambda, n);
        bool bwd = within_quartic_slack(prev.count() - degree_into(g, v, prev), 1, lambda, n);
        (fwd && bwd ? split.good[i] : split.bad[i]).set(v);
    }
    return split;
}

TriPartition refine_partition(const EdgeColoredGraph& g, const TriPartition& parts,
                              const GoodBadSplit& split) {
    const int n = g.vertex_count();
    std::vector<std::uint8_t> assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        int i = parts.part_of(v);
        if (split.good[i].test(v)) {
            assign[v] = static_cast<std::uint8_t>(i);
            continue;
        }
        int best_j = 0, best_deg = -1;
        for (int j = 0; j < 3; ++j) {
            int deg = color_degree_into(g, v, split.good[j]);
            if (deg > best_deg) {
                best_deg = deg;
                best_j = j;
            }
        }
        assign[v] = static_cast<std::uint8_t>((best_j + 2) % 3);  // U_{j-1}
    }
    return TriPartition(std::move(assign));
}

namespace {

// Most frequent color on edges from u into the target set; ties to the
// smallest ColorId.  Returns nothing if no such edge exists.
std::optional<PrimaryColorInfo> primary_into(const EdgeColoredGraph& g, VertexId u,
                                             const Bitset& target) {
    std::map<ColorId, int> freq;
    for (const auto& e : g.incident(u))
        if (target.test(e.to)) freq[g.color_id(e.color_index)]++;
    if (freq.empty()) return std::nullopt;
    ColorId best = freq.begin()->first;
    int best_count = freq.begin()->second;
    for (const auto& [c, count] : freq)
        if (count > best_count) {
            best = c;
            best_count = count;
        }
    PrimaryColorInfo info;
    info.primary = best;
    info.typical = Bitset(g.vertex_count());
    info.special = Bitset(g.vertex_count());
    for (const auto& e : g.incident(u))
        if (target.test(e.to))
            (g.color_id(e.color_index) == best ? info.typical : info.special).set(e.to);
    return info;
}

}  // namespace

PrimaryColorInfo primary_color(const EdgeColoredGraph& g, const TriPartition& refined,
                               const GoodBadSplit& split, VertexId u) {
    g.check_vertex(u);
    int i = refined.part_of(u);
    if (!split.good[i].test(u))
        throw input_error("primary color is defined for good vertices only");
    Bitset prev = refined.members((i + 2) % 3);
    auto info = primary_into(g, u, prev);
    if (!info)
        throw input_error("vertex " + std::to_string(u) +
                          " has no edges into the previous part; primary color undefined");
    return *info;
}

std::array<AmenabilityVerdict, 3> amenability_verdicts(
    const std::array<std::array<int, 3>, 3>& sizes, int n) {
    const int m = n / 3;
    std::array<int, 3> u_size{}, i_size{}, u_hat{};
    for (int j = 0; j < 3; ++j) {
        u_size[j] = sizes[j][0] + sizes[j][1] + sizes[j][2];
        i_size[j] = sizes[j][1];
        u_hat[j] = sizes[j][0] + sizes[j][2];  // good + external bad
    }
    std::array<AmenabilityVerdict, 3> verdicts{};
    for (int j = 0; j < 3; ++j) {
        int delta = m - u_hat[j];
        verdicts[j].j = j;
        verdicts[j].delta_nonnegative = delta >= 0;
        verdicts[j].internal_bound = i_size[(j + 1) % 3] <= 2 * delta;
        verdicts[j].size_bound = u_size[(j + 2) % 3] <= m + 2 * delta + 2;
    }
    return verdicts;
}

namespace {

struct BoundBuilder {
    std::vector<BoundCheck>& out;
    const Rational& lambda;
    int n;

    // value <= coeff * lambda^(1/4) * n, reported with display doubles.
    void slack(const std::string& name, int part, std::int64_t value, std::int64_t coeff,
               std::optional<VertexId> witness) {
        BoundCheck check;
        check.name = name;
        check.part = part;
        check.lhs = static_cast<double>(value);
        check.rhs = coeff * std::pow(lambda.to_double(), 0.25) * n;
        check.witness = witness;
        // Vacuous when the slack term reaches n, i.e. coeff^4 lambda >= 1.
        __int128 c2 = static_cast<__int128>(coeff) * coeff;
        if (c2 * c2 * lambda.num >= lambda.den)
            check.status = BoundStatus::Vacuous;
        else
            check.status = within_quartic_slack(value, coeff, lambda, n) ? BoundStatus::Holds
                                                                         : BoundStatus::Fails;
        out.push_back(std::move(check));
    }
};

}  // namespace

StructureReport structure_report(const EdgeColoredGraph& g, const TriPartition& parts,
                                 const Rational& lambda) {
    StructureReport report;
    report.lambda = lambda;
    report.n = g.vertex_count();
    report.m = report.n / 3;
    report.initial = parts;
    report.split = classify_good_vertices(g, parts, lambda);
    report.refined = refine_partition(g, parts, report.split);

    const int n = report.n;
    std::array<Bitset, 3> u_members, u_good_mask, u_bad_mask;
    for (int i = 0; i < 3; ++i) {
        u_members[i] = report.refined.members(i);
        u_good_mask[i] = u_members[i] & report.split.good[i];
        u_bad_mask[i] = u_members[i];
        for (VertexId v = 0; v < n; ++v)
            if (u_good_mask[i].test(v)) u_bad_mask[i].reset(v);
        report.u_good[i] = u_good_mask[i].to_vector();
        report.u_bad[i] = u_bad_mask[i].to_vector();
    }

    // Internal vs external bad vertices: at least 3 own-part colors is internal.
    std::array<std::array<int, 3>, 3> sizes{};
    for (int j = 0; j < 3; ++j) {
        for (VertexId v : report.u_bad[j]) {
            if (color_degree_into(g, v, u_members[j]) >= 3)
                report.internal_bad[j].push_back(v);
            else
                report.external_bad[j].push_back(v);
        }
        sizes[j] = {static_cast<int>(report.u_good[j].size()),
                    static_cast<int>(report.internal_bad[j].size()),
                    static_cast<int>(report.external_bad[j].size())};
        report.u_hat_size[j] = sizes[j][0] + sizes[j][2];
        report.delta[j] = report.m - report.u_hat_size[j];
    }
    report.amenability = amenability_verdicts(sizes, n);
    for (int j = 0; j < 3; ++j)
        if (report.amenability[j].amenable()) report.amenable.push_back(j);

    for (int i = 0; i < 3; ++i) {
        Bitset prev = u_members[(i + 2) % 3];
        for (VertexId v : report.u_good[i]) {
            StructureReport::GoodVertexDetail detail;
            detail.v = v;
            auto info = primary_into(g, v, prev);
            if (info) {
                detail.primary = info->primary;
                detail.typical_count = info->typical.count();
                detail.special_count = info->special.count();
                detail.special = info->special.to_vector();
            }
            report.good_detail[i].push_back(std::move(detail));
        }
    }

    // The aggregate inequalities of the nearly-canonical structure, evaluated
    // side by side; vacuous thresholds are labeled, not asserted.
    BoundBuilder bounds{report.bounds, lambda, n};
    for (int i = 0; i < 3; ++i) {
        int next = (i + 1) % 3, prev = (i + 2) % 3;
        std::int64_t imbalance = std::abs(3 * static_cast<std::int64_t>(u_members[i].count()) - n);
        bounds.slack("|U_i| balanced within 75 lambda^(1/4) n", i, imbalance, 225, std::nullopt);
        std::int64_t good_imbalance =
            std::abs(3 * static_cast<std::int64_t>(u_good_mask[i].count()) - n);
        bounds.slack("|U_i^good| balanced within 75 lambda^(1/4) n", i, good_imbalance, 225,
                     std::nullopt);

        auto worst = [&](auto&& value_of, const std::vector<VertexId>& over) {
            std::int64_t worst_val = -1;
            std::optional<VertexId> who;
            for (VertexId v : over) {
                std::int64_t val = value_of(v);
                if (val > worst_val) {
                    worst_val = val;
                    who = v;
                }
            }
            return std::make_pair(worst_val, who);
        };

        {
            auto [val, who] = worst(
                [&](VertexId v) {
                    return static_cast<std::int64_t>(parts.part_size(next)) -
                           color_degree_into(g, v, u_members[next]);
                },
                report.u_good[i]);
            if (who)
                bounds.slack("good: color degree into U_{i+1} >= |V_{i+1}| - 73 lambda^(1/4) n", i,
                             val, 73, who);
        }
        {
            auto [val, who] = worst(
                [&](VertexId v) {
                    return (n - 3 * static_cast<std::int64_t>(
                                        color_degree_into(g, v, u_good_mask[next])));
                },
                report.u_good[i]);
            if (who)
                bounds.slack("good: color degree into U_{i+1}^good >= (1/3 - 76 lambda^(1/4)) n",
                             i, val, 228, who);
        }
        {
            auto [val, who] = worst(
                [&](VertexId v) {
                    return static_cast<std::int64_t>(parts.part_size(prev)) -
                           degree_into(g, v, u_members[prev]);
                },
                report.u_good[i]);
            if (who)
                bounds.slack("good: degree into U_{i-1} >= |V_{i-1}| - 73 lambda^(1/4) n", i, val,
                             73, who);
        }
        {
            auto [val, who] = worst(
                [&](VertexId v) {
                    return (n -
                            3 * static_cast<std::int64_t>(degree_into(g, v, u_good_mask[prev])));
                },
                report.u_good[i]);
            if (who)
                bounds.slack("good: degree into U_{i-1}^good >= (1/3 - 76 lambda^(1/4)) n", i, val,
                             228, who);
        }
        {
            // bad: color degree into U_{i+1} >= (1/9 - 72 lambda^(1/4)) n
            auto [val, who] = worst(
                [&](VertexId v) {
                    return (n - 9 * static_cast<std::int64_t>(
                                        color_degree_into(g, v, u_members[next])));
                },
                report.u_bad[i]);
            if (who)
                bounds.slack("bad: color degree into U_{i+1} >= (1/9 - 72 lambda^(1/4)) n", i, val,
                             648, who);
        }
    }
    std::int64_t total_bad = static_cast<std::int64_t>(report.u_bad[0].size()) +
                             report.u_bad[1].size() + report.u_bad[2].size();
    bounds.slack("bad vertices total at most 72 lambda^(1/4) n", 0, total_bad, 72, std::nullopt);
    return report;
}

std::vector<JSpecialFourCycle> find_j_special_4cycles(const EdgeColoredGraph& g,
                                                      const StructureReport& report, int j,
                                                      SearchBudget& budget) {
    if (j < 0 || j > 2) throw input_error("part index must be 0, 1 or 2");
    std::vector<JSpecialFourCycle> found;
    std::map<VertexId, PrimaryColorInfo> infos;
    for (const auto& d : report.good_detail[j]) {
        if (!d.primary) continue;
        infos.emplace(d.v, primary_color(g, report.refined, report.split, d.v));
    }
    for (auto it = infos.begin(); it != infos.end(); ++it) {
        for (auto jt = std::next(it); jt != infos.end(); ++jt) {
            budget.charge();
            VertexId uj = it->first, vj = jt->first;
            const PrimaryColorInfo& ui = it->second;
            const PrimaryColorInfo& vi = jt->second;
            Bitset u_typ_v_spec = ui.typical & vi.special;  // candidates for u_{j-1}
            Bitset v_typ_u_spec = vi.typical & ui.special;  // candidates for v_{j-1}
            u_typ_v_spec.for_each([&](int ujm1) {
                v_typ_u_spec.for_each([&](int vjm1) {
                    if (ujm1 == vjm1) return;
                    budget.charge();
                    JSpecialFourCycle cyc;
                    cyc.vertices = {uj, static_cast<VertexId>(ujm1), vj,
                                    static_cast<VertexId>(vjm1)};
                    cyc.colors = {g.edge_color(uj, ujm1), g.edge_color(ujm1, vj),
                                  g.edge_color(vj, vjm1), g.edge_color(vjm1, uj)};
                    std::vector<ColorId> distinct(cyc.colors.begin(), cyc.colors.end());
                    std::sort(distinct.begin(), distinct.end());
                    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                    cyc.distinct_colors = static_cast<int>(distinct.size());
                    cyc.special_pair_matches = cyc.colors[1] == cyc.colors[3];
                    cyc.conforms = cyc.distinct_colors == 3 && cyc.special_pair_matches;
                    cyc.rainbow_candidate = cyc.distinct_colors == 4;
                    budget.progress++;
                    found.push_back(cyc);
                });
            });
        }
    }
    return found;
}

bool strong_cycle_check(const EdgeColoredGraph& g, const StructureReport& report,
                        const CycleWitness& cycle, VertexId anchor) {
    const int ell = cycle.length();
    int pos = -1;
    for (int k = 0; k < ell; ++k)
        if (cycle.vertices[k] == anchor) pos = k;
    if (pos < 0) throw input_error("anchor does not lie on the cycle");
    int i = report.refined.part_of(anchor);
    if (!report.split.good[i].test(anchor)) return false;
    VertexId closing = cycle.vertices[(pos + ell - 1) % ell];
    if (report.refined.part_of(closing) != (i + 2) % 3) return false;
    if (!g.has_edge(anchor, closing)) return false;
    auto info = primary_color(g, report.refined, report.split, anchor);
    return info.typical.test(closing);
}

Bitset v_high(const Digraph& d, const Rational& beta) {
    if (beta.num < 0) throw input_error("beta must be nonnegative");
    const int n = d.vertex_count();
    Bitset out(n);
    if (n == 0) return out;
    std::int64_t dplus = min_out_degree(d);
    // deg-(v) >= delta+ - n beta^2/2  <=>  2 q^2 (delta+ - deg-) <= n p^2
    for (VertexId v = 0; v < n; ++v) {
        __int128 lhs = static_cast<__int128>(2) * beta.den * beta.den * (dplus - in_degree(d, v));
        __int128 rhs = static_cast<__int128>(n) * beta.num * beta.num;
        if (lhs <= rhs) out.set(v);
    }
    return out;
}

CoreResult positive_indegree_core(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<bool> removed(n, false);
    std::vector<int> indeg(n, 0);
    for (VertexId v = 0; v < n; ++v) indeg[v] = in_degree(d, v);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        VertexId v = queue.back();
        queue.pop_back();
        if (removed[v]) continue;
        removed[v] = true;
        for (VertexId w : d.out_neighbors(v))
            if (!removed[w] && --indeg[w] == 0) queue.push_back(w);
    }

    CoreResult result;
    std::vector<int> position(n, -1);
    for (VertexId v = 0; v < n; ++v)
        if (!removed[v]) {
            position[v] = static_cast<int>(result.kept.size());
            result.kept.push_back(v);
        }
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (auto [u, v] : d.arcs())
        if (position[u] >= 0 && position[v] >= 0) arcs.emplace_back(position[u], position[v]);
    result.core = Digraph(static_cast<int>(result.kept.size()), std::move(arcs));

    result.out_degrees_preserved = true;
    for (std::size_t i = 0; i < result.kept.size(); ++i)
        if (out_degree(result.core, static_cast<VertexId>(i)) != out_degree(d, result.kept[i]))
            result.out_degrees_preserved = false;
    return result;
}

}  // namespace rainbow
