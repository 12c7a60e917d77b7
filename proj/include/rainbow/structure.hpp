#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/rational.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// Default slack for analysis runs.  The second constant is the largest slack
// at which every quartic bound of the structural decomposition stays binding;
// desk-scale instances never get near it.
inline const Rational kDefaultAnalysisLambda{1, 100};
inline const Rational kBindingLambdaZero{1, 1'048'576'000'000'000'000LL};  // (1/32000)^4

// Result of testing a partition against the cyclic density thresholds.
// extremal_at is the smallest lambda at which the partition qualifies,
// clamped at zero.
struct ExtremalityResult {
    TriPartition partition;
    std::array<std::int64_t, 3> cyclic_counts{};  // e(V_i, V_{i+1})
    Rational min_cyclic_density;                  // min_i e(V_i,V_{i+1}) / n^2
    Rational extremal_at;                         // max(0, 1/9 - min density)
};

// Checks e(V_i, V_{i+1}) >= (1/9 - lambda) n^2 for all i, exactly.
std::pair<bool, ExtremalityResult> is_lambda_extremal(const Digraph& d, const TriPartition& parts,
                                                      const Rational& lambda);

enum class PartitionSearchMode { Exhaustive, LocalSearch };

struct PartitionSearchResult {
    std::optional<ExtremalityResult> found;
    bool complete = false;  // true: absence is a proof at this lambda
    std::uint64_t evaluated = 0;
};

// Exhaustive mode scans all 3^n assignments (requires 3^n <= budget) and is
// complete; local-search mode runs steepest-ascent single-vertex moves with
// seeded random restarts and reports absence as inconclusive.
PartitionSearchResult find_extremal_partition(const Digraph& d, const Rational& lambda,
                                              PartitionSearchMode mode, std::uint64_t budget,
                                              std::uint64_t seed = 0);

struct ExtremalCycleCountReport {
    int length = 0;
    int k = 0;  // length / 3
    std::int64_t total_cycles = 0;
    std::int64_t part_balanced_cycles = 0;  // meeting each part exactly k times
    std::int64_t falling_factorial_product = 0;
    bool is_complete_blowup = false;
    // For complete blow-ups: k * part_balanced_cycles == product (each cycle
    // appears k times among the tuple selections the product counts).
    bool product_matches = false;
};

ExtremalCycleCountReport extremal_cycle_count_check(const Digraph& d, const TriPartition& parts,
                                                    int length, SearchBudget* budget = nullptr);

// --- good/bad decomposition ----------------------------------------------

struct GoodBadSplit {
    std::array<Bitset, 3> good;  // indexed by part
    std::array<Bitset, 3> bad;
};

// A vertex of V_i is good when it sees distinct colors on nearly all of
// V_{i+1} and has edges to nearly all of V_{i-1}; thresholds lambda^(1/4) n
// are compared exactly.
GoodBadSplit classify_good_vertices(const EdgeColoredGraph& g, const TriPartition& parts,
                                    const Rational& lambda);

// Good vertices stay; each bad vertex moves to U_{j-1} where j maximizes its
// color degree into the good core of V_j (ties to the smallest j).
TriPartition refine_partition(const EdgeColoredGraph& g, const TriPartition& parts,
                              const GoodBadSplit& split);

struct PrimaryColorInfo {
    ColorId primary = -1;
    Bitset typical;  // members of U_{i-1} joined by a primary-colored edge
    Bitset special;
};

// Most frequent color on the edges from u into U_{i-1}, ties to the smallest
// color id.  u must be a good vertex of U_i with at least one such edge.
PrimaryColorInfo primary_color(const EdgeColoredGraph& g, const TriPartition& refined,
                               const GoodBadSplit& split, VertexId u);

enum class BoundStatus { Holds, Fails, Vacuous };

struct BoundCheck {
    std::string name;
    int part = 0;
    double lhs = 0;  // display values; verdicts come from exact arithmetic
    double rhs = 0;
    BoundStatus status = BoundStatus::Vacuous;
    std::optional<VertexId> witness;  // worst vertex for per-vertex bounds
};

struct AmenabilityVerdict {
    int j = 0;
    bool delta_nonnegative = false;
    bool internal_bound = false;  // |I_{j+1}| <= 2 delta_j
    bool size_bound = false;      // |U_{j+2}| <= m + 2 delta_j + 2
    bool amenable() const { return delta_nonnegative && internal_bound && size_bound; }
};

struct StructureReport {
    Rational lambda;
    int n = 0;
    int m = 0;  // floor(n/3)
    TriPartition initial;
    TriPartition refined;
    GoodBadSplit split;                       // on the initial partition
    std::array<std::vector<VertexId>, 3> u_good, u_bad;
    std::array<std::vector<VertexId>, 3> internal_bad, external_bad;
    std::array<int, 3> u_hat_size{};
    std::array<int, 3> delta{};
    std::array<AmenabilityVerdict, 3> amenability{};
    std::vector<int> amenable;  // indices satisfying all three conclusions

    struct GoodVertexDetail {
        VertexId v = 0;
        std::optional<ColorId> primary;  // absent when the backward side is empty
        int typical_count = 0;
        int special_count = 0;
        std::vector<VertexId> special;
    };
    std::array<std::vector<GoodVertexDetail>, 3> good_detail;

    std::vector<BoundCheck> bounds;
};

StructureReport structure_report(const EdgeColoredGraph& g, const TriPartition& parts,
                                 const Rational& lambda);

// Pure size arithmetic behind the amenability observation; exposed so the
// property can be tested on arbitrary bucket sizes.  sizes[j] = {good,
// internal bad, external bad} for part j; n is their total.
std::array<AmenabilityVerdict, 3> amenability_verdicts(
    const std::array<std::array<int, 3>, 3>& sizes, int n);

struct JSpecialFourCycle {
    std::array<VertexId, 4> vertices;  // u_j, u_{j-1}, v_j, v_{j-1} in cycle order
    std::array<ColorId, 4> colors;     // edge colors in cycle order
    int distinct_colors = 0;
    bool special_pair_matches = false;  // the two special edges share a color
    bool conforms = false;              // exactly three colors, special pair equal
    bool rainbow_candidate = false;     // all four distinct
};

// All j-special 4-cycles: typical edges from two good U_j vertices crossed
// with special edges to the same pair of U_{j-1} vertices.
std::vector<JSpecialFourCycle> find_j_special_4cycles(const EdgeColoredGraph& g,
                                                      const StructureReport& report, int j,
                                                      SearchBudget& budget);

// True when the anchored cycle is strong: the anchor is a good vertex of some
// U_i and its predecessor on the cycle is a typical neighbor in U_{i-1}.
bool strong_cycle_check(const EdgeColoredGraph& g, const StructureReport& report,
                        const CycleWitness& cycle, VertexId anchor);

// Vertices whose in-degree is at least delta+(D) - n beta^2 / 2, exactly.
Bitset v_high(const Digraph& d, const Rational& beta);

struct CoreResult {
    Digraph core;                  // induced on the surviving vertices
    std::vector<VertexId> kept;    // original ids, ascending
    bool out_degrees_preserved = false;  // survivors keep their full out-neighborhoods
};

// Iteratively deletes in-degree-zero vertices; the result is the unique
// maximal induced subgraph with min in-degree >= 1.
CoreResult positive_indegree_core(const Digraph& d);

}  // namespace rainbow
