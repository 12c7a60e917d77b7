#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// A generated edge-colored instance together with its construction metadata.
// Colors are vertex ids; the star symbol, when present, is color id n (the
// highest id in the palette).
struct ColoredConstruction {
    EdgeColoredGraph graph;
    TriPartition parts;
    std::vector<std::pair<VertexId, VertexId>> matching;  // kind "matching" only
    std::optional<VertexId> x, y;                         // kind "hard" only
    std::optional<ColorId> star;
};

struct OrientedConstruction {
    Digraph graph;
    TriPartition parts;
    std::optional<VertexId> x, y;  // appendix digraphs only
};

// Complete balanced 3-partite K[V0,V1,V2]; edge {v_i, v_{i+1}} is colored by
// the id of its endpoint in the cyclically next part.  n >= 3.
ColoredConstruction build_cplus(int n);

// The matching-twisted coloring on K[V0,V1,V2] with |V0| = |V1| = m+1:
// star on the matching, partner colors off it.  Requires n = 2 (mod 3), n >= 8.
ColoredConstruction build_matching(int n);

// The modified graph of the hard residue case: x gains its own part's U0, y
// gains U1 and loses U0, stars where the paper places them.
// Requires n = 2 (mod 3), n >= 8.
ColoredConstruction build_hard(int n);

// Complete cyclically oriented 3-partite digraph.  All parts nonempty.
OrientedConstruction build_blowup(int a, int b, int c);

// The two appendix digraphs on U0 u U1 u U2 u {x} u {y}.
OrientedConstruction build_appendix_g1(int s0, int s1, int s2);
OrientedConstruction build_appendix_g2(int s0, int s1, int s2);

// Complete 3-partite graph where each vertex u contributes its own color
// vertex_color[u] to every edge from the previous part.  vertex_color must be
// injective within each part; the identity choice reproduces build_cplus.
EdgeColoredGraph build_canonical(const TriPartition& parts,
                                 const std::vector<ColorId>& vertex_color);
EdgeColoredGraph build_canonical(const TriPartition& parts);

// --- claim checklists -----------------------------------------------------

struct ConstructionSpecDesc {
    std::string kind;  // cplus | matching | hard | blowup | appendix-g1 | appendix-g2 | canonical
    int n = 0;
    std::array<int, 3> sizes{0, 0, 0};  // blowup / appendix kinds
};

struct CheckResult {
    std::string name;
    std::string status;  // pass | fail | vacuous | inconclusive
    std::string detail;
};

struct ConstructionChecklist {
    ConstructionSpecDesc spec;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

// Runs the degree/regularity claims for the construction and the cycle
// presence/absence claims for each requested length.
ConstructionChecklist verify_construction(const ConstructionSpecDesc& spec,
                                          const std::vector<int>& lengths, SearchBudget& budget);

struct AppendixUnionReport {
    int n = 0;
    bool union_identity = false;
    bool symmetric_difference_all_star = false;
    bool g1_isomorphic = false;
    bool g2_isomorphic = false;
    std::string detail;

    bool all_hold() const {
        return union_identity && symmetric_difference_all_star && g1_isomorphic && g2_isomorphic;
    }
};

// Splits the hard construction into the two appendix subgraphs and verifies
// the edge-union identity, the star coloring on the symmetric difference, and
// the colored isomorphism with the determined graphs of the appendix digraphs.
AppendixUnionReport appendix_union_check(int n);

}  // namespace rainbow
