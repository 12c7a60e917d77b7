#include "rainbow/search.hpp"

#include <algorithm>

namespace rainbow {

namespace {

// Backtracking path search anchored at the smallest cycle vertex.  Vertices
// other than the anchor must exceed it, which kills rotations; requiring
// path[1] < path[l-1] at closure kills the reflection.
class UndirectedEnumerator {
public:
    UndirectedEnumerator(const EdgeColoredGraph& g, int length, ColorConstraint constraint,
                         SearchBudget& budget, const CycleVisitor& visit)
        : g_(g), ell_(length), constraint_(constraint), budget_(budget), visit_(visit),
          used_(g.vertex_count()), used_colors_(g.color_count()) {}

    void run() {
        path_.reserve(ell_);
        colors_.reserve(ell_);
        for (VertexId a = 0; a < g_.vertex_count(); ++a) {
            path_.push_back(a);
            used_.set(a);
            if (!extend()) {
                return;
            }
            used_.reset(a);
            path_.pop_back();
        }
    }

private:
    bool extend() {
        budget_.charge();
        VertexId cur = path_.back();
        if (static_cast<int>(path_.size()) == ell_) return close();
        for (const auto& e : g_.incident(cur)) {
            if (e.to <= path_.front() || used_.test(e.to)) continue;
            if (!color_ok(e.color_index)) continue;
            path_.push_back(e.to);
            used_.set(e.to);
            colors_.push_back(e.color_index);
            if (constraint_ == ColorConstraint::Rainbow) used_colors_.set(e.color_index);
            bool keep = extend();
            if (constraint_ == ColorConstraint::Rainbow) used_colors_.reset(e.color_index);
            colors_.pop_back();
            used_.reset(e.to);
            path_.pop_back();
            if (!keep) return false;
        }
        return true;
    }

    bool color_ok(int color_index) const {
        switch (constraint_) {
            case ColorConstraint::None:
                return true;
            case ColorConstraint::ProperlyColored:
                return colors_.empty() || colors_.back() != color_index;
            case ColorConstraint::Rainbow:
                return !used_colors_.test(color_index);
        }
        return true;
    }

    bool close() {
        VertexId last = path_.back(), first = path_.front();
        if (ell_ > 2 && path_[1] >= last) return true;  // reflection dedup
        if (!g_.neighbor_mask(last).test(first)) return true;
        const auto& inc = g_.incident(last);
        auto it = std::lower_bound(
            inc.begin(), inc.end(), first,
            [](const EdgeColoredGraph::IncidentEdge& e, VertexId w) { return e.to < w; });
        int closing = it->color_index;
        switch (constraint_) {
            case ColorConstraint::None:
                break;
            case ColorConstraint::ProperlyColored:
                if (closing == colors_.back() || closing == colors_.front()) return true;
                break;
            case ColorConstraint::Rainbow:
                if (used_colors_.test(closing)) return true;
                break;
        }
        budget_.progress++;
        CycleWitness w;
        w.vertices = path_;
        w.colors.reserve(ell_);
        for (int ci : colors_) w.colors.push_back(g_.color_id(ci));
        w.colors.push_back(g_.color_id(closing));
        w.canonical = true;
        return visit_(w);
    }

    const EdgeColoredGraph& g_;
    const int ell_;
    const ColorConstraint constraint_;
    SearchBudget& budget_;
    const CycleVisitor& visit_;
    std::vector<VertexId> path_;
    std::vector<int> colors_;  // dense color indexes along the path
    Bitset used_;
    Bitset used_colors_;
};

class DirectedEnumerator {
public:
    DirectedEnumerator(const Digraph& d, int length, SearchBudget& budget,
                       const CycleVisitor& visit)
        : d_(d), ell_(length), budget_(budget), visit_(visit), used_(d.vertex_count()) {}

    void run() {
        path_.reserve(ell_);
        for (VertexId a = 0; a < d_.vertex_count(); ++a) {
            path_.push_back(a);
            used_.set(a);
            if (!extend()) return;
            used_.reset(a);
            path_.pop_back();
        }
    }

private:
    bool extend() {
        budget_.charge();
        VertexId cur = path_.back();
        if (static_cast<int>(path_.size()) == ell_) {
            if (!d_.out_mask(cur).test(path_.front())) return true;
            budget_.progress++;
            CycleWitness w;
            w.vertices = path_;
            w.canonical = true;
            return visit_(w);
        }
        for (VertexId to : d_.out_neighbors(cur)) {
            if (to <= path_.front() || used_.test(to)) continue;
            path_.push_back(to);
            used_.set(to);
            bool keep = extend();
            used_.reset(to);
            path_.pop_back();
            if (!keep) return false;
        }
        return true;
    }

    const Digraph& d_;
    const int ell_;
    SearchBudget& budget_;
    const CycleVisitor& visit_;
    std::vector<VertexId> path_;
    Bitset used_;
};

void check_colored_length(int length) {
    if (length < 3) throw input_error("cycle length must be at least 3, got " + std::to_string(length));
}

void check_directed_length(int length) {
    if (length < 2)
        throw input_error("directed cycle length must be at least 2, got " + std::to_string(length));
}

std::optional<CycleWitness> first_of(const EdgeColoredGraph& g, int length, ColorConstraint cc,
                                     SearchBudget* budget) {
    SearchBudget local;
    std::optional<CycleWitness> found;
    enumerate_cycles(g, length, cc, budget ? *budget : local, [&](const CycleWitness& w) {
        found = w;
        return false;
    });
    return found;
}

std::int64_t count_of(const EdgeColoredGraph& g, int length, ColorConstraint cc,
                      SearchBudget* budget) {
    SearchBudget local;
    std::int64_t count = 0;
    enumerate_cycles(g, length, cc, budget ? *budget : local, [&](const CycleWitness&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace

void enumerate_cycles(const EdgeColoredGraph& g, int length, ColorConstraint constraint,
                      SearchBudget& budget, const CycleVisitor& visit) {
    check_colored_length(length);
    UndirectedEnumerator(g, length, constraint, budget, visit).run();
}

void enumerate_directed_cycles(const Digraph& d, int length, SearchBudget& budget,
                               const CycleVisitor& visit) {
    check_directed_length(length);
    DirectedEnumerator(d, length, budget, visit).run();
}

std::optional<CycleWitness> find_rainbow_cycle(const EdgeColoredGraph& g, int length,
                                               SearchBudget* budget) {
    return first_of(g, length, ColorConstraint::Rainbow, budget);
}

std::int64_t count_rainbow_cycles(const EdgeColoredGraph& g, int length, SearchBudget* budget) {
    return count_of(g, length, ColorConstraint::Rainbow, budget);
}

std::optional<CycleWitness> find_properly_colored_cycle(const EdgeColoredGraph& g, int length,
                                                        SearchBudget* budget) {
    return first_of(g, length, ColorConstraint::ProperlyColored, budget);
}

std::int64_t count_properly_colored_cycles(const EdgeColoredGraph& g, int length,
                                           SearchBudget* budget) {
    return count_of(g, length, ColorConstraint::ProperlyColored, budget);
}

std::int64_t count_cycles(const EdgeColoredGraph& g, int length, SearchBudget* budget) {
    return count_of(g, length, ColorConstraint::None, budget);
}

std::optional<CycleWitness> find_directed_cycle(const Digraph& d, int length,
                                                SearchBudget* budget) {
    SearchBudget local;
    std::optional<CycleWitness> found;
    enumerate_directed_cycles(d, length, budget ? *budget : local, [&](const CycleWitness& w) {
        found = w;
        return false;
    });
    return found;
}

std::int64_t count_directed_cycles(const Digraph& d, int length, SearchBudget* budget) {
    SearchBudget local;
    std::int64_t count = 0;
    enumerate_directed_cycles(d, length, budget ? *budget : local, [&](const CycleWitness&) {
        ++count;
        return true;
    });
    return count;
}

namespace {

using BoolMatrix = std::vector<Bitset>;  // row u = successors of u

BoolMatrix multiply(const BoolMatrix& a, const BoolMatrix& b, int n) {
    BoolMatrix c(n, Bitset(n));
    for (int i = 0; i < n; ++i)
        a[i].for_each([&](int j) { c[i] |= b[j]; });
    return c;
}

// Recovers one u->w walk of the given length from the product chain
// mats[0] * mats[1] * ... (each factor a power of the adjacency matrix of
// width widths[k]), by splitting at an intermediate vertex.
void reconstruct(const std::vector<const BoolMatrix*>& mats, const std::vector<int>& widths,
                 std::size_t lo, std::size_t hi, VertexId u, VertexId w, int n,
                 const std::vector<BoolMatrix>& powers, std::vector<VertexId>& out);

// Walk of length 2^k from u to w using squaring-chain entries.
void reconstruct_power(int k, VertexId u, VertexId w, int n,
                       const std::vector<BoolMatrix>& powers, std::vector<VertexId>& out) {
    if (k == 0) {
        out.push_back(w);
        return;
    }
    for (int mid = 0; mid < n; ++mid) {
        if (powers[k - 1][u].test(mid) && powers[k - 1][mid].test(w)) {
            reconstruct_power(k - 1, u, mid, n, powers, out);
            reconstruct_power(k - 1, mid, w, n, powers, out);
            return;
        }
    }
    throw contract_error("walk reconstruction failed");  // unreachable if powers are consistent
}

void reconstruct(const std::vector<const BoolMatrix*>& mats, const std::vector<int>& exps,
                 std::size_t lo, std::size_t hi, VertexId u, VertexId w, int n,
                 const std::vector<BoolMatrix>& powers, std::vector<VertexId>& out) {
    if (hi - lo == 1) {
        reconstruct_power(exps[lo], u, w, n, powers, out);
        return;
    }
    // product of suffix mats[lo+1..hi)
    BoolMatrix suffix = *mats[lo + 1];
    for (std::size_t k = lo + 2; k < hi; ++k) suffix = multiply(suffix, *mats[k], n);
    for (int mid = 0; mid < n; ++mid) {
        if ((*mats[lo])[u].test(mid) && suffix[mid].test(w)) {
            reconstruct_power(exps[lo], u, mid, n, powers, out);
            reconstruct(mats, exps, lo + 1, hi, mid, w, n, powers, out);
            return;
        }
    }
    throw contract_error("walk reconstruction failed");
}

}  // namespace

ClosedWalk has_closed_walk(const Digraph& d, int length) {
    if (length < 1) throw input_error("walk length must be positive");
    int n = d.vertex_count();
    ClosedWalk result;
    if (n == 0) return result;

    std::vector<BoolMatrix> powers;  // powers[k] = A^(2^k)
    BoolMatrix base(n, Bitset(n));
    for (int u = 0; u < n; ++u) base[u] = d.out_mask(u);
    powers.push_back(base);
    for (int k = 1; (1LL << k) <= length; ++k)
        powers.push_back(multiply(powers[k - 1], powers[k - 1], n));

    std::vector<const BoolMatrix*> factors;
    std::vector<int> exps;
    for (int k = static_cast<int>(powers.size()) - 1; k >= 0; --k) {
        if (length & (1LL << k)) {
            factors.push_back(&powers[k]);
            exps.push_back(k);
        }
    }
    BoolMatrix prod = *factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) prod = multiply(prod, *factors[k], n);

    for (int v = 0; v < n; ++v) {
        if (prod[v].test(v)) {
            result.exists = true;
            result.vertices.push_back(v);
            reconstruct(factors, exps, 0, factors.size(), v, v, n, powers, result.vertices);
            result.vertices.pop_back();  // drop the repeated start
            return result;
        }
    }
    return result;
}

ReversalProfile reversal_profile(const CycleWitness& cycle, const TriPartition& parts) {
    const int ell = cycle.length();
    if (ell < 3) throw input_error("reversal profile needs a cycle of length at least 3");
    ReversalProfile profile;
    profile.edge_types.reserve(ell);
    for (int k = 0; k < ell; ++k) {
        VertexId a = cycle.vertices[k];
        VertexId b = cycle.vertices[(k + 1) % ell];
        int pa = parts.part_of(a), pb = parts.part_of(b);
        if (pa == pb)
            throw input_error("cycle edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") lies inside part " + std::to_string(pa) +
                              "; edge type undefined");
        // type i for an edge between parts i and i+1
        int type = (pb == (pa + 1) % 3) ? pa : pb;
        profile.edge_types.push_back(type);
    }
    for (int k = 0; k < ell; ++k) {
        int t0 = profile.edge_types[k];
        int t1 = profile.edge_types[(k + 1) % ell];
        if (t0 != t1) continue;
        VertexId shared = cycle.vertices[(k + 1) % ell];
        ReversalKind kind = parts.part_of(shared) == (t0 + 1) % 3 ? ReversalKind::Backward
                                                                  : ReversalKind::Forward;
        profile.reversals.emplace_back(k, kind);
        (kind == ReversalKind::Backward ? profile.backward : profile.forward)++;
    }
    if (profile.backward != profile.forward)
        throw contract_error("backward/forward reversal counts diverged");
    return profile;
}

}  // namespace rainbow
