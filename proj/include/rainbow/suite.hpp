#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

// One named check of the verification battery.  Every fail carries a concrete
// witness in detail (a cycle, an edge, a degree).
struct SuiteCheck {
    std::string name;
    std::string status;  // pass | fail | vacuous | inconclusive
    std::string detail;
    double seconds = 0;
};

struct VerificationSuite {
    std::vector<SuiteCheck> checks;

    int count(const std::string& status) const {
        int c = 0;
        for (const auto& chk : checks)
            if (chk.status == status) ++c;
        return c;
    }
    bool any_fail() const { return count("fail") > 0; }
};

// The full battery: construction claims for every feasible n <= max_n,
// transform invariants, reversal parity, amenability arithmetic, and the
// appendix checks.  Budget caps node expansions per check; a check that runs
// out is reported inconclusive rather than failing the suite.
VerificationSuite run_paper_suite(int max_n, const std::vector<int>& lengths,
                                  std::uint64_t budget, std::uint64_t seed = 2023);

struct ThresholdReport {
    int n = 0;
    int length = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int palette_size = 0;
    int threshold = 0;       // required min color degree
    int accepted = 0;        // colorings that met the threshold
    int rejected = 0;        // sampling rejections
    int with_rainbow = 0;    // accepted colorings containing a rainbow l-cycle
    double hit_rate = 0;
};

// Samples uniform colorings of K_n from a palette of size ceil((n+5)/3),
// rejecting until the color-degree threshold is met, and records how often a
// rainbow l-cycle appears.  Observational only; nothing is asserted.
ThresholdReport explore_threshold(int n, int length, int trials, std::uint64_t seed);

}  // namespace rainbow
