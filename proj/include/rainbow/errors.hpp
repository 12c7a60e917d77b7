#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

// Bad user-supplied data: invalid vertex, malformed file, wrong residue class.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition between modules was violated (e.g. a non-oriented digraph
// passed where orientation is required).
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An enumeration ran out of its node-expansion budget.  Carries how much was
// spent and any partial progress the caller may want to report.
struct budget_error : std::runtime_error {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;
    std::int64_t partial_count = 0;

    budget_error(std::uint64_t limit_, std::uint64_t used_, std::int64_t partial)
        : std::runtime_error("enumeration budget exhausted (" + std::to_string(used_) +
                             " expansions, limit " + std::to_string(limit_) + ")"),
          limit(limit_), used(used_), partial_count(partial) {}
};

}  // namespace rainbow
