#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ageal {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;  // failure description, or a short statistic when ok
};

// desk-scale invariant sweep across every module; deterministic for a fixed
// seed and fast enough to run on every commit
std::vector<CheckResult> run_all_checks(std::uint64_t seed);

}
