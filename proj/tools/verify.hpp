#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace rk2::cli {

struct VerifyOptions {
    std::string golden_dir;
    bool regenerate = false;
    int tight_order = 12;  // cap on the weighted order of the ks vs tight sweep
    int greedy_max = 4;   // d1, d2 range of the greedy vs compatible sweep
    int theta_max = 3;    // d1, d2 range of the theta vs greedy sweep
};

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;  // first mismatch, or a short summary
};

std::vector<CheckResult> run_verify(const RunConfig &cfg, const VerifyOptions &opt);
void write_goldens(const std::string &dir);
std::string format_report(const std::vector<CheckResult> &rs);

}  // namespace rk2::cli
