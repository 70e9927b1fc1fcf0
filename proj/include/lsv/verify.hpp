#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lsv {

struct TrialRecord {
    std::uint64_t seed = 0;
    std::string status;  // "pass" | "fail" | "inconclusive"
    std::string detail;
};

struct SuiteReport {
    std::string id;
    std::map<std::string, long> params;
    std::uint64_t master_seed = 0;
    int trials = 0;  // total members, fixed members included
    int passes = 0;
    int failures = 0;
    int inconclusive = 0;
    std::vector<TrialRecord> records;

    bool ok() const { return failures == 0 && trials > 0; }
};

// Identifiers of the statement-check suites: thm1..thm5, thm6_lemma.
std::vector<std::string> verify_ids();

// Runs a seeded statement-check suite. `random_trials` counts the seeded
// members; a handful of fixed members is appended by some suites. Optional
// params restrict the shape grid (keys depend on the suite: n, k, a, w,
// span, degree). `threads` <= 0 reads LSV_THREADS (default 1); reports are
// byte-identical for every thread count.
SuiteReport verify_theorem(const std::string& id, std::uint64_t master_seed,
                           int random_trials,
                           const std::map<std::string, long>& params = {},
                           int threads = 0);

}  // namespace lsv
