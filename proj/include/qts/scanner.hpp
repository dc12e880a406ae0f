#pragma once

// Empirical congruence search: for a fixed Q_t^s, sweep progressions
// (A, B, m) and report which ones vanish mod m over the sampled range.  A
// candidate is evidence over n_samples values, never a theorem; progressions
// whose sampled values are all exactly zero are a different phenomenon and
// get their own status.

#include "qts/oracle.hpp"
#include "qts/qfactory.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qts {

struct ScanConfig {
    PartitionSpec spec;
    Convention convention = Convention::series;
    std::vector<std::uint64_t> moduli;  // may be empty: exact-zero scan only
    long A_max = 2;
    long n_samples = 20;
    long max_trunc = 50000;

    long required_trunc() const { return A_max * n_samples + A_max; }
    void validate() const;
};

struct ScanRow {
    long A = 0;
    long B = 0;
    std::uint64_t m = 0;  // 0 on identically-zero rows
    long support = 0;
    std::string status;   // "candidate" | "identically-zero"
    bool operator==(const ScanRow&) const = default;
};

// Rows ordered by (A, B, m); deterministic for a fixed config.
std::vector<ScanRow> scan(const ScanConfig& config);

}  // namespace qts
