#include "qts/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace qts {
namespace {

void require_nonneg(long n) {
    if (n < 0) throw std::invalid_argument("partition argument must be >= 0");
}

// 0/1-knapsack: each allowed part used at most once.
std::vector<mpz_class> dp_distinct(long n_max, const std::vector<long>& parts) {
    std::vector<mpz_class> dp(n_max + 1);
    dp[0] = 1;
    for (long part : parts)
        for (long v = n_max; v >= part; --v) dp[v] += dp[v - part];
    return dp;
}

// unbounded knapsack: parts may repeat.
std::vector<mpz_class> dp_unbounded(long n_max, const std::vector<long>& parts) {
    std::vector<mpz_class> dp(n_max + 1);
    dp[0] = 1;
    for (long part : parts)
        for (long v = part; v <= n_max; ++v) dp[v] += dp[v - part];
    return dp;
}

}  // namespace

void PartitionSpec::validate() const {
    if (t < 1 || s < 1 || s > t)
        throw std::invalid_argument("partition spec needs 1 <= s <= t");
}

bool PartitionSpec::part_allowed(long part) const {
    const long r = part % t;
    return r != s % t && r != (t - s) % t;
}

std::vector<mpz_class> table_qts(const PartitionSpec& spec, long n_max) {
    spec.validate();
    require_nonneg(n_max);
    std::vector<long> parts;
    for (long p = 1; p <= n_max; ++p)
        if (spec.part_allowed(p)) parts.push_back(p);
    return dp_distinct(n_max, parts);
}

std::vector<mpz_class> table_p(long n_max) {
    require_nonneg(n_max);
    std::vector<long> parts;
    for (long p = 1; p <= n_max; ++p) parts.push_back(p);
    return dp_unbounded(n_max, parts);
}

std::vector<mpz_class> table_pd(long n_max) {
    require_nonneg(n_max);
    std::vector<long> parts;
    for (long p = 1; p <= n_max; ++p) parts.push_back(p);
    return dp_distinct(n_max, parts);
}

std::vector<mpz_class> table_po(long n_max) {
    require_nonneg(n_max);
    std::vector<long> parts;
    for (long p = 1; p <= n_max; p += 2) parts.push_back(p);
    return dp_unbounded(n_max, parts);
}

std::vector<mpz_class> table_b_nondiv(long n_max, long k) {
    require_nonneg(n_max);
    if (k < 2) throw std::invalid_argument("b_k needs k >= 2");
    std::vector<long> parts;
    for (long p = 1; p <= n_max; ++p)
        if (p % k != 0) parts.push_back(p);
    return dp_unbounded(n_max, parts);
}

mpz_class count_qts(const PartitionSpec& spec, long n) { return table_qts(spec, n)[n]; }
mpz_class count_p(long n) { return table_p(n)[n]; }
mpz_class count_pd(long n) { return table_pd(n)[n]; }
mpz_class count_po(long n) { return table_po(n)[n]; }
mpz_class count_b_nondiv(long n, long k) { return table_b_nondiv(n, k)[n]; }

std::vector<std::vector<long>> qts_witnesses(const PartitionSpec& spec, long n) {
    spec.validate();
    require_nonneg(n);
    if (n > 40) throw std::invalid_argument("witness enumeration is capped at n <= 40");
    std::vector<std::vector<long>> out;
    std::vector<long> acc;
    // largest part first gives the lists in decreasing lexicographic order
    auto rec = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.push_back(acc);
            return;
        }
        for (long part = std::min(remaining, max_part); part >= 1; --part) {
            if (!spec.part_allowed(part)) continue;
            acc.push_back(part);
            self(self, remaining - part, part - 1);
            acc.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace qts
