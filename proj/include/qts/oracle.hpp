#pragma once

// Brute-force partition counting by dynamic programming.  These counts are
// the ground truth the series coefficients are judged against; the whole
// value of this module is that it shares no code with the series expansion
// path (one-dimensional knapsack passes over explicit part lists).

#include <gmpxx.h>

#include <vector>

namespace qts {

// Q_t^s(n): partitions of n into distinct parts, none congruent to s or t-s
// modulo t.  s = t is allowed and forbids multiples of t (the forbidden
// residue set is {s mod t, (t-s) mod t}, a one-element set in that case and
// when t = 2s).
struct PartitionSpec {
    long t = 1;
    long s = 1;
    void validate() const;
    bool part_allowed(long part) const;
};

mpz_class count_qts(const PartitionSpec& spec, long n);
mpz_class count_p(long n);        // unrestricted partitions
mpz_class count_pd(long n);       // distinct parts
mpz_class count_po(long n);       // odd parts
mpz_class count_b_nondiv(long n, long k);  // no part divisible by k (k >= 2)

// Table variants: one DP pass producing all values 0..n_max.
std::vector<mpz_class> table_qts(const PartitionSpec& spec, long n_max);
std::vector<mpz_class> table_p(long n_max);
std::vector<mpz_class> table_pd(long n_max);
std::vector<mpz_class> table_po(long n_max);
std::vector<mpz_class> table_b_nondiv(long n_max, long k);

// Debug enumerator: the actual partitions counted by count_qts, parts in
// decreasing order, lists in decreasing lexicographic order.  Capped at
// n <= 40 (witness lists are for eyeballing small cases).
std::vector<std::vector<long>> qts_witnesses(const PartitionSpec& spec, long n);

}  // namespace qts
