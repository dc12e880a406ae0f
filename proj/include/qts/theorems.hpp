#pragma once

// The congruence families for Q_t^s(n), instantiated as finite checkable
// claims.  A claim fixes a partition spec (t, s), a progression A n + B, a
// relation (vanishes mod m / vanishes exactly / equals p_o(n) / congruent to
// b_k(n) mod m) and the convention under which the Q values are read.
//
// Collision families (t = 2s, where the product form's two denominator
// factors coincide) are checkable under all three conventions; the series
// convention is the one the congruence proofs manipulate, so it is the gated
// verdict and the others are recorded observations.

#include "qts/oracle.hpp"
#include "qts/qfactory.hpp"
#include "qts/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qts {

enum class Family {
    T31,   // Q_{2a}^a(p^{2b+1}(pn+j) + (2a+1)(p^{2b+2}-1)/24) == 0 (mod 2)
    T32,   // Q_{4a}^a(p^{2b+1}(pn+j) + (a+1)(p^{2b+2}-1)/24)  == 0 (mod 2)
    T33,   // Q_{5a}^5(5n+i) == 0 (mod 2), i in {3,4}
    T34,   // Q_{7a}^7(7n+i) == 0 (mod 2), i in {3,4,6}
    T35a,  // Q_3^2(3n+1) = Q_3^2(3n+2) = 0
    T35b,  // Q_3^2(3n) = p_o(n)   (the printed 2n indexing is kept as a
           //                       negative control behind as_printed)
    T36a,  // Q_4^2(n) == [q^n] psi(q) f_2 (mod 4)
    T36b,  // Q_4^2(p(pn+j) + 5(p^2-1)/24) == 0 (mod 4); the printed /12
           //                       offset is kept behind as_printed
    T37a,  // Q_4^3(2n+1) = 0
    T37b,  // Q_4^3(2n) = p_o(n)
    T38,   // Q_6^2(n) == b_6(n) (mod 2)
    T39,   // Q_12^2(3n+2) == 0 (mod 2)
};

const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

struct TheoremParams {
    long alpha = 0;
    long p = 0;
    long beta = 0;
    bool as_printed = false;  // T35b / T36b: use the printed (failing) form
};

enum class Relation { congruent_zero, exact_zero, equals_po, equals_b_nondiv_mod };

struct CongruenceClaim {
    Family family;
    TheoremParams params;
    long j = 0;  // j (T31/T32/T36b) or i (T33/T34); 0 elsewhere
    PartitionSpec spec;
    long A = 1, B = 0;
    Relation relation = Relation::congruent_zero;
    std::uint64_t modulus = 0;  // congruent_zero / equals_b_nondiv_mod
    long nondiv_k = 0;          // T38
    Convention convention = Convention::series;

    std::string id() const;
    long required_trunc(long n_max) const { return A * n_max + B; }
};

// Concrete claims for a family; throws (naming the failed predicate) when the
// applicability conditions do not hold, e.g. a Legendre condition or the
// alpha = 1 cases of T33/T34 whose theta spec would leave the formal-series
// domain.
std::vector<CongruenceClaim> instantiate(Family f, const TheoremParams& params);

struct ClaimJob {
    CongruenceClaim claim;
    long n_max = 50;
    bool gated = true;  // false: verdict is recorded but not part of the gate
};

struct RunOptions {
    long max_trunc = 50000;  // claims needing more are reported as skipped
    int threads = 1;         // 0 = hardware concurrency
};

// Verifies claims against shared Q tables (one table per (t, s, convention,
// modulus), expanded once to the largest truncation any claim needs).
// Reports come back in claim order regardless of execution order.
std::vector<VerificationReport> run_claims(const std::vector<ClaimJob>& jobs,
                                           const RunOptions& opts = {});

VerificationReport verify_claim(const CongruenceClaim& claim, long n_max,
                                long max_trunc = 50000);

// The beta = 0 congruence each inductive family starts from:
//   T31: Q_{2a}^a == f_1 f_{2a} (mod 2)
//   T32: Q_{4a}^a == f_1 f_a   (mod 2)
//   T36a: Q_4^2   == psi(q) f_2 (mod 4)
VerificationReport verify_base_congruence(Family f, const TheoremParams& params, long n_max,
                                          Convention conv = Convention::series);

// The default desk-scale verification plan: every family instance with the
// smallest admissible primes, base congruences at 500, beta = 0 claims at
// n_max 50, beta = 1 claims at n_max 5 (modular mode), exact families at 300.
// Collision families appear under all three conventions, non-series ones
// ungated.
struct DeskPlan {
    std::vector<ClaimJob> claims;
    struct BaseCheck {
        Family family;
        TheoremParams params;
        long n_max;
    };
    std::vector<BaseCheck> bases;
};
DeskPlan desk_instance_set();

}  // namespace qts
