#pragma once

// Constructors for the named q-series objects: q-Pochhammer products
// (a;q)_inf, the eta-like functions f_k = (q^k;q^k)_inf, Ramanujan's general
// theta function
//
//     f(a,b) = sum_{n in Z} a^{n(n+1)/2} b^{n(n-1)/2}
//            = (-a;ab)_inf (-b;ab)_inf (ab;ab)_inf        (Jacobi),
//
// its classical specializations phi, psi, f(-q), chi, the Rogers-Ramanujan
// quotient R(q), the septic triple A/B/C, the cubic combination a(q), and the
// generating series of the restricted-distinct-parts counts Q_t^s(n).
//
// Every constructor takes a truncation order and an optional modulus; with a
// modulus the series is built directly in the residue ring (the result always
// equals reduce_mod of the exact construction).

#include "qts/series.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace qts {

using Modulus = std::optional<std::uint64_t>;

// (sign * q^start ; q^step)_inf.  Rejects step < 1 and the identically-zero
// case sign = +1, start = 0 (its first factor is 1 - q^0).
struct PochhammerSpec {
    int sign = -1;
    long start = 1;
    long step = 1;
    void validate() const;
};

// f(sign_a * q^exp_a, sign_b * q^exp_b).  Requires exp_a + exp_b >= 1 so the
// bilateral sum is a well-defined formal series.
struct ThetaSpec {
    int sign_a = 1;
    long exp_a = 1;
    int sign_b = 1;
    long exp_b = 1;
    void validate() const;
};

Series pochhammer(const PochhammerSpec& spec, long trunc, Modulus mod = {});

// f_k = (q^k;q^k)_inf, built directly (equality with dilate(f_1, k) is a
// tested property, not the implementation).
Series euler_f(long k, long trunc, Modulus mod = {});

// Bilateral theta sum; covers every n whose exponent fits the truncation.
Series theta_sum(const ThetaSpec& spec, long trunc, Modulus mod = {});

// Jacobi triple product form of the same series.
Series theta_product(const ThetaSpec& spec, long trunc, Modulus mod = {});

enum class SpecialTheta { phi, psi, f_neg, chi, phi_neg, psi_neg, chi_neg };

// phi = f2^5/(f1^2 f4^2), psi = f2^2/f1, f(-q) = f1, chi = f2^2/(f1 f4),
// phi(-q) = f1^2/f2, psi(-q) = f1 f4 / f2, chi(-q) = f1/f2.
Series special(SpecialTheta which, long trunc, Modulus mod = {});
const char* special_name(SpecialTheta which);
std::optional<SpecialTheta> parse_special(const std::string& name);

// R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5)), constant term 1.
Series rr_quotient(long trunc, Modulus mod = {});

// A(q) = f(-q^3,-q^4), B(q) = f(-q^2,-q^5), C(q) = f(-q,-q^6).
struct SepticTriple {
    Series a, b, c;
};
SepticTriple septic_abc(long trunc, Modulus mod = {});

// a(q) = f2^6 f3 / (f1^2 f6^2) + 3q * f1^2 f6^6 / (f2^2 f3^3).
Series cubic_a(long trunc, Modulus mod = {});

// Which reading of the Q_t^s generating function a computation uses.  The
// product form has a genuine ambiguity when s == t-s (mod t): the two
// denominator factors coincide, and applying the factor once (unsquared)
// matches the combinatorial count while applying it twice (squared) matches
// the theta-quotient form below.  Checks report which convention they read.
enum class Convention { series, squared, unsquared };
const char* convention_name(Convention c);
std::optional<Convention> parse_convention(const std::string& name);

// f2 f_t / (f1 f(q^s, q^{t-s})); requires 1 <= s < t.
Series qts_series(long t, long s, long trunc, Modulus mod = {});

// (-q;q)_inf / ((-q^s;q^t)_inf (-q^{t-s};q^t)_inf); when the two denominator
// factors coincide, `squared` selects whether it is applied twice.
Series qts_product(long t, long s, long trunc, bool squared, Modulus mod = {});

// Dispatch on the convention enum.
Series qts_by_convention(long t, long s, long trunc, Convention conv, Modulus mod = {});

}  // namespace qts
