#pragma once

// Exact truncated formal power series in one variable q.
//
// A Series holds the coefficients of q^0 .. q^trunc, either as exact
// arbitrary-precision integers or, when a modulus m is attached, as canonical
// residues in [0, m).  Binary operations require both operands to live in the
// same ring and return a result truncated to the shorter operand; truncation
// is a precision budget, not a type.  Series are immutable values: every
// operation returns a fresh series, so they can be shared freely across
// threads.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace qts {

// One factor (1 - sign * q^exp) of a Pochhammer-style product.
struct BinomialFactor {
    int sign;
    long exp;
};

// Outcome of comparing two series coefficient-by-coefficient.
struct CompareResult {
    bool equal = true;
    long index = -1;  // smallest mismatching exponent when !equal
    mpz_class lhs;
    mpz_class rhs;
};

class Series {
public:
    // Builds a series from the low coefficients (missing ones are zero,
    // extras beyond trunc are dropped).  Rejects trunc < 0 and modulus < 2.
    static Series make(std::vector<mpz_class> coeffs, long trunc,
                       std::optional<std::uint64_t> modulus = {});

    static Series zero(long trunc, std::optional<std::uint64_t> modulus = {});
    static Series one(long trunc, std::optional<std::uint64_t> modulus = {});

    // c * q^exp
    static Series monomial(const mpz_class& c, long exp, long trunc,
                           std::optional<std::uint64_t> modulus = {});

    long trunc() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::optional<std::uint64_t>& modulus() const { return modulus_; }

    // Coefficient of q^n; throws if n is outside [0, trunc].
    const mpz_class& at(long n) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool is_zero() const;

private:
    Series() = default;
    std::vector<mpz_class> coeffs_;  // size trunc + 1
    std::optional<std::uint64_t> modulus_;

    friend Series add(const Series&, const Series&);
    friend Series sub(const Series&, const Series&);
    friend Series neg(const Series&);
    friend Series mul(const Series&, const Series&);
    friend Series invert(const Series&);
    friend Series dilate(const Series&, long);
    friend Series extract_progression(const Series&, long, long);
    friend Series reduce_mod(const Series&, std::uint64_t);
    friend Series truncate(const Series&, long);
    friend Series mul_binomials(const Series&, const std::vector<BinomialFactor>&);
};

// Coefficient-wise ring operations at truncation min(a.trunc, b.trunc).
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series neg(const Series& a);

// Cauchy product, exact (no overflow: coefficients are big integers).
Series mul(const Series& a, const Series& b);

// Multiplicative inverse.  Exact mode needs constant term +1 or -1; modular
// mode needs the constant term coprime to the modulus.
Series invert(const Series& a);

// Repeated multiplication (square-and-multiply); pow(a, 0) = 1, negative
// exponents go through invert.
Series pow(const Series& a, long e);

// q -> q^k substitution.  Every input coefficient survives: the result has
// truncation k * a.trunc with a_n placed at index k*n.
Series dilate(const Series& a, long k);

// Picks the arithmetic progression m*n + r of exponents: result coefficient
// at n is a_{m n + r}, with truncation floor((a.trunc - r) / m).
Series extract_progression(const Series& a, long m, long r);

// Exact-mode series -> modular-mode copy with canonical residues.
Series reduce_mod(const Series& a, std::uint64_t m);

// true iff coefficients agree at every index <= n (which must not exceed
// either truncation); otherwise identifies the first mismatch.
CompareResult equal_upto(const Series& a, const Series& b, long n);

// Copy with truncation lowered (or zero-extended) to n.
Series truncate(const Series& a, long n);

// a * (1 - sign*q^exp) in O(trunc) — the building block for Pochhammer
// products.  sign is +1 or -1; exp >= 1.
Series mul_binomial(const Series& a, int sign, long exp);

// a * prod_i (1 - sign_i * q^{exp_i}); one pass over the coefficient vector
// per factor, no intermediate copies.
Series mul_binomials(const Series& a, const std::vector<BinomialFactor>& factors);

// Operator sugar over the named operations.
inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator/(const Series& a, const Series& b) { return mul(a, invert(b)); }

}  // namespace qts
