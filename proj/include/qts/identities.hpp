#pragma once

// Executable catalog of theta-function identities and congruence tools.
// Each entry names an identity; verify() expands both sides to a truncation
// bound and compares coefficients exactly (congruence entries compare in the
// stated residue ring).

#include "qts/report.hpp"
#include "qts/series.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qts {

struct IdentityId {
    enum class Kind {
        E_phi,          // phi(q):   theta sum = f2^5/(f1^2 f4^2)
        E_psi,          // psi(q):   theta sum = f2^2/f1
        E_f_neg,        // f(-q):    theta sum = f1
        E_chi,          // chi(q):   (-q;q^2)_inf = f2^2/(f1 f4)
        E_phi_neg,      // phi(-q) = f1^2/f2
        E_psi_neg,      // psi(-q) = f1 f4/f2
        E_chi_neg,      // chi(-q) = f1/f2 = (q;q^2)_inf
        E_euler_pd_po,  // (-q;q)_inf = 1/(q;q^2)_inf
        L21_f_qq2,      // f(q,q^2) = phi(-q^3)/chi(-q)
        L22_f_qq5,      // f(q,q^5) = psi(-q^3) chi(q)
        L23_f1_pdissect,   // p-dissection of f1 (prime p >= 5)
        L24_psi_pdissect,  // p-dissection of psi (odd prime p)
        L25_septic,     // f1 = f49 (B7/C7 - q A7/B7 - q^2 + q^5 C7/A7)
        L26_quintic,    // f1 = f25 (R(q^5) - q - q^2 R(q^5)^{-1})
        L27_cubic,      // f1^3 = a(q^3) - 3q f9^3
        C_t7,           // f_r^{2m} == f_{2r}^m      (mod 2)
        C_v7,           // f_r^{4m} == f_{2r}^{2m}   (mod 4)
        L28_fqq2_mod2,  // f(q,q^2) == f1            (mod 2)
    };

    Kind kind;
    long p = 0;  // L23 (p >= 5), L24 (odd p)
    long r = 0, m = 0;  // C_t7 / C_v7 exponent parameters

    std::string name() const;
    static std::optional<IdentityId> parse(const std::string& name, long p, long r, long m);
};

// Expands both sides and compares.  Refuses trunc < 10 (an identity checked
// to order 0 is vacuous).  Dissection entries also check their side
// conditions exhaustively: the finite-sum exponent classes mod p avoid the
// class of the tail term.
VerificationReport verify(const IdentityId& id, long trunc);

// Same check with +q^exp added to the right-hand side before comparing; used
// as a negative control (the report must fail at exactly `exp`).
VerificationReport verify_perturbed(const IdentityId& id, long trunc, long perturb_exp);

// Right-hand side of the p-dissection of f1:
//   sum over k in [-(p-1)/2, (p-1)/2], k != e, of
//     (-1)^k q^{(3k^2+k)/2} f(-q^{(3p^2+(6k+1)p)/2}, -q^{(3p^2-(6k+1)p)/2})
//   + (-1)^e q^{(p^2-1)/24} f_{p^2},
// where e = (p-1)/6 when p == 1 (mod 6) and e = (-p-1)/6 when p == 5 (mod 6).
Series f1_pdissection_rhs(long p, long trunc);

// Right-hand side of the p-dissection of psi:
//   sum over m in [0, (p-3)/2] of
//     q^{(m^2+m)/2} f(q^{(p^2+(2m+1)p)/2}, q^{(p^2-(2m+1)p)/2})
//   + q^{(p^2-1)/8} psi(q^{p^2}).
Series psi_pdissection_rhs(long p, long trunc);

// Legendre symbol (a/p) via Euler's criterion; p must be an odd prime.
int legendre(const mpz_class& a, long p);

bool is_prime(long n);

// The full catalog with per-entry default truncations.
struct CatalogEntry {
    IdentityId id;
    long trunc;
};
std::vector<CatalogEntry> default_catalog();

}  // namespace qts
