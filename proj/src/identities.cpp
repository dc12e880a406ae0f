#include "qts/identities.hpp"

#include "qts/qfactory.hpp"

#include <chrono>
#include <stdexcept>

namespace qts {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// signed tail index e = (+-p - 1)/6 following the case split on p mod 6
long branch6(long p) { return p % 6 == 1 ? (p - 1) / 6 : (-p - 1) / 6; }

int parity_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

Series q_shift(const Series& a, long e, long trunc, Modulus mod) {
    return mul(Series::monomial(1, e, trunc, mod), truncate(a, trunc));
}

void require_l23_prime(long p) {
    if (p < 5 || !is_prime(p))
        throw std::invalid_argument("f1 p-dissection needs a prime p >= 5 (got " +
                                    std::to_string(p) + ")");
}

void require_l24_prime(long p) {
    if (p < 3 || !is_prime(p))
        throw std::invalid_argument("psi p-dissection needs an odd prime (got " +
                                    std::to_string(p) + ")");
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    mpz_class z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

int legendre(const mpz_class& a, long p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("Legendre symbol needs an odd prime (got " +
                                    std::to_string(p) + ")");
    mpz_class pz(p), e((p - 1) / 2), r;
    mpz_powm(r.get_mpz_t(), mpz_class(a % pz).get_mpz_t(), e.get_mpz_t(), pz.get_mpz_t());
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

Series f1_pdissection_rhs(long p, long trunc) {
    require_l23_prime(p);
    const long e = branch6(p);
    Series acc = Series::zero(trunc);
    for (long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
        if (k == e) continue;
        const long pre = (3 * k * k + k) / 2;
        if (pre > trunc) continue;
        const ThetaSpec spec{-1, (3 * p * p + (6 * k + 1) * p) / 2,
                             -1, (3 * p * p - (6 * k + 1) * p) / 2};
        Series term = q_shift(theta_sum(spec, trunc), pre, trunc, {});
        acc = parity_sign(k) > 0 ? add(acc, term) : sub(acc, term);
    }
    const long off = (p * p - 1) / 24;
    if (off <= trunc) {
        Series tail = q_shift(dilate(euler_f(1, trunc / (p * p)), p * p), off, trunc, {});
        acc = parity_sign(e) > 0 ? add(acc, tail) : sub(acc, tail);
    }
    return acc;
}

Series psi_pdissection_rhs(long p, long trunc) {
    require_l24_prime(p);
    Series acc = Series::zero(trunc);
    for (long m = 0; m <= (p - 3) / 2; ++m) {
        const long pre = (m * m + m) / 2;
        if (pre > trunc) continue;
        const ThetaSpec spec{1, (p * p + (2 * m + 1) * p) / 2,
                             1, (p * p - (2 * m + 1) * p) / 2};
        acc = add(acc, q_shift(theta_sum(spec, trunc), pre, trunc, {}));
    }
    const long off = (p * p - 1) / 8;
    if (off <= trunc) {
        Series tail = q_shift(dilate(special(SpecialTheta::psi, trunc / (p * p)), p * p),
                              off, trunc, {});
        acc = add(acc, tail);
    }
    return acc;
}

std::string IdentityId::name() const {
    switch (kind) {
        case Kind::E_phi: return "E_phi";
        case Kind::E_psi: return "E_psi";
        case Kind::E_f_neg: return "E_f_neg";
        case Kind::E_chi: return "E_chi";
        case Kind::E_phi_neg: return "E_phi_neg";
        case Kind::E_psi_neg: return "E_psi_neg";
        case Kind::E_chi_neg: return "E_chi_neg";
        case Kind::E_euler_pd_po: return "E_euler_pd_po";
        case Kind::L21_f_qq2: return "L21_f_qq2";
        case Kind::L22_f_qq5: return "L22_f_qq5";
        case Kind::L23_f1_pdissect: return "L23_f1_pdissect(p=" + std::to_string(p) + ")";
        case Kind::L24_psi_pdissect: return "L24_psi_pdissect(p=" + std::to_string(p) + ")";
        case Kind::L25_septic: return "L25_septic";
        case Kind::L26_quintic: return "L26_quintic";
        case Kind::L27_cubic: return "L27_cubic";
        case Kind::C_t7: return "C_t7(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ")";
        case Kind::C_v7: return "C_v7(r=" + std::to_string(r) + ",m=" + std::to_string(m) + ")";
        case Kind::L28_fqq2_mod2: return "L28_fqq2_mod2";
    }
    return "?";
}

std::optional<IdentityId> IdentityId::parse(const std::string& name, long p, long r, long m) {
    using K = Kind;
    const struct {
        const char* n;
        K k;
    } plain[] = {{"E_phi", K::E_phi},         {"E_psi", K::E_psi},
                 {"E_f_neg", K::E_f_neg},     {"E_chi", K::E_chi},
                 {"E_phi_neg", K::E_phi_neg}, {"E_psi_neg", K::E_psi_neg},
                 {"E_chi_neg", K::E_chi_neg}, {"E_euler_pd_po", K::E_euler_pd_po},
                 {"L21", K::L21_f_qq2},       {"L22", K::L22_f_qq5},
                 {"L25", K::L25_septic},      {"L26", K::L26_quintic},
                 {"L27", K::L27_cubic},       {"L28", K::L28_fqq2_mod2}};
    for (const auto& e : plain)
        if (name == e.n) return IdentityId{e.k};
    if (name == "L23") return IdentityId{K::L23_f1_pdissect, p};
    if (name == "L24") return IdentityId{K::L24_psi_pdissect, p};
    if (name == "C_t7") return IdentityId{K::C_t7, 0, r, m};
    if (name == "C_v7") return IdentityId{K::C_v7, 0, r, m};
    return {};
}

namespace {

struct SidePair {
    Series lhs, rhs;
    std::uint64_t modulus = 0;  // 0 = exact comparison
};

SidePair expand(const IdentityId& id, long trunc) {
    using K = IdentityId::Kind;
    switch (id.kind) {
        case K::E_phi:
            return {theta_sum({1, 1, 1, 1}, trunc), special(SpecialTheta::phi, trunc)};
        case K::E_psi:
            return {theta_sum({1, 1, 1, 3}, trunc), special(SpecialTheta::psi, trunc)};
        case K::E_f_neg:
            return {theta_sum({-1, 1, -1, 2}, trunc), special(SpecialTheta::f_neg, trunc)};
        case K::E_chi:
            return {pochhammer({-1, 1, 2}, trunc), special(SpecialTheta::chi, trunc)};
        case K::E_phi_neg:
            return {theta_sum({-1, 1, -1, 1}, trunc), special(SpecialTheta::phi_neg, trunc)};
        case K::E_psi_neg:
            return {theta_sum({-1, 1, -1, 3}, trunc), special(SpecialTheta::psi_neg, trunc)};
        case K::E_chi_neg:
            return {pochhammer({1, 1, 2}, trunc), special(SpecialTheta::chi_neg, trunc)};
        case K::E_euler_pd_po:
            return {pochhammer({-1, 1, 1}, trunc), invert(pochhammer({1, 1, 2}, trunc))};
        case K::L21_f_qq2: {
            Series rhs = dilate(special(SpecialTheta::phi_neg, trunc / 3), 3);
            rhs = truncate(rhs, trunc) / special(SpecialTheta::chi_neg, trunc);
            return {theta_sum({1, 1, 1, 2}, trunc), rhs};
        }
        case K::L22_f_qq5: {
            Series rhs = dilate(special(SpecialTheta::psi_neg, trunc / 3), 3);
            rhs = mul(truncate(rhs, trunc), special(SpecialTheta::chi, trunc));
            return {theta_sum({1, 1, 1, 5}, trunc), rhs};
        }
        case K::L23_f1_pdissect:
            return {euler_f(1, trunc), f1_pdissection_rhs(id.p, trunc)};
        case K::L24_psi_pdissect:
            return {special(SpecialTheta::psi, trunc), psi_pdissection_rhs(id.p, trunc)};
        case K::L25_septic: {
            auto [a, b, c] = septic_abc((trunc + 6) / 7);
            const Series a7 = truncate(dilate(a, 7), trunc);
            const Series b7 = truncate(dilate(b, 7), trunc);
            const Series c7 = truncate(dilate(c, 7), trunc);
            Series expr = b7 / c7;
            expr = sub(expr, q_shift(a7 / b7, 1, trunc, {}));
            expr = sub(expr, Series::monomial(1, 2, trunc));
            expr = add(expr, q_shift(c7 / a7, 5, trunc, {}));
            return {euler_f(1, trunc), mul(euler_f(49, trunc), expr)};
        }
        case K::L26_quintic: {
            const Series r5 = truncate(dilate(rr_quotient((trunc + 4) / 5), 5), trunc);
            Series expr = sub(r5, Series::monomial(1, 1, trunc));
            expr = sub(expr, q_shift(invert(r5), 2, trunc, {}));
            return {euler_f(1, trunc), mul(euler_f(25, trunc), expr)};
        }
        case K::L27_cubic: {
            const Series a3 = truncate(dilate(cubic_a((trunc + 2) / 3), 3), trunc);
            const Series tail = mul(Series::monomial(3, 1, trunc), pow(euler_f(9, trunc), 3));
            return {pow(euler_f(1, trunc), 3), sub(a3, tail)};
        }
        case K::C_t7: {
            if (id.r < 1 || id.m < 1)
                throw std::invalid_argument("C_t7 needs r >= 1 and m >= 1");
            return {pow(euler_f(id.r, trunc), 2 * id.m), pow(euler_f(2 * id.r, trunc), id.m), 2};
        }
        case K::C_v7: {
            if (id.r < 1 || id.m < 1)
                throw std::invalid_argument("C_v7 needs r >= 1 and m >= 1");
            return {pow(euler_f(id.r, trunc), 4 * id.m), pow(euler_f(2 * id.r, trunc), 2 * id.m), 4};
        }
        case K::L28_fqq2_mod2:
            return {theta_sum({1, 1, 1, 2}, trunc), euler_f(1, trunc), 2};
    }
    throw std::invalid_argument("unknown identity");
}

// Exponent classes mod p of the finite-sum terms must avoid the tail's class.
bool side_conditions_hold(const IdentityId& id) {
    using K = IdentityId::Kind;
    if (id.kind == K::L23_f1_pdissect) {
        const long p = id.p, e = branch6(p), tail = ((p * p - 1) / 24) % p;
        for (long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k) {
            if (k == e) continue;
            long cls = ((3 * k * k + k) / 2) % p;
            if ((cls + p) % p == tail) return false;
        }
        return true;
    }
    if (id.kind == K::L24_psi_pdissect) {
        const long p = id.p, tail = ((p * p - 1) / 8) % p;
        for (long m = 0; m <= (p - 3) / 2; ++m)
            if (((m * m + m) / 2) % p == tail) return false;
        return true;
    }
    return true;
}

VerificationReport verify_impl(const IdentityId& id, long trunc,
                               std::optional<long> perturb_exp) {
    if (trunc < 10)
        throw std::invalid_argument("identity verification needs trunc >= 10");
    const auto t0 = Clock::now();
    VerificationReport rep;
    rep.id = id.name();
    rep.trunc = trunc;

    SidePair sides = expand(id, trunc);
    rep.modulus = sides.modulus;
    if (perturb_exp) {
        sides.rhs = add(sides.rhs, Series::monomial(1, *perturb_exp, sides.rhs.trunc()));
        rep.note = "rhs perturbed by +q^" + std::to_string(*perturb_exp);
    }
    Series lhs = sides.lhs, rhs = sides.rhs;
    if (sides.modulus) {
        lhs = reduce_mod(lhs, sides.modulus);
        rhs = reduce_mod(rhs, sides.modulus);
    }
    const long bound = std::min(lhs.trunc(), rhs.trunc());
    const CompareResult cmp = equal_upto(lhs, rhs, bound);
    if (!cmp.equal) {
        rep.status = CheckStatus::fail;
        rep.first_mismatch =
            Mismatch{cmp.index, cmp.lhs.get_str(), cmp.rhs.get_str()};
    } else if (!side_conditions_hold(id)) {
        rep.status = CheckStatus::fail;
        rep.first_mismatch = Mismatch{-1, "side condition violated", ""};
        rep.note = "exponent-residue avoidance failed";
    }
    rep.millis = ms_since(t0);
    return rep;
}

}  // namespace

VerificationReport verify(const IdentityId& id, long trunc) {
    return verify_impl(id, trunc, {});
}

VerificationReport verify_perturbed(const IdentityId& id, long trunc, long perturb_exp) {
    return verify_impl(id, trunc, perturb_exp);
}

std::vector<CatalogEntry> default_catalog() {
    using K = IdentityId::Kind;
    std::vector<CatalogEntry> out = {
        {{K::E_phi}, 300},     {{K::E_psi}, 300},     {{K::E_f_neg}, 300},
        {{K::E_chi}, 300},     {{K::E_phi_neg}, 300}, {{K::E_psi_neg}, 300},
        {{K::E_chi_neg}, 300}, {{K::E_euler_pd_po}, 500},
        {{K::L21_f_qq2}, 300}, {{K::L22_f_qq5}, 300},
        {{K::L25_septic}, 200}, {{K::L26_quintic}, 150}, {{K::L27_cubic}, 200},
        {{K::L28_fqq2_mod2}, 200},
    };
    for (long p : {5, 7, 11, 13}) out.push_back({{K::L23_f1_pdissect, p}, 300});
    for (long p : {3, 5, 7}) out.push_back({{K::L24_psi_pdissect, p}, 300});
    for (auto [r, m] : {std::pair<long, long>{1, 1}, {1, 2}, {2, 1}, {3, 2}})
        out.push_back({{K::C_t7, 0, r, m}, 200});
    for (auto [r, m] : {std::pair<long, long>{1, 1}, {2, 1}, {1, 2}})
        out.push_back({{K::C_v7, 0, r, m}, 200});
    return out;
}

}  // namespace qts
