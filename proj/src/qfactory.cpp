#include "qts/qfactory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qts {

void PochhammerSpec::validate() const {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer sign must be +1 or -1");
    if (step < 1) throw std::invalid_argument("pochhammer step must be >= 1");
    if (start < 0) throw std::invalid_argument("pochhammer start must be >= 0");
    if (start == 0 && sign == 1)
        throw std::invalid_argument("(q^0;q^k)_inf is identically zero");
}

void ThetaSpec::validate() const {
    if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
        throw std::invalid_argument("theta signs must be +1 or -1");
    if (exp_a < 0 || exp_b < 0)
        throw std::invalid_argument("theta exponents must be >= 0");
    if (exp_a + exp_b < 1)
        throw std::invalid_argument("theta spec needs exp_a + exp_b >= 1");
}

Series pochhammer(const PochhammerSpec& spec, long trunc, Modulus mod) {
    spec.validate();
    std::vector<BinomialFactor> factors;
    for (long e = spec.start; e <= trunc; e += spec.step)
        if (e >= 1) factors.push_back({spec.sign, e});
    Series r = mul_binomials(Series::one(trunc, mod), factors);
    // start = 0 with sign -1 contributes the constant factor (1 + 1)
    if (spec.start == 0) r = add(r, r);
    return r;
}

Series euler_f(long k, long trunc, Modulus mod) {
    if (k < 1) throw std::invalid_argument("euler_f needs k >= 1");
    return pochhammer({.sign = 1, .start = k, .step = k}, trunc, mod);
}

namespace {

long isqrt_long(long v) {
    if (v < 0) return 0;
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

int sign_pow(int s, long e) { return (s == 1 || e % 2 == 0) ? 1 : -1; }

}  // namespace

Series theta_sum(const ThetaSpec& spec, long trunc, Modulus mod) {
    spec.validate();
    const long w = spec.exp_a + spec.exp_b;
    std::vector<mpz_class> c(trunc + 1);
    // |n| beyond ~sqrt(2*trunc/w) cannot reach the truncation; the bound is
    // conservative, terms are filtered exactly.
    const long bound = 2 + 2 * isqrt_long(2 * trunc / w + 1);
    for (long n = -bound; n <= bound; ++n) {
        const long t1 = n * (n + 1) / 2;  // >= 0 for all integers n
        const long t2 = n * (n - 1) / 2;
        const long e = spec.exp_a * t1 + spec.exp_b * t2;
        if (e < 0 || e > trunc) continue;
        const int s = sign_pow(spec.sign_a, t1) * sign_pow(spec.sign_b, t2);
        c[e] += s;
    }
    return Series::make(std::move(c), trunc, mod);
}

Series theta_product(const ThetaSpec& spec, long trunc, Modulus mod) {
    spec.validate();
    const long w = spec.exp_a + spec.exp_b;
    const int s = spec.sign_a * spec.sign_b;  // sign of ab = s * q^w
    std::vector<BinomialFactor> factors;
    int doublings = 0;

    // prod_n (1 + base_sign * s^n * q^{start + n w}); a zero-exponent factor
    // is the constant 1 + base_sign (0 or 2).
    auto collect = [&](int base_sign, long start) -> bool {
        for (long n = 0; start + n * w <= trunc; ++n) {
            const int fs = base_sign * sign_pow(s, n);
            const long e = start + n * w;
            if (e == 0) {
                if (fs == -1) return false;  // identically-zero series
                ++doublings;
            } else {
                factors.push_back({-fs, e});
            }
        }
        return true;
    };
    if (!collect(spec.sign_a, spec.exp_a) ||  // (-a; ab)_inf
        !collect(spec.sign_b, spec.exp_b))    // (-b; ab)_inf
        return Series::zero(trunc, mod);
    for (long n = 1; n * w <= trunc; ++n)     // (ab; ab)_inf
        factors.push_back({sign_pow(s, n), n * w});

    Series r = mul_binomials(Series::one(trunc, mod), factors);
    for (; doublings > 0; --doublings) r = add(r, r);
    return r;
}

const char* special_name(SpecialTheta which) {
    switch (which) {
        case SpecialTheta::phi: return "phi";
        case SpecialTheta::psi: return "psi";
        case SpecialTheta::f_neg: return "f_neg";
        case SpecialTheta::chi: return "chi";
        case SpecialTheta::phi_neg: return "phi_neg";
        case SpecialTheta::psi_neg: return "psi_neg";
        case SpecialTheta::chi_neg: return "chi_neg";
    }
    return "?";
}

std::optional<SpecialTheta> parse_special(const std::string& name) {
    for (auto v : {SpecialTheta::phi, SpecialTheta::psi, SpecialTheta::f_neg,
                   SpecialTheta::chi, SpecialTheta::phi_neg, SpecialTheta::psi_neg,
                   SpecialTheta::chi_neg})
        if (name == special_name(v)) return v;
    return {};
}

Series special(SpecialTheta which, long trunc, Modulus mod) {
    const Series f1 = euler_f(1, trunc, mod);
    const Series f2 = euler_f(2, trunc, mod);
    switch (which) {
        case SpecialTheta::phi: {
            const Series f4 = euler_f(4, trunc, mod);
            return pow(f2, 5) / (pow(f1, 2) * pow(f4, 2));
        }
        case SpecialTheta::psi:
            return pow(f2, 2) / f1;
        case SpecialTheta::f_neg:
            return f1;
        case SpecialTheta::chi: {
            const Series f4 = euler_f(4, trunc, mod);
            return pow(f2, 2) / (f1 * f4);
        }
        case SpecialTheta::phi_neg:
            return pow(f1, 2) / f2;
        case SpecialTheta::psi_neg:
            return f1 * euler_f(4, trunc, mod) / f2;
        case SpecialTheta::chi_neg:
            return f1 / f2;
    }
    throw std::invalid_argument("unknown special theta function");
}

Series rr_quotient(long trunc, Modulus mod) {
    const Series num = mul(pochhammer({1, 2, 5}, trunc, mod), pochhammer({1, 3, 5}, trunc, mod));
    const Series den = mul(pochhammer({1, 1, 5}, trunc, mod), pochhammer({1, 4, 5}, trunc, mod));
    return num / den;
}

SepticTriple septic_abc(long trunc, Modulus mod) {
    return {theta_product({-1, 3, -1, 4}, trunc, mod),
            theta_product({-1, 2, -1, 5}, trunc, mod),
            theta_product({-1, 1, -1, 6}, trunc, mod)};
}

Series cubic_a(long trunc, Modulus mod) {
    const Series f1 = euler_f(1, trunc, mod);
    const Series f2 = euler_f(2, trunc, mod);
    const Series f3 = euler_f(3, trunc, mod);
    const Series f6 = euler_f(6, trunc, mod);
    const Series t1 = pow(f2, 6) * f3 / (pow(f1, 2) * pow(f6, 2));
    const Series t2 = pow(f1, 2) * pow(f6, 6) / (pow(f2, 2) * pow(f3, 3));
    return add(t1, mul(Series::monomial(3, 1, trunc, mod), t2));
}

const char* convention_name(Convention c) {
    switch (c) {
        case Convention::series: return "series";
        case Convention::squared: return "squared";
        case Convention::unsquared: return "unsquared";
    }
    return "?";
}

std::optional<Convention> parse_convention(const std::string& name) {
    for (auto c : {Convention::series, Convention::squared, Convention::unsquared})
        if (name == convention_name(c)) return c;
    return {};
}

namespace {

void validate_ts(long t, long s) {
    if (t < 2 || s < 1 || s >= t)
        throw std::invalid_argument("Q_t^s needs 1 <= s < t (got t=" + std::to_string(t) +
                                    ", s=" + std::to_string(s) + ")");
}

}  // namespace

Series qts_series(long t, long s, long trunc, Modulus mod) {
    validate_ts(t, s);
    const Series num = mul(euler_f(2, trunc, mod), euler_f(t, trunc, mod));
    const Series den =
        mul(euler_f(1, trunc, mod), theta_sum({1, s, 1, t - s}, trunc, mod));
    return num / den;
}

Series qts_product(long t, long s, long trunc, bool squared, Modulus mod) {
    validate_ts(t, s);
    Series den = pochhammer({-1, s, t}, trunc, mod);
    if ((t - s) % t == s % t) {
        if (squared) den = mul(den, den);
    } else {
        den = mul(den, pochhammer({-1, t - s, t}, trunc, mod));
    }
    return pochhammer({-1, 1, 1}, trunc, mod) / den;
}

Series qts_by_convention(long t, long s, long trunc, Convention conv, Modulus mod) {
    switch (conv) {
        case Convention::series: return qts_series(t, s, trunc, mod);
        case Convention::squared: return qts_product(t, s, trunc, true, mod);
        case Convention::unsquared: return qts_product(t, s, trunc, false, mod);
    }
    throw std::invalid_argument("unknown convention");
}

}  // namespace qts
