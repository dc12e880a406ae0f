#include "qts/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qts {
namespace {

// Residue accumulation runs on machine words when the modulus is small
// enough that a full Cauchy row cannot overflow an unsigned 64-bit sum.
constexpr std::uint64_t kSmallModulusLimit = 1u << 16;

bool small_mod_ok(std::uint64_t m, long n_terms) {
    if (m > kSmallModulusLimit) return false;
    const unsigned __int128 worst =
        static_cast<unsigned __int128>(m - 1) * (m - 1) * (n_terms + 1);
    return worst <= ~static_cast<std::uint64_t>(0);
}

void require_compatible(const Series& a, const Series& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("series modulus mismatch");
}

void canonical_inplace(mpz_class& v, std::uint64_t m) {
    mpz_fdiv_r_ui(v.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(m));
}

}  // namespace

Series Series::make(std::vector<mpz_class> coeffs, long trunc,
                    std::optional<std::uint64_t> modulus) {
    if (trunc < 0) throw std::invalid_argument("series truncation must be >= 0");
    if (modulus && *modulus < 2) throw std::invalid_argument("series modulus must be >= 2");
    Series s;
    s.modulus_ = modulus;
    coeffs.resize(trunc + 1);
    if (modulus)
        for (auto& c : coeffs) canonical_inplace(c, *modulus);
    s.coeffs_ = std::move(coeffs);
    return s;
}

Series Series::zero(long trunc, std::optional<std::uint64_t> modulus) {
    return make({}, trunc, modulus);
}

Series Series::one(long trunc, std::optional<std::uint64_t> modulus) {
    return make({mpz_class(1)}, trunc, modulus);
}

Series Series::monomial(const mpz_class& c, long exp, long trunc,
                        std::optional<std::uint64_t> modulus) {
    if (exp < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    std::vector<mpz_class> v;
    if (exp <= trunc) {
        v.resize(exp + 1);
        v[exp] = c;
    }
    return make(std::move(v), trunc, modulus);
}

const mpz_class& Series::at(long n) const {
    if (n < 0 || n > trunc())
        throw std::out_of_range("series coefficient index " + std::to_string(n) +
                                " outside truncation " + std::to_string(trunc()));
    return coeffs_[n];
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

Series add(const Series& a, const Series& b) {
    require_compatible(a, b);
    const long n = std::min(a.trunc(), b.trunc());
    Series r;
    r.modulus_ = a.modulus_;
    r.coeffs_.resize(n + 1);
    for (long i = 0; i <= n; ++i) {
        r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        if (r.modulus_) canonical_inplace(r.coeffs_[i], *r.modulus_);
    }
    return r;
}

Series sub(const Series& a, const Series& b) {
    require_compatible(a, b);
    const long n = std::min(a.trunc(), b.trunc());
    Series r;
    r.modulus_ = a.modulus_;
    r.coeffs_.resize(n + 1);
    for (long i = 0; i <= n; ++i) {
        r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        if (r.modulus_) canonical_inplace(r.coeffs_[i], *r.modulus_);
    }
    return r;
}

Series neg(const Series& a) {
    Series r;
    r.modulus_ = a.modulus_;
    r.coeffs_.resize(a.coeffs_.size());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        r.coeffs_[i] = -a.coeffs_[i];
        if (r.modulus_) canonical_inplace(r.coeffs_[i], *r.modulus_);
    }
    return r;
}

namespace {

// Word-sized convolution for small moduli: residues < m, row sums bounded
// by small_mod_ok, one reduction per output coefficient.
Series mul_small_mod(const Series& a, const Series& b, long n, std::uint64_t m) {
    std::vector<std::uint64_t> av(n + 1), bv(n + 1), cv(n + 1, 0);
    for (long i = 0; i <= n; ++i) {
        av[i] = mpz_get_ui(a.at(i).get_mpz_t());
        bv[i] = mpz_get_ui(b.at(i).get_mpz_t());
    }
    for (long i = 0; i <= n; ++i) {
        const std::uint64_t ai = av[i];
        if (!ai) continue;
        const long top = n - i;
        for (long j = 0; j <= top; ++j) cv[i + j] += ai * bv[j];
    }
    std::vector<mpz_class> out(n + 1);
    for (long i = 0; i <= n; ++i) out[i] = static_cast<unsigned long>(cv[i] % m);
    return Series::make(std::move(out), n, m);
}

}  // namespace

Series mul(const Series& a, const Series& b) {
    require_compatible(a, b);
    const long n = std::min(a.trunc(), b.trunc());
    if (a.modulus_ && small_mod_ok(*a.modulus_, n))
        return mul_small_mod(a, b, n, *a.modulus_);

    Series r;
    r.modulus_ = a.modulus_;
    r.coeffs_.resize(n + 1);
    for (long i = 0; i <= n; ++i) {
        const mpz_class& ai = a.coeffs_[i];
        if (ai == 0) continue;
        const long top = n - i;
        for (long j = 0; j <= top; ++j) {
            if (b.coeffs_[j] != 0) r.coeffs_[i + j] += ai * b.coeffs_[j];
        }
    }
    if (r.modulus_)
        for (auto& c : r.coeffs_) canonical_inplace(c, *r.modulus_);
    return r;
}

namespace {

std::uint64_t modular_constant_inverse(const mpz_class& a0, std::uint64_t m) {
    mpz_class inv, mm(static_cast<unsigned long>(m));
    if (mpz_invert(inv.get_mpz_t(), a0.get_mpz_t(), mm.get_mpz_t()) == 0)
        throw std::domain_error("series constant term is not invertible modulo " +
                                std::to_string(m));
    return mpz_get_ui(inv.get_mpz_t());
}

Series invert_small_mod(const Series& a, std::uint64_t m) {
    const long n = a.trunc();
    const std::uint64_t inv0 = modular_constant_inverse(a.at(0), m);
    std::vector<std::uint64_t> av(n + 1), bv(n + 1, 0);
    for (long i = 0; i <= n; ++i) av[i] = mpz_get_ui(a.at(i).get_mpz_t());
    bv[0] = inv0;
    for (long k = 1; k <= n; ++k) {
        std::uint64_t acc = 0;
        for (long i = 1; i <= k; ++i) acc += av[i] * bv[k - i];
        acc %= m;
        bv[k] = (acc == 0) ? 0 : (m - acc) * inv0 % m;
    }
    std::vector<mpz_class> out(n + 1);
    for (long i = 0; i <= n; ++i) out[i] = static_cast<unsigned long>(bv[i]);
    return Series::make(std::move(out), n, m);
}

}  // namespace

Series invert(const Series& a) {
    const long n = a.trunc();
    if (a.modulus()) {
        if (small_mod_ok(*a.modulus(), n)) return invert_small_mod(a, *a.modulus());
        const std::uint64_t m = *a.modulus();
        const mpz_class inv0(static_cast<unsigned long>(modular_constant_inverse(a.at(0), m)));
        Series r;
        r.modulus_ = a.modulus();
        r.coeffs_.resize(n + 1);
        r.coeffs_[0] = inv0;
        mpz_class acc;
        for (long k = 1; k <= n; ++k) {
            acc = 0;
            for (long i = 1; i <= k; ++i)
                if (a.coeffs_[i] != 0) acc += a.coeffs_[i] * r.coeffs_[k - i];
            r.coeffs_[k] = -inv0 * acc;
            canonical_inplace(r.coeffs_[k], m);
        }
        return r;
    }
    const mpz_class& a0 = a.at(0);
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("exact series inversion needs constant term +1 or -1");
    // b_0 = a_0, b_k = -a_0 * sum_{i=1..k} a_i b_{k-i}  (a_0^{-1} = a_0 here)
    Series r;
    r.coeffs_.resize(n + 1);
    r.coeffs_[0] = a0;
    mpz_class acc;
    for (long k = 1; k <= n; ++k) {
        acc = 0;
        for (long i = 1; i <= k; ++i)
            if (a.coeffs_[i] != 0) acc += a.coeffs_[i] * r.coeffs_[k - i];
        r.coeffs_[k] = -a0 * acc;
    }
    return r;
}

Series pow(const Series& a, long e) {
    if (e < 0) return pow(invert(a), -e);
    Series result = Series::one(a.trunc(), a.modulus());
    Series base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

Series dilate(const Series& a, long k) {
    if (k < 1) throw std::invalid_argument("dilation factor must be >= 1");
    Series r;
    r.modulus_ = a.modulus_;
    r.coeffs_.resize(a.trunc() * k + 1);
    for (long i = 0; i <= a.trunc(); ++i) r.coeffs_[i * k] = a.coeffs_[i];
    return r;
}

Series extract_progression(const Series& a, long m, long r) {
    if (m < 1 || r < 0 || r >= m)
        throw std::invalid_argument("extract_progression needs 1 <= m and 0 <= r < m");
    if (r > a.trunc())
        throw std::invalid_argument("series truncation too small to extract residue " +
                                    std::to_string(r));
    const long n = (a.trunc() - r) / m;
    Series out;
    out.modulus_ = a.modulus_;
    out.coeffs_.resize(n + 1);
    for (long i = 0; i <= n; ++i) out.coeffs_[i] = a.coeffs_[m * i + r];
    return out;
}

Series reduce_mod(const Series& a, std::uint64_t m) {
    if (a.modulus()) throw std::invalid_argument("reduce_mod expects an exact-mode series");
    if (m < 2) throw std::invalid_argument("series modulus must be >= 2");
    Series r;
    r.modulus_ = m;
    r.coeffs_.resize(a.coeffs_.size());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        r.coeffs_[i] = a.coeffs_[i];
        canonical_inplace(r.coeffs_[i], m);
    }
    return r;
}

CompareResult equal_upto(const Series& a, const Series& b, long n) {
    require_compatible(a, b);
    if (n > a.trunc() || n > b.trunc())
        throw std::invalid_argument("equal_upto bound " + std::to_string(n) +
                                    " exceeds a truncation");
    for (long i = 0; i <= n; ++i) {
        if (a.coeffs()[i] != b.coeffs()[i])
            return {false, i, a.coeffs()[i], b.coeffs()[i]};
    }
    return {};
}

Series truncate(const Series& a, long n) {
    if (n < 0) throw std::invalid_argument("series truncation must be >= 0");
    Series r;
    r.modulus_ = a.modulus_;
    r.coeffs_ = a.coeffs_;
    r.coeffs_.resize(n + 1);
    return r;
}

Series mul_binomial(const Series& a, int sign, long exp) {
    return mul_binomials(a, {{sign, exp}});
}

Series mul_binomials(const Series& a, const std::vector<BinomialFactor>& factors) {
    for (const auto& f : factors) {
        if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("binomial sign must be +1 or -1");
        if (f.exp < 1) throw std::invalid_argument("binomial exponent must be >= 1");
    }
    const long n = a.trunc();

    if (a.modulus_ && *a.modulus_ <= kSmallModulusLimit) {
        const std::int64_t m = static_cast<std::int64_t>(*a.modulus_);
        std::vector<std::int64_t> c(n + 1);
        for (long i = 0; i <= n; ++i) c[i] = mpz_get_si(a.coeffs_[i].get_mpz_t());
        for (const auto& f : factors) {
            for (long i = n; i >= f.exp; --i) {
                std::int64_t v = f.sign > 0 ? c[i] - c[i - f.exp] : c[i] + c[i - f.exp];
                if (v < 0) v += m;
                else if (v >= m) v -= m;
                c[i] = v;
            }
        }
        std::vector<mpz_class> out(n + 1);
        for (long i = 0; i <= n; ++i) out[i] = static_cast<long>(c[i]);
        return Series::make(std::move(out), n, *a.modulus_);
    }

    Series r = a;
    for (const auto& f : factors) {
        for (long i = n; i >= f.exp; --i) {
            if (f.sign > 0)
                r.coeffs_[i] -= r.coeffs_[i - f.exp];
            else
                r.coeffs_[i] += r.coeffs_[i - f.exp];
            if (r.modulus_) canonical_inplace(r.coeffs_[i], *r.modulus_);
        }
    }
    return r;
}

}  // namespace qts
