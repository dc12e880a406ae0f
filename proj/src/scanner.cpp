#include "qts/scanner.hpp"

#include <stdexcept>

namespace qts {

void ScanConfig::validate() const {
    spec.validate();
    if (spec.s >= spec.t)
        throw std::invalid_argument("scan needs 1 <= s < t");
    if (A_max < 2) throw std::invalid_argument("scan needs A_max >= 2");
    if (n_samples < 20)
        throw std::invalid_argument("scan needs n_samples >= 20 for minimal support");
    for (auto m : moduli)
        if (m < 2) throw std::invalid_argument("scan moduli must be >= 2");
    if (required_trunc() > max_trunc)
        throw std::invalid_argument("scan truncation " + std::to_string(required_trunc()) +
                                    " exceeds ceiling " + std::to_string(max_trunc));
}

std::vector<ScanRow> scan(const ScanConfig& config) {
    config.validate();
    const long trunc = config.required_trunc();
    const Series q =
        qts_by_convention(config.spec.t, config.spec.s, trunc, config.convention);
    std::vector<ScanRow> rows;
    for (long A = 2; A <= config.A_max; ++A) {
        for (long B = 0; B < A; ++B) {
            bool all_zero = true;
            for (long n = 0; n < config.n_samples && all_zero; ++n)
                all_zero = (q.at(A * n + B) == 0);
            if (all_zero) {
                rows.push_back({A, B, 0, config.n_samples, "identically-zero"});
                continue;
            }
            for (auto m : config.moduli) {
                bool cand = true;
                for (long n = 0; n < config.n_samples && cand; ++n)
                    cand = mpz_divisible_ui_p(q.at(A * n + B).get_mpz_t(), m) != 0;
                if (cand) rows.push_back({A, B, m, config.n_samples, "candidate"});
            }
        }
    }
    return rows;
}

}  // namespace qts
