// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails.  Pass the CLI binary path as argv[1] (the exit-code criterion drives
// the real executable).

#include "qts/identities.hpp"
#include "qts/oracle.hpp"
#include "qts/qfactory.hpp"
#include "qts/scanner.hpp"
#include "qts/series.hpp"
#include "qts/theorems.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qts;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    std::string name;
    double limit_seconds = 0;  // 0 = no stated bound
    std::vector<std::string> problems;
    double seconds = 0;

    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    bool good() const { return problems.empty(); }
};

std::vector<Criterion> g_results;

template <typename Fn>
void criterion(const std::string& name, double limit_seconds, Fn&& fn) {
    Criterion c;
    c.name = name;
    c.limit_seconds = limit_seconds;
    const auto t0 = Clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.problems.push_back(std::string("exception: ") + e.what());
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (c.limit_seconds > 0 && c.seconds >= c.limit_seconds)
        c.problems.push_back("runtime " + std::to_string(c.seconds) + " s exceeds " +
                             std::to_string(c.limit_seconds) + " s");
    std::cout << (c.good() ? "[PASS] " : "[FAIL] ") << c.name << "  (" << c.seconds << " s)\n";
    for (const auto& p : c.problems) std::cout << "       - " << p << "\n";
    std::cout.flush();
    g_results.push_back(std::move(c));
}

std::string cli_path;

int run_cli(const std::string& args) {
    const std::string cmd = "'" + cli_path + "' " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    return WEXITSTATUS(rc);
}

void criterion1_golden(Criterion& c) {
    const struct {
        long t, s, n, expect;
    } golden[] = {{10, 5, 8, 4}, {10, 5, 9, 6},  {14, 7, 10, 8}, {14, 7, 11, 10},
                  {3, 2, 4, 0},  {3, 2, 7, 0},   {3, 2, 10, 0},  {3, 2, 6, 1},
                  {4, 3, 5, 0},  {4, 3, 6, 2},   {6, 2, 4, 1},   {12, 2, 5, 2}};
    for (const auto& g : golden) {
        std::ostringstream label;
        label << "Q_" << g.t << "^" << g.s << "(" << g.n << ") = " << g.expect;
        c.expect(count_qts({g.t, g.s}, g.n) == g.expect, "oracle " + label.str());
        c.expect(qts_product(g.t, g.s, g.n, false).at(g.n) == g.expect,
                 "unsquared product " + label.str());
    }
    c.expect(count_b_nondiv(4, 6) == 5, "b_6(4) = 5");
    c.expect(count_p(5) == 7, "p(5) = 7");
}

void criterion2_identities(Criterion& c) {
    using K = IdentityId::Kind;
    const std::vector<CatalogEntry> entries = {
        {{K::E_phi}, 300},     {{K::E_psi}, 300},      {{K::E_f_neg}, 300},
        {{K::E_chi}, 300},     {{K::E_phi_neg}, 300},  {{K::E_psi_neg}, 300},
        {{K::E_chi_neg}, 300}, {{K::E_euler_pd_po}, 300},
        {{K::L21_f_qq2}, 300}, {{K::L22_f_qq5}, 300},
        {{K::L25_septic}, 200}, {{K::L26_quintic}, 150}, {{K::L27_cubic}, 200},
        {{K::C_t7, 0, 1, 1}, 200}, {{K::C_t7, 0, 2, 1}, 200}, {{K::C_t7, 0, 1, 3}, 200},
        {{K::C_v7, 0, 1, 1}, 200}, {{K::C_v7, 0, 2, 1}, 200},
        {{K::L28_fqq2_mod2}, 200},
    };
    for (const auto& [id, trunc] : entries) {
        const auto rep = verify(id, trunc);
        c.expect(rep.status == CheckStatus::pass,
                 id.name() + " at " + std::to_string(trunc));
    }
}

void criterion3_dissections(Criterion& c) {
    using K = IdentityId::Kind;
    for (long p : {5L, 7L, 11L, 13L}) {
        const auto rep = verify({K::L23_f1_pdissect, p}, 300);
        c.expect(rep.status == CheckStatus::pass, "L23 p=" + std::to_string(p));
    }
    for (long p : {3L, 5L, 7L}) {
        const auto rep = verify({K::L24_psi_pdissect, p}, 300);
        c.expect(rep.status == CheckStatus::pass, "L24 p=" + std::to_string(p));
    }
}

void criterion4_triple_product(Criterion& c) {
    const long N = 300;
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            for (long x = 0; x <= 8; ++x)
                for (long y = 0; y <= 8; ++y) {
                    if (x + y < 1) continue;
                    const ThetaSpec spec{sa, x, sb, y};
                    if (!equal_upto(theta_sum(spec, N), theta_product(spec, N), N).equal) {
                        std::ostringstream what;
                        what << "f(" << (sa < 0 ? "-" : "") << "q^" << x << ", "
                             << (sb < 0 ? "-" : "") << "q^" << y << ")";
                        c.expect(false, what.str());
                    }
                }
}

void criterion5_oracle_series(Criterion& c) {
    const long N = 300;
    for (long t = 2; t <= 12; ++t)
        for (long s = 1; s < t; ++s) {
            const std::string ts = "(t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")";
            const Series srs = qts_series(t, s, N);
            c.expect(equal_upto(srs, qts_product(t, s, N, true), N).equal,
                     "series = squared product " + ts);
            const auto counts = table_qts({t, s}, N);
            if (s % t != (t - s) % t) {
                bool same = true;
                for (long n = 0; n <= N && same; ++n) same = (counts[n] == srs.at(n));
                c.expect(same, "oracle = series " + ts);
            } else {
                const Series uns = qts_product(t, s, N, false);
                bool same = true;
                for (long n = 0; n <= N && same; ++n) same = (counts[n] == uns.at(n));
                c.expect(same, "oracle = unsquared product " + ts);
            }
        }
}

void criterion6_theorems(Criterion& c) {
    // base congruences
    c.expect(verify_base_congruence(Family::T31, {.alpha = 1}, 500).passed(), "T31 base a=1");
    c.expect(verify_base_congruence(Family::T31, {.alpha = 2}, 500).passed(), "T31 base a=2");
    c.expect(verify_base_congruence(Family::T32, {.alpha = 1}, 500).passed(), "T32 base a=1");
    c.expect(verify_base_congruence(Family::T32, {.alpha = 3}, 500).passed(), "T32 base a=3");
    c.expect(verify_base_congruence(Family::T36a, {}, 500).passed(), "T36 base");

    struct Inst {
        Family f;
        TheoremParams params;
        long n_max;
        bool collision;
    };
    const std::vector<Inst> instances = {
        {Family::T31, {.alpha = 1, .p = 5, .beta = 0}, 50, true},
        {Family::T31, {.alpha = 2, .p = 7, .beta = 0}, 50, true},
        {Family::T32, {.alpha = 1, .p = 7, .beta = 0}, 50, false},
        {Family::T32, {.alpha = 3, .p = 5, .beta = 0}, 50, false},
        {Family::T33, {.alpha = 2}, 50, true},
        {Family::T33, {.alpha = 3}, 50, false},
        {Family::T34, {.alpha = 2}, 50, true},
        {Family::T34, {.alpha = 3}, 50, false},
        {Family::T35a, {}, 300, false},
        {Family::T35b, {}, 300, false},
        {Family::T36b, {.p = 13, .beta = 0}, 10, true},
        {Family::T37a, {}, 300, false},
        {Family::T37b, {}, 300, false},
        {Family::T38, {}, 300, false},
        {Family::T39, {}, 300, false},
    };
    std::vector<ClaimJob> jobs;
    for (const auto& inst : instances) {
        for (const auto& claim : instantiate(inst.f, inst.params)) {
            jobs.push_back({claim, inst.n_max, true});
            if (inst.collision) {
                auto un = claim;
                un.convention = Convention::unsquared;
                jobs.push_back({un, inst.n_max, false});  // recorded alongside
            }
        }
    }
    RunOptions opts;
    opts.threads = 0;
    const auto reports = run_claims(jobs, opts);
    long recorded_divergent = 0;
    for (size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        if (jobs[i].gated) {
            c.expect(rep.status == CheckStatus::pass,
                     rep.id + " [" + rep.convention + "]" +
                         (rep.first_mismatch
                              ? " first mismatch at n=" + std::to_string(rep.first_mismatch->index)
                              : ""));
        } else if (rep.status == CheckStatus::fail) {
            ++recorded_divergent;
        }
    }
    std::cout << "       criterion 6 note: " << recorded_divergent
              << " unsquared-convention verdicts diverge from the series convention "
                 "(recorded, not gated)\n";

    // exact-zero families hold with equality, not just mod 2
    for (const auto& claim : instantiate(Family::T35a, {}))
        c.expect(verify_claim(claim, 300).passed(), "T35a exact to 300");
    c.expect(verify_claim(instantiate(Family::T37a, {})[0], 300).passed(), "T37a exact to 300");
}

void criterion7_euler(Criterion& c) {
    const long N = 500;
    const auto pd = table_pd(N);
    const auto po = table_po(N);
    bool dp_equal = true;
    for (long n = 0; n <= N && dp_equal; ++n) dp_equal = (pd[n] == po[n]);
    c.expect(dp_equal, "DP route: p_d(n) = p_o(n) for n <= 500");

    const Series lhs = pochhammer({-1, 1, 1}, N);
    const Series rhs = invert(pochhammer({1, 1, 2}, N));
    c.expect(equal_upto(lhs, rhs, N).equal, "series route: (-q;q) = 1/(q;q^2)");
    bool match = true;
    for (long n = 0; n <= N && match; ++n) match = (lhs.at(n) == pd[n]);
    c.expect(match, "series coefficients equal the DP counts");
}

void criterion8_scanner(Criterion& c) {
    auto has = [](const std::vector<ScanRow>& rows, const ScanRow& want) {
        return std::find(rows.begin(), rows.end(), want) != rows.end();
    };
    {
        ScanConfig cfg;
        cfg.spec = {3, 2};
        cfg.A_max = 3;
        cfg.n_samples = 50;
        const auto rows = scan(cfg);
        c.expect(has(rows, {3, 1, 0, 50, "identically-zero"}), "(3,2): 3n+1 identically zero");
        c.expect(has(rows, {3, 2, 0, 50, "identically-zero"}), "(3,2): 3n+2 identically zero");
    }
    {
        ScanConfig cfg;
        cfg.spec = {4, 3};
        cfg.moduli = {2};
        cfg.A_max = 2;
        cfg.n_samples = 50;
        c.expect(has(scan(cfg), {2, 1, 0, 50, "identically-zero"}),
                 "(4,3): 2n+1 identically zero");
    }
    {
        ScanConfig cfg;
        cfg.spec = {12, 2};
        cfg.moduli = {2};
        cfg.A_max = 6;
        cfg.n_samples = 50;
        c.expect(has(scan(cfg), {3, 2, 2, 50, "candidate"}), "(12,2): candidate (3,2,2)");
    }
    {
        ScanConfig cfg;
        cfg.spec = {14, 7};
        cfg.moduli = {2};
        cfg.A_max = 7;
        cfg.n_samples = 50;
        const auto rows = scan(cfg);
        for (long b : {3, 4, 6})
            c.expect(has(rows, {7, b, 2, 50, "candidate"}),
                     "(14,7): candidate (7," + std::to_string(b) + ",2)");
    }
}

void criterion9_negative_controls(Criterion& c) {
    for (const auto& [id, trunc] : default_catalog()) {
        const long t = std::min<long>(trunc, 60);
        for (long j : {3L, t / 2, t - 1}) {
            const auto rep = verify_perturbed(id, t, j);
            const bool ok = rep.status == CheckStatus::fail && rep.first_mismatch &&
                            rep.first_mismatch->index == j;
            c.expect(ok, id.name() + " perturbed at q^" + std::to_string(j));
            if (!ok) break;
        }
    }
    if (cli_path.empty()) {
        c.expect(false, "CLI path not supplied (pass it as argv[1])");
        return;
    }
    c.expect(run_cli("verify theorem T35b --as-printed --nmax 50") == 1,
             "`verify theorem T35b --as-printed` exits 1");
    c.expect(run_cli("verify theorem T35b --nmax 50") == 0, "corrected T35b exits 0");
    c.expect(run_cli("verify identity L27 --trunc 200") == 0, "passing identity exits 0");
    c.expect(run_cli("verify identity no_such_identity") == 2, "usage error exits 2");
    c.expect(run_cli("compute qts --t 3") == 2, "missing required option exits 2");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) cli_path = argv[1];

    criterion("criterion 1: golden values from the remarks", 1.0, criterion1_golden);
    criterion("criterion 2: identity catalog at stated truncations", 10.0, criterion2_identities);
    criterion("criterion 3: p-dissections with side conditions", 30.0, criterion3_dissections);
    criterion("criterion 4: theta sum = triple product, x,y <= 8 at 300", 0, criterion4_triple_product);
    criterion("criterion 5: oracle/series/product equivalence, t <= 12 at 300", 0, criterion5_oracle_series);
    criterion("criterion 6: theorem desk suite", 120.0, criterion6_theorems);
    criterion("criterion 7: Euler p_d = p_o to 500, both routes", 0, criterion7_euler);
    criterion("criterion 8: scanner rediscovers the paper congruences", 0, criterion8_scanner);
    criterion("criterion 9: negative controls and exit codes", 0, criterion9_negative_controls);

    long failed = 0;
    for (const auto& c : g_results)
        if (!c.good()) ++failed;
    std::cout << (failed ? "ACCEPTANCE: FAIL (" : "ACCEPTANCE: PASS (")
              << (g_results.size() - failed) << "/" << g_results.size() << " criteria)\n";
    return failed ? 1 : 0;
}
