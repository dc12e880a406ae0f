#include "qts/scanner.hpp"

#include <doctest.h>

using namespace qts;

TEST_CASE("(3,2): the exact-vanishing progressions come back as identically-zero") {
    ScanConfig cfg;
    cfg.spec = {3, 2};
    cfg.A_max = 3;
    cfg.n_samples = 50;
    const auto rows = scan(cfg);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == ScanRow{3, 1, 0, 50, "identically-zero"});
    CHECK(rows[1] == ScanRow{3, 2, 0, 50, "identically-zero"});
}

TEST_CASE("(12,2): rediscovers 3n+2 mod 2") {
    ScanConfig cfg;
    cfg.spec = {12, 2};
    cfg.moduli = {2};
    cfg.A_max = 6;
    cfg.n_samples = 50;
    const auto rows = scan(cfg);
    const ScanRow want{3, 2, 2, 50, "candidate"};
    CHECK(std::count(rows.begin(), rows.end(), want) == 1);
    // the two sub-progressions of 3n+2 with A = 6 show up as well
    CHECK(std::count(rows.begin(), rows.end(), ScanRow{6, 2, 2, 50, "candidate"}) == 1);
    CHECK(std::count(rows.begin(), rows.end(), ScanRow{6, 5, 2, 50, "candidate"}) == 1);
}

TEST_CASE("(4,3): 2n+1 vanishes exactly") {
    ScanConfig cfg;
    cfg.spec = {4, 3};
    cfg.moduli = {2};
    cfg.A_max = 2;
    cfg.n_samples = 50;
    const auto rows = scan(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].A == 2);
    CHECK(rows[0].B == 1);
    CHECK(rows[0].status == "identically-zero");
}

TEST_CASE("(14,7): the septic progressions mod 2") {
    ScanConfig cfg;
    cfg.spec = {14, 7};
    cfg.moduli = {2};
    cfg.A_max = 7;
    cfg.n_samples = 50;
    const auto rows = scan(cfg);
    for (long b : {3, 4, 6})
        CHECK(std::count(rows.begin(), rows.end(), ScanRow{7, b, 2, 50, "candidate"}) == 1);
}

TEST_CASE("scan output is deterministic and ordered") {
    ScanConfig cfg;
    cfg.spec = {12, 2};
    cfg.moduli = {2, 4};
    cfg.A_max = 6;
    cfg.n_samples = 30;
    const auto a = scan(cfg);
    const auto b = scan(cfg);
    CHECK(a == b);
    for (size_t i = 1; i < a.size(); ++i) {
        const auto key = [](const ScanRow& r) { return std::tuple(r.A, r.B, r.m); };
        CHECK(key(a[i - 1]) < key(a[i]));
    }
}

TEST_CASE("config validation") {
    ScanConfig cfg;
    cfg.spec = {3, 2};
    cfg.n_samples = 10;  // below the evidential minimum
    CHECK_THROWS_AS(scan(cfg), std::invalid_argument);
    cfg.n_samples = 50;
    cfg.A_max = 1;
    CHECK_THROWS_AS(scan(cfg), std::invalid_argument);
    cfg.A_max = 400;
    cfg.max_trunc = 1000;  // 400*50+400 way above
    CHECK_THROWS_AS(scan(cfg), std::invalid_argument);
}
