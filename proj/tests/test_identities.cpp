#include "qts/identities.hpp"

#include "qts/qfactory.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace qts;

TEST_CASE("every catalog entry passes at its default truncation") {
    for (const auto& [id, trunc] : default_catalog()) {
        CAPTURE(id.name());
        const VerificationReport rep = verify(id, trunc);
        CHECK(rep.status == CheckStatus::pass);
        CHECK(!rep.first_mismatch.has_value());
    }
}

TEST_CASE("congruence entries carry their modulus") {
    const VerificationReport t7 = verify({IdentityId::Kind::C_t7, 0, 1, 1}, 200);
    CHECK(t7.status == CheckStatus::pass);
    CHECK(t7.modulus == 2);
    const VerificationReport v7 = verify({IdentityId::Kind::C_v7, 0, 2, 1}, 200);
    CHECK(v7.status == CheckStatus::pass);
    CHECK(v7.modulus == 4);
    const VerificationReport l28 = verify({IdentityId::Kind::L28_fqq2_mod2}, 200);
    CHECK(l28.modulus == 2);
    CHECK(verify({IdentityId::Kind::L27_cubic}, 150).modulus == 0);
}

TEST_CASE("f1 p-dissection matches f1 and avoids the tail class") {
    for (long p : {5L, 7L, 11L, 13L}) {
        CAPTURE(p);
        const long N = 300;
        const Series rhs = f1_pdissection_rhs(p, N);
        CHECK(equal_upto(rhs, euler_f(1, N), N).equal);
        // exponent classes mod p of the finite-sum terms avoid (p^2-1)/24
        const long tail_class = ((p * p - 1) / 24) % p;
        const long e = (p % 6 == 1) ? (p - 1) / 6 : (-p - 1) / 6;
        std::set<long> classes;
        for (long k = -(p - 1) / 2; k <= (p - 1) / 2; ++k)
            if (k != e) classes.insert(((3 * k * k + k) / 2) % p);
        CHECK(!classes.contains(tail_class));
    }
    CHECK_THROWS_AS(f1_pdissection_rhs(3, 50), std::invalid_argument);
    CHECK_THROWS_AS(f1_pdissection_rhs(9, 50), std::invalid_argument);
    CHECK_THROWS_AS(verify({IdentityId::Kind::L23_f1_pdissect, 3}, 50), std::invalid_argument);
}

TEST_CASE("psi p-dissection matches psi and avoids the tail class") {
    for (long p : {3L, 5L, 7L}) {
        CAPTURE(p);
        const long N = 300;
        CHECK(equal_upto(psi_pdissection_rhs(p, N), special(SpecialTheta::psi, N), N).equal);
        const long tail_class = ((p * p - 1) / 8) % p;
        for (long m = 0; m <= (p - 3) / 2; ++m) CHECK(((m * m + m) / 2) % p != tail_class);
    }
    CHECK_THROWS_AS(psi_pdissection_rhs(2, 50), std::invalid_argument);
    // spec'd spot values: for p = 5 the sum classes {0, 1} avoid 3
    CHECK(((5 * 5 - 1) / 8) % 5 == 3);
    CHECK(((5 * 5 - 1) / 24) % 5 == 1);
}

TEST_CASE("legendre symbol") {
    CHECK(legendre(-2, 5) == -1);
    CHECK(legendre(-6, 13) == -1);
    CHECK(legendre(4, 7) == 1);
    CHECK(legendre(14, 7) == 0);
    CHECK(legendre(-6, 5) == 1);
    CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);
    CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);

    // multiplicativity and agreement with the exhaustive square set
    std::mt19937_64 rng(5);
    for (long p : {5L, 7L, 11L, 13L}) {
        std::set<long> squares;
        for (long x = 1; x < p; ++x) squares.insert(x * x % p);
        for (int iter = 0; iter < 40; ++iter) {
            const long a = static_cast<long>(rng() % 1000) - 500;
            const long b = static_cast<long>(rng() % 1000) - 500;
            CHECK(legendre(mpz_class(a) * b, p) == legendre(a, p) * legendre(b, p));
            if (a % p != 0) {
                const long r = ((a % p) + p) % p;
                CHECK(legendre(a, p) == (squares.contains(r) ? 1 : -1));
            }
        }
    }
}

TEST_CASE("negative controls: perturbations are caught at the exact index") {
    const VerificationReport forced = verify_perturbed({IdentityId::Kind::L21_f_qq2}, 10, 3);
    CHECK(forced.status == CheckStatus::fail);
    REQUIRE(forced.first_mismatch.has_value());
    CHECK(forced.first_mismatch->index == 3);

    std::mt19937_64 rng(17);
    for (const auto& [id, trunc] : default_catalog()) {
        const long t = std::min<long>(trunc, 60);
        const long j = 1 + static_cast<long>(rng() % static_cast<unsigned long>(t - 1));
        CAPTURE(id.name());
        CAPTURE(j);
        const VerificationReport rep = verify_perturbed(id, t, j);
        CHECK(rep.status == CheckStatus::fail);
        REQUIRE(rep.first_mismatch.has_value());
        CHECK(rep.first_mismatch->index == j);
    }
}

TEST_CASE("verification refuses vacuous truncations") {
    CHECK_THROWS_AS(verify({IdentityId::Kind::L27_cubic}, 9), std::invalid_argument);
    CHECK_NOTHROW(verify({IdentityId::Kind::L27_cubic}, 10));
}

TEST_CASE("identity id parsing") {
    auto id = IdentityId::parse("L23", 7, 0, 0);
    REQUIRE(id.has_value());
    CHECK(id->name() == "L23_f1_pdissect(p=7)");
    CHECK(IdentityId::parse("C_t7", 0, 2, 3)->name() == "C_t7(r=2,m=3)");
    CHECK(!IdentityId::parse("L99", 0, 0, 0).has_value());
}
