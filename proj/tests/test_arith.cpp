#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlc/arith.hpp"

#include <numeric>
#include <random>

using rlc::Int;

namespace {

// independent oracle: divisors by trial division
std::vector<Int> divisors_by_trial(unsigned long n) {
    std::vector<Int> out;
    for (unsigned long d = 1; d <= n; ++d)
        if (n % d == 0) out.emplace_back(d);
    return out;
}

// independent oracle: totient by literal coprime count
unsigned long totient_by_count(unsigned long n) {
    unsigned long count = 0;
    for (unsigned long x = 1; x <= n; ++x)
        if (std::gcd(x, n) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("gcd conventions") {
    CHECK(rlc::gcd(12, 18) == 6);
    CHECK(rlc::gcd(7, 0) == 7);
    CHECK(rlc::gcd(4, 6) == 2);
    CHECK(rlc::gcd(0, 0) == 0);
    CHECK(rlc::gcd(Int(-12), Int(18)) == 6);
    CHECK(rlc::gcd(Int(0), Int(-5)) == 5);
}

TEST_CASE("factorize examples") {
    CHECK(rlc::factorize(1).factors.empty());

    rlc::Factorization f12 = rlc::factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0] == rlc::PrimePower{2, 2});
    CHECK(f12.factors[1] == rlc::PrimePower{3, 1});

    rlc::Factorization f = rlc::factorize(720720);
    std::vector<rlc::PrimePower> expected{{2, 4}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {13, 1}};
    CHECK(f.factors == expected);
    Int back = 1;
    for (const auto& [p, e] : f.factors) {
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
        back *= pk;
    }
    CHECK(back == 720720);

    CHECK_THROWS_AS(rlc::factorize(0), rlc::InputError);
    CHECK_THROWS_AS(rlc::factorize(Int(-4)), rlc::InputError);
}

TEST_CASE("factorize beyond the trial-division range") {
    // semiprime with both factors above 10^6
    Int p("1000000007"), q("1000000009");
    rlc::Factorization f = rlc::factorize(Int(p * q));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == rlc::PrimePower{p, 1});
    CHECK(f.factors[1] == rlc::PrimePower{q, 1});

    // prime power of a large prime
    rlc::Factorization g = rlc::factorize(Int(p * p));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == rlc::PrimePower{p, 2});

    // large prime left intact
    rlc::Factorization h = rlc::factorize(Int("1000000000000066600000000000001"));
    CHECK(h.factors.size() == 1);
    CHECK(h.factors[0].exponent == 1);
}

TEST_CASE("factorization invariants on random values") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Int n = Int(rng() % 1'000'000'000ULL + 1);
        rlc::Factorization f = rlc::factorize(n);
        Int back = 1;
        for (std::size_t j = 0; j < f.factors.size(); ++j) {
            const auto& [p, e] = f.factors[j];
            CHECK(rlc::is_prime(p));
            CHECK(e >= 1);
            if (j > 0) CHECK(f.factors[j - 1].prime < p);
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e);
            back *= pk;
        }
        CHECK(back == n);
    }
}

TEST_CASE("divisor tables") {
    CHECK(rlc::divisors(1).divisors == std::vector<Int>{1});
    CHECK(rlc::divisors(6).divisors == std::vector<Int>{1, 2, 3, 6});

    rlc::DivisorTable t36 = rlc::divisors(36);
    CHECK(t36.divisors.size() == 9);
    CHECK(t36.divisors == divisors_by_trial(36));

    CHECK(t36.divisors.front() == 1);
    CHECK(t36.divisors.back() == 36);
    CHECK(t36.index.at(9) == 5);
    CHECK(t36.contains(12));
    CHECK(!t36.contains(5));

    CHECK_THROWS_AS(rlc::divisors(0), rlc::InputError);
}

TEST_CASE("divisor count matches the exponent formula") {
    for (unsigned long n = 1; n <= 2000; ++n) {
        rlc::Factorization f = rlc::factorize(n);
        CHECK(Int(rlc::divisors(n).divisors.size()) == rlc::divisor_count(f));
    }
}

TEST_CASE("totient examples") {
    CHECK(rlc::totient(1) == 1);
    CHECK(rlc::totient(4) == 2);
    CHECK(rlc::totient(720720) == 138240);
    CHECK(rlc::totient(360) == totient_by_count(360));  // 96 by enumeration
    CHECK(totient_by_count(360) == 96);
    CHECK_THROWS_AS(rlc::totient(0), rlc::InputError);
}

TEST_CASE("moebius examples") {
    CHECK(rlc::moebius(1) == 1);
    CHECK(rlc::moebius(4) == 0);
    CHECK(rlc::moebius(30) == -1);
    CHECK_THROWS_AS(rlc::moebius(0), rlc::InputError);
}

TEST_CASE("divisor-sum identities up to 10^4") {
    for (unsigned long n = 1; n <= 10'000; ++n) {
        Int phi_sum = 0;
        int mu_sum = 0;
        for (const Int& d : rlc::divisors(n).divisors) {
            phi_sum += rlc::totient(d);
            mu_sum += rlc::moebius(d);
        }
        CHECK(phi_sum == Int(n));
        CHECK(mu_sum == (n == 1 ? 1 : 0));
    }
}
