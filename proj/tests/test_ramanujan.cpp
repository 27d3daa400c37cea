#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlc/arith.hpp"
#include "rlc/ramanujan.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

using rlc::Int;

namespace {

// literal floating sum of e(m*x/n) over the class {1 <= x <= n : gcd(x,n)=D}
std::complex<double> class_sum_by_floating(unsigned long n, unsigned long D, long m) {
    std::complex<double> acc = 0.0;
    long mr = ((m % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n);
    for (unsigned long x = 1; x <= n; ++x) {
        if (std::gcd(x, n) != D) continue;
        double angle = 2.0 * std::numbers::pi *
                       static_cast<double>(static_cast<unsigned long>(mr) * x % n) /
                       static_cast<double>(n);
        acc += std::polar(1.0, angle);
    }
    return acc;
}

}  // namespace

TEST_CASE("direct evaluation examples") {
    CHECK(rlc::ramanujan_direct(1, 5) == 1);
    CHECK(rlc::ramanujan_direct(4, 2) == -2);   // e(pi*i) + e(3*pi*i)
    CHECK(rlc::ramanujan_direct(6, 4) == -1);   // 2*cos(2*pi/3)
    CHECK(rlc::ramanujan_direct(rlc::RamanujanQuery{12, 0}) == 4);
    CHECK_THROWS_AS(rlc::ramanujan_direct(Int(200'000), 1), rlc::InputError);
    CHECK_THROWS_AS(rlc::ramanujan_direct(0, 1), rlc::InputError);
}

TEST_CASE("exact evaluation examples") {
    CHECK(rlc::ramanujan_exact(6, 0) == rlc::totient(6));
    CHECK(rlc::ramanujan_exact(4, 1) == rlc::moebius(4));
    CHECK(rlc::ramanujan_exact(4, 1) == rlc::ramanujan_direct(4, 1));
    CHECK(rlc::ramanujan_exact(9, 3) == -3);
    CHECK(rlc::ramanujan_exact(9, 3) == rlc::ramanujan_direct(9, 3));
    CHECK(rlc::ramanujan_exact(9, 3) == rlc::ramanujan_divisor_sum(9, 3));
    CHECK_THROWS_AS(rlc::ramanujan_exact(0, 3), rlc::InputError);
}

TEST_CASE("divisor-sum evaluation examples") {
    CHECK(rlc::ramanujan_divisor_sum(1, 0) == 1);
    CHECK(rlc::ramanujan_divisor_sum(1, 17) == 1);
    CHECK(rlc::ramanujan_divisor_sum(1, Int(-9)) == 1);
    CHECK(rlc::ramanujan_divisor_sum(4, 2) == -2);
    CHECK(rlc::ramanujan_divisor_sum(4, 2) == rlc::ramanujan_direct(4, 2));
    CHECK(rlc::ramanujan_divisor_sum(12, 0) == 4);
    CHECK(rlc::ramanujan_divisor_sum(12, 0) == rlc::ramanujan_exact(12, 0));
}

TEST_CASE("exact values reach beyond the O(q) bound of the direct route") {
    Int q = Int(1'000'003) * 4;  // prime above the direct bound times 4
    CHECK(rlc::ramanujan_exact(q, 0) == rlc::totient(q));
    CHECK(rlc::ramanujan_exact(q, 1) == rlc::moebius(q));
    CHECK(rlc::ramanujan_exact(q, q) == rlc::totient(q));
}

TEST_CASE("three routes agree") {
    for (unsigned long q = 1; q <= 120; ++q) {
        for (long m = -120; m <= 120; ++m) {
            Int expected = rlc::ramanujan_exact(q, m);
            CAPTURE(q);
            CAPTURE(m);
            CHECK(expected == rlc::ramanujan_direct(q, m));
            CHECK(expected == rlc::ramanujan_divisor_sum(q, m));
        }
    }
}

TEST_CASE("periodicity, evenness and gcd reduction") {
    for (unsigned long q = 1; q <= 300; ++q) {
        for (long m : {-301L, -17L, -1L, 0L, 1L, 2L, 5L, 299L, 600L}) {
            Int c = rlc::ramanujan_exact(q, m);
            long m_mod = ((m % static_cast<long>(q)) + static_cast<long>(q)) %
                         static_cast<long>(q);
            CHECK(c == rlc::ramanujan_exact(q, m_mod));
            CHECK(c == rlc::ramanujan_exact(q, Int(-m)));
            CHECK(c == rlc::ramanujan_exact(q, rlc::gcd(Int(m), Int(q))));
        }
    }
}

TEST_CASE("multiplicativity in the modulus for coprime parts") {
    for (unsigned long q = 1; q <= 300; ++q) {
        for (unsigned long r = 1; q * r <= 300; ++r) {
            if (std::gcd(q, r) != 1) continue;
            for (long m = -300; m <= 300; m += 7) {
                CAPTURE(q);
                CAPTURE(r);
                CAPTURE(m);
                CHECK(rlc::ramanujan_exact(q * r, m) ==
                      rlc::ramanujan_exact(q, m) * rlc::ramanujan_exact(r, m));
            }
        }
    }
}

TEST_CASE("orthogonality of the divisor column") {
    for (unsigned long q = 1; q <= 300; ++q) {
        const auto divs = rlc::divisors(q).divisors;
        for (long m : {0L, 1L, 2L, 3L, -5L, 150L, 300L, 301L}) {
            Int sum = 0;
            for (const Int& d : divs) sum += rlc::ramanujan_exact(d, m);
            bool q_divides_m = m % static_cast<long>(q) == 0;
            CHECK(sum == (q_divides_m ? Int(q) : Int(0)));
        }
    }
}

TEST_CASE("absolute value bounded by the totient") {
    for (unsigned long q = 1; q <= 300; ++q) {
        Int phi = rlc::totient(q);
        for (long m = -10; m <= 10; ++m) {
            Int c = rlc::ramanujan_exact(q, m);
            CHECK(abs(c) <= phi);
        }
    }
}

TEST_CASE("class exponential sum examples") {
    CHECK(rlc::class_exponential_sum(6, 6, 3) == 1);   // class {6}, single term e(3)
    CHECK(rlc::class_exponential_sum(4, 1, 2) == -2);  // class {1,3}
    CHECK(rlc::class_exponential_sum(6, 2, 0) == 2);   // class {2,4}, phi(3) terms of 1
    CHECK_THROWS_AS(rlc::class_exponential_sum(6, 4, 0), rlc::InputError);
    CHECK_THROWS_AS(rlc::class_exponential_sum(6, 0, 0), rlc::InputError);
}

TEST_CASE("class exponential sum equals the literal floating sum") {
    for (unsigned long n = 1; n <= 120; ++n) {
        for (const Int& D : rlc::divisors(n).divisors) {
            unsigned long Dv = mpz_get_ui(D.get_mpz_t());
            for (long m : {-7L, -2L, 0L, 1L, 3L, 11L, 59L}) {
                Int exact = rlc::class_exponential_sum(n, D, m);
                std::complex<double> lit = class_sum_by_floating(n, Dv, m);
                CAPTURE(n);
                CAPTURE(Dv);
                CAPTURE(m);
                CHECK(std::abs(lit.imag()) < 1e-6);
                CHECK(std::abs(lit.real() - exact.get_d()) < 1e-6);
            }
        }
    }
}
