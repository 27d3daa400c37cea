#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rlc/counting.hpp"
#include "rlc/oracle.hpp"

#include <algorithm>
#include <random>

using rlc::ConstraintProfile;
using rlc::Int;

TEST_CASE("profile validation and canonical form") {
    ConstraintProfile profile(6, {{1, 1}, {2, 1}, {3, 0}});
    CHECK(profile.k() == 2);
    CHECK(profile.kappa().size() == 2);  // zero multiplicity dropped
    CHECK(profile == ConstraintProfile(6, {{1, 1}, {2, 1}}));

    CHECK_THROWS_AS(ConstraintProfile(6, {{4, 1}}), rlc::InputError);
    CHECK_THROWS_AS(ConstraintProfile(6, {{0, 1}}), rlc::InputError);
    CHECK_THROWS_AS(ConstraintProfile(0, {}), rlc::InputError);
}

TEST_CASE("count_solutions examples") {
    for (unsigned long k : {0ul, 1ul, 7ul})
        for (long b : {0L, 3L, -5L})
            CHECK(rlc::count_solutions(ConstraintProfile(1, {{1, k}}), b).value == 1);

    CHECK(rlc::count_solutions(ConstraintProfile(4, {{1, 2}}), 0).value == 2);
    CHECK(rlc::count_solutions(ConstraintProfile(4, {{1, 1}}), 1).value == 1);
    CHECK(rlc::count_solutions(ConstraintProfile(5, {{1, 2}}), 0).value == 4);
    CHECK(rlc::count_solutions(ConstraintProfile(6, {{1, 1}, {2, 1}}), 3).value == 2);
    CHECK(rlc::count_solutions(ConstraintProfile(6, {}), 0).value == 1);
    CHECK(rlc::count_solutions(ConstraintProfile(6, {}), 2).value == 0);
    CHECK(rlc::count_solutions(ConstraintProfile(6, {}), 6).value == 1);
    CHECK(rlc::count_solutions(ConstraintProfile(4, {{1, 2}}), 0).method ==
          rlc::Method::formula);
}

TEST_CASE("count_from_gcd_list examples") {
    CHECK(rlc::count_from_gcd_list(4, 0, {1, 1}).value == 2);
    CHECK(rlc::count_from_gcd_list(6, 3, {2, 1}).value == 2);
    CHECK(rlc::count_from_gcd_list(6, 1, {4}).value == 0);  // 4 does not divide 6
    CHECK(rlc::count_from_gcd_list(6, 0, {}).value == 1);
    CHECK_THROWS_AS(rlc::count_from_gcd_list(0, 0, {1}), rlc::InputError);
    CHECK_THROWS_AS(rlc::count_from_gcd_list(6, 0, {Int(-2)}), rlc::InputError);
}

TEST_CASE("gcd list order never matters") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        unsigned long n = rng() % 30 + 1;
        const auto divs = rlc::divisors(n).divisors;
        std::vector<Int> gcds;
        for (int j = 0; j < 4; ++j) gcds.push_back(divs[rng() % divs.size()]);
        Int b = Int(rng() % (2 * n)) - Int(n);
        Int reference = rlc::count_from_gcd_list(n, b, gcds).value;
        for (int shuffle = 0; shuffle < 4; ++shuffle) {
            std::shuffle(gcds.begin(), gcds.end(), rng);
            CHECK(rlc::count_from_gcd_list(n, b, gcds).value == reference);
        }
    }
}

TEST_CASE("spectrum examples") {
    rlc::Spectrum s4 = rlc::spectrum(ConstraintProfile(4, {{1, 2}}));
    CHECK(s4.counts == std::vector<Int>{2, 0, 2, 0});
    CHECK(rlc::spectrum(ConstraintProfile(1, {{1, 3}})).counts == std::vector<Int>{1});
    CHECK(rlc::spectrum(ConstraintProfile(6, {{6, 2}})).counts ==
          std::vector<Int>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("total_solutions examples") {
    CHECK(rlc::total_solutions(ConstraintProfile(4, {{1, 2}})) == 4);
    CHECK(rlc::total_solutions(ConstraintProfile(6, {{2, 1}, {3, 1}})) == 2);
    CHECK(rlc::total_solutions(ConstraintProfile(12, {{1, 3}})) == 64);
    CHECK(rlc::total_solutions(ConstraintProfile(9, {})) == 1);
}

TEST_CASE("formula matches both oracles on a small grid") {
    for (unsigned long n = 1; n <= 16; ++n) {
        rlc::for_each_profile(n, 3, [&](const ConstraintProfile& profile) {
            const auto by_conv = rlc::spectrum_by_convolution(profile);
            const auto by_enum = rlc::spectrum_by_enumeration(profile);
            const auto by_formula = rlc::spectrum(profile).counts;
            CAPTURE(n);
            CHECK(by_formula == by_conv);
            CHECK(by_formula == by_enum);
        });
    }
}

TEST_CASE("spectrum mass equals the unconstrained tuple count") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        unsigned long n = rng() % 60 + 1;
        const auto divs = rlc::divisors(n).divisors;
        std::map<Int, unsigned long> kappa;
        for (int j = 0; j < 4; ++j) kappa[divs[rng() % divs.size()]] += rng() % 8;
        ConstraintProfile profile(n, kappa);
        Int mass = 0;
        for (const Int& c : rlc::spectrum(profile).counts) mass += c;
        CHECK(mass == rlc::total_solutions(profile));
    }
}

TEST_CASE("periodicity and reflection in the target residue") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; ++i) {
        unsigned long n = rng() % 30 + 1;
        const auto divs = rlc::divisors(n).divisors;
        std::map<Int, unsigned long> kappa;
        for (int j = 0; j < 3; ++j) kappa[divs[rng() % divs.size()]] += rng() % 3;
        ConstraintProfile profile(n, kappa);
        long b = static_cast<long>(rng() % (3 * n)) - static_cast<long>(n);
        Int count = rlc::count_solutions(profile, b).value;
        CHECK(count == rlc::count_solutions(profile, Int(b) + Int(n)).value);
        CHECK(count == rlc::count_solutions(profile, Int(b) - Int(n)).value);
        CHECK(count == rlc::count_solutions(profile, Int(-b)).value);
        if (rlc::total_solutions(profile) <= 100'000) {
            CHECK(count == rlc::count_by_enumeration(profile, b).value);
            CHECK(count == rlc::count_by_enumeration(profile, Int(-b)).value);
        }
    }
}

TEST_CASE("multiplicity at the divisor n is neutral") {
    for (unsigned long n : {1ul, 4ul, 6ul, 12ul, 30ul}) {
        ConstraintProfile base(n, {{1, 2}});
        ConstraintProfile padded(n, {{1, 2}, {n, 5}});
        for (unsigned long b = 0; b < n; ++b)
            CHECK(rlc::count_solutions(base, b).value ==
                  rlc::count_solutions(padded, b).value);
    }
}

TEST_CASE("a single variable hits exactly its own class") {
    for (unsigned long n = 1; n <= 30; ++n) {
        for (const Int& D : rlc::divisors(n).divisors) {
            ConstraintProfile profile(n, {{D, 1}});
            for (unsigned long b = 0; b < n; ++b) {
                // representative of b in {1..n}
                unsigned long rep = b == 0 ? n : b;
                Int expected = rlc::gcd(Int(rep), Int(n)) == D ? 1 : 0;
                CHECK(rlc::count_solutions(profile, b).value == expected);
            }
        }
    }
}

TEST_CASE("profile grid enumerator") {
    std::size_t seen = 0;
    bool first = true;
    rlc::for_each_profile(6, 2, [&](const ConstraintProfile& profile) {
        if (first) {
            CHECK(profile.k() == 0);  // all-zero profile comes first
            first = false;
        }
        CHECK(profile.n() == 6);
        CHECK(profile.k() <= 2);
        ++seen;
    });
    // tau(6) = 4 divisor slots, total multiplicity <= 2: C(6,2) = 15
    CHECK(seen == 15);
}
