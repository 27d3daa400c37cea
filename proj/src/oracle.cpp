#include "rlc/oracle.hpp"

#include <numeric>

namespace rlc {

namespace {

using Clock = std::chrono::steady_clock;

unsigned long checked_small_n(const Int& n, unsigned long limit, const char* who) {
    if (!n.fits_ulong_p() || mpz_get_ui(n.get_mpz_t()) > limit)
        throw InputError(std::string(who) + ": n = " + n.get_str() +
                         " exceeds the oracle bound " + std::to_string(limit));
    return mpz_get_ui(n.get_mpz_t());
}

// length-n cyclic convolution, exact integer arithmetic
std::vector<Int> cyclic_multiply(const std::vector<Int>& a, const std::vector<Int>& b) {
    const std::size_t n = a.size();
    std::vector<Int> out(n, Int(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            std::size_t k = i + j;
            if (k >= n) k -= n;
            out[k] += a[i] * b[j];
        }
    }
    return out;
}

std::vector<Int> cyclic_power(std::vector<Int> base, unsigned long exponent) {
    std::vector<Int> acc(base.size(), Int(0));
    acc[0] = 1;  // delta: neutral element of cyclic convolution
    while (exponent > 0) {
        if (exponent & 1) acc = cyclic_multiply(acc, base);
        exponent >>= 1;
        if (exponent) base = cyclic_multiply(base, base);
    }
    return acc;
}

// Walk every tuple over the per-position residue lists, reporting each tuple's
// sum mod n. Positions with a single choice are folded into the base sum.
template <typename Sink>
void enumerate_sums(const std::vector<const std::vector<unsigned long>*>& lists, unsigned long n,
                    Sink&& sink) {
    unsigned long base = 0;
    std::vector<const std::vector<unsigned long>*> branching;
    for (const auto* list : lists) {
        if (list->size() == 1)
            base = (base + (*list)[0]) % n;
        else
            branching.push_back(list);
    }
    // depth <= log2(total tuples) after folding forced positions
    auto rec = [&](auto&& self, std::size_t pos, unsigned long sum) -> void {
        if (pos == branching.size()) {
            sink(sum);
            return;
        }
        for (unsigned long x : *branching[pos]) {
            unsigned long next = sum + x;
            if (next >= n) next -= n;
            self(self, pos + 1, next);
        }
    };
    rec(rec, 0, base);
}

std::vector<const std::vector<unsigned long>*> position_lists(
    const ConstraintProfile& profile, unsigned long n,
    std::vector<std::vector<unsigned long>>& storage) {
    storage.clear();
    storage.reserve(profile.kappa().size());
    std::vector<const std::vector<unsigned long>*> lists;
    for (const auto& [d, kappa] : profile.kappa()) {  // ascending divisor order
        unsigned long dv = mpz_get_ui(d.get_mpz_t());
        unsigned long q = n / dv;
        std::vector<unsigned long> elements;
        for (unsigned long y = 1; y <= q; ++y)
            if (std::gcd(y, q) == 1) elements.push_back(dv * y % n);
        storage.push_back(std::move(elements));
        for (unsigned long i = 0; i < kappa; ++i) lists.push_back(&storage.back());
    }
    return lists;
}

void check_enumeration_budget(const ConstraintProfile& profile, unsigned long budget) {
    Int total = total_solutions(profile);
    if (total > budget)
        throw InputError("count_by_enumeration: total_solutions = " + total.get_str() +
                         " exceeds the budget " + std::to_string(budget));
}

}  // namespace

ClassVector class_vector(const Int& n, const Int& D) {
    if (n < 1) throw InputError("class_vector: n must be >= 1, got " + n.get_str());
    if (D < 1 || !mpz_divisible_p(n.get_mpz_t(), D.get_mpz_t()))
        throw InputError("class_vector: D = " + D.get_str() + " does not divide n = " +
                         n.get_str());
    unsigned long nn = checked_small_n(n, 100'000'000, "class_vector");
    unsigned long dv = mpz_get_ui(D.get_mpz_t());
    ClassVector cv;
    cv.n = n;
    cv.entries.assign(nn, 0);
    unsigned long q = nn / dv;
    for (unsigned long y = 1; y <= q; ++y)
        if (std::gcd(y, q) == 1) cv.entries[dv * y % nn] = 1;
    return cv;
}

std::vector<Int> spectrum_by_convolution(const ConstraintProfile& profile, unsigned long max_n) {
    unsigned long n = checked_small_n(profile.n(), max_n, "count_by_convolution");
    std::vector<Int> acc(n, Int(0));
    acc[0] = 1;
    for (const auto& [d, kappa] : profile.kappa()) {
        ClassVector cv = class_vector(profile.n(), d);
        std::vector<Int> base(cv.entries.begin(), cv.entries.end());
        acc = cyclic_multiply(acc, cyclic_power(std::move(base), kappa));
    }
    return acc;
}

SolutionCount count_by_convolution(const ConstraintProfile& profile, const Int& b,
                                   unsigned long max_n) {
    auto start = Clock::now();
    std::vector<Int> spec = spectrum_by_convolution(profile, max_n);
    Int b_mod = b % profile.n();
    if (b_mod < 0) b_mod += profile.n();
    Int value = spec[mpz_get_ui(b_mod.get_mpz_t())];
    return {std::move(value), Method::convolution, Clock::now() - start};
}

std::vector<Int> spectrum_by_enumeration(const ConstraintProfile& profile, unsigned long budget) {
    check_enumeration_budget(profile, budget);
    unsigned long n = checked_small_n(profile.n(), 1'048'576, "spectrum_by_enumeration");
    std::vector<std::vector<unsigned long>> storage;
    auto lists = position_lists(profile, n, storage);
    std::vector<unsigned long> hist(n, 0);
    enumerate_sums(lists, n, [&](unsigned long r) { ++hist[r]; });
    return std::vector<Int>(hist.begin(), hist.end());
}

SolutionCount count_by_enumeration(const ConstraintProfile& profile, const Int& b,
                                   unsigned long budget) {
    auto start = Clock::now();
    check_enumeration_budget(profile, budget);
    unsigned long n = checked_small_n(profile.n(), 0xFFFFFFFFUL, "count_by_enumeration");
    Int b_mod = b % profile.n();
    if (b_mod < 0) b_mod += profile.n();
    unsigned long target = mpz_get_ui(b_mod.get_mpz_t());
    std::vector<std::vector<unsigned long>> storage;
    auto lists = position_lists(profile, n, storage);
    unsigned long hits = 0;
    enumerate_sums(lists, n, [&](unsigned long r) { hits += (r == target); });
    return {Int(hits), Method::naive, Clock::now() - start};
}

}  // namespace rlc
