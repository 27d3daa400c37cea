#include "rlc/arith.hpp"

#include <algorithm>
#include <random>

namespace rlc {

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Odd primes up to kTrialLimit, sieved once.
const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        std::vector<bool> composite(kTrialLimit + 1, false);
        std::vector<unsigned long> out;
        for (unsigned long p = 2; p <= kTrialLimit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (unsigned long q = p * p; q <= kTrialLimit; q += p) composite[q] = true;
        }
        return out;
    }();
    return primes;
}

// mpz_probab_prime_p runs BPSW plus Miller-Rabin rounds; no composite below
// 2^64 passes BPSW, and none is known above it.
bool probab_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0; }

// One Pollard rho round (Brent variant). n must be odd, composite, > 1.
Int pollard_rho(const Int& n, std::mt19937_64& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        Int y = Int(rng() % 1'000'000'007ULL) % n;
        Int c = Int(rng() % 1'000'000'007ULL) % n;
        if (c == 0) c = 1;
        Int x = y, q = 1, g = 1, ys = y;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_recursive(const Int& n, std::mt19937_64& rng, std::map<Int, unsigned long>& out) {
    if (n == 1) return;
    if (probab_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_rho(n, rng);
    factor_recursive(d, rng, out);
    factor_recursive(n / d, rng, out);
}

}  // namespace

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return probab_prime(n);
}

Factorization factorize(const Int& n) {
    if (n < 1) throw InputError("factorize: n must be >= 1, got " + n.get_str());
    Factorization f;
    f.value = n;
    Int rest = n;
    for (unsigned long p : small_primes()) {
        if (Int(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned long e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
            f.factors.push_back({Int(p), e});
        }
    }
    if (rest > 1) {
        if (probab_prime(rest)) {
            f.factors.push_back({rest, 1});
        } else {
            std::mt19937_64 rng(0x5eedULL ^ mpz_get_ui(rest.get_mpz_t()));
            std::map<Int, unsigned long> large;
            factor_recursive(rest, rng, large);
            for (const auto& [p, e] : large) f.factors.push_back({p, e});
        }
    }
    std::sort(f.factors.begin(), f.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return f;
}

DivisorTable divisors(const Int& n) {
    if (n < 1) throw InputError("divisors: n must be >= 1, got " + n.get_str());
    Factorization f = factorize(n);
    std::vector<Int> divs{1};
    for (const auto& [p, e] : f.factors) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned long i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    DivisorTable table;
    table.n = n;
    table.divisors = std::move(divs);
    for (std::size_t i = 0; i < table.divisors.size(); ++i) table.index[table.divisors[i]] = i;
    return table;
}

Int totient(const Factorization& f) {
    Int phi = 1;
    for (const auto& [p, e] : f.factors) {
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), e - 1);
        phi *= pk * (p - 1);
    }
    return phi;
}

Int totient(const Int& n) {
    if (n < 1) throw InputError("totient: n must be >= 1, got " + n.get_str());
    return totient(factorize(n));
}

int moebius(const Factorization& f) {
    for (const auto& pp : f.factors)
        if (pp.exponent >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int moebius(const Int& n) {
    if (n < 1) throw InputError("moebius: n must be >= 1, got " + n.get_str());
    return moebius(factorize(n));
}

Int divisor_count(const Factorization& f) {
    Int tau = 1;
    for (const auto& pp : f.factors) tau *= Int(pp.exponent + 1);
    return tau;
}

}  // namespace rlc
