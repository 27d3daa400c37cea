#include "rlc/ramanujan.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

namespace rlc {

namespace detail {

Int ramanujan_from_exponents(const std::vector<Int>& primes,
                             const std::vector<unsigned long>& q_exp,
                             const std::vector<unsigned long>& g_exp) {
    Int value = 1;
    bool negative = false;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (q_exp[i] == 0) continue;
        unsigned long rest = q_exp[i] - g_exp[i];  // exponent of p in q/g
        if (rest >= 2) return 0;                   // squared factor: mu(q/g) = 0
        Int pk;
        mpz_pow_ui(pk.get_mpz_t(), primes[i].get_mpz_t(), q_exp[i] - 1);
        if (rest == 1) {
            negative = !negative;
            value *= pk;                // phi(p^e)/phi(p) collapses to p^(e-1)
        } else {
            value *= pk * (primes[i] - 1);  // full phi(p^e)
        }
    }
    return negative ? Int(-value) : value;
}

}  // namespace detail

Int ramanujan_direct(const Int& q, const Int& m, unsigned long max_q) {
    if (q < 1) throw InputError("ramanujan_direct: q must be >= 1, got " + q.get_str());
    if (q > max_q)
        throw InputError("ramanujan_direct: q = " + q.get_str() + " exceeds the O(q) bound " +
                         std::to_string(max_q));
    unsigned long qn = mpz_get_ui(q.get_mpz_t());
    Int m_mod = m % q;
    if (m_mod < 0) m_mod += q;
    unsigned long mr = mpz_get_ui(m_mod.get_mpz_t());

    double re = 0.0, im = 0.0;
    const double step = 2.0 * std::numbers::pi / static_cast<double>(qn);
    for (unsigned long j = 1; j <= qn; ++j) {
        if (std::gcd(j, qn) != 1) continue;
        unsigned long r = static_cast<unsigned long>((static_cast<unsigned __int128>(j) * mr) % qn);
        re += std::cos(step * static_cast<double>(r));
        im += std::sin(step * static_cast<double>(r));
    }
    double rounded = std::nearbyint(re);
    if (std::abs(im) > 1e-6 || std::abs(re - rounded) > 1e-6)
        throw InternalError("ramanujan_direct: sum (" + std::to_string(re) + ", " +
                            std::to_string(im) + "i) is not integral within 1e-6");
    return Int(static_cast<long>(rounded));
}

Int ramanujan_direct(const RamanujanQuery& query, unsigned long max_q) {
    return ramanujan_direct(query.q, query.m, max_q);
}

Int ramanujan_exact(const Int& q, const Int& m) {
    if (q < 1) throw InputError("ramanujan_exact: q must be >= 1, got " + q.get_str());
    Int g = gcd(m < 0 ? Int(-m) : m, q);  // evenness first, then gcd reduction
    Factorization f = factorize(q);
    std::vector<Int> primes;
    std::vector<unsigned long> q_exp, g_exp;
    primes.reserve(f.factors.size());
    Int scratch;
    for (const auto& [p, e] : f.factors) {
        primes.push_back(p);
        q_exp.push_back(e);
        g_exp.push_back(mpz_remove(scratch.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t()));
    }
    return detail::ramanujan_from_exponents(primes, q_exp, g_exp);
}

Int ramanujan_exact(const RamanujanQuery& query) { return ramanujan_exact(query.q, query.m); }

Int ramanujan_divisor_sum(const Int& q, const Int& m) {
    if (q < 1) throw InputError("ramanujan_divisor_sum: q must be >= 1, got " + q.get_str());
    Int g = gcd(m, q);
    Int sum = 0;
    for (const Int& d : divisors(g).divisors) sum += d * moebius(Int(q / d));
    return sum;
}

Int ramanujan_divisor_sum(const RamanujanQuery& query) {
    return ramanujan_divisor_sum(query.q, query.m);
}

Int class_exponential_sum(const Int& n, const Int& D, const Int& m) {
    if (n < 1) throw InputError("class_exponential_sum: n must be >= 1, got " + n.get_str());
    if (D < 1 || !mpz_divisible_p(n.get_mpz_t(), D.get_mpz_t()))
        throw InputError("class_exponential_sum: D = " + D.get_str() + " does not divide n = " +
                         n.get_str());
    return ramanujan_exact(Int(n / D), m);
}

}  // namespace rlc
