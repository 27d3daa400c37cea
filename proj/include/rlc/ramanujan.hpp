#pragma once

#include "rlc/arith.hpp"

namespace rlc {

/// A Ramanujan sum evaluation request: modulus q >= 1, any integer argument m.
struct RamanujanQuery {
    Int q;
    Int m;

    bool operator==(const RamanujanQuery&) const = default;
};

/// Literal evaluation of the defining sum over the units of q in floating
/// complex arithmetic, rounded to the nearest integer. Fails with
/// InternalError if the sum is further than 1e-6 from an integer and with
/// InputError if q exceeds max_q (the O(q) work bound).
///
/// Test/audit route only; use ramanujan_exact in production code.
Int ramanujan_direct(const RamanujanQuery& query, unsigned long max_q = 100'000);
Int ramanujan_direct(const Int& q, const Int& m, unsigned long max_q = 100'000);

/// Exact closed-form evaluation mu(q/g) * phi(q) / phi(q/g) with g = gcd(m, q).
/// Negative m is folded by evenness first. Production path for all modules.
Int ramanujan_exact(const RamanujanQuery& query);
Int ramanujan_exact(const Int& q, const Int& m);

/// Second exact route, sum of d * mu(q/d) over divisors d of gcd(q, m).
/// Kept independent of ramanujan_exact; used in tests and the audit.
Int ramanujan_divisor_sum(const RamanujanQuery& query);
Int ramanujan_divisor_sum(const Int& q, const Int& m);

/// Exponential sum of e(m*x/n) over the class {1 <= x <= n : gcd(x,n) = D},
/// which collapses to a Ramanujan sum with modulus n/D after dividing out D.
/// Requires D | n.
Int class_exponential_sum(const Int& n, const Int& D, const Int& m);

namespace detail {

/// c_q(m) given exponent vectors over a shared prime basis: q has exponent
/// q_exp[i] at primes[i], and g = gcd(m, q) has exponent g_exp[i] (<= q_exp[i]).
/// Avoids any big division: the quotient phi(q)/phi(q/g) is assembled prime
/// by prime, and a squared factor in q/g short-circuits to zero.
Int ramanujan_from_exponents(const std::vector<Int>& primes,
                             const std::vector<unsigned long>& q_exp,
                             const std::vector<unsigned long>& g_exp);

}  // namespace detail

}  // namespace rlc
