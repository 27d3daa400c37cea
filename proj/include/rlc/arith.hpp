#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlc {

/// Exact arbitrary-precision integer used throughout the library.
using Int = mpz_class;

/// Invalid input: bad arguments, malformed flags, out-of-budget requests.
/// The CLI maps this to exit status 1.
class InputError : public std::runtime_error {
  public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated internal invariant (e.g. a divisor sum not divisible by n, or a
/// floating sum that should be integral but is not). Signals a bug in the
/// library, never bad user input. The CLI maps this to exit status 2.
class InternalError : public std::logic_error {
  public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct PrimePower {
    Int prime;
    unsigned long exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

/// Complete prime-power decomposition of a positive integer.
/// Primes are strictly increasing and the product of prime^exponent is value.
struct Factorization {
    Int value = 1;
    std::vector<PrimePower> factors;  // empty for value == 1

    bool operator==(const Factorization&) const = default;
};

/// All positive divisors of n in ascending order, with positional lookup.
struct DivisorTable {
    Int n = 1;
    std::vector<Int> divisors;       // divisors[0] == 1, divisors.back() == n
    std::map<Int, std::size_t> index;  // divisor -> position in `divisors`

    bool contains(const Int& d) const { return index.count(d) != 0; }
};

/// gcd with the usual conventions: gcd(0,0) = 0, gcd(a,0) = |a|.
Int gcd(const Int& a, const Int& b);

/// Primality check (deterministic for word-sized inputs, Baillie-PSW beyond).
bool is_prime(const Int& n);

/// Factorize n >= 1. Trial division by primes up to 10^6, then Pollard rho
/// with Brent cycle detection on the remaining cofactor.
Factorization factorize(const Int& n);

/// All divisors of n >= 1, ascending, generated from the factorization.
DivisorTable divisors(const Int& n);

/// Euler's totient via the factorization.
Int totient(const Int& n);
Int totient(const Factorization& f);

/// Moebius function: 0 on non-squarefree n, else (-1)^(number of primes).
int moebius(const Int& n);
int moebius(const Factorization& f);

/// Number of divisors tau(n) = prod (exponent + 1).
Int divisor_count(const Factorization& f);

}  // namespace rlc
