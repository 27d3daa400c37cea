#pragma once

#include "rlc/arith.hpp"

#include <chrono>
#include <functional>

namespace rlc {

enum class Method { formula, convolution, naive };

std::string to_string(Method method);
Method method_from_string(const std::string& name);

/// Modulus n plus the multiplicity vector kappa: for each divisor D of n,
/// how many variables are constrained to the class {1 <= x <= n : gcd(x,n)=D}.
/// Only positive multiplicities are stored; absent divisors mean zero.
class ConstraintProfile {
  public:
    /// Throws InputError if n < 1 or a key does not divide n.
    ConstraintProfile(Int n, std::map<Int, unsigned long> kappa);

    const Int& n() const { return n_; }
    const std::map<Int, unsigned long>& kappa() const { return kappa_; }
    unsigned long k() const { return k_; }

    bool operator==(const ConstraintProfile&) const = default;

  private:
    Int n_;
    std::map<Int, unsigned long> kappa_;
    unsigned long k_ = 0;
};

struct SolutionCount {
    Int value;
    Method method = Method::formula;
    std::chrono::nanoseconds elapsed{0};
};

/// Solution counts for every residue b in {0, ..., n-1} under one profile.
struct Spectrum {
    Int n;
    std::vector<Int> counts;
};

/// Exact number of tuples (x_1, ..., x_k) in {1..n}^k with the prescribed
/// number of coordinates in each divisor class and sum congruent to b mod n.
///
/// Evaluates the divisor sum (1/n) * sum over d|n of c_{n/d}(b) * prod over
/// classes of c_{n/D}(d)^kappa_D in exact integer arithmetic; the sum must be
/// divisible by n or InternalError is thrown (never rounded).
SolutionCount count_solutions(const ConstraintProfile& profile, const Int& b);

/// Per-variable surface: gcd requirements t_1, ..., t_k, one per variable.
/// A t_i that does not divide n makes the constraint unsatisfiable and the
/// count 0; otherwise the multiset of t_i forms the profile. The result is
/// invariant under permutation of the list.
SolutionCount count_from_gcd_list(const Int& n, const Int& b, const std::vector<Int>& gcds);

/// count_solutions for every residue, sharing one setup of the divisor data.
Spectrum spectrum(const ConstraintProfile& profile);

/// Number of constrained tuples ignoring the congruence:
/// prod over classes of phi(n/D)^kappa_D.
Int total_solutions(const ConstraintProfile& profile);

/// Visit every multiplicity profile over the divisors of n with total
/// multiplicity <= k_max, in lexicographic order of the multiplicity vector
/// over ascending divisors (the all-zero profile first).
void for_each_profile(const Int& n, unsigned long k_max,
                      const std::function<void(const ConstraintProfile&)>& visit);

}  // namespace rlc
