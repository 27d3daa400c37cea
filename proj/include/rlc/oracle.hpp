#pragma once

#include "rlc/counting.hpp"

namespace rlc {

/// 0/1 indicator over residues 0..n-1 of the class {1 <= x <= n : gcd(x,n)=D},
/// with x = n recorded at residue 0. Exactly phi(n/D) entries are set.
struct ClassVector {
    Int n;
    std::vector<unsigned char> entries;
};

/// Requires D | n and n small enough to tabulate.
ClassVector class_vector(const Int& n, const Int& D);

/// Full solution spectrum by exact integer cyclic convolution: each class
/// vector is raised to its multiplicity by repeated squaring under length-n
/// cyclic convolution and the class powers are multiplied together.
/// Refuses n > max_n (the O(n^2) work guard) with InputError.
std::vector<Int> spectrum_by_convolution(const ConstraintProfile& profile,
                                         unsigned long max_n = 4096);

SolutionCount count_by_convolution(const ConstraintProfile& profile, const Int& b,
                                   unsigned long max_n = 4096);

/// Full solution spectrum by exhaustive enumeration: classes are assigned to
/// positions in ascending divisor order (first kappa_1 positions in the first
/// class and so on) and every tuple's sum is bucketed by residue.
/// Refuses profiles with total_solutions > budget, naming the total.
std::vector<Int> spectrum_by_enumeration(const ConstraintProfile& profile,
                                         unsigned long budget = 10'000'000);

SolutionCount count_by_enumeration(const ConstraintProfile& profile, const Int& b,
                                   unsigned long budget = 10'000'000);

}  // namespace rlc
