#pragma once

#include "rlc/counting.hpp"

namespace rlc {

/// Outcome of one audit check. `agree` is true iff every exact route matched
/// the oracle value and every floating route stayed within tolerance;
/// `discrepancies` lists (route, rendered finding) pairs for whatever failed,
/// or for findings that are expected and merely reported (the printed-form
/// orientation). Routes named "derivation", "fourier" or "product" must never
/// appear here; "printed" may.
struct AuditReport {
    std::string instance;
    std::map<std::string, std::string> values;
    bool agree = true;
    std::vector<std::pair<std::string, std::string>> discrepancies;

    bool operator==(const AuditReport&) const = default;
};

/// Maximum per-point error of inverse(forward(f)) under the finite Fourier
/// transform of a function periodic mod f.size().
double fourier_roundtrip_error(const std::vector<double>& f);

/// Round-trips `samples` random integer-valued periodic functions mod n
/// through the Fourier pair; agree iff every point comes back within 1e-6.
/// Requires n <= 1000.
AuditReport check_fourier_pair(const Int& n, unsigned long samples, unsigned long seed = 1);

/// Checks that the spectrum's Fourier series at argument m collapses to the
/// product of class Ramanujan sums: sum over b of N(b) e(bm/n) against
/// prod over classes of c_{n/D}(m)^kappa_D. The left side uses the
/// convolution-oracle spectrum in floating complex arithmetic, the right side
/// is exact; agreement within 1e-6 relative to |right| + 1.
/// Requires n <= 200 and total_solutions <= 10^7.
AuditReport check_product_identity(const ConstraintProfile& profile, const Int& m);

/// Evaluates both readings of the closed form on every instance with
/// n <= n_max, total multiplicity <= k_max and every residue b, against the
/// convolution oracle:
///   derivation form: (1/n) sum over d|n of c_{n/d}(b) * prod c_{n/D}(d)^kappa
///   printed form:    (1/n) sum over d|n of c_d(b)     * prod c_{n/D}(d)^kappa
/// Divisor sums are kept as exact integers with an explicit divisibility
/// check; a non-integral or negative value is flagged and can never match.
/// Reports per-form agreement statistics and the first counterexample of any
/// disagreeing form. Instances are scanned in order of (n, kappa, b) with
/// kappa lexicographic over ascending divisors, so the first counterexample
/// is deterministic. Disagreement of the printed form is a finding, not an
/// error. Requires n_max <= 48, k_max <= 4.
AuditReport adjudicate_orientations(unsigned long n_max, unsigned long k_max);

}  // namespace rlc
