#include "rlc/counting.hpp"

#include "rlc/ramanujan.hpp"

#include <algorithm>
#include <numeric>

namespace rlc {

namespace {

using Clock = std::chrono::steady_clock;

// Divisor-sum evaluator for one profile. All Ramanujan values are computed
// from exponent vectors over the prime basis of n, so no factorization or
// big gcd happens inside the per-residue loop.
class FormulaEvaluator {
  public:
    explicit FormulaEvaluator(const ConstraintProfile& profile) : n_(profile.n()) {
        Factorization f = factorize(n_);
        for (const auto& [p, e] : f.factors) {
            primes_.push_back(p);
            n_exp_.push_back(e);
        }
        enumerate_divisors(f);
        Int scratch;
        for (const auto& [d, kappa] : profile.kappa()) {
            ClassData cls;
            cls.kappa = kappa;
            cls.q_exp.resize(primes_.size());
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                unsigned long vd =
                    mpz_remove(scratch.get_mpz_t(), d.get_mpz_t(), primes_[i].get_mpz_t());
                cls.q_exp[i] = n_exp_[i] - vd;  // exponent of p_i in n/d
            }
            classes_.push_back(std::move(cls));
        }
    }

    Int eval(const Int& b) const {
        Int b_mod = b % n_;
        if (b_mod < 0) b_mod += n_;

        // exponent of p_i in gcd(b, n); b = 0 behaves as full n-valuation
        std::vector<unsigned long> b_exp(primes_.size());
        Int scratch;
        for (std::size_t i = 0; i < primes_.size(); ++i)
            b_exp[i] = b_mod == 0 ? n_exp_[i]
                                  : std::min(n_exp_[i], mpz_remove(scratch.get_mpz_t(),
                                                                   b_mod.get_mpz_t(),
                                                                   primes_[i].get_mpz_t()));

        Int acc = 0;
        std::vector<unsigned long> q_exp(primes_.size()), g_exp(primes_.size());
        Int power;
        for (const auto& d_exp : divisor_exp_) {
            // c_{n/d}(b)
            for (std::size_t i = 0; i < primes_.size(); ++i) {
                q_exp[i] = n_exp_[i] - d_exp[i];
                g_exp[i] = std::min(b_exp[i], q_exp[i]);
            }
            Int term = detail::ramanujan_from_exponents(primes_, q_exp, g_exp);
            if (term == 0) continue;

            for (const auto& cls : classes_) {
                for (std::size_t i = 0; i < primes_.size(); ++i)
                    g_exp[i] = std::min(d_exp[i], cls.q_exp[i]);
                Int c = detail::ramanujan_from_exponents(primes_, cls.q_exp, g_exp);
                if (c == 0) {
                    term = 0;
                    break;
                }
                mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), cls.kappa);
                term *= power;
            }
            acc += term;
        }

        if (!mpz_divisible_p(acc.get_mpz_t(), n_.get_mpz_t()))
            throw InternalError("count_solutions: divisor sum " + acc.get_str() +
                                " is not divisible by n = " + n_.get_str());
        Int count = acc / n_;
        if (count < 0)
            throw InternalError("count_solutions: negative count " + count.get_str() +
                                " for n = " + n_.get_str());
        return count;
    }

    const Int& modulus() const { return n_; }

  private:
    struct ClassData {
        std::vector<unsigned long> q_exp;  // exponents of n/D over the prime basis
        unsigned long kappa = 0;
    };

    void enumerate_divisors(const Factorization& f) {
        divisor_exp_.push_back(std::vector<unsigned long>(primes_.size(), 0));
        std::vector<Int> values{1};
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            std::size_t base = divisor_exp_.size();
            Int pk = 1;
            for (unsigned long e = 1; e <= f.factors[i].exponent; ++e) {
                pk *= f.factors[i].prime;
                for (std::size_t j = 0; j < base; ++j) {
                    auto exp = divisor_exp_[j];
                    exp[i] = e;
                    divisor_exp_.push_back(std::move(exp));
                    values.push_back(values[j] * pk);
                }
            }
        }
        // canonical ascending order
        std::vector<std::size_t> order(values.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<unsigned long>> sorted;
        sorted.reserve(order.size());
        for (std::size_t idx : order) sorted.push_back(std::move(divisor_exp_[idx]));
        divisor_exp_ = std::move(sorted);
    }

    Int n_;
    std::vector<Int> primes_;
    std::vector<unsigned long> n_exp_;
    std::vector<std::vector<unsigned long>> divisor_exp_;
    std::vector<ClassData> classes_;
};

}  // namespace

std::string to_string(Method method) {
    switch (method) {
        case Method::formula: return "formula";
        case Method::convolution: return "convolution";
        case Method::naive: return "naive";
    }
    throw InternalError("unknown Method value");
}

Method method_from_string(const std::string& name) {
    if (name == "formula") return Method::formula;
    if (name == "convolution") return Method::convolution;
    if (name == "naive") return Method::naive;
    throw InputError("unknown method '" + name + "' (expected formula, convolution or naive)");
}

ConstraintProfile::ConstraintProfile(Int n, std::map<Int, unsigned long> kappa) : n_(std::move(n)) {
    if (n_ < 1) throw InputError("ConstraintProfile: n must be >= 1, got " + n_.get_str());
    for (auto& [d, mult] : kappa) {
        if (mult == 0) continue;
        if (d < 1 || !mpz_divisible_p(n_.get_mpz_t(), d.get_mpz_t()))
            throw InputError("ConstraintProfile: kappa key " + d.get_str() +
                             " does not divide n = " + n_.get_str());
        kappa_.emplace(d, mult);
        k_ += mult;
    }
}

SolutionCount count_solutions(const ConstraintProfile& profile, const Int& b) {
    auto start = Clock::now();
    FormulaEvaluator evaluator(profile);
    Int value = evaluator.eval(b);
    return {std::move(value), Method::formula, Clock::now() - start};
}

SolutionCount count_from_gcd_list(const Int& n, const Int& b, const std::vector<Int>& gcds) {
    auto start = Clock::now();
    if (n < 1) throw InputError("count_from_gcd_list: n must be >= 1, got " + n.get_str());
    std::map<Int, unsigned long> kappa;
    for (const Int& t : gcds) {
        if (t < 1)
            throw InputError("count_from_gcd_list: gcd constraint must be positive, got " +
                             t.get_str());
        if (!mpz_divisible_p(n.get_mpz_t(), t.get_mpz_t()))
            // no x can have gcd(x, n) = t when t does not divide n
            return {Int(0), Method::formula, Clock::now() - start};
        ++kappa[t];
    }
    ConstraintProfile profile(n, std::move(kappa));
    FormulaEvaluator evaluator(profile);
    Int value = evaluator.eval(b);
    return {std::move(value), Method::formula, Clock::now() - start};
}

Spectrum spectrum(const ConstraintProfile& profile) {
    if (!profile.n().fits_ulong_p() || profile.n() > 1'048'576)
        throw InputError("spectrum: n = " + profile.n().get_str() + " is too large to tabulate");
    unsigned long n = mpz_get_ui(profile.n().get_mpz_t());
    FormulaEvaluator evaluator(profile);
    Spectrum result;
    result.n = profile.n();
    result.counts.reserve(n);
    for (unsigned long b = 0; b < n; ++b) result.counts.push_back(evaluator.eval(Int(b)));
    return result;
}

Int total_solutions(const ConstraintProfile& profile) {
    Int total = 1;
    Int power;
    for (const auto& [d, kappa] : profile.kappa()) {
        Int phi = totient(Int(profile.n() / d));
        mpz_pow_ui(power.get_mpz_t(), phi.get_mpz_t(), kappa);
        total *= power;
    }
    return total;
}

void for_each_profile(const Int& n, unsigned long k_max,
                      const std::function<void(const ConstraintProfile&)>& visit) {
    const std::vector<Int> divs = divisors(n).divisors;
    std::map<Int, unsigned long> kappa;
    // lexicographic over ascending divisors; multiplicity 0 first at each level
    std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t i,
                                                              unsigned long remaining) {
        if (i == divs.size()) {
            visit(ConstraintProfile(n, kappa));
            return;
        }
        rec(i + 1, remaining);
        for (unsigned long m = 1; m <= remaining; ++m) {
            kappa[divs[i]] = m;
            rec(i + 1, remaining - m);
        }
        kappa.erase(divs[i]);
    };
    rec(0, k_max);
}

}  // namespace rlc
