#include "rlc/audit.hpp"

#include "rlc/oracle.hpp"
#include "rlc/ramanujan.hpp"

#include <complex>
#include <numbers>
#include <random>
#include <sstream>

namespace rlc {

namespace {

constexpr double kTolerance = 1e-6;

std::complex<double> unit_root(unsigned long numerator, unsigned long n) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(numerator % n) /
                               static_cast<double>(n));
}

std::string render_double(double x) {
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

std::string render_kappa(const ConstraintProfile& profile) {
    std::string out = "{";
    bool first = true;
    for (const auto& [d, kappa] : profile.kappa()) {
        if (!first) out += ",";
        out += d.get_str() + ":" + std::to_string(kappa);
        first = false;
    }
    return out + "}";
}

// (max per-point error, index of the worst point)
std::pair<double, std::size_t> roundtrip_worst_point(const std::vector<double>& f) {
    const std::size_t n = f.size();
    std::vector<std::complex<double>> coeff(n);
    for (std::size_t b = 0; b < n; ++b) {
        std::complex<double> acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) acc += f[m] * std::conj(unit_root(b * m, n));
        coeff[b] = acc / static_cast<double>(n);
    }
    double worst = 0.0;
    std::size_t worst_point = 0;
    for (std::size_t m = 0; m < n; ++m) {
        std::complex<double> acc = 0.0;
        for (std::size_t b = 0; b < n; ++b) acc += coeff[b] * unit_root(b * m, n);
        double err = std::abs(acc - f[m]);
        if (err > worst) {
            worst = err;
            worst_point = m;
        }
    }
    return {worst, worst_point};
}

}  // namespace

double fourier_roundtrip_error(const std::vector<double>& f) {
    if (f.empty()) throw InputError("fourier_roundtrip_error: empty function");
    return roundtrip_worst_point(f).first;
}

AuditReport check_fourier_pair(const Int& n, unsigned long samples, unsigned long seed) {
    if (n < 1 || n > 1000)
        throw InputError("check_fourier_pair: n must be in [1, 1000], got " + n.get_str());
    unsigned long nn = mpz_get_ui(n.get_mpz_t());

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(-100, 100);

    AuditReport report;
    report.instance =
        "fourier_pair n=" + n.get_str() + " samples=" + std::to_string(samples) + " seed=" +
        std::to_string(seed);
    double worst = 0.0;
    for (unsigned long s = 0; s < samples; ++s) {
        std::vector<double> f(nn);
        for (auto& x : f) x = value(rng);
        auto [err, point] = roundtrip_worst_point(f);
        if (err > worst) worst = err;
        if (err > kTolerance)
            report.discrepancies.emplace_back(
                "fourier", "sample " + std::to_string(s) + " point " + std::to_string(point) +
                               ": roundtrip error " + render_double(err));
    }
    report.values["max_roundtrip_error"] = render_double(worst);
    report.values["tolerance"] = render_double(kTolerance);
    report.agree = report.discrepancies.empty();
    return report;
}

AuditReport check_product_identity(const ConstraintProfile& profile, const Int& m) {
    if (profile.n() > 200)
        throw InputError("check_product_identity: n = " + profile.n().get_str() +
                         " exceeds the bound 200");
    Int total = total_solutions(profile);
    if (total > 10'000'000)
        throw InputError("check_product_identity: total_solutions = " + total.get_str() +
                         " exceeds the bound 10^7");

    unsigned long n = mpz_get_ui(profile.n().get_mpz_t());
    std::vector<Int> spec = spectrum_by_convolution(profile);

    Int m_mod = m % profile.n();
    if (m_mod < 0) m_mod += profile.n();
    unsigned long mr = mpz_get_ui(m_mod.get_mpz_t());

    std::complex<double> lhs = 0.0;
    for (unsigned long b = 0; b < n; ++b) lhs += spec[b].get_d() * unit_root(b * mr, n);

    Int rhs = 1;
    Int power;
    for (const auto& [d, kappa] : profile.kappa()) {
        Int c = ramanujan_exact(Int(profile.n() / d), m);
        mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), kappa);
        rhs *= power;
    }

    double diff = std::abs(lhs - std::complex<double>(rhs.get_d()));
    double tolerance = kTolerance * (std::abs(rhs.get_d()) + 1.0);

    AuditReport report;
    report.instance = "product_identity n=" + profile.n().get_str() + " kappa=" +
                      render_kappa(profile) + " m=" + m.get_str();
    report.values["spectrum_side"] =
        render_double(lhs.real()) + (lhs.imag() < 0 ? "" : "+") + render_double(lhs.imag()) + "i";
    report.values["ramanujan_product_side"] = rhs.get_str();
    report.values["difference"] = render_double(diff);
    report.values["tolerance"] = render_double(tolerance);
    report.agree = diff <= tolerance;
    if (!report.agree)
        report.discrepancies.emplace_back("product", "difference " + render_double(diff) +
                                                         " exceeds tolerance " +
                                                         render_double(tolerance));
    return report;
}

AuditReport adjudicate_orientations(unsigned long n_max, unsigned long k_max) {
    if (n_max < 1 || n_max > 48)
        throw InputError("adjudicate_orientations: n_max must be in [1, 48], got " +
                         std::to_string(n_max));
    if (k_max > 4)
        throw InputError("adjudicate_orientations: k_max must be <= 4, got " +
                         std::to_string(k_max));

    struct FormStats {
        unsigned long agreements = 0;
        unsigned long non_integral = 0;
        unsigned long negative = 0;
        std::string first_counterexample;  // empty while the form is clean
    };
    FormStats derivation, printed;
    unsigned long instances = 0;

    for (unsigned long n = 1; n <= n_max; ++n) {
        const std::vector<Int> divs = divisors(Int(n)).divisors;
        const std::size_t tau = divs.size();
        std::map<Int, std::size_t> index;
        for (std::size_t i = 0; i < tau; ++i) index[divs[i]] = i;

        // c_table[i][r] = c_{divs[i]}(r); period divides n, so r mod n suffices
        std::vector<std::vector<Int>> c_table(tau, std::vector<Int>(n));
        for (std::size_t i = 0; i < tau; ++i)
            for (unsigned long r = 0; r < n; ++r) c_table[i][r] = ramanujan_exact(divs[i], Int(r));

        // complement[j] = index of n / divs[j]
        std::vector<std::size_t> complement(tau);
        for (std::size_t j = 0; j < tau; ++j) complement[j] = index.at(Int(n) / divs[j]);

        for_each_profile(Int(n), k_max, [&](const ConstraintProfile& profile) {
            std::vector<Int> oracle = spectrum_by_convolution(profile);

            // class product at each divisor argument; shared by both forms
            std::vector<Int> class_product(tau, Int(1));
            Int power;
            for (std::size_t j = 0; j < tau; ++j) {
                unsigned long arg = mpz_get_ui(divs[j].get_mpz_t()) % n;
                for (const auto& [d, kappa] : profile.kappa()) {
                    const Int& c = c_table[complement[index.at(d)]][arg];
                    mpz_pow_ui(power.get_mpz_t(), c.get_mpz_t(), kappa);
                    class_product[j] *= power;
                }
            }

            for (unsigned long b = 0; b < n; ++b) {
                ++instances;
                Int sum_derivation = 0, sum_printed = 0;
                for (std::size_t j = 0; j < tau; ++j) {
                    sum_derivation += c_table[complement[j]][b] * class_product[j];
                    sum_printed += c_table[j][b] * class_product[j];
                }
                auto judge = [&](const Int& sum, FormStats& stats, const char* name) {
                    std::string rendered;
                    bool matches = false;
                    if (!mpz_divisible_ui_p(sum.get_mpz_t(), n)) {
                        ++stats.non_integral;
                        rendered = sum.get_str() + "/" + std::to_string(n) + " (non-integral)";
                    } else {
                        Int value = sum / static_cast<long>(n);
                        if (value < 0) ++stats.negative;
                        matches = value == oracle[b];
                        rendered = value.get_str();
                    }
                    if (matches) {
                        ++stats.agreements;
                    } else if (stats.first_counterexample.empty()) {
                        stats.first_counterexample = "n=" + std::to_string(n) + " kappa=" +
                                                     render_kappa(profile) + " b=" +
                                                     std::to_string(b) + ": " + name + "=" +
                                                     rendered + " oracle=" + oracle[b].get_str();
                    }
                };
                judge(sum_derivation, derivation, "derivation");
                judge(sum_printed, printed, "printed");
            }
        });
    }

    AuditReport report;
    report.instance = "orientation_adjudication n_max=" + std::to_string(n_max) + " k_max=" +
                      std::to_string(k_max);
    auto rate = [&](const FormStats& s) {
        return std::to_string(s.agreements) + "/" + std::to_string(instances);
    };
    report.values["instances"] = std::to_string(instances);
    report.values["derivation_form_agreement"] = rate(derivation);
    report.values["printed_form_agreement"] = rate(printed);
    report.values["derivation_form_non_integral"] = std::to_string(derivation.non_integral);
    report.values["printed_form_non_integral"] = std::to_string(printed.non_integral);
    report.values["derivation_form_negative"] = std::to_string(derivation.negative);
    report.values["printed_form_negative"] = std::to_string(printed.negative);
    if (!derivation.first_counterexample.empty())
        report.discrepancies.emplace_back("derivation", derivation.first_counterexample);
    if (!printed.first_counterexample.empty())
        report.discrepancies.emplace_back("printed", printed.first_counterexample);
    report.agree = report.discrepancies.empty();
    return report;
}

}  // namespace rlc
