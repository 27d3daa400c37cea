#pragma once

#include "rlc/audit.hpp"
#include "rlc/counting.hpp"

#include <json.hpp>

#include <iosfwd>

namespace rlc {

/// Result of one `count` invocation, as serialized behind --json.
struct CountReport {
    Int n;
    Int b;  // echoed back reduced to {0, ..., n-1}
    std::map<Int, unsigned long> kappa;
    Int count;
    Method method = Method::formula;
    double elapsed_ms = 0.0;

    bool operator==(const CountReport&) const = default;
};

struct SpectrumReport {
    Int n;
    std::map<Int, unsigned long> kappa;
    std::vector<Int> counts;

    bool operator==(const SpectrumReport&) const = default;
};

struct RamanujanReport {
    Int q;
    Int m;
    Int value;
    std::string method;
    double elapsed_ms = 0.0;

    bool operator==(const RamanujanReport&) const = default;
};

struct BenchEntry {
    std::string method;
    bool ran = false;
    Int count;          // meaningful when ran
    double mean_ms = 0.0;
    double min_ms = 0.0;
    std::string note;   // skip reason when !ran

    bool operator==(const BenchEntry&) const = default;
};

struct BenchReport {
    Int n;
    Int b;
    std::map<Int, unsigned long> kappa;
    unsigned long repeat = 0;
    std::vector<BenchEntry> entries;

    bool operator==(const BenchReport&) const = default;
};

// Lossless JSON encoding: counts (and any integer too wide for int64) are
// decimal strings, kappa is an object keyed by divisor strings.
nlohmann::json emit_json(const CountReport&);
nlohmann::json emit_json(const SpectrumReport&);
nlohmann::json emit_json(const RamanujanReport&);
nlohmann::json emit_json(const BenchReport&);
nlohmann::json emit_json(const AuditReport&);

CountReport parse_count_report(const nlohmann::json&);
SpectrumReport parse_spectrum_report(const nlohmann::json&);
RamanujanReport parse_ramanujan_report(const nlohmann::json&);
BenchReport parse_bench_report(const nlohmann::json&);
AuditReport parse_audit_report(const nlohmann::json&);

/// Parse a multiplicity specification with grammar d:k(,d:k)* into the
/// canonical profile map (zero multiplicities dropped). Positive d, k >= 0,
/// duplicate divisors rejected, every d must divide n; errors carry the
/// offending token.
std::map<Int, unsigned long> parse_kappa(const std::string& text, const Int& n);

/// Comma-separated positive integers (the per-variable gcd surface).
std::vector<Int> parse_gcds(const std::string& text);

/// Command-line front end. Returns the process exit status: 0 on success,
/// 1 on input or usage errors, 2 on internal invariant violations.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlc
