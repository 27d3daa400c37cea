#include "rlc/cli.hpp"

#include "rlc/oracle.hpp"
#include "rlc/ramanujan.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ostream>

namespace rlc {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double to_ms(std::chrono::nanoseconds d) {
    return std::chrono::duration<double, std::milli>(d).count();
}

bool is_decimal(const std::string& text, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) return false;
    return std::all_of(text.begin() + i, text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Int parse_integer(const std::string& text, const std::string& what, bool allow_sign = true) {
    if (!is_decimal(text, allow_sign))
        throw InputError(what + ": '" + text + "' is not a decimal integer");
    return Int(text);
}

json int_to_json(const Int& value) {
    if (value.fits_slong_p()) return json(mpz_get_si(value.get_mpz_t()));
    return json(value.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_unsigned()) {
        Int v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(unsigned long long), 0, 0,
                   &j.get_ref<const json::number_unsigned_t&>());
        return v;
    }
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return parse_integer(j.get<std::string>(), "json integer");
    throw InputError("json integer: expected number or decimal string");
}

json kappa_to_json(const std::map<Int, unsigned long>& kappa) {
    json obj = json::object();
    for (const auto& [d, mult] : kappa) obj[d.get_str()] = mult;
    return obj;
}

std::map<Int, unsigned long> kappa_from_json(const json& obj) {
    std::map<Int, unsigned long> kappa;
    for (const auto& [key, value] : obj.items())
        kappa[parse_integer(key, "kappa divisor", false)] = value.get<unsigned long>();
    return kappa;
}

}  // namespace

json emit_json(const CountReport& r) {
    return json{{"n", int_to_json(r.n)},          {"b", int_to_json(r.b)},
                {"kappa", kappa_to_json(r.kappa)}, {"count", r.count.get_str()},
                {"method", to_string(r.method)},   {"elapsed_ms", r.elapsed_ms}};
}

CountReport parse_count_report(const json& j) {
    CountReport r;
    r.n = int_from_json(j.at("n"));
    r.b = int_from_json(j.at("b"));
    r.kappa = kappa_from_json(j.at("kappa"));
    r.count = parse_integer(j.at("count").get<std::string>(), "count");
    r.method = method_from_string(j.at("method").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

json emit_json(const SpectrumReport& r) {
    json counts = json::array();
    for (const Int& c : r.counts) counts.push_back(c.get_str());
    return json{{"n", int_to_json(r.n)}, {"kappa", kappa_to_json(r.kappa)}, {"counts", counts}};
}

SpectrumReport parse_spectrum_report(const json& j) {
    SpectrumReport r;
    r.n = int_from_json(j.at("n"));
    r.kappa = kappa_from_json(j.at("kappa"));
    for (const auto& c : j.at("counts"))
        r.counts.push_back(parse_integer(c.get<std::string>(), "count"));
    return r;
}

json emit_json(const RamanujanReport& r) {
    return json{{"q", int_to_json(r.q)},
                {"m", int_to_json(r.m)},
                {"value", r.value.get_str()},
                {"method", r.method},
                {"elapsed_ms", r.elapsed_ms}};
}

RamanujanReport parse_ramanujan_report(const json& j) {
    RamanujanReport r;
    r.q = int_from_json(j.at("q"));
    r.m = int_from_json(j.at("m"));
    r.value = parse_integer(j.at("value").get<std::string>(), "value");
    r.method = j.at("method").get<std::string>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

json emit_json(const BenchReport& r) {
    json entries = json::array();
    for (const BenchEntry& e : r.entries)
        entries.push_back(json{{"method", e.method},
                               {"ran", e.ran},
                               {"count", e.count.get_str()},
                               {"mean_ms", e.mean_ms},
                               {"min_ms", e.min_ms},
                               {"note", e.note}});
    return json{{"n", int_to_json(r.n)},
                {"b", int_to_json(r.b)},
                {"kappa", kappa_to_json(r.kappa)},
                {"repeat", r.repeat},
                {"entries", entries}};
}

BenchReport parse_bench_report(const json& j) {
    BenchReport r;
    r.n = int_from_json(j.at("n"));
    r.b = int_from_json(j.at("b"));
    r.kappa = kappa_from_json(j.at("kappa"));
    r.repeat = j.at("repeat").get<unsigned long>();
    for (const auto& je : j.at("entries")) {
        BenchEntry e;
        e.method = je.at("method").get<std::string>();
        e.ran = je.at("ran").get<bool>();
        e.count = parse_integer(je.at("count").get<std::string>(), "count");
        e.mean_ms = je.at("mean_ms").get<double>();
        e.min_ms = je.at("min_ms").get<double>();
        e.note = je.at("note").get<std::string>();
        r.entries.push_back(std::move(e));
    }
    return r;
}

json emit_json(const AuditReport& r) {
    json discrepancies = json::array();
    for (const auto& [route, finding] : r.discrepancies)
        discrepancies.push_back(json::array({route, finding}));
    return json{{"instance", r.instance},
                {"values", r.values},
                {"verdict", r.agree ? "agree" : "disagree"},
                {"discrepancies", discrepancies}};
}

AuditReport parse_audit_report(const json& j) {
    AuditReport r;
    r.instance = j.at("instance").get<std::string>();
    for (const auto& [key, value] : j.at("values").items())
        r.values[key] = value.get<std::string>();
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "agree" && verdict != "disagree")
        throw InputError("audit report verdict must be agree or disagree, got '" + verdict + "'");
    r.agree = verdict == "agree";
    for (const auto& d : j.at("discrepancies"))
        r.discrepancies.emplace_back(d.at(0).get<std::string>(), d.at(1).get<std::string>());
    return r;
}

std::map<Int, unsigned long> parse_kappa(const std::string& text, const Int& n) {
    if (text.empty()) throw InputError("kappa: empty specification");
    std::map<Int, unsigned long> kappa;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t colon = token.find(':');
        if (colon == std::string::npos || token.find(':', colon + 1) != std::string::npos)
            throw InputError("kappa: malformed token '" + token + "' (expected d:k)");
        std::string d_str = token.substr(0, colon);
        std::string k_str = token.substr(colon + 1);
        if (!is_decimal(d_str, false) || !is_decimal(k_str, false))
            throw InputError("kappa: malformed token '" + token + "' (expected d:k)");
        Int d(d_str);
        if (d < 1) throw InputError("kappa: divisor must be positive in token '" + token + "'");
        if (kappa.count(d))
            throw InputError("kappa: duplicate divisor in token '" + token + "'");
        if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
            throw InputError("kappa: token '" + token + "': " + d.get_str() +
                             " does not divide n = " + n.get_str());
        unsigned long mult = 0;
        try {
            mult = std::stoul(k_str);
        } catch (const std::out_of_range&) {
            throw InputError("kappa: multiplicity too large in token '" + token + "'");
        }
        kappa[d] = mult;
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    std::erase_if(kappa, [](const auto& kv) { return kv.second == 0; });
    return kappa;
}

std::vector<Int> parse_gcds(const std::string& text) {
    if (text.empty()) throw InputError("gcds: empty specification");
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string token = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!is_decimal(token, false))
            throw InputError("gcds: malformed token '" + token + "'");
        Int t(token);
        if (t < 1) throw InputError("gcds: entries must be positive, got '" + token + "'");
        out.push_back(std::move(t));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

namespace {

struct CountArgs {
    std::string n, b, kappa, gcds, method = "formula";
    bool json_output = false, verbose = false;
};

int do_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
    Int n = parse_integer(a.n, "--n", false);
    if (n < 1) throw InputError("--n must be >= 1");
    Int b = parse_integer(a.b, "--b");
    Method method = method_from_string(a.method);

    SolutionCount result;
    std::map<Int, unsigned long> kappa;
    if (!a.kappa.empty()) {
        kappa = parse_kappa(a.kappa, n);
    } else {
        // per-variable gcd surface; a non-divisor entry forces count 0
        std::vector<Int> gcds = parse_gcds(a.gcds);
        bool satisfiable = true;
        for (const Int& t : gcds)
            if (!mpz_divisible_p(n.get_mpz_t(), t.get_mpz_t())) satisfiable = false;
        if (!satisfiable) {
            result = SolutionCount{Int(0), method, std::chrono::nanoseconds(0)};
            kappa.clear();
            CountReport report{n, ((b % n) + n) % n, kappa, result.value, method, 0.0};
            if (a.json_output)
                out << emit_json(report).dump() << "\n";
            else
                out << result.value.get_str() << "\n";
            return 0;
        }
        for (const Int& t : gcds) ++kappa[t];
    }

    ConstraintProfile profile(n, kappa);
    switch (method) {
        case Method::formula: result = count_solutions(profile, b); break;
        case Method::convolution: result = count_by_convolution(profile, b); break;
        case Method::naive: result = count_by_enumeration(profile, b); break;
    }

    CountReport report{n,      ((b % n) + n) % n,      profile.kappa(),
                       result.value, result.method, to_ms(result.elapsed)};
    if (a.json_output)
        out << emit_json(report).dump() << "\n";
    else
        out << result.value.get_str() << "\n";
    if (a.verbose)
        err << "method=" << to_string(result.method) << " elapsed_ms=" << to_ms(result.elapsed)
            << "\n";
    return 0;
}

int do_spectrum(const std::string& n_str, const std::string& kappa_str, bool json_output,
                std::ostream& out) {
    Int n = parse_integer(n_str, "--n", false);
    if (n < 1) throw InputError("--n must be >= 1");
    ConstraintProfile profile(n, parse_kappa(kappa_str, n));
    Spectrum spec = spectrum(profile);
    if (json_output) {
        SpectrumReport report{n, profile.kappa(), spec.counts};
        out << emit_json(report).dump() << "\n";
    } else {
        for (const Int& c : spec.counts) out << c.get_str() << "\n";
    }
    return 0;
}

int do_ramanujan(const std::string& q_str, const std::string& m_str, const std::string& method,
                 bool json_output, std::ostream& out) {
    Int q = parse_integer(q_str, "--q", false);
    Int m = parse_integer(m_str, "--m");
    auto start = Clock::now();
    Int value;
    if (method == "exact")
        value = ramanujan_exact(q, m);
    else if (method == "direct")
        value = ramanujan_direct(q, m);
    else if (method == "divisor-sum")
        value = ramanujan_divisor_sum(q, m);
    else
        throw InputError("ramanujan: unknown method '" + method + "'");
    double elapsed = ms_since(start);
    if (json_output)
        out << emit_json(RamanujanReport{q, m, value, method, elapsed}).dump() << "\n";
    else
        out << value.get_str() << "\n";
    return 0;
}

int do_audit(unsigned long n_max, unsigned long k_max, unsigned long seed, bool json_output,
             std::ostream& out) {
    if (n_max < 1 || n_max > 48)
        throw InputError("audit: --n-max must be in [1, 48], got " + std::to_string(n_max));
    if (k_max > 4) throw InputError("audit: --k-max must be <= 4, got " + std::to_string(k_max));
    bool internal_fault = false;

    std::vector<AuditReport> fourier;
    for (unsigned long n : {1ul, 8ul, 12ul, 30ul}) {
        fourier.push_back(check_fourier_pair(Int(n), 20, seed));
        if (!fourier.back().agree) internal_fault = true;
    }

    // product identity over the desk-scale grid, every Fourier argument
    unsigned long product_instances = 0, product_agreements = 0;
    AuditReport first_product_failure;
    bool have_product_failure = false;
    unsigned long pn_max = std::min(n_max, 24ul);
    unsigned long pk_max = std::min(k_max, 3ul);
    for (unsigned long n = 1; n <= pn_max; ++n) {
        for_each_profile(Int(n), pk_max, [&](const ConstraintProfile& profile) {
            for (unsigned long m = 0; m <= n; ++m) {
                AuditReport r = check_product_identity(profile, Int(m));
                ++product_instances;
                if (r.agree) {
                    ++product_agreements;
                } else if (!have_product_failure) {
                    first_product_failure = r;
                    have_product_failure = true;
                }
            }
        });
    }
    if (have_product_failure) internal_fault = true;

    AuditReport orientation = adjudicate_orientations(n_max, k_max);
    for (const auto& [route, finding] : orientation.discrepancies)
        if (route == "derivation") internal_fault = true;

    if (json_output) {
        json fourier_json = json::array();
        for (const auto& r : fourier) fourier_json.push_back(emit_json(r));
        json product = {{"instances", product_instances},
                        {"agreements", product_agreements},
                        {"first_failure", have_product_failure ? emit_json(first_product_failure)
                                                               : json(nullptr)}};
        out << json{{"fourier", fourier_json},
                    {"product_identity", product},
                    {"orientation", emit_json(orientation)}}
                   .dump()
            << "\n";
    } else {
        for (const auto& r : fourier)
            out << r.instance << ": " << (r.agree ? "agree" : "DISAGREE")
                << " (max_roundtrip_error=" << r.values.at("max_roundtrip_error") << ")\n";
        out << "product_identity grid n<=" << pn_max << " k<=" << pk_max
            << " m in [0,n]: " << product_agreements << "/" << product_instances
            << (product_agreements == product_instances ? " agree" : " DISAGREE") << "\n";
        if (have_product_failure) out << "  first failure: " << first_product_failure.instance
                                      << "\n";
        out << orientation.instance << ": instances=" << orientation.values.at("instances")
            << " derivation=" << orientation.values.at("derivation_form_agreement")
            << " printed=" << orientation.values.at("printed_form_agreement") << "\n";
        for (const auto& [route, finding] : orientation.discrepancies)
            out << "  " << route << " form first counterexample: " << finding << "\n";
    }
    return internal_fault ? 2 : 0;
}

int do_bench(const std::string& n_str, const std::string& b_str, const std::string& kappa_str,
             unsigned long repeat, bool json_output, std::ostream& out) {
    if (repeat < 1) throw InputError("--repeat must be >= 1");
    Int n = parse_integer(n_str, "--n", false);
    if (n < 1) throw InputError("--n must be >= 1");
    Int b = parse_integer(b_str, "--b");
    ConstraintProfile profile(n, parse_kappa(kappa_str, n));

    BenchReport report;
    report.n = n;
    report.b = ((b % n) + n) % n;
    report.kappa = profile.kappa();
    report.repeat = repeat;

    auto bench_one = [&](Method method, auto&& invoke) {
        BenchEntry entry;
        entry.method = to_string(method);
        try {
            double total = 0.0, best = 0.0;
            for (unsigned long r = 0; r < repeat; ++r) {
                auto start = Clock::now();
                SolutionCount result = invoke();
                double ms = ms_since(start);
                total += ms;
                best = r == 0 ? ms : std::min(best, ms);
                entry.count = result.value;
            }
            entry.ran = true;
            entry.mean_ms = total / static_cast<double>(repeat);
            entry.min_ms = best;
        } catch (const InputError& e) {
            entry.ran = false;
            entry.note = e.what();
        }
        report.entries.push_back(std::move(entry));
    };
    bench_one(Method::formula, [&] { return count_solutions(profile, b); });
    bench_one(Method::convolution, [&] { return count_by_convolution(profile, b); });
    bench_one(Method::naive, [&] { return count_by_enumeration(profile, b); });

    const Int* reference = nullptr;
    for (const BenchEntry& e : report.entries) {
        if (!e.ran) continue;
        if (reference && *reference != e.count)
            throw InternalError("bench: methods disagree: " + reference->get_str() + " vs " +
                                e.count.get_str());
        reference = &e.count;
    }

    if (json_output) {
        out << emit_json(report).dump() << "\n";
    } else {
        for (const BenchEntry& e : report.entries) {
            if (e.ran)
                out << e.method << ": count=" << e.count.get_str() << " repeat=" << repeat
                    << " mean_ms=" << e.mean_ms << " min_ms=" << e.min_ms << "\n";
            else
                out << e.method << ": skipped (" << e.note << ")\n";
        }
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact counting of restricted linear congruences"};
    app.name("rlc");
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "count solutions for one residue");
    count_cmd->add_option("--n", count_args.n, "modulus (positive integer)")->required();
    count_cmd->add_option("--b", count_args.b, "target residue (any integer)")->required();
    auto* kappa_opt =
        count_cmd->add_option("--kappa", count_args.kappa, "class multiplicities d:k[,d:k...]");
    auto* gcds_opt =
        count_cmd->add_option("--gcds", count_args.gcds, "per-variable gcd list t1,t2,...");
    kappa_opt->excludes(gcds_opt);
    gcds_opt->excludes(kappa_opt);
    count_cmd->add_option("--method", count_args.method, "formula|convolution|naive")
        ->check(CLI::IsMember({"formula", "convolution", "naive"}));
    count_cmd->add_flag("--json", count_args.json_output, "emit a JSON report");
    count_cmd->add_flag("--verbose", count_args.verbose, "print method and timing to stderr");

    std::string spec_n, spec_kappa;
    bool spec_json = false;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "count solutions for every residue");
    spectrum_cmd->add_option("--n", spec_n, "modulus (positive integer)")->required();
    spectrum_cmd->add_option("--kappa", spec_kappa, "class multiplicities d:k[,d:k...]")
        ->required();
    spectrum_cmd->add_flag("--json", spec_json, "emit a JSON report");

    std::string ram_q, ram_m, ram_method = "exact";
    bool ram_json = false;
    auto* ramanujan_cmd = app.add_subcommand("ramanujan", "evaluate a Ramanujan sum");
    ramanujan_cmd->add_option("--q", ram_q, "modulus (positive integer)")->required();
    ramanujan_cmd->add_option("--m", ram_m, "argument (any integer)")->required();
    ramanujan_cmd->add_option("--method", ram_method, "exact|direct|divisor-sum")
        ->check(CLI::IsMember({"exact", "direct", "divisor-sum"}));
    ramanujan_cmd->add_flag("--json", ram_json, "emit a JSON report");

    unsigned long audit_n_max = 48, audit_k_max = 4, audit_seed = 1;
    bool audit_json = false;
    auto* audit_cmd = app.add_subcommand("audit", "verify the derivation numerically");
    audit_cmd->add_option("--n-max", audit_n_max, "largest modulus for the adjudication grid");
    audit_cmd->add_option("--k-max", audit_k_max, "largest total multiplicity");
    audit_cmd->add_option("--seed", audit_seed, "seed for the random Fourier functions");
    audit_cmd->add_flag("--json", audit_json, "emit a JSON report");

    std::string bench_n, bench_b = "0", bench_kappa;
    unsigned long bench_repeat = 3;
    bool bench_json = false;
    auto* bench_cmd = app.add_subcommand("bench", "time the three counting routes");
    bench_cmd->add_option("--n", bench_n, "modulus (positive integer)")->required();
    bench_cmd->add_option("--b", bench_b, "target residue (default 0)");
    bench_cmd->add_option("--kappa", bench_kappa, "class multiplicities d:k[,d:k...]")
        ->required();
    bench_cmd->add_option("--repeat", bench_repeat, "runs per method");
    bench_cmd->add_flag("--json", bench_json, "emit a JSON report");

    std::vector<const char*> argv;
    argv.push_back("rlc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (count_cmd->parsed()) {
            if (kappa_opt->count() + gcds_opt->count() != 1)
                throw InputError("count: exactly one of --kappa or --gcds is required");
            return do_count(count_args, out, err);
        }
        if (spectrum_cmd->parsed()) return do_spectrum(spec_n, spec_kappa, spec_json, out);
        if (ramanujan_cmd->parsed()) return do_ramanujan(ram_q, ram_m, ram_method, ram_json, out);
        if (audit_cmd->parsed())
            return do_audit(audit_n_max, audit_k_max, audit_seed, audit_json, out);
        if (bench_cmd->parsed())
            return do_bench(bench_n, bench_b, bench_kappa, bench_repeat, bench_json, out);
        throw InputError("no subcommand selected");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rlc
