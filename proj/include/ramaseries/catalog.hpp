#pragma once

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <map>
#include <optional>
#include <thread>

#include "ramaseries/closed_forms.hpp"
#include "ramaseries/series.hpp"
#include "ramaseries/version.hpp"

#include <json.hpp>

namespace ramaseries {

// MUST_PASS records fail the suite when their closed form escapes the oracle
// bracket; AS_PRINTED records (printed forms that do not verify, kept
// verbatim) report their residual without failing anything.
enum class TrustStatus { MustPass, AsPrinted };

inline const char* to_string(TrustStatus s) {
    return s == TrustStatus::MustPass ? "MUST_PASS" : "AS_PRINTED";
}

// Parameter assignment, e.g. {"p": "2", "q": "4"} or {"z": "1/sqrt5"}.
using Params = std::map<std::string, std::string>;

inline std::string params_to_string(const Params& p) {
    std::string out;
    for (const auto& [k, v] : p) {
        if (!out.empty()) out += ",";
        out += k + "=" + v;
    }
    return out;
}

inline long param_long(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw ParamDomainError("missing parameter '" + key + "'");
    try {
        size_t pos = 0;
        long v = std::stol(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParamDomainError("parameter '" + key + "' is not an integer: " + it->second);
    }
}

// Real-valued parameter; accepts plain decimals plus the surd tokens used by
// the printed specializations.
inline BigReal param_real(const Params& p, const std::string& key, const PrecisionContext& ctx) {
    auto it = p.find(key);
    if (it == p.end()) throw ParamDomainError("missing parameter '" + key + "'");
    const std::string& v = it->second;
    BigReal s5 = sqrt(BigReal(5, ctx));
    if (v == "1/sqrt5") return BigReal(1, ctx) / s5;
    if (v == "2/sqrt5") return BigReal(2, ctx) / s5;
    if (v == "sqrt5/3") return s5 / BigReal(3, ctx);
    if (v == "1/sqrt2") return BigReal(1, ctx) / sqrt(BigReal(2, ctx));
    try {
        return BigReal(v, ctx);
    } catch (const DomainError&) {
        throw ParamDomainError("parameter '" + key + "' is not a real literal: " + v);
    }
}

// One catalog family: a series identity (or a parameterized family of them)
// binding the brute-force side to its closed form.
struct IdentityFamily {
    std::string id;
    std::string source;     // human-readable origin of the identity
    TrustStatus status;
    std::string params_doc; // "" when the record takes no parameters
    std::vector<Params> defaults;
    std::function<TermGenerator(const Params&, const PrecisionContext&)> lhs;
    std::function<TailStrategy(const Params&, const PrecisionContext&)> tail;
    std::function<BigReal(const Params&, const PrecisionContext&)> rhs;
    std::string default_width = "1e-40";
    long default_max_terms = 2000000;
};

struct VerifyOptions {
    long prec_bits = PrecisionContext::kDefaultPrecBits;
    std::optional<std::string> target_width; // decimal string
    std::optional<long> max_terms;
    std::optional<long> jobs;
};

struct VerificationResult {
    std::string id;
    Params params;
    TrustStatus status;
    SeriesBracket series;
    BigReal rhs_value;
    bool contained;
    BigReal residual; // 0 when contained
    double elapsed_seconds;
};

struct SuiteSummary {
    long total = 0;
    long passed = 0;
    long failed = 0; // MUST_PASS entries not contained
    long as_printed_discrepancies = 0;
};

struct SuiteReport {
    std::string version;
    long precision_bits;
    std::string started_at;
    std::vector<VerificationResult> entries;
    SuiteSummary summary;
};

namespace detail {

inline bool id_matches(const std::string& id, const std::string& filter) {
    if (filter.empty()) return true;
    return fnmatch(filter.c_str(), id.c_str(), 0) == 0;
}

inline std::string iso8601_now() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

} // namespace detail

// Verify one identity instance: closed form against certified oracle bracket.
inline VerificationResult verify_instance(const IdentityFamily& fam, const Params& params,
                                          const VerifyOptions& opts) {
    PrecisionContext ctx(opts.prec_bits);
    auto t0 = std::chrono::steady_clock::now();
    TermGenerator gen = fam.lhs(params, ctx);
    TailStrategy tail = fam.tail(params, ctx);
    BigReal rhs_value = fam.rhs(params, ctx);
    BigReal width(opts.target_width.value_or(fam.default_width), ctx);
    long max_terms = opts.max_terms.value_or(fam.default_max_terms);
    SeriesBracket sb = sum_bracket(gen, tail, width, max_terms, ctx);
    // allow for the closed form's own rounding before judging containment
    BigReal tol = mul_2si(abs(rhs_value) + BigReal(1, ctx), -(ctx.prec_bits() - 10));
    Bracket inflated = Bracket::widen(sb.bracket, tol);
    bool contained = inflated.contains(rhs_value);
    BigReal residual = contained ? BigReal(0, ctx) : inflated.distance_to(rhs_value);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return VerificationResult{fam.id, params, fam.status, std::move(sb),
                              std::move(rhs_value), contained, std::move(residual), secs};
}

// Catalog-level API -------------------------------------------------------

inline const IdentityFamily& find_family(const std::vector<IdentityFamily>& families,
                                         const std::string& id) {
    for (const auto& f : families)
        if (f.id == id) return f;
    throw UnknownIdentityError("unknown identity '" + id + "'");
}

inline VerificationResult verify(const std::vector<IdentityFamily>& families,
                                 const std::string& id, const Params& params,
                                 const VerifyOptions& opts) {
    const IdentityFamily& fam = find_family(families, id);
    Params effective = params;
    if (effective.empty() && !fam.defaults.empty()) effective = fam.defaults.front();
    return verify_instance(fam, effective, opts);
}

struct IdentitySummary {
    std::string id;
    Params params;
    TrustStatus status;
    std::string source;
    std::string params_doc;
};

// Default instantiations of every family whose id matches the glob,
// deterministically ordered by (id, params).
inline std::vector<IdentitySummary> list_identities(const std::vector<IdentityFamily>& families,
                                                    const std::string& filter = "") {
    std::vector<IdentitySummary> out;
    for (const auto& f : families) {
        if (!detail::id_matches(f.id, filter)) continue;
        if (f.defaults.empty()) {
            out.push_back({f.id, {}, f.status, f.source, f.params_doc});
            continue;
        }
        for (const auto& d : f.defaults)
            out.push_back({f.id, d, f.status, f.source, f.params_doc});
    }
    std::sort(out.begin(), out.end(), [](const IdentitySummary& a, const IdentitySummary& b) {
        if (a.id != b.id) return a.id < b.id;
        return params_to_string(a.params) < params_to_string(b.params);
    });
    return out;
}

// Run all matching default instantiations, optionally across several threads.
// Results are written into pre-assigned slots and sorted afterwards, so the
// report is identical for any jobs count (timestamps and elapsed aside).
inline SuiteReport run_suite(const std::vector<IdentityFamily>& families,
                             const std::string& filter, const VerifyOptions& opts) {
    struct Task {
        const IdentityFamily* fam;
        Params params;
    };
    std::vector<Task> tasks;
    for (const auto& f : families) {
        if (!detail::id_matches(f.id, filter)) continue;
        if (f.defaults.empty())
            tasks.push_back({&f, {}});
        else
            for (const auto& d : f.defaults) tasks.push_back({&f, d});
    }

    SuiteReport report;
    report.version = kVersion;
    report.precision_bits = opts.prec_bits;
    report.started_at = detail::iso8601_now();

    std::vector<std::optional<VerificationResult>> slots(tasks.size());
    long jobs = std::max<long>(1, opts.jobs.value_or(1));
    std::atomic<size_t> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex err_mu;
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            try {
                slots[i] = verify_instance(*tasks[i].fam, tasks[i].params, opts);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (long j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (auto& s : slots) report.entries.push_back(std::move(*s));
    std::sort(report.entries.begin(), report.entries.end(),
              [](const VerificationResult& a, const VerificationResult& b) {
                  if (a.id != b.id) return a.id < b.id;
                  return params_to_string(a.params) < params_to_string(b.params);
              });

    for (const auto& e : report.entries) {
        ++report.summary.total;
        if (e.contained) {
            ++report.summary.passed;
        } else if (e.status == TrustStatus::MustPass) {
            ++report.summary.failed;
        } else {
            ++report.summary.as_printed_discrepancies;
        }
    }
    return report;
}

// JSON serialization of a suite report. Decimal strings carry at least 40
// significant digits.
inline nlohmann::json report_to_json(const SuiteReport& report) {
    long digits = std::max<long>(40, report.precision_bits / 3);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : report.entries) {
        nlohmann::json pj = nlohmann::json::object();
        for (const auto& [k, v] : e.params) pj[k] = v;
        entries.push_back({
            {"id", e.id},
            {"params", pj},
            {"status", to_string(e.status)},
            {"contained", e.contained},
            {"bracket_lo", to_decimal(e.series.bracket.lo(), digits)},
            {"bracket_hi", to_decimal(e.series.bracket.hi(), digits)},
            {"rhs", to_decimal(e.rhs_value, digits)},
            {"residual", to_decimal(e.residual, digits)},
            {"terms_used", e.series.terms_used},
            {"width_met", e.series.width_met},
            {"elapsed_seconds", e.elapsed_seconds},
        });
    }
    return nlohmann::json{
        {"version", report.version},
        {"precision_bits", report.precision_bits},
        {"started_at", report.started_at},
        {"entries", entries},
        {"summary",
         {{"total", report.summary.total},
          {"passed", report.summary.passed},
          {"failed", report.summary.failed},
          {"as_printed_discrepancies", report.summary.as_printed_discrepancies}}},
    };
}

} // namespace ramaseries
