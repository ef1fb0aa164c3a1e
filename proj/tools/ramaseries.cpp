// Command-line front end: list the identity catalog, verify one identity, or
// run a full verification suite and write a JSON report.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "ramaseries/registry.hpp"

namespace {

long prec_from_env() {
    const char* env = std::getenv("RAMASERIES_PREC_BITS");
    if (!env) return ramaseries::PrecisionContext::kDefaultPrecBits;
    try {
        return std::stol(env);
    } catch (const std::exception&) {
        throw ramaseries::DomainError("RAMASERIES_PREC_BITS is not an integer");
    }
}

ramaseries::Params parse_params(const std::vector<std::string>& kvs) {
    ramaseries::Params out;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ramaseries::ParamDomainError("--param expects key=value, got '" + kv + "'");
        out[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    return out;
}

void print_result(const ramaseries::VerificationResult& r, long digits) {
    using namespace ramaseries;
    std::cout << (r.contained ? "PASS " : (r.status == TrustStatus::MustPass ? "FAIL " : "NOTE "))
              << r.id;
    if (!r.params.empty()) std::cout << "(" << params_to_string(r.params) << ")";
    std::cout << " [" << to_string(r.status) << "]\n";
    std::cout << "  bracket_lo = " << to_decimal(r.series.bracket.lo(), digits) << "\n";
    std::cout << "  bracket_hi = " << to_decimal(r.series.bracket.hi(), digits) << "\n";
    std::cout << "  rhs        = " << to_decimal(r.rhs_value, digits) << "\n";
    std::cout << "  residual   = " << to_decimal(r.residual, 12)
              << "  terms = " << r.series.terms_used << "  width_met = "
              << (r.series.width_met ? "yes" : "no") << "  elapsed = " << r.elapsed_seconds
              << "s\n";
}

} // namespace

int main(int argc, char** argv) {
    using namespace ramaseries;
    CLI::App app{"certified verification of closed-form series identities"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "list catalog entries");
    std::string list_filter;
    bool list_json = false;
    list_cmd->add_option("--filter", list_filter, "glob on identity ids");
    list_cmd->add_flag("--json", list_json, "emit JSON");

    auto* verify_cmd = app.add_subcommand("verify", "verify one identity");
    std::string verify_id;
    std::vector<std::string> verify_params;
    long verify_prec = 0;
    std::string verify_width;
    long verify_max_terms = 0;
    verify_cmd->add_option("--id", verify_id, "identity id")->required();
    verify_cmd->add_option("--param", verify_params, "parameter key=value (repeatable)");
    verify_cmd->add_option("--prec", verify_prec, "precision bits");
    verify_cmd->add_option("--width", verify_width, "target bracket width (decimal)");
    verify_cmd->add_option("--max-terms", verify_max_terms, "term cap");

    auto* run_cmd = app.add_subcommand("run", "run the verification suite");
    std::string run_filter;
    long run_jobs = 1;
    std::string run_report;
    long run_prec = 0;
    run_cmd->add_option("--filter", run_filter, "glob on identity ids");
    run_cmd->add_option("--jobs", run_jobs, "worker threads");
    run_cmd->add_option("--report", run_report, "write JSON report to this path");
    run_cmd->add_option("--prec", run_prec, "precision bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        const auto& catalog = default_catalog();
        if (*list_cmd) {
            auto entries = list_identities(catalog, list_filter);
            if (list_json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& e : entries) {
                    nlohmann::json pj = nlohmann::json::object();
                    for (const auto& [k, v] : e.params) pj[k] = v;
                    j.push_back({{"id", e.id},
                                 {"params", pj},
                                 {"status", to_string(e.status)},
                                 {"source", e.source},
                                 {"params_doc", e.params_doc}});
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& e : entries) {
                    std::cout << e.id;
                    if (!e.params.empty()) std::cout << "(" << params_to_string(e.params) << ")";
                    std::cout << "  [" << to_string(e.status) << "]  " << e.source << "\n";
                }
                std::cout << entries.size() << " entries\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            VerifyOptions opts;
            opts.prec_bits = verify_prec > 0 ? verify_prec : prec_from_env();
            if (!verify_width.empty()) opts.target_width = verify_width;
            if (verify_max_terms > 0) opts.max_terms = verify_max_terms;
            auto r = verify(catalog, verify_id, parse_params(verify_params), opts);
            print_result(r, std::max<long>(40, opts.prec_bits / 3));
            if (!r.contained && r.status == TrustStatus::MustPass) return 1;
            return 0;
        }
        // run
        VerifyOptions opts;
        opts.prec_bits = run_prec > 0 ? run_prec : prec_from_env();
        opts.jobs = run_jobs;
        SuiteReport report = run_suite(catalog, run_filter, opts);
        for (const auto& e : report.entries) {
            std::cout << (e.contained ? "PASS "
                                      : (e.status == TrustStatus::MustPass ? "FAIL " : "NOTE "))
                      << e.id;
            if (!e.params.empty()) std::cout << "(" << params_to_string(e.params) << ")";
            std::cout << "  residual = " << to_decimal(e.residual, 12)
                      << "  terms = " << e.series.terms_used << "\n";
        }
        std::cout << "total " << report.summary.total << ", passed " << report.summary.passed
                  << ", failed " << report.summary.failed << ", as-printed discrepancies "
                  << report.summary.as_printed_discrepancies << "\n";
        if (!run_report.empty()) {
            std::ofstream out(run_report);
            if (!out) throw Error("cannot write report to " + run_report);
            out << report_to_json(report).dump(2) << "\n";
        }
        return report.summary.failed > 0 ? 1 : 0;
    } catch (const UnknownIdentityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParamDomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
