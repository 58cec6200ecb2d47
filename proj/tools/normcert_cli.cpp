// Command-line frontend.  Exit codes: 0 success (nondegenerate for
// `check`), 1 degenerate verdict, 2 usage error, 3 failed self-check or
// internal error.  All functionality is reached through the public C
// interface of the shared library.
#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "normcert.h"

namespace {

constexpr int kExitDegenerate = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;

void print_error(const char* prefix) {
    std::fprintf(stderr, "error: %s: %s\n", prefix, nc_last_error());
}

// Renders and prints a report; returns an exit code (0 on success).
int emit(nc_report* report, const std::string& format) {
    char* text = nullptr;
    nc_status st = nc_report_render(report, format.c_str(), &text);
    if (st != NC_OK) {
        print_error("render");
        return st == NC_ERR_INVALID ? kExitUsage : kExitCertificate;
    }
    std::fputs(text, stdout);
    nc_string_free(text);
    return 0;
}

// Shared handling for a completed command: print what exists, then map
// the status and verdict onto the exit-code contract.
int finish(nc_status st, nc_report* report, const std::string& format,
           bool verdict_command) {
    int code = 0;
    if (report) {
        code = emit(report, format);
    }
    if (st == NC_ERR_INVALID) {
        if (!report) print_error("invalid arguments");
        code = kExitUsage;
    } else if (st == NC_ERR_CERTIFICATE) {
        std::fprintf(stderr, "error: %s\n", nc_last_error());
        code = kExitCertificate;
    } else if (st != NC_OK) {
        print_error("internal");
        code = kExitCertificate;
    } else if (code == 0 && verdict_command && report &&
               nc_report_verdict(report) == 0) {
        code = kExitDegenerate;
    }
    nc_report_free(report);
    return code;
}

std::vector<long> parse_csv_longs(const std::string& csv) {
    std::vector<long> out;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) throw CLI::ValidationError("empty list entry");
        out.push_back(std::stol(token));
        token.clear();
    };
    for (char c : csv) {
        if (c == ',') {
            flush();
        } else if (c == '-' || (c >= '0' && c <= '9')) {
            token.push_back(c);
        } else {
            throw CLI::ValidationError("lists are comma-separated integers");
        }
    }
    flush();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normcert: exact nondegeneracy certification for norm "
                 "morphisms of finite abelian group representations"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    std::string format = "pretty";
    app.add_option("--format", format, "Output format: json, csv, or pretty")
        ->capture_default_str()
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    std::string group_spec;
    std::string basis = "eigen";
    std::string multiplicities_csv;
    long prime_p = 0;
    std::string composition_csv;
    long dim_k = 0;
    std::string v1_bits;
    long max_order = 0;

    CLI::App* c_matrix = app.add_subcommand(
        "matrix", "Orbit coefficient matrix of the regular permutation "
                  "action, with exact determinant");
    c_matrix->add_option("--group", group_spec, "Group spec, e.g. 5 or 2x4")
        ->required();

    CLI::App* c_check = app.add_subcommand(
        "check", "Decide nondegeneracy (exit 0) or degeneracy (exit 1)");
    c_check->add_option("--group", group_spec, "Group spec")->required();
    c_check->add_option("--basis", basis, "perm or eigen")
        ->capture_default_str()
        ->check(CLI::IsMember({"perm", "eigen"}));
    c_check->add_option(
        "--multiplicities", multiplicities_csv,
        "Custom eigen representation: comma-separated multiplicity per "
        "character (length = group order)");

    CLI::App* c_witness = app.add_subcommand(
        "witness", "Construct and verify the case-dispatched degeneracy "
                   "witness monomial");
    c_witness->add_option("--group", group_spec, "Group spec")->required();

    CLI::App* c_prime = app.add_subcommand(
        "certify-prime", "Prime-case counting certificates");
    c_prime->add_option("--p", prime_p, "Prime")->required();
    c_prime->add_option("--a", composition_csv,
                        "One composition (comma-separated); all when omitted");

    CLI::App* c_lemma2 = app.add_subcommand(
        "lemma2", "Even/odd subset counts and the explicit pairing");
    c_lemma2->add_option("--dim", dim_k, "Dimension k")->required();
    c_lemma2->add_option("--v1", v1_bits, "Nonzero vector as k bits, e.g. 101")
        ->required();

    CLI::App* c_sweep = app.add_subcommand(
        "sweep", "Verdicts for every abelian group of order <= N with "
                 "conformance against the prime-or-4 rule");
    c_sweep->add_option("--max-order", max_order, "Largest order")->required();

    for (CLI::App* sub :
         {c_matrix, c_check, c_witness, c_prime, c_lemma2, c_sweep}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(c_matrix) || app.got_subcommand(c_check) ||
            app.got_subcommand(c_witness)) {
            nc_group* group = nullptr;
            if (nc_group_parse(group_spec.c_str(), &group) != NC_OK) {
                print_error("group spec");
                return kExitUsage;
            }
            nc_report* report = nullptr;
            nc_status st = NC_OK;
            bool verdict_command = false;
            if (app.got_subcommand(c_matrix)) {
                st = nc_matrix_report(group, &report);
            } else if (app.got_subcommand(c_check)) {
                verdict_command = true;
                std::vector<long> mult;
                if (!multiplicities_csv.empty())
                    mult = parse_csv_longs(multiplicities_csv);
                st = nc_check_report(group, basis.c_str(),
                                     mult.empty() ? nullptr : mult.data(),
                                     mult.size(), &report);
            } else {
                st = nc_witness_report(group, &report);
            }
            nc_group_free(group);
            return finish(st, report, format, verdict_command);
        }
        if (app.got_subcommand(c_prime)) {
            std::vector<long> a;
            if (!composition_csv.empty()) a = parse_csv_longs(composition_csv);
            nc_report* report = nullptr;
            nc_status st = nc_certify_prime_report(
                prime_p, a.empty() ? nullptr : a.data(), a.size(), &report);
            return finish(st, report, format, false);
        }
        if (app.got_subcommand(c_lemma2)) {
            nc_report* report = nullptr;
            nc_status st = nc_lemma2_report(dim_k, v1_bits.c_str(), &report);
            return finish(st, report, format, false);
        }
        if (app.got_subcommand(c_sweep)) {
            nc_report* report = nullptr;
            nc_status st = nc_sweep_report(max_order, &report);
            return finish(st, report, format, false);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitCertificate;
    }
    return kExitUsage;
}
