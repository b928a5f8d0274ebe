// pntlab: runs the number-theory experiments behind this laboratory and
// emits deterministic CSV/JSON tables.
//
// Subcommands:
//   pnt-table    pi(x) vs x/ln x, li(x), psi(x) per decade
//   mertens      Mertens' three prime sums
//   zeta-check   zero-free 3-4-1 functional on a sigma x t grid
//   gauss-table  Gaussian-integer lattice/prime counts
//   hecke-table  Hecke prime number theorem ratios and twisted sums
//   equidist     angular distribution of Gaussian primes
//   verify       acceptance checks (HARD identities + measured ENVELOPEs)
//
// Exit codes: 0 success, 2 invalid arguments, 3 verify failure, 4 I/O error.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pnt/experiments.hpp"
#include "pnt/report.hpp"
#include "pnt/verify.hpp"

namespace {

pnt::ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return pnt::ReportFormat::csv;
    if (name == "json") return pnt::ReportFormat::json;
    throw CLI::ValidationError("--format must be csv or json");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"desk-scale numerical laboratory for the prime number theorem"};
    app.require_subcommand(1);

    double xmax = 1000.0;
    int decades = 3;
    int bins = 8;
    int hmax = 3;
    std::string format = "csv";
    std::string out_path;
    std::string suite = "all";
    std::vector<double> sigmas;
    std::vector<double> ts;

    const auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: csv|json");
        cmd->add_option("--out", out_path, "output file (default stdout)");
    };

    auto* cmd_pnt = app.add_subcommand("pnt-table", "prime counts vs their asymptotics");
    cmd_pnt->add_option("--xmax", xmax, "largest x");
    cmd_pnt->add_option("--decades", decades, "number of decade rows");
    add_io(cmd_pnt);

    auto* cmd_mertens = app.add_subcommand("mertens", "Mertens' three prime sums");
    cmd_mertens->add_option("--xmax", xmax, "largest x");
    cmd_mertens->add_option("--decades", decades, "number of decade rows");
    add_io(cmd_mertens);

    auto* cmd_zeta = app.add_subcommand("zeta-check", "zero-free 3-4-1 functional");
    cmd_zeta->add_option("--sigma", sigmas, "sigma values (repeatable)");
    cmd_zeta->add_option("--t", ts, "t values (repeatable)");
    add_io(cmd_zeta);

    auto* cmd_gauss = app.add_subcommand("gauss-table", "Gaussian-integer counts");
    cmd_gauss->add_option("--xmax", xmax, "largest norm bound");
    cmd_gauss->add_option("--decades", decades, "number of decade rows");
    add_io(cmd_gauss);

    auto* cmd_hecke = app.add_subcommand("hecke-table", "Hecke prime number theorem ratios");
    cmd_hecke->add_option("--xmax", xmax, "largest norm bound");
    cmd_hecke->add_option("--decades", decades, "number of decade rows");
    cmd_hecke->add_option("--hmax", hmax, "largest twist index");
    add_io(cmd_hecke);

    auto* cmd_eq = app.add_subcommand("equidist", "angular distribution of Gaussian primes");
    cmd_eq->add_option("--xmax", xmax, "largest norm bound");
    cmd_eq->add_option("--bins", bins, "number of equal arcs");
    cmd_eq->add_option("--hmax", hmax, "largest twist index");
    add_io(cmd_eq);

    auto* cmd_verify = app.add_subcommand("verify", "run acceptance checks");
    cmd_verify->add_option("--suite", suite, "rational|zeta|gaussian|hecke|cli|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "%s\n%s", e.what(), app.help().c_str());
        return 2;
    }

    try {
        if (cmd_verify->parsed()) {
            const auto results = pnt::verify::run_suite(suite);
            for (const auto& r : results) {
                std::printf("%s\n", pnt::verify::format_line(r).c_str());
            }
            const bool ok = pnt::verify::all_passed(results);
            std::printf("verify: %zu checks, %s\n", results.size(), ok ? "all passed" : "FAILURES");
            return ok ? 0 : 3;
        }

        pnt::ExperimentReport rep;
        if (cmd_pnt->parsed()) {
            rep = pnt::pnt_table(xmax, decades);
        } else if (cmd_mertens->parsed()) {
            rep = pnt::mertens_table(xmax, decades);
        } else if (cmd_zeta->parsed()) {
            if (sigmas.empty()) sigmas = {1.5, 2.0};
            if (ts.empty()) ts = {0.5, 1.0, 14.134725};
            rep = pnt::zeta_check_table(sigmas, ts);
        } else if (cmd_gauss->parsed()) {
            rep = pnt::gauss_table(xmax, decades);
        } else if (cmd_hecke->parsed()) {
            rep = pnt::hecke_table(xmax, decades, hmax);
        } else if (cmd_eq->parsed()) {
            rep = pnt::equidist_table(xmax, bins, hmax);
        }
        pnt::write_report(rep, parse_format(format), out_path);
        return 0;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "I/O or internal error: %s\n", e.what());
        return 4;
    }
}
