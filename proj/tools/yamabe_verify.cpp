// Command-line front end for the verification suites: runs the identity and
// coefficient checks, emits machine-readable reports, prints the canonical
// integral table and scans the n = 8 profile parameter.
//
// Exit codes: 0 all pass, 1 at least one failure, 2 usage or I/O error,
// 3 at least one discrepancy with a published constant (and no failure).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "yamabe/report.hpp"

namespace {

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return 2;
    }
    out << text;
    if (!out) {
        std::cerr << "error: write failed for '" << path << "'\n";
        return 2;
    }
    return 0;
}

int default_precision_bits() {
    if (const char* env = std::getenv("YAMABE_PRECISION_BITS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 64;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace yamabe;

    CLI::App app{"Exact and numeric verification of the half-space bubble computations"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    RunConfig cfg;
    cfg.precision_bits = default_precision_bits();

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    bool all = false;
    std::string b_str = "-2", deltas_str = "1/100,1/1000,1/10000";
    double tol_in = 1e-8;
    verify->add_flag("--all", all, "run every suite (default when no --lemma)");
    verify->add_option("--lemma", cfg.lemma, "run only items with this lemma id");
    verify->add_option("--n", cfg.n, "restrict to one dimension (6, 7 or 8)")
        ->check(CLI::IsMember({0, 5, 6, 7, 8}));
    verify->add_option("--b", b_str, "profile parameter for the n = 8 suite (rational)");
    verify->add_option("--delta", deltas_str, "comma-separated truncation list for n = 6");
    verify->add_option("--tol", tol_in, "numeric cross-check tolerance");
    verify->add_option("--seed", cfg.seed, "seed for the random tensor samples");
    verify->add_option("--format", cfg.format, "output format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    verify->add_option("--out", cfg.out_path, "write the report to this file");

    // table
    auto* table = app.add_subcommand("table", "emit the canonical integral table as CSV");
    bool integrals = false;
    int max_m = 12, max_alpha = 12;
    std::string table_out;
    table->add_flag("--integrals", integrals, "emit the I(m,alpha) table");
    table->add_option("--max-m", max_m, "largest m in the table");
    table->add_option("--max-alpha", max_alpha, "largest alpha in the table");
    table->add_option("--out", table_out, "write the table to this file");

    // scan-b
    auto* scan = app.add_subcommand("scan-b", "evaluate the n = 8 bracket on a grid of b");
    std::string grid_str = "-3,-2,-1,0";
    std::string scan_format = "text", scan_out;
    scan->add_option("--grid", grid_str, "comma-separated rational grid");
    scan->add_option("--format", scan_format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    scan->add_option("--out", scan_out, "write the scan to this file");

    // pohozaev
    auto* poho = app.add_subcommand("pohozaev", "flat-case surface identity check");
    int poho_n = 6;
    std::string poho_r = "1";
    poho->add_option("--n", poho_n, "dimension")->check(CLI::IsMember({6, 7, 8}));
    poho->add_option("--r", poho_r, "radius (rational)");

    // dump-profile
    auto* dump = app.add_subcommand("dump-profile", "print a catalog function profile");
    std::string dump_id;
    int dump_n = 7;
    std::string dump_b = "-2";
    dump->add_option("id", dump_id, "function id (U, Phi0, ..., A7, A8, beta)")->required();
    dump->add_option("--n", dump_n, "dimension");
    dump->add_option("--b", dump_b, "profile parameter (A8)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            cfg.command = "verify";
            cfg.b = Rational::from_string(b_str);
            cfg.deltas = report::parse_rationals(deltas_str);
            cfg.tol = static_cast<long double>(tol_in);
            ReportDocument doc = report::run_verify(cfg);
            int rc = write_output(report::emit(doc, cfg.format), cfg.out_path);
            if (rc != 0) return rc;
            return doc.exit_code();
        }
        if (table->parsed()) {
            return write_output(report::integral_table_csv(max_m, max_alpha), table_out);
        }
        if (scan->parsed()) {
            auto grid = report::parse_rationals(grid_str);
            auto sb = suite::scan_b(grid);
            std::string text =
                scan_format == "csv" ? report::scan_b_csv(sb) : report::scan_b_text(sb);
            return write_output(text, scan_out);
        }
        if (poho->parsed()) {
            auto r = suite::pohozaev_flat_check({poho_n, Rational::from_string(poho_r)});
            ReportDocument doc;
            doc.config.command = "pohozaev";
            doc.reports.push_back(r);
            doc.tally();
            std::cout << report::emit(doc, "text");
            return doc.exit_code();
        }
        if (dump->parsed()) {
            std::map<std::string, Rational> params;
            if (dump_id == "A8") params["b"] = Rational::from_string(dump_b);
            NamedFunction f = named::build_named(dump_id, dump_n, params);
            for (const auto& b : f.body) {
                const char* kind = b.factor == HarmonicFactor::scalar
                                       ? "scalar"
                                       : (b.factor == HarmonicFactor::rn_pair ? "rn_pair"
                                                                              : "riem_quad");
                std::cout << kind << " : " << b.profile.to_string() << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
