#ifndef YAMABE_REPORT_HPP
#define YAMABE_REPORT_HPP

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "yamabe/verification.hpp"

namespace yamabe {

inline const char* kToolName = "yamabe-verify";
inline const char* kToolVersion = "1.0.0";

// Validated run configuration; every field has a deterministic default so
// two runs with the same flags serialize identically.
struct RunConfig {
    std::string command = "verify";
    std::string lemma;           // empty = all
    int n = 0;                   // 0 = all dimensions
    Rational b = Rational(-2);   // n = 8 profile parameter
    std::vector<Rational> deltas = {Rational(1, 100), Rational(1, 1000), Rational(1, 10000)};
    long double tol = 1e-8L;
    std::uint64_t seed = 1000;
    int precision_bits = 64;
    std::string format = "text";  // json | csv | text
    std::string out_path;         // empty = stdout
};

struct ReportDocument {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    RunConfig config;
    std::vector<VerificationReport> reports;
    int count_pass = 0;
    int count_fail = 0;
    int count_discrepancy = 0;

    void tally() {
        count_pass = count_fail = count_discrepancy = 0;
        for (const auto& r : reports) {
            if (r.status == suite::kPass) ++count_pass;
            if (r.status == suite::kFail) ++count_fail;
            if (r.status == suite::kDiscrepancy) ++count_discrepancy;
        }
    }

    // exit code is a pure function of the status multiset
    int exit_code() const {
        if (count_fail > 0) return 1;
        if (count_discrepancy > 0) return 3;
        return 0;
    }
};

namespace report {

// fixed-format numeric rendering so emitted documents are byte-stable
inline std::string num_str(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.18Le", v);
    return buf;
}

inline std::string rationals_str(const std::vector<Rational>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].to_string();
    }
    return s;
}

inline std::vector<Rational> parse_rationals(const std::string& s) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item =
            comma == std::string::npos ? s.substr(pos) : s.substr(pos, comma - pos);
        if (!item.empty()) out.push_back(Rational::from_string(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Runs the suites selected by the configuration in a fixed order (the order
// the statements appear in the source material), independent of execution
// details.
inline ReportDocument run_verify(const RunConfig& cfg) {
    ReportDocument doc;
    doc.config = cfg;
    auto want_n = [&](int n) { return cfg.n == 0 || cfg.n == n; };
    std::vector<VerificationReport> all;

    for (auto& r : suite::pde_suite(cfg.n)) all.push_back(r);
    for (int n : {6, 7, 8})
        if (want_n(n))
            for (auto& r : suite::structural_suite(n, cfg.seed)) all.push_back(r);
    for (int n : {6, 7, 8})
        if (want_n(n))
            for (auto& r : suite::sym_suite(n)) all.push_back(r);
    if (want_n(7))
        for (auto& r : suite::coefficient_suite_7(cfg.tol)) all.push_back(r);
    if (want_n(8))
        for (auto& r : suite::coefficient_suite_8(cfg.b, cfg.tol)) all.push_back(r);
    if (want_n(6))
        for (auto& r : suite::coefficient_suite_6(cfg.deltas)) all.push_back(r);
    for (int n : {6, 7, 8})
        if (want_n(n))
            for (auto rr : {Rational(1), Rational(2)})
                all.push_back(suite::pohozaev_flat_check({n, rr}, cfg.tol));

    for (auto& r : all)
        if (cfg.lemma.empty() || cfg.lemma == r.lemma_id) doc.reports.push_back(r);
    doc.tally();
    return doc;
}

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["lemma_id"] = r.lemma_id;
    j["statement"] = r.statement;
    j["n"] = r.n;
    j["params"] = r.params;
    j["expected"] = r.expected;
    j["provenance"] = r.provenance;
    j["computed_exact"] = r.computed_exact;
    j["computed_numeric"] = r.has_numeric ? num_str(r.computed_numeric) : "";
    j["abs_err"] = r.has_numeric ? num_str(r.abs_err) : "";
    j["rel_err"] = r.has_numeric ? num_str(r.rel_err) : "";
    j["status"] = r.status;
    j["notes"] = r.notes;
    return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.lemma_id = j.at("lemma_id").get<std::string>();
    r.statement = j.at("statement").get<std::string>();
    r.n = j.at("n").get<int>();
    r.params = j.at("params").get<std::string>();
    r.expected = j.at("expected").get<std::string>();
    r.provenance = j.at("provenance").get<std::string>();
    r.computed_exact = j.at("computed_exact").get<std::string>();
    std::string cn = j.at("computed_numeric").get<std::string>();
    r.has_numeric = !cn.empty();
    if (r.has_numeric) {
        r.computed_numeric = std::strtold(cn.c_str(), nullptr);
        r.abs_err = std::strtold(j.at("abs_err").get<std::string>().c_str(), nullptr);
        r.rel_err = std::strtold(j.at("rel_err").get<std::string>().c_str(), nullptr);
    }
    r.status = j.at("status").get<std::string>();
    r.notes = j.at("notes").get<std::string>();
    return r;
}

inline nlohmann::ordered_json to_json(const ReportDocument& doc) {
    nlohmann::ordered_json j;
    j["tool"] = doc.tool;
    j["version"] = doc.version;
    nlohmann::ordered_json c;
    c["command"] = doc.config.command;
    c["lemma"] = doc.config.lemma;
    c["n"] = doc.config.n;
    c["b"] = doc.config.b.to_string();
    c["deltas"] = rationals_str(doc.config.deltas);
    c["tol"] = num_str(doc.config.tol);
    c["seed"] = doc.config.seed;
    c["precision_bits"] = doc.config.precision_bits;
    c["format"] = doc.config.format;
    j["config"] = c;
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : doc.reports) j["reports"].push_back(to_json(r));
    nlohmann::ordered_json s;
    s["pass"] = doc.count_pass;
    s["fail"] = doc.count_fail;
    s["discrepancy"] = doc.count_discrepancy;
    s["total"] = static_cast<int>(doc.reports.size());
    j["summary"] = s;
    return j;
}

inline ReportDocument document_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    ReportDocument doc;
    doc.tool = j.at("tool").get<std::string>();
    doc.version = j.at("version").get<std::string>();
    const auto& c = j.at("config");
    doc.config.command = c.at("command").get<std::string>();
    doc.config.lemma = c.at("lemma").get<std::string>();
    doc.config.n = c.at("n").get<int>();
    doc.config.b = Rational::from_string(c.at("b").get<std::string>());
    doc.config.deltas = parse_rationals(c.at("deltas").get<std::string>());
    doc.config.tol = std::strtold(c.at("tol").get<std::string>().c_str(), nullptr);
    doc.config.seed = c.at("seed").get<std::uint64_t>();
    doc.config.precision_bits = c.at("precision_bits").get<int>();
    doc.config.format = c.at("format").get<std::string>();
    for (const auto& rj : j.at("reports")) doc.reports.push_back(report_from_json(rj));
    doc.tally();
    return doc;
}

inline std::string csv_escape(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += "\"";
    return out;
}

inline std::string emit(const ReportDocument& doc, const std::string& format) {
    if (format == "json") return to_json(doc).dump(2) + "\n";
    if (format == "csv") {
        std::string out = "lemma_id,expected,computed_exact,computed_numeric,rel_err,status\n";
        for (const auto& r : doc.reports) {
            out += csv_escape(r.lemma_id) + "," + csv_escape(r.expected) + "," +
                   csv_escape(r.computed_exact) + "," +
                   (r.has_numeric ? num_str(r.computed_numeric) : "") + "," +
                   (r.has_numeric ? num_str(r.rel_err) : "") + "," + r.status + "\n";
        }
        return out;
    }
    if (format == "text") {
        std::string out;
        char buf[512];
        for (const auto& r : doc.reports) {
            std::snprintf(buf, sizeof buf, "[%-11s] %-18s n=%d  %s\n", r.status.c_str(),
                          r.lemma_id.c_str(), r.n, r.statement.c_str());
            out += buf;
            std::snprintf(buf, sizeof buf, "              expected: %s\n",
                          r.expected.c_str());
            out += buf;
            std::snprintf(buf, sizeof buf, "              computed: %s\n",
                          r.computed_exact.c_str());
            out += buf;
            if (r.has_numeric) {
                std::snprintf(buf, sizeof buf, "              numeric:  %.12Le (rel %.3Le)\n",
                              r.computed_numeric, r.rel_err);
                out += buf;
            }
            if (!r.params.empty()) out += "              params:   " + r.params + "\n";
            if (!r.notes.empty()) out += "              notes:    " + r.notes + "\n";
        }
        std::snprintf(buf, sizeof buf, "summary: %d pass, %d fail, %d discrepancy, %d total\n",
                      doc.count_pass, doc.count_fail, doc.count_discrepancy,
                      static_cast<int>(doc.reports.size()));
        out += buf;
        return out;
    }
    throw std::invalid_argument("emit: unknown format '" + format + "'");
}

// The I-symbol table as CSV: every convergent symbol in the requested
// rectangle with its canonical coefficient, basis and numeric value.
inline std::string integral_table_csv(int max_m, int max_alpha, bool include_half = true) {
    std::string out = "m,alpha,canonical_coeff,canonical_base,numeric_value\n";
    for (int tm = 2; tm <= 2 * max_m; ++tm) {
        if (!include_half && tm % 2) continue;
        for (int a = 0; a <= max_alpha; ++a) {
            ISymbol sym{tm, a};
            if (!sym.convergent()) continue;
            auto [c, base] = canonical_I(sym);
            std::string mstr = tm % 2 ? std::to_string(tm) + "/2" : std::to_string(tm / 2);
            out += mstr + "," + std::to_string(a) + "," + c.to_string() + "," +
                   base.to_string() + "," + num_str(i_numeric(sym)) + "\n";
        }
    }
    return out;
}

inline std::string scan_b_text(const suite::ScanBResult& sb) {
    std::string out = "bracket: " + sb.bracket.to_string() + "\n";
    char buf[256];
    for (const auto& row : sb.rows) {
        std::snprintf(buf, sizeof buf, "  b = %-8s value = %-14s sign %c\n",
                      row.b.to_string().c_str(), row.value.to_string().c_str(),
                      row.sign > 0 ? '+' : (row.sign < 0 ? '-' : '0'));
        out += buf;
    }
    out += "vertex: b* = " + sb.vertex_b.to_string() + ", value " +
           sb.vertex_value.to_string() + "\n";
    out += "value at b = -2: " + sb.value_at_minus2.to_string() + "\n";
    if (sb.has_roots) {
        std::snprintf(buf, sizeof buf, "sign changes at b = %.12Lf and b = %.12Lf\n",
                      sb.root_lo, sb.root_hi);
        out += buf;
    }
    return out;
}

inline std::string scan_b_csv(const suite::ScanBResult& sb) {
    std::string out = "b,value,sign\n";
    for (const auto& row : sb.rows)
        out += row.b.to_string() + "," + row.value.to_string() + "," +
               std::to_string(row.sign) + "\n";
    return out;
}

}  // namespace report

}  // namespace yamabe

#endif
