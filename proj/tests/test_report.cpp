#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "yamabe/report.hpp"

using namespace yamabe;

namespace {

RunConfig small_config() {
    RunConfig cfg;
    cfg.command = "verify";
    cfg.n = 7;
    cfg.format = "json";
    return cfg;
}

}  // namespace

TEST_CASE("json round trip preserves the document") {
    RunConfig cfg = small_config();
    cfg.lemma = "AdA-1";
    ReportDocument doc = report::run_verify(cfg);
    REQUIRE(!doc.reports.empty());
    std::string text = report::emit(doc, "json");
    ReportDocument back = report::document_from_json(text);
    CHECK(report::emit(back, "json") == text);
}

TEST_CASE("exit code is a pure function of the status multiset") {
    ReportDocument doc;
    CHECK(doc.exit_code() == 0);
    VerificationReport r;
    r.status = suite::kPass;
    doc.reports.push_back(r);
    doc.tally();
    CHECK(doc.exit_code() == 0);
    r.status = suite::kDiscrepancy;
    doc.reports.push_back(r);
    doc.tally();
    CHECK(doc.exit_code() == 3);
    r.status = suite::kFail;
    doc.reports.push_back(r);
    doc.tally();
    CHECK(doc.exit_code() == 1);
}

TEST_CASE("empty report is a valid document with zero counts") {
    ReportDocument doc;
    std::string json = report::emit(doc, "json");
    ReportDocument back = report::document_from_json(json);
    CHECK(back.reports.empty());
    CHECK(back.count_pass == 0);
    CHECK(back.count_fail == 0);
    auto j = nlohmann::json::parse(json);
    CHECK(j["summary"]["total"] == 0);
}

TEST_CASE("csv has the fixed header and exact strings") {
    RunConfig cfg = small_config();
    cfg.lemma = "stimafinalegamma";
    ReportDocument doc = report::run_verify(cfg);
    std::string csv = report::emit(doc, "csv");
    CHECK(csv.rfind("lemma_id,expected,computed_exact,computed_numeric,rel_err,status\n", 0) ==
          0);
    CHECK(csv.find("29/432 * w5 * I(7,9)") != std::string::npos);
}

TEST_CASE("integral table rows carry the canonical conversions") {
    std::string csv = report::integral_table_csv(12, 12);
    CHECK(csv.rfind("m,alpha,canonical_coeff,canonical_base,numeric_value\n", 0) == 0);
    CHECK(csv.find("7,7,1/2,I(7,9),") != std::string::npos);
    CHECK(csv.find("8,8,5/9,I(8,10),") != std::string::npos);
}

TEST_CASE("verify reports are byte-identical across reruns") {
    RunConfig cfg = small_config();
    cfg.lemma = "pohofinale7";
    std::string a = report::emit(report::run_verify(cfg), "json");
    std::string b = report::emit(report::run_verify(cfg), "json");
    CHECK(a == b);
}

TEST_CASE("the n = 7 run contains the expected lemma ids, all passing") {
    RunConfig cfg = small_config();
    ReportDocument doc = report::run_verify(cfg);
    CHECK(doc.count_fail == 0);
    for (const char* id :
         {"AdA-1", "A2-1", "35A-1", "stimafinalegamma", "pohofinale7", "gradvq", "poho-flat"}) {
        bool found = false;
        for (const auto& r : doc.reports) found |= r.lemma_id == id;
        CAPTURE(id);
        CHECK(found);
    }
    CHECK(doc.exit_code() == 0);
}

TEST_CASE("scan-b serializations") {
    auto sb = suite::scan_b({Rational(-2), Rational(0)});
    std::string text = report::scan_b_text(sb);
    CHECK(text.find("vertex: b* = -50/21") != std::string::npos);
    CHECK(text.find("121/432") != std::string::npos);
    std::string csv = report::scan_b_csv(sb);
    CHECK(csv.rfind("b,value,sign\n", 0) == 0);
    CHECK(csv.find("-2,121/432,1") != std::string::npos);
}

TEST_CASE("unknown format is an error") {
    ReportDocument doc;
    CHECK_THROWS_AS(report::emit(doc, "yaml"), std::invalid_argument);
}
