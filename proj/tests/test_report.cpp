#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "eaqmds/report.hpp"

using namespace eaqmds;

TEST_CASE("record assembly and CSV") {
    const FamilyInstance inst = build_instance(6, 8, 1);
    const VerificationReport rep =
        verify_instance(inst, OracleLevel::mds, OracleBudget{});
    const ReportRecord rec = make_report(inst, rep, /*reproducible=*/true);

    CHECK(rec.family == 6);
    CHECK(rec.q == 8);
    CHECK(rec.lambda == 1);
    CHECK(rec.n == 13);
    CHECK(rec.k == 5);
    CHECK(rec.d == 7);
    CHECK(rec.c == 4);
    CHECK(rec.singleton_defect == 0);
    CHECK(rec.checks.size() == 6);
    CHECK(rec.timestamp.empty());
    CHECK(rec.delta_repr.rfind("GF(2^12) modulus [", 0) == 0);
    CHECK(record_all_pass(rec));

    CHECK(csv_header() == "family,q,lambda,n,k,d,c,defect,status");
    CHECK(render_csv_row(rec) == "6,8,1,13,5,7,4,0,pass");

    const std::string text = render_text(rec);
    CHECK(text.find("[[13, 5, 7; 4]]_8") != std::string::npos);
    CHECK(text.find("check params: pass") != std::string::npos);
    CHECK(text.find("status: pass") != std::string::npos);
    CHECK(text.find("time:") == std::string::npos);
}

TEST_CASE("JSON round-trip") {
    const FamilyInstance inst = build_instance(3, 13, 1);
    const VerificationReport rep =
        verify_instance(inst, OracleLevel::rank, OracleBudget{});
    const ReportRecord rec = make_report(inst, rep, true);

    const std::string json = render_json(rec);
    const ReportRecord back = report_from_json_text(json);
    CHECK(back == rec);
    CHECK(render_json(back) == json);

    CHECK_THROWS_AS(report_from_json_text("{not json"), std::exception);
    CHECK_THROWS_AS(report_from_json_text("{\"family\": 3}"), std::exception);
}

TEST_CASE("failing and skipped checks") {
    // Family 8's instances fail the params check; the record carries that.
    const FamilyInstance inst = build_instance(8, 64, 1);
    const VerificationReport rep =
        verify_instance(inst, OracleLevel::none, OracleBudget{});
    const ReportRecord rec = make_report(inst, rep, true);
    CHECK_FALSE(record_all_pass(rec));
    CHECK(render_csv_row(rec) == "8,64,1,241,161,45,8,0,fail");
    CHECK(render_text(rec).find("status: fail") != std::string::npos);

    ReportRecord skipped;
    skipped.checks = {{"params", "pass"}, {"exhaustive", "skipped: budget"}};
    CHECK(record_all_pass(skipped));
}

TEST_CASE("timestamps") {
    const FamilyInstance inst = build_instance(6, 8, 2);
    const VerificationReport rep =
        verify_instance(inst, OracleLevel::none, OracleBudget{});
    const ReportRecord rec = make_report(inst, rep, /*reproducible=*/false);
    REQUIRE(rec.timestamp.size() == 20);
    CHECK(rec.timestamp[4] == '-');
    CHECK(rec.timestamp[10] == 'T');
    CHECK(rec.timestamp.back() == 'Z');
    CHECK(render_text(rec).find("time: " + rec.timestamp) != std::string::npos);
}
