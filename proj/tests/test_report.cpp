#include "qts/report.hpp"

#include <doctest.h>

#include <json.hpp>

using namespace qts;

namespace {

RunReport sample_run() {
    RunReport run;
    run.version = "0.1.0";
    run.command = "verify";
    run.params = "theorem T35b --as-printed --nmax 50";
    VerificationReport ok;
    ok.id = "L27_cubic";
    ok.trunc = 200;
    ok.millis = 12.5;
    run.reports.push_back(ok);
    VerificationReport bad;
    bad.id = "T35b[as-printed]";
    bad.convention = "series";
    bad.family = "T35b";
    bad.t = 3;
    bad.s = 2;
    bad.A = 2;
    bad.B = 0;
    bad.n_max = 50;
    bad.trunc = 100;
    bad.status = CheckStatus::fail;
    bad.first_mismatch = Mismatch{1, "0", "1"};
    bad.millis = 0.25;
    run.reports.push_back(bad);
    VerificationReport skip;
    skip.id = "T31(alpha=2,p=11,beta=1,j=1)";
    skip.convention = "series";
    skip.family = "T31";
    skip.t = 4;
    skip.s = 2;
    skip.A = 14641;
    skip.B = 17711;
    skip.n_max = 5;
    skip.trunc = 90916;
    skip.status = CheckStatus::skipped;
    skip.note = "required truncation 90916 exceeds ceiling 50000";
    run.reports.push_back(skip);
    run.tally();
    run.total_millis = 12.75;
    return run;
}

}  // namespace

TEST_CASE("summary tallies the report list") {
    const RunReport run = sample_run();
    CHECK(run.summary.pass == 1);
    CHECK(run.summary.fail == 1);
    CHECK(run.summary.skipped == 1);
}

TEST_CASE("JSON round-trips exactly") {
    const RunReport run = sample_run();
    const nlohmann::json j = to_json(run);
    const std::string printed = j.dump(2);
    const RunReport parsed = run_report_from_json(nlohmann::json::parse(printed));
    CHECK(parsed == run);

    // schema spot checks
    CHECK(j.at("reports").size() == 3);
    CHECK(j.at("reports")[1].at("first_mismatch").at("n") == 1);
    CHECK(j.at("reports")[0].at("first_mismatch").is_null());
    CHECK(j.at("summary").at("fail") == 1);
}

TEST_CASE("huge coefficients survive the JSON round-trip as strings") {
    RunReport run;
    run.version = "0.1.0";
    run.command = "verify";
    VerificationReport r = make_failure("X", 10, 0, 3,
                                        "4720819175619413888601432406799959512200344166", "0");
    run.reports.push_back(r);
    run.tally();
    const RunReport parsed = run_report_from_json(to_json(run));
    CHECK(parsed.reports[0].first_mismatch->lhs ==
          "4720819175619413888601432406799959512200344166");
}

TEST_CASE("CSV has the fixed column set") {
    const std::string csv = to_csv(sample_run());
    CHECK(csv.starts_with("family,t,s,convention,A,B,modulus,n_max,status,first_fail_n\n"));
    // identity rows use the id as family and leave the claim columns blank
    CHECK(csv.find("L27_cubic,,,,,,0,200,pass,\n") != std::string::npos);
    CHECK(csv.find("T35b,3,2,series,2,0,0,50,fail,1\n") != std::string::npos);
    CHECK(csv.find("T31,4,2,series,14641,17711,0,5,skipped,\n") != std::string::npos);
}

TEST_CASE("text format carries mismatch and notes") {
    const std::string text = to_text(sample_run());
    CHECK(text.find("PASS  L27_cubic") != std::string::npos);
    CHECK(text.find("first mismatch at 1: 0 vs 1") != std::string::npos);
    CHECK(text.find("exceeds ceiling") != std::string::npos);
    CHECK(text.find("summary: 1 pass, 1 fail, 1 skipped") != std::string::npos);
}
