#include "qts/report.hpp"

#include <sstream>
#include <stdexcept>

namespace qts {

using nlohmann::json;

const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

static CheckStatus status_from_name(const std::string& s) {
    if (s == "pass") return CheckStatus::pass;
    if (s == "fail") return CheckStatus::fail;
    if (s == "skipped") return CheckStatus::skipped;
    throw std::invalid_argument("unknown status: " + s);
}

void RunReport::tally() {
    summary = {};
    for (const auto& r : reports) {
        switch (r.status) {
            case CheckStatus::pass: ++summary.pass; break;
            case CheckStatus::fail: ++summary.fail; break;
            case CheckStatus::skipped: ++summary.skipped; break;
        }
    }
}

VerificationReport make_failure(std::string id, long trunc, std::uint64_t modulus,
                                long index, const std::string& lhs, const std::string& rhs) {
    VerificationReport r;
    r.id = std::move(id);
    r.trunc = trunc;
    r.modulus = modulus;
    r.status = CheckStatus::fail;
    r.first_mismatch = Mismatch{index, lhs, rhs};
    return r;
}

json to_json(const VerificationReport& r) {
    json j{{"id", r.id},
           {"convention", r.convention},
           {"trunc", r.trunc},
           {"modulus", r.modulus},
           {"status", status_name(r.status)},
           {"gated", r.gated},
           {"millis", r.millis}};
    if (r.first_mismatch)
        j["first_mismatch"] = {{"n", r.first_mismatch->index},
                               {"lhs", r.first_mismatch->lhs},
                               {"rhs", r.first_mismatch->rhs}};
    else
        j["first_mismatch"] = nullptr;
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.family.empty()) {
        j["family"] = r.family;
        j["t"] = r.t;
        j["s"] = r.s;
        j["A"] = r.A;
        j["B"] = r.B;
        j["n_max"] = r.n_max;
    }
    return j;
}

VerificationReport report_from_json(const json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.convention = j.at("convention").get<std::string>();
    r.trunc = j.at("trunc").get<long>();
    r.modulus = j.at("modulus").get<std::uint64_t>();
    r.status = status_from_name(j.at("status").get<std::string>());
    r.gated = j.at("gated").get<bool>();
    r.millis = j.at("millis").get<double>();
    if (!j.at("first_mismatch").is_null()) {
        const auto& m = j.at("first_mismatch");
        r.first_mismatch = Mismatch{m.at("n").get<long>(), m.at("lhs").get<std::string>(),
                                    m.at("rhs").get<std::string>()};
    }
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    if (j.contains("family")) {
        r.family = j.at("family").get<std::string>();
        r.t = j.at("t").get<long>();
        r.s = j.at("s").get<long>();
        r.A = j.at("A").get<long>();
        r.B = j.at("B").get<long>();
        r.n_max = j.at("n_max").get<long>();
    }
    return r;
}

json to_json(const RunReport& r) {
    json reports = json::array();
    for (const auto& v : r.reports) reports.push_back(to_json(v));
    return json{{"version", r.version},
                {"command", r.command},
                {"params", r.params},
                {"reports", std::move(reports)},
                {"summary",
                 {{"pass", r.summary.pass}, {"fail", r.summary.fail}, {"skipped", r.summary.skipped}}},
                {"total_millis", r.total_millis}};
}

RunReport run_report_from_json(const json& j) {
    RunReport r;
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.params = j.at("params").get<std::string>();
    for (const auto& v : j.at("reports")) r.reports.push_back(report_from_json(v));
    r.summary.pass = j.at("summary").at("pass").get<long>();
    r.summary.fail = j.at("summary").at("fail").get<long>();
    r.summary.skipped = j.at("summary").at("skipped").get<long>();
    r.total_millis = j.at("total_millis").get<double>();
    return r;
}

std::string to_csv(const RunReport& r) {
    std::ostringstream out;
    out << "family,t,s,convention,A,B,modulus,n_max,status,first_fail_n\n";
    for (const auto& v : r.reports) {
        out << (v.family.empty() ? v.id : v.family) << ',';
        if (v.t) out << v.t;
        out << ',';
        if (v.s) out << v.s;
        out << ',' << v.convention << ',';
        if (v.A) out << v.A;
        out << ',';
        if (!v.family.empty()) out << v.B;
        out << ',' << v.modulus << ',' << (v.n_max ? v.n_max : v.trunc) << ','
            << status_name(v.status) << ',';
        if (v.first_mismatch) out << v.first_mismatch->index;
        out << '\n';
    }
    return out.str();
}

std::string to_text(const RunReport& r) {
    std::ostringstream out;
    for (const auto& v : r.reports) {
        out << (v.passed() ? "PASS" : v.status == CheckStatus::fail ? "FAIL" : "SKIP") << "  "
            << v.id;
        if (!v.convention.empty()) out << " [" << v.convention << "]";
        if (v.modulus) out << " (mod " << v.modulus << ")";
        if (v.n_max)
            out << " n_max=" << v.n_max;
        else
            out << " trunc=" << v.trunc;
        if (v.first_mismatch)
            out << "  first mismatch at " << v.first_mismatch->index << ": "
                << v.first_mismatch->lhs << " vs " << v.first_mismatch->rhs;
        if (!v.note.empty()) out << "  [" << v.note << "]";
        out << '\n';
    }
    long recorded_fail = 0;
    for (const auto& v : r.reports)
        if (!v.gated && v.status == CheckStatus::fail) ++recorded_fail;
    out << "summary: " << r.summary.pass << " pass, " << r.summary.fail << " fail";
    if (recorded_fail)
        out << " (" << (r.summary.fail - recorded_fail) << " gated, " << recorded_fail
            << " recorded-only)";
    out << ", " << r.summary.skipped << " skipped (" << r.total_millis << " ms)\n";
    return out.str();
}

}  // namespace qts
