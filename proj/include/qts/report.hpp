#pragma once

// Value-object outcomes of checks.  Modules that verify things return these
// and never print; the CLI owns presentation (text, JSON, CSV).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qts {

enum class CheckStatus { pass, fail, skipped };
const char* status_name(CheckStatus s);

struct Mismatch {
    long index = 0;
    std::string lhs;  // decimal, exact
    std::string rhs;
    bool operator==(const Mismatch&) const = default;
};

struct VerificationReport {
    std::string id;
    std::string convention;   // empty when the check has no convention axis
    long trunc = 0;           // truncation (identities) or n_max (claims)
    std::uint64_t modulus = 0;  // 0 = exact comparison
    CheckStatus status = CheckStatus::pass;
    std::optional<Mismatch> first_mismatch;  // present iff status == fail
    double millis = 0.0;
    std::string note;
    // Recorded-only rows (gated = false) carry an observation — e.g. how a
    // claim fares under the non-proof convention — and do not drive the
    // process exit code.
    bool gated = true;

    // claim metadata, zero/empty for identity checks; feeds the CSV columns
    std::string family;
    long t = 0, s = 0;
    long A = 0, B = 0;
    long n_max = 0;

    bool passed() const { return status == CheckStatus::pass; }
    bool operator==(const VerificationReport&) const = default;
};

struct RunSummary {
    long pass = 0, fail = 0, skipped = 0;
    bool operator==(const RunSummary&) const = default;
};

struct RunReport {
    std::string version;
    std::string command;
    std::string params;  // rendered invocation parameters
    std::vector<VerificationReport> reports;
    RunSummary summary;
    double total_millis = 0.0;

    void tally();  // recompute summary from reports
    bool operator==(const RunReport&) const = default;
};

VerificationReport make_failure(std::string id, long trunc, std::uint64_t modulus,
                                long index, const std::string& lhs, const std::string& rhs);

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RunReport& r);
RunReport run_report_from_json(const nlohmann::json& j);

// Fixed columns: family,t,s,convention,A,B,modulus,n_max,status,first_fail_n
std::string to_csv(const RunReport& r);
std::string to_text(const RunReport& r);

}  // namespace qts
