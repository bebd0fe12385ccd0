#pragma once

#include <json.hpp>

#include "rightsplit/induce.hpp"

namespace rsplit {

using json = nlohmann::json;

inline constexpr const char* kToolkitVersion = "0.1.0";

struct SuiteOptions {
    std::uint64_t seed = 42;
    std::int64_t samples = 10000;
    std::vector<std::string> filter; // keep cases whose id starts with any entry
};

struct CaseOutcome {
    std::string statement_id;
    json parameters = json::object();
    std::string verdict; // verified | falsified | not-applicable | indeterminate
    json witness;
    std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseOutcome> cases;
    std::int64_t verified = 0, falsified = 0, not_applicable = 0, indeterminate = 0;
    std::string version = kToolkitVersion;
    std::uint64_t seed = 42;
    std::int64_t samples = 10000;

    json to_json(bool include_timing = true) const;
    bool passing() const { return falsified == 0 && indeterminate == 0; }
};

std::vector<std::string> suite_names();
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// One item of the induced-representation corpus: a representation pi of G
/// over F_ell together with the block representation induced from pi|_H.
struct RepInstance {
    std::string id;
    Rep pi;
    BlockRep b;
};

/// The fixed in-repo corpus of (G, H, pi, ell) instances used by the suites.
std::vector<RepInstance> induced_corpus();

/// JSON for a split report ({m, n, gcd, verdict, witness, elapsed_ms}).
json split_report_json(const SplitReport& rep, bool include_timing = true);

} // namespace rsplit
