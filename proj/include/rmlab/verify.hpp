#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmlab/common.hpp"

#include "json.hpp"

namespace rmlab {

enum class ClaimId {
    SZ1,
    DELTA_PRODUCT,
    LUCAS,
    ML_UNIQUE,
    SCALAR_DEGREE,
    HTILDE_UNIFORM,
    DEG_COEF,
    APK,
    THM1_DESK,
    THM2_FAMILY,
    JOHNSON_GAP,
};

std::string to_string(ClaimId id);
ClaimId parse_claim(std::string_view name);
const std::vector<ClaimId>& all_claims();

enum class ClaimStatus { Pass, Fail, Infeasible };
std::string to_string(ClaimStatus s);

using ParamMap = std::map<std::string, std::string>;

struct ClaimReport {
    ClaimId claim = ClaimId::SZ1;
    ParamMap parameters;  // effective parameters, defaults filled in
    ClaimStatus status = ClaimStatus::Pass;
    nlohmann::json counterexample;  // null unless status is Fail
    nlohmann::json details;         // claim-specific observations
    std::string message;
    std::uint64_t cases_checked = 0;
    double elapsed_ms = 0;
    std::string tag;
};

/// Runs one checker. Unknown parameter keys throw std::invalid_argument; ranges beyond the
/// limits produce an Infeasible report rather than a smaller search.
ClaimReport run_check(ClaimId id, const ParamMap& params, const Limits& limits = {});

/// Re-derives a Fail report's counterexample through the other modules' public operations;
/// true iff it is a genuine violation.
bool recheck_counterexample(const ClaimReport& report, const Limits& limits = {});

struct ConfiguredRun {
    ClaimId claim;
    ParamMap params;
};
struct RunConfig {
    Limits limits;
    std::vector<ConfiguredRun> runs;
};

/// Config format, one directive per line ('#' starts a comment):
///   run <CLAIM> key=value ...
///   limits max_table=<n> max_cases=<n>
RunConfig parse_config(std::string_view text, Limits base = {});
RunConfig load_config(const std::string& path, Limits base = {});
/// Desk-scale parameters for every claim.
std::string_view default_config_text();

/// Runs every configured check; claims run concurrently when jobs > 1, reports keep config order.
std::vector<ClaimReport> run_all(const RunConfig& config, unsigned jobs = 1);

nlohmann::json to_json(const ClaimReport& report, bool timing = false);
/// "claimId,status,casesChecked,elapsedMs" header plus one row per report.
std::string csv_summary(const std::vector<ClaimReport>& reports);

}  // namespace rmlab
