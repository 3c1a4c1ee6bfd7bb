#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "satake/coulomb.hpp"
#include "satake/qchar.hpp"

namespace satake {

/// Parse {"vertices": [...], "edges": [[out,in],...], "v": {...}, "w": {...}}
/// with vertex names mapped to indices in declaration order.
QuiverGaugeDatum quiver_from_json(const nlohmann::json& j);

struct JobLimits {
    int max_deg = 10;
    int depth = 4;
    long long dimension_cap = kDefaultDimensionCap;
};

/// One CLI invocation, serializable so runs can be reproduced exactly.
struct JobSpec {
    std::string command; // kostka, verify-eq1, verify-diagram7, weight-table,
                         // affine-mult, monopole-hs, sym-power, sweep
    nlohmann::json params = nlohmann::json::object();
    std::string format = "table"; // table | json | csv
    JobLimits limits;

    nlohmann::json to_json() const;
    static JobSpec from_json(const nlohmann::json& j);
};

struct JobResult {
    int exit_code = 0; // 0 ok, 1 verification mismatch, 2 input error, 3 refused
    std::string report;
};

/// Execute a job; the returned report is the full machine-parseable output
/// (progress never goes here). Input problems land in exit code 2, refused
/// computations in 3, verification mismatches in 1.
JobResult run_job(const JobSpec& job, std::ostream* progress = nullptr);

/// One acceptance-suite criterion outcome.
struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

nlohmann::json default_sweep_config();

/// Run the bundled verification sweep. Throws std::invalid_argument on a
/// malformed config; progress (when given) receives per-criterion notes.
std::vector<CriterionResult> run_acceptance_suite(const nlohmann::json& config,
                                                  std::ostream* progress = nullptr);

/// Minimal structural JSON-schema check (type/required/properties/items/enum
/// subset); returns a description of the first violation, or nullopt.
std::optional<std::string> schema_violation(const nlohmann::json& doc,
                                            const nlohmann::json& schema,
                                            const std::string& path = "$");

} // namespace satake
