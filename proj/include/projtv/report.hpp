#pragma once

// Input parsing, job routing, report serialization and re-checking. Reports
// embed the full instance and every exact witness as rational strings, so a
// pass verdict can be re-validated from the file alone (the `recheck`
// command); searches may be numeric inside, but no pass verdict exists
// without exact re-verification.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "projtv/measure.hpp"

namespace projtv {

inline constexpr const char* kToolName = "projtv";
inline constexpr const char* kToolVersion = "0.1.0";

struct JobSpec {
    std::string command;  // certify | verify | search | oracle | demo-measure | plot
    std::string theorem;  // cpt | tver | transversal | both-free | flag
    std::optional<long> d, v, w, m, r;
    std::optional<uint64_t> p;
    std::string input_path;
    std::string output_path;
    std::string plot_path;
    bool rainbow = false;
    bool strict_disjoint = false;
    size_t demo_samples = 60;
    SearchConfig search = default_search_config();
};

struct ParsedInput {
    long d = -1;
    std::optional<PointConfig> x;
    std::vector<PointConfig> configs;
    std::vector<size_t> config_rs;
    std::vector<PartitionWitness> partitions;  // per config
    std::optional<LinSubspace> V, W;
    std::optional<PartitionWitness> partition;
    std::vector<AffineHyperplane> hyperplanes;
    std::vector<DensitySpec> densities;
    std::vector<std::string> warnings;
};

/// Exact parsing with field diagnostics: rationals as integers or "p/q"
/// strings, points as homogeneous (d+1) or affine (d) arrays, subspaces as
/// spanning-vector lists. Throws std::invalid_argument with the offending
/// field path.
ParsedInput parse_config(const nlohmann::json& doc, std::optional<long> d_hint = std::nullopt);

nlohmann::json config_to_json(const PointConfig& x);
nlohmann::json subspace_to_json(const LinSubspace& s);
PointConfig config_from_json(const nlohmann::json& j);
LinSubspace subspace_from_json(const nlohmann::json& j, size_t ambient);

struct RunResult {
    nlohmann::json report;
    int exit_code = 0;  // 0 pass, 1 fail/not found, 2 usage or input error
};

/// Routes a job to the implementing module and assembles the report.
/// Usage and input errors surface as std::invalid_argument (exit code 2 at
/// the CLI boundary).
RunResult run_job(const JobSpec& job);

struct RecheckResult {
    bool ok = false;
    std::string message;
};

/// Re-validates a serialized report without re-searching: recomputes the
/// verdict from the embedded instance through the exact verifiers, checks
/// the stored witness in one matrix-vector pass, and compares counts.
RecheckResult recheck_report(const nlohmann::json& report);

/// FNV-1a 64-bit content digest, rendered as "fnv1a64:<hex>".
std::string digest_bytes(const std::string& bytes);

void write_report_atomic(const std::string& path, const nlohmann::json& report);

}  // namespace projtv
