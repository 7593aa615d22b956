#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strata/partition.hpp"
#include "strata/stratification.hpp"

namespace strata {

enum class ClaimStatus { verified_in_range, falsified, skipped };

std::string to_string(ClaimStatus status);

struct ClaimResult {
    std::string id;
    ClaimStatus status = ClaimStatus::skipped;
    std::string details;
    std::optional<int> counterexample_n;
    std::optional<Partition> counterexample;
};

/// Connected-component count of G_n restricted to one nonempty phase
/// boundary. Exploratory output only: it appears in the human-readable
/// report and nowhere else.
struct BoundaryComponentStat {
    int n = 0;
    int r = 0;
    int size = 0;
    int components = 0;
};

struct VerificationReport {
    int range_max = 0;
    std::vector<ClaimResult> checks;  // fixed registry order, every id exactly once
    std::vector<int> delta_sequence;  // delta(n) for n = 1..range_max
    ThresholdTable thresholds;
    std::vector<BoundaryComponentStat> boundary_stats;
    std::vector<std::string> cache_warnings;
};

/// The frozen claim ids, in report order.
const std::vector<std::string>& claim_registry();

struct VerifyOptions {
    int n_max = 30;
    int jobs = 0;
    std::optional<std::filesystem::path> cache_dir;
};

/// Runs every registry claim over n = 1..n_max with both dim_loc routes.
/// Never served from cache: the oracle-agreement claim is only meaningful
/// when both routes actually ran. Cache entries, when a directory is given,
/// are refreshed as a side effect and corrupt ones reported as warnings.
VerificationReport run_verification(const VerifyOptions& options);

bool any_falsified(const VerificationReport& report);

/// Exact bytes of the machine-readable report: a JSON document keyed by
/// claim id, independent of job count.
std::string machine_report(const VerificationReport& report);

void print_report(std::ostream& out, const VerificationReport& report);

}  // namespace strata
