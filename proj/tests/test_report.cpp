#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strata/cache.hpp"
#include "strata/report.hpp"

using strata::ClaimStatus;
using strata::VerificationReport;
using strata::VerifyOptions;

namespace fs = std::filesystem;

namespace {

VerifyOptions options(int n_max, int jobs = 1) {
    VerifyOptions o;
    o.n_max = n_max;
    o.jobs = jobs;
    return o;
}

const strata::ClaimResult& find_claim(const VerificationReport& report, const std::string& id) {
    for (const auto& c : report.checks)
        if (c.id == id) return c;
    REQUIRE_MESSAGE(false, "claim not present: " << id);
    static strata::ClaimResult dummy;
    return dummy;
}

}  // namespace

TEST_CASE("the claim registry is fixed and each id appears exactly once") {
    const VerificationReport report = strata::run_verification(options(5));
    REQUIRE(report.checks.size() == strata::claim_registry().size());
    for (std::size_t i = 0; i < report.checks.size(); ++i)
        CHECK(report.checks[i].id == strata::claim_registry()[i]);
}

TEST_CASE("every claim verifies over n <= 10") {
    const VerificationReport report = strata::run_verification(options(10));
    for (const auto& c : report.checks) CHECK(c.status == ClaimStatus::verified_in_range);
    CHECK_FALSE(strata::any_falsified(report));
    CHECK(report.delta_sequence == std::vector<int>{0, 1, 1, 2, 2, 2, 3, 3, 3, 3});
    CHECK(report.thresholds.tau == std::map<int, int>{{0, 1}, {1, 2}, {2, 4}, {3, 7}});
}

TEST_CASE("claims without instances in a tiny range are skipped, not faked") {
    const VerificationReport report = strata::run_verification(options(1));
    CHECK(find_claim(report, "claim.oracle.agreement").status == ClaimStatus::verified_in_range);
    CHECK(find_claim(report, "claim.delta.sequence").status == ClaimStatus::verified_in_range);
    CHECK(find_claim(report, "claim.tau.triangular").status == ClaimStatus::verified_in_range);
    CHECK(find_claim(report, "claim.firstfamily.staircase").status == ClaimStatus::skipped);
    CHECK(find_claim(report, "claim.L1.antennas").status == ClaimStatus::skipped);
    CHECK(find_claim(report, "claim.boundary.tau-eq").status == ClaimStatus::skipped);
    CHECK(find_claim(report, "claim.framework.lowlayers").status == ClaimStatus::skipped);
    CHECK_FALSE(strata::any_falsified(report));
}

TEST_CASE("the machine report is a json document keyed by claim id") {
    const VerificationReport report = strata::run_verification(options(6));
    const auto doc = nlohmann::json::parse(strata::machine_report(report));
    CHECK(doc.at("schema_version") == 1);
    CHECK(doc.at("range_max") == 6);
    REQUIRE(doc.at("claims").size() == strata::claim_registry().size());
    for (const auto& id : strata::claim_registry()) {
        REQUIRE(doc.at("claims").contains(id));
        const auto& entry = doc.at("claims").at(id);
        CHECK(entry.contains("status"));
        CHECK(entry.contains("details"));
    }
}

TEST_CASE("machine reports are byte-identical across job counts") {
    const std::string first = strata::machine_report(strata::run_verification(options(8)));
    const std::string second = strata::machine_report(strata::run_verification(options(8, 3)));
    CHECK(first == second);
}

TEST_CASE("verification refreshes the cache and warns about corruption") {
    const fs::path dir = fs::temp_directory_path() / "strata_verify_cache_test";
    fs::remove_all(dir);

    VerifyOptions cached = options(6);
    cached.cache_dir = dir;
    const VerificationReport first = strata::run_verification(cached);
    CHECK(first.cache_warnings.empty());
    CHECK(fs::exists(strata::cache_entry_path(dir, 6)));

    // corrupt one entry; the rerun must warn, recompute, and still verify
    std::ofstream(strata::cache_entry_path(dir, 4), std::ios::trunc) << "{broken";
    const VerificationReport second = strata::run_verification(cached);
    REQUIRE(second.cache_warnings.size() == 1);
    CHECK_FALSE(strata::any_falsified(second));

    std::string warning;
    CHECK(strata::cache_load(dir, 4, &warning).has_value());  // overwritten with a good entry
    CHECK(warning.empty());

    fs::remove_all(dir);
}

TEST_CASE("the human-readable report carries every claim and the threshold table") {
    const VerificationReport report = strata::run_verification(options(7));
    std::ostringstream out;
    strata::print_report(out, report);
    const std::string text = out.str();
    for (const auto& id : strata::claim_registry())
        CHECK(text.find(id) != std::string::npos);
    CHECK(text.find("tau") != std::string::npos);
    CHECK(text.find("boundary connectivity") != std::string::npos);
    CHECK(text.find("no claim falsified") != std::string::npos);
}

TEST_CASE("run_verification validates its range") {
    CHECK_THROWS_AS(strata::run_verification(options(0)), std::invalid_argument);
}
