#include "strata/report.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include <json.hpp>

#include "parallel.hpp"
#include "strata/cache.hpp"
#include "strata/capacity.hpp"
#include "strata/clique.hpp"
#include "strata/regions.hpp"

namespace strata {

namespace {

// expected delta(n) for n = 1..30, the scanned reference range
constexpr std::array<int, 30> kExpectedDelta = {0, 1, 1, 2, 2, 2, 3, 3, 3, 3,
                                                4, 4, 4, 4, 4, 5, 5, 5, 5, 5,
                                                5, 6, 6, 6, 6, 6, 6, 6, 7, 7};

constexpr int triangular_threshold(int r) { return 1 + r * (r + 1) / 2; }

int component_count(const PartitionGraph& g, std::span<const VertexId> members) {
    std::vector<char> visited(members.size(), 0);
    int components = 0;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (visited[i]) continue;
        ++components;
        visited[i] = 1;
        stack.assign(1, i);
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (VertexId w : g.neighbors(members[cur])) {
                const auto it = std::lower_bound(members.begin(), members.end(), w);
                if (it == members.end() || *it != w) continue;
                const auto j = static_cast<std::size_t>(it - members.begin());
                if (!visited[j]) {
                    visited[j] = 1;
                    stack.push_back(j);
                }
            }
        }
    }
    return components;
}

std::vector<VertexId> ids_of(const PartitionGraph& g, std::vector<Partition> ps) {
    std::vector<VertexId> ids;
    ids.reserve(ps.size());
    for (const Partition& p : ps) ids.push_back(g.index_of(p));
    std::sort(ids.begin(), ids.end());
    return ids;
}

Partition hook(int n, int k) {
    std::vector<int> parts{n - k};
    parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(parts));
}

struct Counterexample {
    int n = 0;
    Partition partition;
    std::string note;
};

}  // namespace

std::string to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::verified_in_range: return "verified-in-range";
        case ClaimStatus::falsified: return "falsified";
        case ClaimStatus::skipped: return "skipped";
    }
    std::abort();
}

const std::vector<std::string>& claim_registry() {
    static const std::vector<std::string> ids = {
        "claim.oracle.agreement",   "claim.delta.sequence",  "claim.tau.triangular",
        "claim.firstfamily.staircase", "claim.L1.antennas",  "claim.boundary.tau-eq",
        "claim.framework.lowlayers",
    };
    return ids;
}

VerificationReport run_verification(const VerifyOptions& options) {
    if (options.n_max < 1)
        throw std::invalid_argument("run_verification: n_max must be >= 1");

    VerificationReport report;
    report.range_max = options.n_max;
    report.thresholds.range_max = options.n_max;

    long long vertices_checked = 0;
    long long oracle_mismatches = 0;
    std::optional<Counterexample> oracle_fail, delta_fail, firstfamily_fail, antennas_fail,
        framework_fail;
    bool firstfamily_seen = false;
    int firstfamily_max_r = 0;

    for (int n = 1; n <= options.n_max; ++n) {
        const PartitionGraph g = build_graph(n, options.jobs);
        const std::size_t count = static_cast<std::size_t>(g.vertex_count());

        std::vector<int> dims_cap(count), dims_clq(count);
        detail::parallel_for(count, options.jobs, [&](std::size_t v) {
            dims_cap[v] = dim_loc_capacity(g.vertex(static_cast<VertexId>(v)));
            dims_clq[v] = dim_loc_clique(static_cast<VertexId>(v), g);
        });
        vertices_checked += static_cast<long long>(count);
        for (std::size_t v = 0; v < count; ++v) {
            if (dims_cap[v] == dims_clq[v]) continue;
            ++oracle_mismatches;
            if (!oracle_fail)
                oracle_fail = {n, g.vertex(static_cast<VertexId>(v)),
                               "capacity " + std::to_string(dims_cap[v]) + " vs clique " +
                                   std::to_string(dims_clq[v])};
        }

        const Stratification s = derive_stratification(n, dims_cap);
        report.delta_sequence.push_back(s.delta);

        if (n <= 30 && !delta_fail && s.delta != kExpectedDelta[static_cast<std::size_t>(n) - 1])
            delta_fail = {n, g.vertex(layer(s, s.delta).front()),
                          "delta(" + std::to_string(n) + ") = " + std::to_string(s.delta) +
                              ", expected " +
                              std::to_string(kExpectedDelta[static_cast<std::size_t>(n) - 1])};

        record_thresholds(report.thresholds, g, s);

        // first-occurrence layers that appeared at this n
        for (const auto& [r, first_n] : report.thresholds.tau) {
            if (first_n != n || r < 2) continue;
            firstfamily_seen = true;
            firstfamily_max_r = std::max(firstfamily_max_r, r);
            const std::vector<VertexId> expected = ids_of(g, one_cell_extensions(staircase(r)));
            const auto actual = layer(s, r);
            if (!std::equal(actual.begin(), actual.end(), expected.begin(), expected.end()) &&
                !firstfamily_fail)
                firstfamily_fail = {n, g.vertex(actual.front()),
                                    "L_" + std::to_string(r) + "(" + std::to_string(n) +
                                        ") is not the one-cell extension family of the staircase"};
        }

        if (n >= 4 && !antennas_fail) {
            const std::vector<VertexId> expected =
                ids_of(g, {Partition({n}), Partition(std::vector<int>(static_cast<std::size_t>(n), 1))});
            const auto actual = layer(s, 1);
            if (!std::equal(actual.begin(), actual.end(), expected.begin(), expected.end()))
                antennas_fail = {n, g.vertex(actual.empty() ? 0 : actual.front()),
                                 "L_1(" + std::to_string(n) + ") has " +
                                     std::to_string(actual.size()) + " members"};
        }

        if (n >= 4 && !framework_fail) {
            const Region fw = framework(g);
            const std::vector<VertexId> antenna_ids = ids_of(
                g, {Partition({n}), Partition(std::vector<int>(static_cast<std::size_t>(n), 1))});
            const std::vector<VertexId> outer_ids = ids_of(
                g, {Partition({n}), hook(n, n - 1), hook(n, 1), hook(n, n - 2)});
            const auto fail = [&](const Partition& p, std::string note) {
                framework_fail = {n, p, std::move(note)};
            };

            for (VertexId v : fw.members) {
                const int d = s.dims[static_cast<std::size_t>(v)];
                if (d != 1 && d != 2) {
                    fail(g.vertex(v), "framework vertex outside L_1 and L_2 at n=" + std::to_string(n));
                    break;
                }
            }
            if (!framework_fail) {
                const BoundarySets b1 = boundaries(s, g, 1);
                const auto side_on_framework = [&](const std::vector<VertexId>& side) {
                    std::vector<VertexId> out;
                    std::set_intersection(side.begin(), side.end(), fw.members.begin(),
                                          fw.members.end(), std::back_inserter(out));
                    return out;
                };
                const std::vector<VertexId> inner_ids = ids_of(g, {hook(n, 1), hook(n, n - 2)});
                if (layer_trace(s, fw, 1) != antenna_ids)
                    fail(g.vertex(fw.members.front()),
                         "framework trace of L_1 is not the antenna pair at n=" + std::to_string(n));
                else if (side_on_framework(b1.lower) != antenna_ids)
                    fail(g.vertex(fw.members.front()),
                         "B_1 framework trace is not the antenna pair at n=" + std::to_string(n));
                else if (side_on_framework(b1.upper) != inner_ids)
                    fail(g.vertex(fw.members.front()),
                         "B-_2 framework trace is not the inner hook pair at n=" + std::to_string(n));
                else if (boundary_trace(b1, fw) != outer_ids)
                    fail(g.vertex(fw.members.front()),
                         "framework trace of the 1-2 interface is not the four outermost hooks at n=" +
                             std::to_string(n));
            }
            if (!framework_fail && n >= 7) {
                std::vector<VertexId> expected;
                std::set_difference(fw.members.begin(), fw.members.end(), outer_ids.begin(),
                                    outer_ids.end(), std::back_inserter(expected));
                if (boundary_trace(boundaries(s, g, 2), fw) != expected)
                    fail(g.vertex(fw.members.front()),
                         "framework trace of the 2-3 interface is not the framework interior at n=" +
                             std::to_string(n));
            }
            for (int r = 3; r <= s.delta && !framework_fail; ++r) {
                const std::vector<VertexId> trace = boundary_trace(boundaries(s, g, r), fw);
                if (!trace.empty())
                    fail(g.vertex(trace.front()), "framework meets the " + std::to_string(r) + "-" +
                                                      std::to_string(r + 1) + " interface at n=" +
                                                      std::to_string(n));
            }
        }

        for (int r = 0; r <= s.delta; ++r) {
            const BoundarySets b = boundaries(s, g, r);
            if (b.full.empty()) continue;
            report.boundary_stats.push_back(
                {n, r, static_cast<int>(b.full.size()), component_count(g, b.full)});
        }

        if (options.cache_dir) {
            std::string warning;
            const auto cached = cache_load(*options.cache_dir, n, &warning);
            if (!warning.empty()) report.cache_warnings.push_back(warning + "; recomputed");
            if (cached && *cached != s.dims)
                report.cache_warnings.push_back("cache entry for n=" + std::to_string(n) +
                                                " disagreed with a fresh run; overwritten");
            cache_store(*options.cache_dir, s);
        }
    }

    const auto claim = [&report](std::string id, ClaimStatus status, std::string details,
                                 const std::optional<Counterexample>& ce = std::nullopt) {
        ClaimResult result{std::move(id), status, std::move(details), {}, {}};
        if (ce) {
            result.counterexample_n = ce->n;
            result.counterexample = ce->partition;
            result.details += " [" + ce->note + " at " + to_text(ce->partition) + "]";
        }
        report.checks.push_back(std::move(result));
    };

    if (oracle_fail)
        claim("claim.oracle.agreement", ClaimStatus::falsified,
              std::to_string(oracle_mismatches) + " of " + std::to_string(vertices_checked) +
                  " vertices disagree between the two dim_loc routes",
              oracle_fail);
    else
        claim("claim.oracle.agreement", ClaimStatus::verified_in_range,
              "capacity formula and neighborhood clique search agree at all " +
                  std::to_string(vertices_checked) + " vertices, n = 1.." +
                  std::to_string(options.n_max));

    {
        const int covered = std::min(options.n_max, 30);
        std::string details = "delta(n) matches the expected sequence for n = 1.." +
                              std::to_string(covered);
        if (options.n_max > 30) details += " (no reference values beyond 30)";
        if (delta_fail)
            claim("claim.delta.sequence", ClaimStatus::falsified, delta_fail->note, delta_fail);
        else
            claim("claim.delta.sequence", ClaimStatus::verified_in_range, details);
    }

    {
        std::optional<Counterexample> fail;
        for (const auto& [r, n] : report.thresholds.tau) {
            if (n == triangular_threshold(r)) continue;
            fail = {n, report.thresholds.tau_witness.at(r),
                    "tau(" + std::to_string(r) + ") = " + std::to_string(n) + ", formula gives " +
                        std::to_string(triangular_threshold(r))};
            break;
        }
        const int r_max = report.thresholds.tau.rbegin()->first;
        if (fail)
            claim("claim.tau.triangular", ClaimStatus::falsified, fail->note, fail);
        else
            claim("claim.tau.triangular", ClaimStatus::verified_in_range,
                  "tau(r) = 1 + r(r+1)/2 for every r witnessed (r <= " + std::to_string(r_max) +
                      ")");
    }

    if (!firstfamily_seen)
        claim("claim.firstfamily.staircase", ClaimStatus::skipped,
              "no layer with r >= 2 appears in range");
    else if (firstfamily_fail)
        claim("claim.firstfamily.staircase", ClaimStatus::falsified, firstfamily_fail->note,
              firstfamily_fail);
    else
        claim("claim.firstfamily.staircase", ClaimStatus::verified_in_range,
              "L_r(tau(r)) is exactly the one-cell extension family of the staircase, r+1 members,"
              " for r = 2.." +
                  std::to_string(firstfamily_max_r));

    if (options.n_max < 4)
        claim("claim.L1.antennas", ClaimStatus::skipped, "needs n >= 4");
    else if (antennas_fail)
        claim("claim.L1.antennas", ClaimStatus::falsified, antennas_fail->note, antennas_fail);
    else
        claim("claim.L1.antennas", ClaimStatus::verified_in_range,
              "L_1(n) = {(n), (1^n)} for n = 4.." + std::to_string(options.n_max));

    {
        std::optional<Counterexample> fail;
        int covered_max = 0;
        bool exercised = false;
        for (const auto& [level, first_n] : report.thresholds.tau) {
            const int r = level - 1;
            if (r < 1) continue;
            exercised = true;
            covered_max = std::max(covered_max, r);
            const auto it = report.thresholds.tau_boundary.find(r);
            if (it == report.thresholds.tau_boundary.end()) {
                fail = {first_n, report.thresholds.tau_witness.at(level),
                        "L_" + std::to_string(level) + " appears at n=" + std::to_string(first_n) +
                            " but no " + std::to_string(r) + "-" + std::to_string(level) +
                            " boundary exists in range"};
                break;
            }
            if (it->second != first_n) {
                fail = {it->second, report.thresholds.tau_boundary_witness.at(r),
                        "tau_boundary(" + std::to_string(r) + ") = " + std::to_string(it->second) +
                            " but tau(" + std::to_string(level) + ") = " + std::to_string(first_n)};
                break;
            }
        }
        if (!exercised)
            claim("claim.boundary.tau-eq", ClaimStatus::skipped,
                  "no layer with r >= 2 appears in range");
        else if (fail)
            claim("claim.boundary.tau-eq", ClaimStatus::falsified, fail->note, fail);
        else
            claim("claim.boundary.tau-eq", ClaimStatus::verified_in_range,
                  "tau_boundary(r) = tau(r+1) for r = 1.." + std::to_string(covered_max));
    }

    if (options.n_max < 4)
        claim("claim.framework.lowlayers", ClaimStatus::skipped, "needs n >= 4");
    else if (framework_fail)
        claim("claim.framework.lowlayers", ClaimStatus::falsified, framework_fail->note,
              framework_fail);
    else
        claim("claim.framework.lowlayers", ClaimStatus::verified_in_range,
              "the framework lies in L_1 and L_2 with the expected interface traces for n = 4.." +
                  std::to_string(options.n_max));

    return report;
}

bool any_falsified(const VerificationReport& report) {
    return std::any_of(report.checks.begin(), report.checks.end(),
                       [](const ClaimResult& c) { return c.status == ClaimStatus::falsified; });
}

std::string machine_report(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["range_max"] = report.range_max;
    nlohmann::ordered_json claims;
    for (const ClaimResult& c : report.checks) {
        nlohmann::ordered_json entry;
        entry["status"] = to_string(c.status);
        entry["details"] = c.details;
        if (c.counterexample) {
            entry["counterexample"] = {{"n", *c.counterexample_n},
                                       {"partition", to_text(*c.counterexample)}};
        }
        claims[c.id] = std::move(entry);
    }
    doc["claims"] = std::move(claims);
    return doc.dump(2) + "\n";
}

void print_report(std::ostream& out, const VerificationReport& report) {
    out << "simplex stratification verification, n = 1.." << report.range_max
        << " (cross-check mode)\n\n";

    out << "claims:\n";
    for (const ClaimResult& c : report.checks) {
        out << "  " << c.id;
        for (std::size_t pad = c.id.size(); pad < 30; ++pad) out << ' ';
        out << ' ' << to_string(c.status) << "  " << c.details << '\n';
    }

    out << "\ndelta(n), n = 1.." << report.range_max << ":";
    for (int d : report.delta_sequence) out << ' ' << d;
    out << '\n';

    out << "\nthresholds (formula column is 1 + r(r+1)/2):\n";
    out << "  r  tau  formula  tau_ge  tau_boundary\n";
    for (const auto& [r, n] : report.thresholds.tau) {
        out << "  " << r << "  " << n << "  " << (1 + r * (r + 1) / 2) << "  ";
        const auto ge = report.thresholds.tau_ge.find(r);
        out << (ge == report.thresholds.tau_ge.end() ? std::string("-") : std::to_string(ge->second));
        out << "  ";
        const auto bd = report.thresholds.tau_boundary.find(r);
        out << (bd == report.thresholds.tau_boundary.end() ? std::string("-")
                                                           : std::to_string(bd->second));
        out << '\n';
    }

    if (!report.boundary_stats.empty()) {
        out << "\nboundary connectivity (exploratory, no gated expectations):\n";
        for (const auto& stat : report.boundary_stats)
            out << "  n=" << stat.n << " r=" << stat.r << ": |boundary| = " << stat.size
                << ", components = " << stat.components << '\n';
    }

    if (!report.cache_warnings.empty()) {
        out << "\ncache warnings:\n";
        for (const auto& w : report.cache_warnings) out << "  " << w << '\n';
    }

    out << "\nresult: "
        << (any_falsified(report) ? "at least one claim falsified" : "no claim falsified in range")
        << '\n';
}

}  // namespace strata
