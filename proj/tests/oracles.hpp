#pragma once

// Independent reference implementations used only by the tests. Everything
// here deliberately avoids the library's own code paths: partition counts
// come from the pentagonal-number recurrence, enumeration from a direct
// recursive generator, corners and transfers from explicit cell-set surgery,
// and clique numbers from subset search.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "strata/clique.hpp"
#include "strata/partition.hpp"

namespace oracles {

/// p(n) by the pentagonal-number recurrence.
long long partition_count(int n);

/// All partitions of n in reverse-lexicographic order, generated recursively.
std::vector<std::vector<int>> enumerate_brute(int n);

using CellSet = std::set<std::pair<int, int>>;  // (row, col), 1-based

CellSet cells_of(const strata::Partition& p);

/// True when the cell set is a left-justified diagram with weakly
/// decreasing row lengths and no gaps.
bool is_valid_diagram(const CellSet& cells);

std::vector<strata::Cell> removable_brute(const strata::Partition& p);
std::vector<strata::Cell> addable_brute(const strata::Partition& p);

/// Cell-set reading of the transfer: move the cell, then accept the result
/// only if it is a valid diagram different from p.
std::optional<strata::Partition> transfer_brute(const strata::Partition& p, strata::Cell c,
                                                strata::Cell a);

/// Maximum clique by subset enumeration; vertex_count <= 20.
int naive_max_clique(const strata::InducedSubgraph& g);

}  // namespace oracles
