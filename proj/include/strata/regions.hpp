#pragma once

#include <string>
#include <vector>

#include "strata/partition_graph.hpp"
#include "strata/stratification.hpp"

namespace strata {

/// A named vertex region of G_n. Extensible: further regions only need a
/// name and a member list.
struct Region {
    std::string name;
    int n = 0;
    std::vector<VertexId> members;  // ascending
};

/// The self-conjugate vertices of G_n.
Region axis(const PartitionGraph& g);

/// The boundary framework: the hook partitions (n-k, 1^k), which form the
/// unique path from (n) to (1^n) along the rim of the graph. Requires n >= 2.
Region framework(const PartitionGraph& g);

/// L_r(n) restricted to the region.
std::vector<VertexId> layer_trace(const Stratification& s, const Region& region, int r);

/// The phase boundary restricted to the region.
std::vector<VertexId> boundary_trace(const BoundarySets& b, const Region& region);

}  // namespace strata
