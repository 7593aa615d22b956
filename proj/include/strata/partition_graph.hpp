#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "strata/partition.hpp"

namespace strata {

using VertexId = std::int32_t;

/// Neighbors of p in G_n computed as the admissible corner transfers
/// p(c -> a), deduplicated and in canonical order.
std::vector<Partition> neighbors_by_corners(const Partition& p);

/// Neighbors of p computed independently from the multiset reading: move one
/// unit between parts (a part may vanish, a new part of 1 may appear),
/// re-sort, and drop p itself. Kept as a second route; the two must agree.
std::vector<Partition> neighbors_by_multiset(const Partition& p);

/* The partition graph G_n: one vertex per partition of n in canonical order,
 * an edge whenever one partition is a single-unit transfer of the other.
 * Immutable after build; safe for concurrent readers. */
class PartitionGraph {
public:
    int n() const noexcept { return n_; }
    VertexId vertex_count() const noexcept { return static_cast<VertexId>(vertices_.size()); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    const Partition& vertex(VertexId v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const std::vector<Partition>& vertices() const noexcept { return vertices_; }

    /// Vertex id of p, or nullopt when p is not a partition of this n.
    std::optional<VertexId> find(const Partition& p) const;
    /// Vertex id of p; throws std::invalid_argument when absent.
    VertexId index_of(const Partition& p) const;

    /// Sorted neighbor ids.
    std::span<const VertexId> neighbors(VertexId v) const {
        return adj_[static_cast<std::size_t>(v)];
    }
    int degree(VertexId v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool adjacent(VertexId u, VertexId v) const;

    friend PartitionGraph build_graph(int n, int jobs);

private:
    PartitionGraph() = default;

    int n_ = 0;
    std::vector<Partition> vertices_;
    std::vector<std::vector<VertexId>> adj_;
    std::size_t edge_count_ = 0;
};

/// Builds G_n. jobs <= 0 picks the hardware concurrency; the result is
/// identical for every job count.
PartitionGraph build_graph(int n, int jobs = 0);

}  // namespace strata
