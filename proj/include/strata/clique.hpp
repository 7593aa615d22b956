#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "strata/partition_graph.hpp"

namespace strata {

/* A small graph with bitset adjacency, sized for neighborhood-scale clique
 * search. Usually the restriction of a PartitionGraph to a sorted set of
 * member ids, but any explicit edge list works (tests use that directly). */
class InducedSubgraph {
public:
    /// Restriction of g to members (sorted, unique vertex ids of g).
    InducedSubgraph(const PartitionGraph& g, std::span<const VertexId> members);

    /// Arbitrary small graph on vertices 0..vertex_count-1.
    InducedSubgraph(int vertex_count, std::span<const std::pair<int, int>> edges);

    int vertex_count() const noexcept { return count_; }
    int words_per_row() const noexcept { return words_; }
    bool adjacent(int i, int j) const;

    /// Adjacency bits of local vertex i, words_per_row() words.
    const std::uint64_t* row(int i) const {
        return bits_.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(words_);
    }

private:
    void add_edge(int i, int j);

    int count_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Exact maximum clique size; 0 for an empty vertex set. Bron-Kerbosch with
/// Tomita pivoting and a |R|+|P| bound cut, iterating vertices in ascending
/// order so runs are reproducible.
int clique_number(const InducedSubgraph& g);

/// Local simplex dimension of p via the clique route: 0 when n = 1,
/// otherwise the clique number of the subgraph induced on N(p). Throws
/// std::invalid_argument when p is not a vertex of g.
int dim_loc_clique(const Partition& p, const PartitionGraph& g);
int dim_loc_clique(VertexId v, const PartitionGraph& g);

}  // namespace strata
