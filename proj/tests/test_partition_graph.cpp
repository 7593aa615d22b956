#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "oracles.hpp"
#include "strata/partition_graph.hpp"

using strata::Partition;
using strata::PartitionGraph;
using strata::VertexId;

namespace {

Partition parts(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<Partition> neighbor_partitions(const PartitionGraph& g, const Partition& p) {
    std::vector<Partition> out;
    for (VertexId v : g.neighbors(g.index_of(p))) out.push_back(g.vertex(v));
    return out;
}

}  // namespace

TEST_CASE("neighbors_by_corners on known vertices") {
    CHECK(strata::neighbors_by_corners(parts({4})) == std::vector<Partition>{parts({3, 1})});
    CHECK(strata::neighbors_by_corners(parts({2, 2})) ==
          std::vector<Partition>{parts({3, 1}), parts({2, 1, 1})});
    CHECK(strata::neighbors_by_corners(parts({1})).empty());
}

TEST_CASE("neighbors_by_multiset on known vertices") {
    CHECK(strata::neighbors_by_multiset(parts({3, 1})) ==
          std::vector<Partition>{parts({4}), parts({2, 2}), parts({2, 1, 1})});
    CHECK(strata::neighbors_by_multiset(parts({2, 1, 1})) ==
          std::vector<Partition>{parts({3, 1}), parts({2, 2}), parts({1, 1, 1, 1})});
    CHECK(strata::neighbors_by_multiset(parts({2})) == std::vector<Partition>{parts({1, 1})});
}

TEST_CASE("the two adjacency definitions coincide") {
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : strata::enumerate_partitions(n))
            CHECK(strata::neighbors_by_corners(p) == strata::neighbors_by_multiset(p));
}

TEST_CASE("build_graph on small n") {
    const PartitionGraph g3 = strata::build_graph(3);
    CHECK(g3.vertex_count() == 3);
    CHECK(g3.edge_count() == 2);
    CHECK(g3.adjacent(g3.index_of(parts({3})), g3.index_of(parts({2, 1}))));
    CHECK(g3.adjacent(g3.index_of(parts({2, 1})), g3.index_of(parts({1, 1, 1}))));
    CHECK_FALSE(g3.adjacent(g3.index_of(parts({3})), g3.index_of(parts({1, 1, 1}))));

    const PartitionGraph g4 = strata::build_graph(4);
    CHECK(g4.vertex_count() == 5);
    CHECK(g4.edge_count() == 5);
    // exactly one triangle: {(3,1), (2,2), (2,1,1)}
    int triangles = 0;
    for (VertexId u = 0; u < g4.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g4.vertex_count(); ++v)
            for (VertexId w = v + 1; w < g4.vertex_count(); ++w)
                if (g4.adjacent(u, v) && g4.adjacent(v, w) && g4.adjacent(u, w)) ++triangles;
    CHECK(triangles == 1);
    CHECK(g4.adjacent(g4.index_of(parts({3, 1})), g4.index_of(parts({2, 2}))));
    CHECK(g4.adjacent(g4.index_of(parts({2, 2})), g4.index_of(parts({2, 1, 1}))));
    CHECK(g4.adjacent(g4.index_of(parts({3, 1})), g4.index_of(parts({2, 1, 1}))));

    const PartitionGraph g1 = strata::build_graph(1);
    CHECK(g1.vertex_count() == 1);
    CHECK(g1.edge_count() == 0);

    CHECK_THROWS_AS(strata::build_graph(0), std::invalid_argument);
}

TEST_CASE("vertex lookup") {
    const PartitionGraph g = strata::build_graph(6);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.index_of(g.vertex(v)) == v);
    CHECK_FALSE(g.find(parts({7})).has_value());
    CHECK_THROWS_AS(g.index_of(parts({4, 3})), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric, irreflexive, and conjugation-equivariant") {
    for (int n = 1; n <= 12; ++n) {
        const PartitionGraph g = strata::build_graph(n);
        CHECK(static_cast<long long>(g.vertex_count()) == oracles::partition_count(n));
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const auto nb = g.neighbors(u);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            CHECK_FALSE(g.adjacent(u, u));
            for (VertexId v : nb) CHECK(g.adjacent(v, u));
        }
        for (VertexId u = 0; u < g.vertex_count(); ++u) {
            const VertexId cu = g.index_of(strata::conjugate(g.vertex(u)));
            for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
                const VertexId cv = g.index_of(strata::conjugate(g.vertex(v)));
                CHECK(g.adjacent(u, v) == g.adjacent(cu, cv));
            }
        }
    }
}

TEST_CASE("degrees: no isolated vertex for n >= 2, antennas have degree one") {
    for (int n = 2; n <= 15; ++n) {
        const PartitionGraph g = strata::build_graph(n);
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) >= 1);
        if (n >= 3) {
            CHECK(g.degree(g.index_of(parts({n}))) == 1);
            CHECK(g.degree(g.index_of(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)))) == 1);
        }
    }
}

TEST_CASE("neighbors through the graph match the free function") {
    const PartitionGraph g = strata::build_graph(8);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        CHECK(neighbor_partitions(g, g.vertex(v)) == strata::neighbors_by_corners(g.vertex(v)));
}

TEST_CASE("parallel build is schedule-independent") {
    const PartitionGraph serial = strata::build_graph(14, 1);
    const PartitionGraph parallel = strata::build_graph(14, 4);
    REQUIRE(serial.vertex_count() == parallel.vertex_count());
    for (VertexId v = 0; v < serial.vertex_count(); ++v) {
        CHECK(serial.vertex(v) == parallel.vertex(v));
        const auto a = serial.neighbors(v);
        const auto b = parallel.neighbors(v);
        CHECK(std::vector<VertexId>(a.begin(), a.end()) ==
              std::vector<VertexId>(b.begin(), b.end()));
    }
}
