#include "strata/partition_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "parallel.hpp"

namespace strata {

std::vector<Partition> neighbors_by_corners(const Partition& p) {
    std::vector<Partition> out;
    const CornerSets cs = corners(p);
    for (const Cell& c : cs.removable)
        for (const Cell& a : cs.addable)
            if (auto q = transfer(p, c, a)) out.push_back(std::move(*q));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Partition> neighbors_by_multiset(const Partition& p) {
    std::vector<Partition> out;
    const auto& parts = p.parts();
    const int k = p.rows();
    for (int src = 0; src < k; ++src) {
        for (int dst = 0; dst <= k; ++dst) {  // dst == k: start a new part of 1
            if (dst == src) continue;
            std::vector<int> bag = parts;
            bag[static_cast<std::size_t>(src)] -= 1;
            if (dst == k)
                bag.push_back(1);
            else
                bag[static_cast<std::size_t>(dst)] += 1;
            Partition q = Partition::from_multiset(std::move(bag));
            if (!(q == p)) out.push_back(std::move(q));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<VertexId> PartitionGraph::find(const Partition& p) const {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it == vertices_.end() || !(*it == p)) return std::nullopt;
    return static_cast<VertexId>(it - vertices_.begin());
}

VertexId PartitionGraph::index_of(const Partition& p) const {
    if (auto v = find(p)) return *v;
    throw std::invalid_argument("PartitionGraph: " + to_text(p) + " is not a vertex of G_" +
                                std::to_string(n_));
}

bool PartitionGraph::adjacent(VertexId u, VertexId v) const {
    const auto& row = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(row.begin(), row.end(), v);
}

PartitionGraph build_graph(int n, int jobs) {
    PartitionGraph g;
    g.n_ = n;
    g.vertices_ = enumerate_partitions(n);  // rejects n < 1
    const std::size_t count = g.vertices_.size();
    g.adj_.resize(count);

    detail::parallel_for(count, jobs, [&](std::size_t v) {
        auto& row = g.adj_[v];
        for (const Partition& q : neighbors_by_corners(g.vertices_[v])) {
            const auto it = std::lower_bound(g.vertices_.begin(), g.vertices_.end(), q);
            row.push_back(static_cast<VertexId>(it - g.vertices_.begin()));
        }
        // neighbors arrive in canonical order, which is id order
    });

    std::size_t degree_sum = 0;
    for (const auto& row : g.adj_) degree_sum += row.size();
    g.edge_count_ = degree_sum / 2;
    return g;
}

}  // namespace strata
