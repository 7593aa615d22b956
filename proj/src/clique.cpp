#include "strata/clique.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace strata {

namespace {

int popcount_words(const std::uint64_t* a, int words) {
    int total = 0;
    for (int w = 0; w < words; ++w) total += std::popcount(a[w]);
    return total;
}

int popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
    int total = 0;
    for (int w = 0; w < words; ++w) total += std::popcount(a[w] & b[w]);
    return total;
}

bool any_bit(const std::uint64_t* a, int words) {
    for (int w = 0; w < words; ++w)
        if (a[w]) return true;
    return false;
}

template <typename Fn>
void for_each_bit(const std::uint64_t* a, int words, Fn&& fn) {
    for (int w = 0; w < words; ++w) {
        std::uint64_t bits = a[w];
        while (bits) {
            const int b = std::countr_zero(bits);
            fn(w * 64 + b);
            bits &= bits - 1;
        }
    }
}

struct MaxCliqueSearch {
    const InducedSubgraph& g;
    int words;
    int best = 0;

    void expand(int clique_size, std::vector<std::uint64_t> cand, std::vector<std::uint64_t> seen) {
        const int cand_count = popcount_words(cand.data(), words);
        if (cand_count == 0) {
            if (!any_bit(seen.data(), words)) best = std::max(best, clique_size);
            return;
        }
        if (clique_size + cand_count <= best) return;

        // pivot: the vertex of cand|seen covering the most candidates
        int pivot = -1, coverage = -1;
        const auto consider = [&](int u) {
            const int c = popcount_and(cand.data(), g.row(u), words);
            if (c > coverage) {
                coverage = c;
                pivot = u;
            }
        };
        for_each_bit(cand.data(), words, consider);
        for_each_bit(seen.data(), words, consider);

        std::vector<std::uint64_t> branch(static_cast<std::size_t>(words));
        for (int w = 0; w < words; ++w) branch[static_cast<std::size_t>(w)] = cand[static_cast<std::size_t>(w)] & ~g.row(pivot)[w];

        std::vector<int> order;
        for_each_bit(branch.data(), words, [&](int v) { order.push_back(v); });
        for (int v : order) {
            std::vector<std::uint64_t> next_cand(static_cast<std::size_t>(words));
            std::vector<std::uint64_t> next_seen(static_cast<std::size_t>(words));
            for (int w = 0; w < words; ++w) {
                next_cand[static_cast<std::size_t>(w)] = cand[static_cast<std::size_t>(w)] & g.row(v)[w];
                next_seen[static_cast<std::size_t>(w)] = seen[static_cast<std::size_t>(w)] & g.row(v)[w];
            }
            expand(clique_size + 1, std::move(next_cand), std::move(next_seen));
            cand[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
            seen[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
        }
    }
};

}  // namespace

InducedSubgraph::InducedSubgraph(const PartitionGraph& g, std::span<const VertexId> members)
    : count_(static_cast<int>(members.size())), words_((count_ + 63) / 64) {
    bits_.assign(static_cast<std::size_t>(count_) * static_cast<std::size_t>(words_), 0);
    for (int i = 0; i < count_; ++i) {
        for (VertexId w : g.neighbors(members[static_cast<std::size_t>(i)])) {
            const auto it = std::lower_bound(members.begin(), members.end(), w);
            if (it != members.end() && *it == w)
                add_edge(i, static_cast<int>(it - members.begin()));
        }
    }
}

InducedSubgraph::InducedSubgraph(int vertex_count, std::span<const std::pair<int, int>> edges)
    : count_(vertex_count), words_((count_ + 63) / 64) {
    bits_.assign(static_cast<std::size_t>(count_) * static_cast<std::size_t>(words_), 0);
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        add_edge(u, v);
        add_edge(v, u);
    }
}

void InducedSubgraph::add_edge(int i, int j) {
    bits_[static_cast<std::size_t>(i) * static_cast<std::size_t>(words_) +
          static_cast<std::size_t>(j >> 6)] |= std::uint64_t{1} << (j & 63);
}

bool InducedSubgraph::adjacent(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1;
}

int clique_number(const InducedSubgraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    const int words = g.words_per_row();
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(words), 0);
    for (int i = 0; i < n; ++i)
        cand[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63);
    MaxCliqueSearch search{g, words};
    search.expand(0, std::move(cand), std::vector<std::uint64_t>(static_cast<std::size_t>(words), 0));
    return search.best;
}

int dim_loc_clique(VertexId v, const PartitionGraph& g) {
    if (g.n() == 1) return 0;
    const auto nb = g.neighbors(v);
    return clique_number(InducedSubgraph(g, nb));
}

int dim_loc_clique(const Partition& p, const PartitionGraph& g) {
    return dim_loc_clique(g.index_of(p), g);
}

}  // namespace strata
