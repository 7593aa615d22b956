#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace oracles {

long long partition_count(int n) {
    if (n < 0) return 0;
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p[static_cast<std::size_t>(n)];
}

namespace {

void extend(std::vector<std::vector<int>>& out, std::vector<int>& prefix, int remaining, int cap) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int first = std::min(remaining, cap); first >= 1; --first) {
        prefix.push_back(first);
        extend(out, prefix, remaining - first, first);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_brute(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    extend(out, prefix, n, n);
    return out;
}

CellSet cells_of(const strata::Partition& p) {
    CellSet cells;
    for (int i = 1; i <= p.rows(); ++i)
        for (int j = 1; j <= p.row_length(i); ++j) cells.emplace(i, j);
    return cells;
}

bool is_valid_diagram(const CellSet& cells) {
    if (cells.empty()) return false;
    int max_row = 0;
    for (const auto& [row, col] : cells) max_row = std::max(max_row, row);
    std::vector<int> len(static_cast<std::size_t>(max_row) + 1, 0);
    for (const auto& [row, col] : cells) ++len[static_cast<std::size_t>(row)];
    for (int i = 1; i <= max_row; ++i) {
        const int li = len[static_cast<std::size_t>(i)];
        if (li == 0) return false;
        if (i > 1 && len[static_cast<std::size_t>(i) - 1] < li) return false;
        for (int j = 1; j <= li; ++j)
            if (!cells.count({i, j})) return false;  // gap inside the row
    }
    return true;
}

std::vector<strata::Cell> removable_brute(const strata::Partition& p) {
    std::vector<strata::Cell> out;
    const CellSet cells = cells_of(p);
    for (const auto& [row, col] : cells) {
        CellSet fewer = cells;
        fewer.erase({row, col});
        if (fewer.empty() || is_valid_diagram(fewer)) out.push_back({row, col});
    }
    return out;
}

std::vector<strata::Cell> addable_brute(const strata::Partition& p) {
    std::vector<strata::Cell> out;
    const CellSet cells = cells_of(p);
    for (int row = 1; row <= p.rows() + 1; ++row) {
        for (int col = 1; col <= p.parts().front() + 1; ++col) {
            if (cells.count({row, col})) continue;
            CellSet more = cells;
            more.emplace(row, col);
            if (is_valid_diagram(more)) out.push_back({row, col});
        }
    }
    return out;
}

std::optional<strata::Partition> transfer_brute(const strata::Partition& p, strata::Cell c,
                                                strata::Cell a) {
    CellSet cells = cells_of(p);
    cells.erase({c.row, c.col});
    cells.emplace(a.row, a.col);
    if (!is_valid_diagram(cells)) return std::nullopt;
    int max_row = 0;
    for (const auto& [row, col] : cells) max_row = std::max(max_row, row);
    std::vector<int> len(static_cast<std::size_t>(max_row), 0);
    for (const auto& [row, col] : cells) ++len[static_cast<std::size_t>(row) - 1];
    strata::Partition q(std::move(len));
    if (q == p) return std::nullopt;
    return q;
}

int naive_max_clique(const strata::InducedSubgraph& g) {
    const int n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("naive_max_clique: graph too large");
    int best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        const int size = std::popcount(mask);
        if (size <= best) continue;
        bool clique = true;
        for (int i = 0; i < n && clique; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = i + 1; j < n && clique; ++j)
                if ((mask >> j & 1) && !g.adjacent(i, j)) clique = false;
        }
        if (clique) best = size;
    }
    return best;
}

}  // namespace oracles
