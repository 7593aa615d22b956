#include "strata/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace strata {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty())
        throw std::invalid_argument("Partition: empty part list");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_multiset(std::vector<int> values) {
    std::erase(values, 0);
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

int Partition::row_length(int row) const noexcept {
    if (row < 1 || row > rows()) return 0;
    return parts_[static_cast<std::size_t>(row) - 1];
}

std::strong_ordering Partition::operator<=>(const Partition& other) const noexcept {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    // Same n: larger leading parts come first, so (n) sorts before (1^n).
    // For equal n neither part list is a proper prefix of the other.
    const std::size_t m = std::min(parts_.size(), other.parts_.size());
    for (std::size_t i = 0; i < m; ++i)
        if (auto c = other.parts_[i] <=> parts_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 1)
        throw std::invalid_argument("enumerate_partitions: n must be >= 1");
    std::vector<Partition> out;
    std::vector<int> cur{n};
    for (;;) {
        out.emplace_back(cur);
        // next in reverse-lexicographic order: shrink the rightmost part > 1,
        // then respread the freed units greedily
        int i = static_cast<int>(cur.size()) - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == 1) --i;
        if (i < 0) break;
        int spare = static_cast<int>(cur.size()) - 1 - i + 1;
        const int cap = cur[static_cast<std::size_t>(i)] - 1;
        cur.resize(static_cast<std::size_t>(i) + 1);
        cur[static_cast<std::size_t>(i)] = cap;
        while (spare > 0) {
            const int piece = std::min(spare, cap);
            cur.push_back(piece);
            spare -= piece;
        }
    }
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols(static_cast<std::size_t>(p.parts().front()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
    return Partition(std::move(cols));
}

CornerSets corners(const Partition& p) {
    CornerSets cs;
    const auto& parts = p.parts();
    const int k = p.rows();
    for (int i = 1; i <= k; ++i)
        if (i == k || parts[static_cast<std::size_t>(i) - 1] > parts[static_cast<std::size_t>(i)])
            cs.removable.push_back({i, parts[static_cast<std::size_t>(i) - 1]});
    cs.addable.push_back({1, parts.front() + 1});
    for (int i = 2; i <= k; ++i)
        if (parts[static_cast<std::size_t>(i) - 2] > parts[static_cast<std::size_t>(i) - 1])
            cs.addable.push_back({i, parts[static_cast<std::size_t>(i) - 1] + 1});
    cs.addable.push_back({k + 1, 1});
    return cs;
}

std::optional<Partition> transfer(const Partition& p, Cell c, Cell a) {
    const CornerSets cs = corners(p);
    if (std::find(cs.removable.begin(), cs.removable.end(), c) == cs.removable.end())
        throw std::invalid_argument("transfer: c is not a removable corner of the partition");
    if (std::find(cs.addable.begin(), cs.addable.end(), a) == cs.addable.end())
        throw std::invalid_argument("transfer: a is not an addable corner of the partition");
    if (c.row == a.row) return std::nullopt;  // the row would be left with a hole

    std::vector<int> len = p.parts();
    if (a.row == p.rows() + 1) len.push_back(0);
    len[static_cast<std::size_t>(c.row) - 1] -= 1;
    len[static_cast<std::size_t>(a.row) - 1] += 1;

    // Cells stay where they were placed: the result is a partition only if
    // the rows, unsorted, still form a weakly decreasing positive diagram.
    while (!len.empty() && len.back() == 0) len.pop_back();
    for (std::size_t i = 0; i < len.size(); ++i) {
        if (len[i] < 1) return std::nullopt;
        if (i + 1 < len.size() && len[i] < len[i + 1]) return std::nullopt;
    }
    if (len.empty()) return std::nullopt;

    Partition q(std::move(len));
    if (q == p) return std::nullopt;
    return q;
}

Partition staircase(int r) {
    if (r < 1)
        throw std::invalid_argument("staircase: r must be >= 1");
    std::vector<int> parts(static_cast<std::size_t>(r));
    std::iota(parts.rbegin(), parts.rend(), 1);
    return Partition(std::move(parts));
}

std::vector<Partition> one_cell_extensions(const Partition& p) {
    std::vector<Partition> out;
    for (const Cell& a : corners(p).addable) {
        std::vector<int> len = p.parts();
        if (a.row == p.rows() + 1)
            len.push_back(1);
        else
            len[static_cast<std::size_t>(a.row) - 1] += 1;
        out.emplace_back(std::move(len));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string to_text(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.parts().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.parts()[i]);
    }
    s += ']';
    return s;
}

Partition parse_partition(std::string_view text) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("parse_partition: expected bracketed form like [3,1]");
    std::vector<int> parts;
    std::string_view body = text.substr(1, text.size() - 2);
    while (!body.empty()) {
        const std::size_t comma = body.find(',');
        const std::string_view tok = body.substr(0, comma);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("parse_partition: bad part '" + std::string(tok) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (body.empty())
            throw std::invalid_argument("parse_partition: trailing comma");
    }
    return Partition(std::move(parts));
}

}  // namespace strata
