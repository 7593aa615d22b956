#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/* A cell of a Ferrers diagram, 1-based: row 1 is the longest row, column 1
 * is the leftmost cell of a row. */
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/* An integer partition in canonical form: weakly decreasing positive parts.
 * The empty partition is not representable (n >= 1 always). Immutable. */
class Partition {
public:
    /// Requires weakly decreasing positive parts; throws std::invalid_argument.
    explicit Partition(std::vector<int> parts);

    /// Canonicalizes an arbitrary bag of values: drops zeros, sorts descending.
    static Partition from_multiset(std::vector<int> values);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int n() const noexcept { return n_; }
    int rows() const noexcept { return static_cast<int>(parts_.size()); }

    /// Length of the 1-based row; 0 beyond the last row.
    int row_length(int row) const noexcept;

    bool operator==(const Partition& other) const noexcept { return parts_ == other.parts_; }

    /// Canonical order: by n, then the vertex order of G_n ((n) first, (1^n) last).
    std::strong_ordering operator<=>(const Partition& other) const noexcept;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

struct CornerSets {
    std::vector<Cell> removable;  // ascending row
    std::vector<Cell> addable;    // ascending row; always one more entry than removable
};

/// All partitions of n in canonical order, from (n) down to (1^n). The
/// position of a partition in this sequence is its vertex index in G_n.
std::vector<Partition> enumerate_partitions(int n);

/// Transpose of the Ferrers diagram. Involution.
Partition conjugate(const Partition& p);

/// Removable and addable corner cells of the diagram.
CornerSets corners(const Partition& p);

/// Moves one cell from removable corner c to addable corner a. Returns the
/// result, or nullopt when the moved diagram is not a valid partition
/// distinct from p (the transfer is then inadmissible). Throws
/// std::invalid_argument when c or a is not a corner of p.
std::optional<Partition> transfer(const Partition& p, Cell c, Cell a);

/// The staircase (r, r-1, ..., 2, 1) of size r(r+1)/2; requires r >= 1.
Partition staircase(int r);

/// Every partition obtained from p by adding one cell at an addable corner.
/// Sorted in canonical order; size equals the number of addable corners.
std::vector<Partition> one_cell_extensions(const Partition& p);

/// Text form used in all file outputs and CLI arguments: "[4,3,2,1]".
std::string to_text(const Partition& p);
Partition parse_partition(std::string_view text);

}  // namespace strata
