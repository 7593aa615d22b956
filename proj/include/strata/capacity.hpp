#pragma once

#include <optional>
#include <vector>

#include "strata/partition.hpp"

namespace strata {

/// A corner capacity together with a corner attaining it (smallest row wins
/// ties). The witness is absent only for n = 1, where both capacities are 0.
struct CornerCapacity {
    int value = 0;
    std::optional<Cell> witness;
};

/// Per-vertex capacity data: the star capacity s, the top capacity t, and the
/// local simplex dimension they determine.
struct CapacityProfile {
    int s = 0;
    int t = 0;
    int dim_loc = 0;
    std::optional<Cell> star_witness;
    std::optional<Cell> top_witness;
};

/// Star capacity: the largest number of admissible transfers sharing one
/// removable corner.
CornerCapacity star_capacity(const Partition& p);

/// Top capacity: the largest number of admissible transfers sharing one
/// addable corner.
CornerCapacity top_capacity(const Partition& p);

/// {p} together with every admissible p(c -> a) for the fixed removable
/// corner c; always a clique of G_n. Throws std::invalid_argument when c is
/// not removable. Sorted canonically.
std::vector<Partition> full_star_simplex(const Partition& p, Cell c);

/// {p} together with every admissible p(c -> a) for the fixed addable corner
/// a; always a clique of G_n. Throws std::invalid_argument when a is not
/// addable. Sorted canonically.
std::vector<Partition> full_top_simplex(const Partition& p, Cell a);

/// Local simplex dimension in closed form: 0 when n = 1, else max(1, s, t).
int dim_loc_capacity(const Partition& p);

CapacityProfile capacity_profile(const Partition& p);

}  // namespace strata
