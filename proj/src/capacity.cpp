#include "strata/capacity.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

CornerCapacity star_capacity(const Partition& p) {
    if (p.n() == 1) return {};
    CornerCapacity out;
    const CornerSets cs = corners(p);
    for (const Cell& c : cs.removable) {
        int count = 0;
        for (const Cell& a : cs.addable)
            if (transfer(p, c, a)) ++count;
        if (!out.witness || count > out.value) {
            out.value = count;
            out.witness = c;
        }
    }
    return out;
}

CornerCapacity top_capacity(const Partition& p) {
    if (p.n() == 1) return {};
    CornerCapacity out;
    const CornerSets cs = corners(p);
    for (const Cell& a : cs.addable) {
        int count = 0;
        for (const Cell& c : cs.removable)
            if (transfer(p, c, a)) ++count;
        if (!out.witness || count > out.value) {
            out.value = count;
            out.witness = a;
        }
    }
    return out;
}

std::vector<Partition> full_star_simplex(const Partition& p, Cell c) {
    const CornerSets cs = corners(p);
    if (std::find(cs.removable.begin(), cs.removable.end(), c) == cs.removable.end())
        throw std::invalid_argument("full_star_simplex: c is not a removable corner");
    std::vector<Partition> out{p};
    for (const Cell& a : cs.addable)
        if (auto q = transfer(p, c, a)) out.push_back(std::move(*q));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> full_top_simplex(const Partition& p, Cell a) {
    const CornerSets cs = corners(p);
    if (std::find(cs.addable.begin(), cs.addable.end(), a) == cs.addable.end())
        throw std::invalid_argument("full_top_simplex: a is not an addable corner");
    std::vector<Partition> out{p};
    for (const Cell& c : cs.removable)
        if (auto q = transfer(p, c, a)) out.push_back(std::move(*q));
    std::sort(out.begin(), out.end());
    return out;
}

int dim_loc_capacity(const Partition& p) {
    if (p.n() == 1) return 0;
    return std::max({1, star_capacity(p).value, top_capacity(p).value});
}

CapacityProfile capacity_profile(const Partition& p) {
    CapacityProfile profile;
    const CornerCapacity s = star_capacity(p);
    const CornerCapacity t = top_capacity(p);
    profile.s = s.value;
    profile.t = t.value;
    profile.star_witness = s.witness;
    profile.top_witness = t.witness;
    profile.dim_loc = p.n() == 1 ? 0 : std::max({1, s.value, t.value});
    return profile;
}

}  // namespace strata
