#include "strata/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata {

Region axis(const PartitionGraph& g) {
    Region region{"axis", g.n(), {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (conjugate(g.vertex(v)) == g.vertex(v)) region.members.push_back(v);
    return region;
}

Region framework(const PartitionGraph& g) {
    const int n = g.n();
    if (n < 2)
        throw std::invalid_argument("framework: defined only for n >= 2");
    Region region{"framework", n, {}};
    for (int k = 0; k <= n - 1; ++k) {
        std::vector<int> parts{n - k};
        parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
        region.members.push_back(g.index_of(Partition(std::move(parts))));
    }
    std::sort(region.members.begin(), region.members.end());
    return region;
}

namespace {

void check_same_n(int have, int want, const char* what) {
    if (have != want)
        throw std::invalid_argument(std::string(what) + ": region is for n=" +
                                    std::to_string(want) + " but data is for n=" +
                                    std::to_string(have));
}

std::vector<VertexId> intersect(std::span<const VertexId> a, std::span<const VertexId> b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

std::vector<VertexId> layer_trace(const Stratification& s, const Region& region, int r) {
    check_same_n(s.n, region.n, "layer_trace");
    return intersect(layer(s, r), region.members);
}

std::vector<VertexId> boundary_trace(const BoundarySets& b, const Region& region) {
    check_same_n(b.n, region.n, "boundary_trace");
    return intersect(b.full, region.members);
}

}  // namespace strata
