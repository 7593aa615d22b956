#include "strata/stratification.hpp"

#include <algorithm>
#include <cstdlib>

#include "parallel.hpp"
#include "strata/capacity.hpp"
#include "strata/clique.hpp"

namespace strata {

DimMode parse_dim_mode(const std::string& name) {
    if (name == "capacity") return DimMode::capacity;
    if (name == "clique") return DimMode::clique;
    if (name == "cross-check") return DimMode::cross_check;
    throw std::invalid_argument("unknown mode '" + name + "' (capacity | clique | cross-check)");
}

std::string to_string(DimMode mode) {
    switch (mode) {
        case DimMode::capacity: return "capacity";
        case DimMode::clique: return "clique";
        case DimMode::cross_check: return "cross-check";
    }
    std::abort();
}

Stratification derive_stratification(int n, std::vector<int> dims) {
    Stratification s;
    s.n = n;
    s.dims = std::move(dims);
    s.delta = 0;
    for (int d : s.dims) s.delta = std::max(s.delta, d);
    s.layers.assign(static_cast<std::size_t>(s.delta) + 1, {});
    for (VertexId v = 0; v < static_cast<VertexId>(s.dims.size()); ++v)
        s.layers[static_cast<std::size_t>(s.dims[static_cast<std::size_t>(v)])].push_back(v);
    return s;
}

void require_dims_agree(const PartitionGraph& g, std::span<const int> a, std::span<const int> b) {
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a[v] != b[v])
            throw consistency_error(
                "dim_loc disagreement at " + to_text(g.vertex(static_cast<VertexId>(v))) +
                " (n=" + std::to_string(g.n()) + "): capacity says " + std::to_string(a[v]) +
                ", clique search says " + std::to_string(b[v]));
    }
}

namespace {

std::vector<int> dims_by_capacity(const PartitionGraph& g, int jobs) {
    std::vector<int> dims(static_cast<std::size_t>(g.vertex_count()));
    detail::parallel_for(dims.size(), jobs, [&](std::size_t v) {
        dims[v] = dim_loc_capacity(g.vertex(static_cast<VertexId>(v)));
    });
    return dims;
}

std::vector<int> dims_by_clique(const PartitionGraph& g, int jobs) {
    std::vector<int> dims(static_cast<std::size_t>(g.vertex_count()));
    detail::parallel_for(dims.size(), jobs, [&](std::size_t v) {
        dims[v] = dim_loc_clique(static_cast<VertexId>(v), g);
    });
    return dims;
}

}  // namespace

Stratification stratify(const PartitionGraph& g, DimMode mode, int jobs) {
    std::vector<int> dims;
    switch (mode) {
        case DimMode::capacity:
            dims = dims_by_capacity(g, jobs);
            break;
        case DimMode::clique:
            dims = dims_by_clique(g, jobs);
            break;
        case DimMode::cross_check: {
            dims = dims_by_capacity(g, jobs);
            const std::vector<int> check = dims_by_clique(g, jobs);
            require_dims_agree(g, dims, check);
            break;
        }
    }
    return derive_stratification(g.n(), std::move(dims));
}

std::span<const VertexId> layer(const Stratification& s, int r) {
    if (r < 0 || r > s.delta) return {};
    return s.layers[static_cast<std::size_t>(r)];
}

std::vector<VertexId> layer_ge(const Stratification& s, int r) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < static_cast<VertexId>(s.dims.size()); ++v)
        if (s.dims[static_cast<std::size_t>(v)] >= r) out.push_back(v);
    return out;
}

namespace {

void check_same_n(const Stratification& s, const PartitionGraph& g) {
    if (s.n != g.n())
        throw std::invalid_argument("stratification is for n=" + std::to_string(s.n) +
                                    " but graph is G_" + std::to_string(g.n()));
}

}  // namespace

BoundarySets boundaries(const Stratification& s, const PartitionGraph& g, int r) {
    check_same_n(s, g);
    if (r < 0) throw std::invalid_argument("boundaries: r must be >= 0");
    BoundarySets b;
    b.n = s.n;
    b.r = r;
    for (VertexId v : layer(s, r)) {
        for (VertexId w : g.neighbors(v)) {
            if (s.dims[static_cast<std::size_t>(w)] == r + 1) {
                b.lower.push_back(v);
                break;
            }
        }
    }
    for (VertexId v : layer(s, r + 1)) {
        for (VertexId w : g.neighbors(v)) {
            if (s.dims[static_cast<std::size_t>(w)] == r) {
                b.upper.push_back(v);
                break;
            }
        }
    }
    b.full.resize(b.lower.size() + b.upper.size());
    std::merge(b.lower.begin(), b.lower.end(), b.upper.begin(), b.upper.end(), b.full.begin());
    return b;
}

InterfaceGraph interface_graph(const Stratification& s, const PartitionGraph& g, int r) {
    check_same_n(s, g);
    if (r < 0) throw std::invalid_argument("interface_graph: r must be >= 0");
    InterfaceGraph ig;
    ig.n = s.n;
    ig.r = r;
    const auto left = layer(s, r);
    const auto right = layer(s, r + 1);
    ig.left.assign(left.begin(), left.end());
    ig.right.assign(right.begin(), right.end());
    for (VertexId v : ig.left)
        for (VertexId w : g.neighbors(v))
            if (s.dims[static_cast<std::size_t>(w)] == r + 1) ig.edges.emplace_back(v, w);
    return ig;
}

void record_thresholds(ThresholdTable& table, const PartitionGraph& g, const Stratification& s) {
    const int n = g.n();
    for (int r = 0; r <= s.delta; ++r) {
        const auto ids = layer(s, r);
        if (!ids.empty() && !table.tau.count(r)) {
            table.tau.emplace(r, n);
            table.tau_witness.emplace(r, g.vertex(ids.front()));
        }
        if (!table.tau_ge.count(r)) {
            const std::vector<VertexId> ge = layer_ge(s, r);
            table.tau_ge.emplace(r, n);
            table.tau_ge_witness.emplace(r, g.vertex(ge.front()));
        }
    }

    // one edge scan finds every level whose boundary first appears at this n
    std::map<int, VertexId> first_seen;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId w : g.neighbors(u)) {
            if (w <= u) continue;
            const int du = s.dims[static_cast<std::size_t>(u)];
            const int dw = s.dims[static_cast<std::size_t>(w)];
            if (du + 1 != dw && dw + 1 != du) continue;
            const int r = std::min(du, dw);
            if (table.tau_boundary.count(r)) continue;
            const auto [it, fresh] = first_seen.emplace(r, std::min(u, w));
            if (!fresh) it->second = std::min(it->second, std::min(u, w));
        }
    }
    for (const auto& [r, v] : first_seen) {
        table.tau_boundary.emplace(r, n);
        table.tau_boundary_witness.emplace(r, g.vertex(v));
    }
}

ThresholdTable scan_thresholds(int n_max, DimMode mode, int jobs) {
    if (n_max < 1) throw std::invalid_argument("scan_thresholds: n_max must be >= 1");
    ThresholdTable table;
    table.range_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        const PartitionGraph g = build_graph(n, jobs);
        record_thresholds(table, g, stratify(g, mode, jobs));
    }
    return table;
}

}  // namespace strata
