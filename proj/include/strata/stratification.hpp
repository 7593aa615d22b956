#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "strata/partition.hpp"
#include "strata/partition_graph.hpp"

namespace strata {

/// How per-vertex local simplex dimensions are computed.
enum class DimMode {
    capacity,     // closed form max(1, s, t); the fast default
    clique,       // clique number of the induced neighborhood subgraph
    cross_check,  // both, failing loudly on any disagreement
};

DimMode parse_dim_mode(const std::string& name);  // "capacity" | "clique" | "cross-check"
std::string to_string(DimMode mode);

/// Thrown when the two dim_loc routes disagree; the message names the
/// offending partition.
class consistency_error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* The simplex stratification of G_n: per-vertex local simplex dimension,
 * the layers L_r(n) it induces, and their maximum delta. */
struct Stratification {
    int n = 0;
    std::vector<int> dims;                   // by vertex id
    std::vector<std::vector<VertexId>> layers;  // index r = 0..delta, ids ascending
    int delta = 0;
};

/// Layers and delta derived from a dims vector (used by stratify and when
/// reloading cached dims).
Stratification derive_stratification(int n, std::vector<int> dims);

/// Throws consistency_error naming the first vertex where a != b.
void require_dims_agree(const PartitionGraph& g, std::span<const int> a, std::span<const int> b);

Stratification stratify(const PartitionGraph& g, DimMode mode = DimMode::capacity, int jobs = 0);

/// L_r(n) as vertex ids; empty for r outside 0..delta.
std::span<const VertexId> layer(const Stratification& s, int r);

/// L_{>=r}(n): ids of every vertex with dim_loc >= r.
std::vector<VertexId> layer_ge(const Stratification& s, int r);

/* The two one-sided halves of the phase boundary between L_r and L_{r+1}:
 * lower holds the L_r vertices with a neighbor one layer up, upper the
 * L_{r+1} vertices with a neighbor one layer down; full is their disjoint
 * union. */
struct BoundarySets {
    int n = 0;
    int r = 0;
    std::vector<VertexId> lower;
    std::vector<VertexId> upper;
    std::vector<VertexId> full;
};

BoundarySets boundaries(const Stratification& s, const PartitionGraph& g, int r);

/// The bipartite graph of cross edges between L_r and L_{r+1}.
struct InterfaceGraph {
    int n = 0;
    int r = 0;
    std::vector<VertexId> left;   // L_r
    std::vector<VertexId> right;  // L_{r+1}
    std::vector<std::pair<VertexId, VertexId>> edges;  // (left vertex, right vertex)
};

InterfaceGraph interface_graph(const Stratification& s, const PartitionGraph& g, int r);

/* First-occurrence table over a scanned range: tau(r) for layers, tau_ge(r)
 * for the cumulative layers, tau_boundary(r) for phase boundaries. Levels
 * never witnessed in range are simply absent. Witnesses are the smallest
 * canonical vertex at the first occurrence. */
struct ThresholdTable {
    int range_max = 0;
    std::map<int, int> tau;
    std::map<int, int> tau_ge;
    std::map<int, int> tau_boundary;
    std::map<int, Partition> tau_witness;
    std::map<int, Partition> tau_ge_witness;
    std::map<int, Partition> tau_boundary_witness;
};

ThresholdTable scan_thresholds(int n_max, DimMode mode = DimMode::capacity, int jobs = 0);

/// Folds one stratified graph into a table being built by an ascending scan
/// over n; scan_thresholds is this in a loop.
void record_thresholds(ThresholdTable& table, const PartitionGraph& g, const Stratification& s);

}  // namespace strata
