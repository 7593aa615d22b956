#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "strata/capacity.hpp"
#include "strata/partition_graph.hpp"
#include "strata/regions.hpp"
#include "strata/stratification.hpp"

namespace strata {

enum class OutputFormat { csv, json };

OutputFormat parse_output_format(const std::string& name);  // "csv" | "json"

/// A rectangular table with a fixed header; the one shape every tabular
/// output takes, so the CSV and JSON forms always mirror each other.
struct Table {
    using Value = std::variant<int, std::string>;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;
};

void write_table(std::ostream& out, OutputFormat format, const Table& table);

/// Edge list of G_n, one edge per line as "[lambda]\t[mu]" with the
/// canonically earlier endpoint first, lines in canonical order.
void write_edge_list(std::ostream& out, const PartitionGraph& g);

// columns: n,partition,dim_loc,s,t — one row per vertex
Table layers_table(const PartitionGraph& g, const Stratification& s,
                   std::span<const CapacityProfile> profiles);

// columns: n,r,size — one row per nonempty layer
Table layer_sizes_table(const Stratification& s);

// columns: kind,r,n,witness with kind in {tau, tau_ge, tau_boundary}
Table thresholds_table(const ThresholdTable& t);

// columns: n,r,side,partition with side in {lower, upper}
Table boundaries_table(const PartitionGraph& g, const BoundarySets& b);

// columns: n,r,left,right — the cross edges
Table interface_edges_table(const PartitionGraph& g, const InterfaceGraph& ig);

struct TraceRow {
    std::string region;
    std::string kind;  // "layer" or "boundary"
    int r = 0;
    VertexId vertex = 0;
};

// columns: n,region,kind,r,partition
Table traces_table(const PartitionGraph& g, std::span<const TraceRow> rows);

}  // namespace strata
