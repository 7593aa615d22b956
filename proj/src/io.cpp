#include "strata/io.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace strata {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown format '" + name + "' (csv | json)");
}

void write_table(std::ostream& out, OutputFormat format, const Table& table) {
    if (format == OutputFormat::csv) {
        for (std::size_t i = 0; i < table.columns.size(); ++i) {
            if (i) out << ',';
            out << table.columns[i];
        }
        out << '\n';
        for (const auto& row : table.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out << ',';
                if (const int* v = std::get_if<int>(&row[i]))
                    out << *v;
                else
                    out << std::get<std::string>(row[i]);
            }
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (const int* v = std::get_if<int>(&row[i]))
                obj[table.columns[i]] = *v;
            else
                obj[table.columns[i]] = std::get<std::string>(row[i]);
        }
        doc.push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

void write_edge_list(std::ostream& out, const PartitionGraph& g) {
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (u < v) out << to_text(g.vertex(u)) << '\t' << to_text(g.vertex(v)) << '\n';
}

Table layers_table(const PartitionGraph& g, const Stratification& s,
                   std::span<const CapacityProfile> profiles) {
    Table t;
    t.columns = {"n", "partition", "dim_loc", "s", "t"};
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& profile = profiles[static_cast<std::size_t>(v)];
        t.rows.push_back({s.n, to_text(g.vertex(v)), s.dims[static_cast<std::size_t>(v)],
                          profile.s, profile.t});
    }
    return t;
}

Table layer_sizes_table(const Stratification& s) {
    Table t;
    t.columns = {"n", "r", "size"};
    for (int r = 0; r <= s.delta; ++r) {
        const auto ids = layer(s, r);
        if (!ids.empty()) t.rows.push_back({s.n, r, static_cast<int>(ids.size())});
    }
    return t;
}

Table thresholds_table(const ThresholdTable& table) {
    Table t;
    t.columns = {"kind", "r", "n", "witness"};
    const auto emit = [&](const char* kind, const std::map<int, int>& first,
                          const std::map<int, Partition>& witness) {
        for (const auto& [r, n] : first)
            t.rows.push_back({std::string(kind), r, n, to_text(witness.at(r))});
    };
    emit("tau", table.tau, table.tau_witness);
    emit("tau_ge", table.tau_ge, table.tau_ge_witness);
    emit("tau_boundary", table.tau_boundary, table.tau_boundary_witness);
    return t;
}

Table boundaries_table(const PartitionGraph& g, const BoundarySets& b) {
    Table t;
    t.columns = {"n", "r", "side", "partition"};
    for (VertexId v : b.lower)
        t.rows.push_back({b.n, b.r, std::string("lower"), to_text(g.vertex(v))});
    for (VertexId v : b.upper)
        t.rows.push_back({b.n, b.r, std::string("upper"), to_text(g.vertex(v))});
    return t;
}

Table interface_edges_table(const PartitionGraph& g, const InterfaceGraph& ig) {
    Table t;
    t.columns = {"n", "r", "left", "right"};
    for (const auto& [u, v] : ig.edges)
        t.rows.push_back({ig.n, ig.r, to_text(g.vertex(u)), to_text(g.vertex(v))});
    return t;
}

Table traces_table(const PartitionGraph& g, std::span<const TraceRow> rows) {
    Table t;
    t.columns = {"n", "region", "kind", "r", "partition"};
    for (const TraceRow& row : rows)
        t.rows.push_back({g.n(), row.region, row.kind, row.r, to_text(g.vertex(row.vertex))});
    return t;
}

}  // namespace strata
