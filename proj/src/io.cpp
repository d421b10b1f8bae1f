#include "kcut/io.hpp"

#include "kcut/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace kcut {

namespace {

struct RawEdge {
    long long u, v, w;
};

void check_edge(long long u, long long v, long long w, long long n, long lineno) {
    if (w < 0) throw NegativeWeightError("negative weight at line " + std::to_string(lineno));
    if (u == v) throw SelfLoopError("self-loop at line " + std::to_string(lineno));
    if (u < 0 || v < 0 || (n >= 0 && (u >= n || v >= n)))
        throw ParseError(lineno, "vertex id out of range");
}

}  // namespace

WeightedGraph parse_graph(std::istream& in, GraphFormat format) {
    std::vector<RawEdge> raw;
    long long n = -1;
    bool dimacs = format == GraphFormat::dimacs;
    bool decided = format != GraphFormat::autodetect;
    long long max_id = -1;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#' || tok == "c") continue;
        if (tok == "p") {
            if (decided && !dimacs) throw ParseError(lineno, "unexpected 'p' header in edge list");
            dimacs = true;
            decided = true;
            long long m = 0;
            if (!(ls >> n >> m) || n < 0) throw ParseError(lineno, "bad 'p <n> <m>' header");
            continue;
        }
        if (tok == "e") {
            if (decided && !dimacs) throw ParseError(lineno, "unexpected 'e' line in edge list");
            if (!dimacs || n < 0) throw ParseError(lineno, "'e' line before 'p' header");
            decided = true;
            long long u, v, w;
            if (!(ls >> u >> v >> w)) throw ParseError(lineno, "expected 'e u v w'");
            check_edge(u - 1, v - 1, w, n, lineno);  // 1-based ids
            raw.push_back({u - 1, v - 1, w});
            continue;
        }
        if (decided && dimacs) throw ParseError(lineno, "expected 'e u v w'");
        decided = true;
        dimacs = false;
        long long u, v, w;
        std::istringstream el(line);
        if (!(el >> u >> v >> w)) throw ParseError(lineno, "expected 'u v w'");
        check_edge(u, v, w, -1, lineno);
        max_id = std::max({max_id, u, v});
        raw.push_back({u, v, w});
    }
    if (!dimacs) n = max_id + 1;
    if (n < 0) n = 0;
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& e : raw)
        edges.push_back({static_cast<VertexId>(e.u), static_cast<VertexId>(e.v),
                         static_cast<Weight>(e.w)});
    return WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
}

WeightedGraph parse_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return parse_graph(in, format);
}

void write_graph_edgelist(std::ostream& out, const WeightedGraph& g) {
    out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

void write_partitions_text(std::ostream& out, Weight weight, const PartitionSet& parts) {
    out << "optimum weight: " << weight << "\n";
    out << "minimum k-cuts: " << parts.size() << "\n";
    for (const auto& p : parts) out << "  { " << p.to_string() << " }\n";
}

std::string partitions_json(Weight weight, const PartitionSet& parts) {
    nlohmann::json j;
    j["weight"] = weight;
    j["count"] = parts.size();
    auto& arr = j["partitions"] = nlohmann::json::array();
    for (const auto& p : parts) {
        nlohmann::json jp = nlohmann::json::array();
        for (const auto& part : p.parts()) {
            nlohmann::json jpart = nlohmann::json::array();
            for (auto v : part.elements()) jpart.push_back(v);
            jp.push_back(std::move(jpart));
        }
        arr.push_back(std::move(jp));
    }
    return j.dump(2);
}

}  // namespace kcut
