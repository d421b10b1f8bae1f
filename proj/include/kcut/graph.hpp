#pragma once

#include "kcut/errors.hpp"
#include "kcut/vertex_set.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace kcut {

using Weight = std::uint64_t;
using VertexId = std::uint32_t;

struct Edge {
    VertexId u, v;  // u < v after canonicalization
    Weight w;
};

/// Weighted multigraph in merged canonical form: at most one edge per
/// unordered pair (parallel edges summed at construction), no self-loops,
/// edges sorted by (u, v). Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() : n_(0), total_(0) {}
    /// Merges parallel edges, sorts, checks the 64-bit total-weight invariant.
    /// Self-loops are an error here; contraction drops the ones it creates
    /// before this constructor runs.
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    Weight total_weight() const { return total_; }

    /// Index into edges() for pair {u,v}, or npos.
    std::size_t find_edge(VertexId u, VertexId v) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t component_count() const;
    std::vector<VertexId> component_labels() const;
    bool connected() const { return n_ <= 1 || component_count() == 1; }

private:
    std::size_t n_;
    std::vector<Edge> edges_;
    Weight total_;
};

/// Acyclic edge subset of some graph on the same vertex universe.
/// kappa() is the number of connected components counting isolated vertices.
class Forest {
public:
    Forest() : n_(0) {}
    Forest(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t kappa() const { return n_ - edges_.size(); }

    /// Component label per vertex after deleting the forest edges whose index
    /// is listed in `deleted` (sorted or not). Labels are 0..pieces-1 in order
    /// of first appearance.
    std::vector<VertexId> piece_labels(const std::vector<std::size_t>& deleted_edges) const;

private:
    std::size_t n_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
};

/// Disjoint nonempty vertex sets covering the universe, in canonical order
/// (sorted by minimum contained vertex id).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<VertexSet> parts);

    const std::vector<VertexSet>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }

    /// Throws OverlappingParts / IncompleteCover when not a partition of [n].
    void validate(std::size_t n) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const;

    std::string to_string() const;

private:
    std::vector<VertexSet> parts_;
};

// ---- core operations ----

/// Total weight of edges with exactly one endpoint in s.
Weight boundary_weight(const WeightedGraph& g, const VertexSet& s);

/// Total weight of edges whose endpoints lie in different parts, each edge
/// counted once. Validates that p partitions V(g).
Weight partition_weight(const WeightedGraph& g, const Partition& p);

/// Contract edge #edge_index: endpoints merge into one supernode, parallel
/// edges sum, self-loops vanish. `mapping[v]` gives the set of original
/// vertices absorbed into current vertex v and is updated alongside.
/// The merged supernode keeps the smaller endpoint's slot; the last vertex is
/// swapped into the larger endpoint's slot (order of untouched ids preserved
/// up to that single swap).
std::pair<WeightedGraph, std::vector<VertexSet>> contract_edge(const WeightedGraph& g,
                                                               std::size_t edge_index,
                                                               std::vector<VertexSet> mapping);

/// Order-preserving old->new vertex index map after deleting `a`;
/// entries for deleted vertices are npos.
std::vector<std::size_t> compaction_map(std::size_t n, const VertexSet& a);

/// Induced subgraph on V - a. Throws FullDeletion when a == V.
WeightedGraph delete_vertices(const WeightedGraph& g, const VertexSet& a);

/// Induced forest on V - a, reindexed with the same compaction_map rule as
/// delete_vertices so graph and forest stay aligned.
Forest forest_restrict(const Forest& f, const VertexSet& a);

/// Number of forest edges with exactly one endpoint in a.
std::size_t forest_crossing(const Forest& f, const VertexSet& a);

/// Forest edges cut by a partition (exactly one endpoint's part differs).
std::size_t forest_crossing(const Forest& f, const Partition& p);

}  // namespace kcut
