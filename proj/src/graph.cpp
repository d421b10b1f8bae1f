#include "kcut/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kcut {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), total_(0) {
    for (auto& e : edges) {
        if (e.u == e.v) throw SelfLoopError();
        if (e.u >= n || e.v >= n) throw Error("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    for (const auto& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
            if (edges_.back().w > UINT64_MAX - e.w) throw OverflowError();
            edges_.back().w += e.w;
        } else {
            edges_.push_back(e);
        }
        if (total_ > UINT64_MAX - e.w) throw OverflowError();
        total_ += e.w;
    }
}

std::size_t WeightedGraph::find_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v),
                               [](const Edge& e, const std::pair<VertexId, VertexId>& key) {
                                   return e.u != key.first ? e.u < key.first : e.v < key.second;
                               });
    if (it != edges_.end() && it->u == u && it->v == v) return it - edges_.begin();
    return npos;
}

namespace {

struct Dsu {
    std::vector<VertexId> parent;
    explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    VertexId find(VertexId x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<VertexId> WeightedGraph::component_labels() const {
    Dsu dsu(n_);
    for (const auto& e : edges_) dsu.unite(e.u, e.v);
    std::vector<VertexId> label(n_, 0);
    std::vector<VertexId> remap(n_, UINT32_MAX);
    VertexId next = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        VertexId r = dsu.find(static_cast<VertexId>(v));
        if (remap[r] == UINT32_MAX) remap[r] = next++;
        label[v] = remap[r];
    }
    return label;
}

std::size_t WeightedGraph::component_count() const {
    if (n_ == 0) return 0;
    auto labels = component_labels();
    return 1 + *std::max_element(labels.begin(), labels.end());
}

Forest::Forest(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges)
    : n_(n), edges_(std::move(edges)) {
    Dsu dsu(n);
    for (auto& [u, v] : edges_) {
        if (u == v || u >= n || v >= n) throw Error("bad forest edge");
        if (u > v) std::swap(u, v);
        if (!dsu.unite(u, v)) throw Error("forest has a cycle");
    }
    std::sort(edges_.begin(), edges_.end());
}

std::vector<VertexId> Forest::piece_labels(const std::vector<std::size_t>& deleted_edges) const {
    std::vector<bool> dead(edges_.size(), false);
    for (auto i : deleted_edges) dead[i] = true;
    Dsu dsu(n_);
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (!dead[i]) dsu.unite(edges_[i].first, edges_[i].second);
    std::vector<VertexId> label(n_), remap(n_, UINT32_MAX);
    VertexId next = 0;
    for (std::size_t v = 0; v < n_; ++v) {
        VertexId r = dsu.find(static_cast<VertexId>(v));
        if (remap[r] == UINT32_MAX) remap[r] = next++;
        label[v] = remap[r];
    }
    return label;
}

Partition::Partition(std::vector<VertexSet> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.min_element() < b.min_element();
    });
}

void Partition::validate(std::size_t n) const {
    VertexSet seen(n);
    for (const auto& p : parts_) {
        if (p.universe_size() != n || p.empty()) throw IncompleteCoverError();
        if (seen.intersects(p)) throw OverlappingPartsError();
        seen = seen | p;
    }
    if (seen.count() != n) throw IncompleteCoverError();
}

bool Partition::operator<(const Partition& o) const {
    return std::lexicographical_compare(parts_.begin(), parts_.end(), o.parts_.begin(),
                                        o.parts_.end());
}

std::string Partition::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << " | ";
        auto elems = parts_[i].elements();
        for (std::size_t j = 0; j < elems.size(); ++j) {
            if (j) os << ' ';
            os << elems[j];
        }
    }
    return os.str();
}

Weight boundary_weight(const WeightedGraph& g, const VertexSet& s) {
    Weight w = 0;
    for (const auto& e : g.edges())
        if (s.test(e.u) != s.test(e.v)) w += e.w;
    return w;
}

Weight partition_weight(const WeightedGraph& g, const Partition& p) {
    p.validate(g.vertex_count());
    std::vector<std::size_t> part_of(g.vertex_count());
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        for (auto v : p.parts()[i].elements()) part_of[v] = i;
    Weight w = 0;
    for (const auto& e : g.edges())
        if (part_of[e.u] != part_of[e.v]) w += e.w;
    return w;
}

std::pair<WeightedGraph, std::vector<VertexSet>> contract_edge(const WeightedGraph& g,
                                                               std::size_t edge_index,
                                                               std::vector<VertexSet> mapping) {
    if (edge_index >= g.edge_count()) throw EdgeNotFoundError();
    const Edge picked = g.edges()[edge_index];
    const std::size_t n = g.vertex_count();
    const VertexId keep = picked.u, gone = picked.v;  // u < v

    // gone's slot is filled by the last vertex.
    std::vector<VertexId> newid(n);
    for (std::size_t v = 0; v < n; ++v) newid[v] = static_cast<VertexId>(v);
    newid[gone] = keep;
    if (gone != n - 1) newid[n - 1] = gone;

    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        VertexId a = newid[e.u], b = newid[e.v];
        if (a == b) continue;  // self-loop dropped
        edges.push_back({a, b, e.w});
    }

    std::vector<VertexSet> newmap(n - 1);
    mapping[keep] = mapping[keep] | mapping[gone];
    for (std::size_t v = 0; v < n; ++v) {
        if (v == gone) continue;
        newmap[newid[v]] = std::move(mapping[v]);
    }
    return {WeightedGraph(n - 1, std::move(edges)), std::move(newmap)};
}

std::vector<std::size_t> compaction_map(std::size_t n, const VertexSet& a) {
    std::vector<std::size_t> map(n, WeightedGraph::npos);
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (!a.test(v)) map[v] = next++;
    return map;
}

WeightedGraph delete_vertices(const WeightedGraph& g, const VertexSet& a) {
    const std::size_t n = g.vertex_count();
    const std::size_t removed = a.count();
    if (removed >= n) throw FullDeletionError();
    auto map = compaction_map(n, a);
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (a.test(e.u) || a.test(e.v)) continue;
        edges.push_back({static_cast<VertexId>(map[e.u]), static_cast<VertexId>(map[e.v]), e.w});
    }
    return WeightedGraph(n - removed, std::move(edges));
}

Forest forest_restrict(const Forest& f, const VertexSet& a) {
    const std::size_t n = f.vertex_count();
    auto map = compaction_map(n, a);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (const auto& [u, v] : f.edges()) {
        if (a.test(u) || a.test(v)) continue;
        edges.emplace_back(static_cast<VertexId>(map[u]), static_cast<VertexId>(map[v]));
    }
    return Forest(n - a.count(), std::move(edges));
}

std::size_t forest_crossing(const Forest& f, const VertexSet& a) {
    std::size_t c = 0;
    for (const auto& [u, v] : f.edges()) c += (a.test(u) != a.test(v));
    return c;
}

std::size_t forest_crossing(const Forest& f, const Partition& p) {
    std::vector<std::size_t> part_of(f.vertex_count(), 0);
    for (std::size_t i = 0; i < p.parts().size(); ++i)
        for (auto v : p.parts()[i].elements()) part_of[v] = i;
    std::size_t c = 0;
    for (const auto& [u, v] : f.edges()) c += (part_of[u] != part_of[v]);
    return c;
}

}  // namespace kcut
