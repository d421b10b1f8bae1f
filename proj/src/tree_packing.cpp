#include "kcut/tree_packing.hpp"

#include "kcut/errors.hpp"

#include <algorithm>
#include <numeric>

namespace kcut {

std::size_t pack_size_for(std::size_t k, std::size_t m, const ScheduleConfig& cfg) {
    unsigned __int128 v = static_cast<unsigned __int128>(cfg.c_pack) * k * k * k * m;
    const unsigned __int128 cap = static_cast<unsigned __int128>(1) << 40;
    return static_cast<std::size_t>(v > cap ? cap : v);
}

std::vector<Forest> greedy_tree_pack(const WeightedGraph& g, std::size_t tree_count) {
    if (!g.connected()) throw DisconnectedError();
    const std::size_t n = g.vertex_count();
    const auto& edges = g.edges();
    std::vector<std::uint64_t> load(edges.size(), 0);

    // Kruskal order under load/weight: cross-multiplied exactly; w == 0 keys
    // as +infinity; ties by edge id.
    auto key_less = [&](std::size_t a, std::size_t b) {
        const bool za = edges[a].w == 0, zb = edges[b].w == 0;
        if (za != zb) return zb;  // finite key first
        if (!za) {
            using u128 = unsigned __int128;
            const u128 lhs = static_cast<u128>(load[a]) * edges[b].w;
            const u128 rhs = static_cast<u128>(load[b]) * edges[a].w;
            if (lhs != rhs) return lhs < rhs;
        } else if (load[a] != load[b]) {
            return load[a] < load[b];
        }
        return a < b;
    };

    std::vector<std::size_t> order(edges.size());
    std::vector<Forest> trees;
    trees.reserve(tree_count);
    std::vector<VertexId> parent(n);

    for (std::size_t t = 0; t < tree_count; ++t) {
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), key_less);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](VertexId x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<std::pair<VertexId, VertexId>> chosen;
        chosen.reserve(n - 1);
        std::vector<std::size_t> chosen_idx;
        for (auto ei : order) {
            VertexId ru = find(edges[ei].u), rv = find(edges[ei].v);
            if (ru == rv) continue;
            parent[ru] = rv;
            chosen.emplace_back(edges[ei].u, edges[ei].v);
            chosen_idx.push_back(ei);
            if (chosen.size() == n - 1) break;
        }
        for (auto ei : chosen_idx) ++load[ei];
        trees.emplace_back(n, std::move(chosen));
    }
    return trees;
}

std::pair<std::size_t, std::size_t> best_tree_crossing(const std::vector<Forest>& trees,
                                                       const Partition& p) {
    std::size_t best_idx = 0, best_cross = SIZE_MAX;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const std::size_t c = forest_crossing(trees[i], p);
        if (c < best_cross) {
            best_cross = c;
            best_idx = i;
        }
    }
    return {best_idx, best_cross};
}

}  // namespace kcut
