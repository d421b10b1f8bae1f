#include "kcut/generators.hpp"

#include "kcut/rng.hpp"

#include <vector>

namespace kcut {

WeightedGraph make_cycle(std::size_t n, Weight w) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n), w});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph make_path(std::size_t n, Weight w) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1), w});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph make_complete(std::size_t n, Weight w) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), w});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph make_star(std::size_t leaves, Weight w) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.push_back({0, static_cast<VertexId>(i), w});
    return WeightedGraph(leaves + 1, std::move(edges));
}

WeightedGraph make_two_triangles_bridge() {
    std::vector<Edge> edges{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {3, 4, 1},
                            {3, 5, 1}, {4, 5, 1}, {2, 3, 1}};
    return WeightedGraph(6, std::move(edges));
}

WeightedGraph make_cluster_ring(std::size_t clusters, std::size_t cluster_size, Weight inner_w,
                                Weight bridge_w) {
    std::vector<Edge> edges;
    const std::size_t n = clusters * cluster_size;
    for (std::size_t c = 0; c < clusters; ++c) {
        const std::size_t base = c * cluster_size;
        for (std::size_t i = 0; i < cluster_size; ++i)
            for (std::size_t j = i + 1; j < cluster_size; ++j)
                edges.push_back({static_cast<VertexId>(base + i),
                                 static_cast<VertexId>(base + j), inner_w});
        const std::size_t next = ((c + 1) % clusters) * cluster_size;
        edges.push_back({static_cast<VertexId>(base), static_cast<VertexId>(next), bridge_w});
    }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph make_random_connected(std::size_t n, Weight wmin, Weight wmax, std::uint64_t seed) {
    SplitMix64 rng(derive_stream(seed, 0x97a3));
    std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
    std::vector<Edge> edges;
    auto weight = [&]() { return wmin + rng.below(wmax - wmin + 1); };
    for (std::size_t v = 1; v < n; ++v) {
        const auto parent = rng.below(v);
        used[parent][v] = true;
        edges.push_back({static_cast<VertexId>(parent), static_cast<VertexId>(v), weight()});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!used[i][j] && (rng.next() & 1u))
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), weight()});
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph make_planted(std::size_t n, std::size_t k, std::uint64_t seed) {
    SplitMix64 rng(derive_stream(seed, 0x91a7));
    std::vector<Edge> edges;
    std::vector<std::size_t> cluster(n);
    for (std::size_t v = 0; v < n; ++v) cluster[v] = v % k;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cluster[i] == cluster[j]) {
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j),
                                 5 + rng.below(5)});
            } else if (rng.below(4) == 0) {
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1});
            }
        }
    // a light ring to guarantee connectivity
    for (std::size_t v = 0; v < n; ++v)
        edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n), 1});
    return WeightedGraph(n, std::move(edges));
}

}  // namespace kcut
