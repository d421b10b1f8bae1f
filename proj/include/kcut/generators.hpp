#pragma once

#include "kcut/graph.hpp"

#include <cstdint>

namespace kcut {

WeightedGraph make_cycle(std::size_t n, Weight w = 1);
WeightedGraph make_path(std::size_t n, Weight w = 1);
WeightedGraph make_complete(std::size_t n, Weight w = 1);
WeightedGraph make_star(std::size_t leaves, Weight w = 1);

/// Two unit triangles {0,1,2} and {3,4,5} joined by the unit bridge (2,3).
WeightedGraph make_two_triangles_bridge();

/// `clusters` cliques of `cluster_size` vertices with internal weight inner_w,
/// arranged in a ring with single bridge edges of weight bridge_w.
WeightedGraph make_cluster_ring(std::size_t clusters, std::size_t cluster_size, Weight inner_w,
                                Weight bridge_w);

/// Connected random graph: a uniform random spanning tree plus each remaining
/// pair independently with probability ~1/2, integer weights in
/// [wmin, wmax]. Deterministic in the seed.
WeightedGraph make_random_connected(std::size_t n, Weight wmin, Weight wmax, std::uint64_t seed);

/// k planted clusters with heavy internal edges and a sparse light crossing
/// pattern; used by the benchmark.
WeightedGraph make_planted(std::size_t n, std::size_t k, std::uint64_t seed);

}  // namespace kcut
