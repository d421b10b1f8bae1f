#pragma once

#include "kcut/graph.hpp"
#include "kcut/schedule.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace kcut {

/// Number of trees to pack: c_pack * k^3 * m (saturating).
std::size_t pack_size_for(std::size_t k, std::size_t m, const ScheduleConfig& cfg);

/// Greedy load-balanced packing: tree i is a minimum spanning tree under the
/// key load_e / w_e (ties by edge id), where load_e counts how many earlier
/// trees used e; loads of the chosen edges are then incremented. Zero-weight
/// edges sort after all positively weighted ones (infinite key).
/// Throws Disconnected when g has no spanning tree.
std::vector<Forest> greedy_tree_pack(const WeightedGraph& g, std::size_t tree_count);

/// Tree crossing the partition the fewest times (ties: lowest index).
/// Returns {tree index, crossing count}.
std::pair<std::size_t, std::size_t> best_tree_crossing(const std::vector<Forest>& trees,
                                                       const Partition& p);

}  // namespace kcut
