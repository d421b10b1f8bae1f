#pragma once

#include "kcut/graph.hpp"
#include "kcut/parallel.hpp"

#include <functional>
#include <set>
#include <vector>

namespace kcut {

struct BruteKcuts {
    Weight weight = UINT64_MAX;
    std::set<Partition> partitions;
};

/// Exact optimum and all argmin k-partitions, by enumerating every set
/// partition of [n] with exactly k blocks (restricted-growth strings).
/// Intended for n <= 12.
BruteKcuts brute_min_kcuts(const WeightedGraph& g, std::size_t k, Exec exec = Exec::parallel);

/// Every proper nonempty subset A with pred(w(boundary A)) true, canonically
/// sorted. Complementary sides are both reported (subsets count as subsets).
/// 2^n scan; intended for n <= 20.
std::vector<VertexSet> brute_cut_census(const WeightedGraph& g,
                                        const std::function<bool(Weight)>& pred,
                                        Exec exec = Exec::parallel);

std::vector<VertexSet> brute_cut_census(const WeightedGraph& g, Weight max_weight,
                                        Exec exec = Exec::parallel);

/// Independent re-enumeration of the (F,s,k)-valid partitions: filters all
/// k-block partitions of V for validity instead of generating delete/merge
/// combinations. Cross-checks minkcut's valid_partitions.
std::set<Partition> brute_valid_partitions(const Forest& f, std::size_t s, std::size_t k);

}  // namespace kcut
