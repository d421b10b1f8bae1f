#pragma once

#include "kcut/fraction.hpp"
#include "kcut/graph.hpp"
#include "kcut/parallel.hpp"
#include "kcut/rng.hpp"
#include "kcut/schedule.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace kcut {

/// One candidate cut side, remembered with the boundary weight it had in the
/// graph it was produced against. forest_crossings is filled lazily by the
/// consumers that care (-1 until then).
struct CutRecord {
    VertexSet set;
    Weight weight = 0;
    int forest_crossings = -1;
};

/// Scale for normalized cut weights: k parts and an upper bound opt_upper on
/// the minimum k-cut value. A comparison "wbar(A) <= beta" is evaluated
/// exactly as 2*k*w <= beta*opt_upper; opt_upper >= OPT only enlarges the
/// threshold, keeping candidate families supersets of the exact ones.
struct NormContext {
    Weight opt_upper = 0;
    std::size_t k = 2;

    /// Largest integer weight passing "wbar <= beta", exact.
    Weight max_weight_for(const Frac& beta) const {
        if (beta <= 0) return 0;
        return floor_to_u64(beta * Frac(BigInt(opt_upper)) /
                            (2 * static_cast<long long>(k)));
    }
};

/// Repetition count ceil(c_rep * n^{2 alpha} * ln n), at least 1.
std::size_t repetition_count(std::size_t n, const Frac& alpha, const ScheduleConfig& cfg);

/// Contract uniformly-weight-proportionally chosen edges until exactly h
/// supernodes remain. Edge selection is bit-identical under scaling of all
/// weights (comparisons are exact 128-bit cross products). Returns the
/// contracted graph and the supernode -> original-vertices mapping.
/// Throws TooFewVertices (n < h) and Disconnected (kappa(g) > h).
std::pair<WeightedGraph, std::vector<VertexSet>> contraction_phase(const WeightedGraph& g,
                                                                   std::size_t h,
                                                                   std::uint64_t seed);

struct SmallCutsResult {
    std::vector<CutRecord> cuts;  // sorted by (weight, canonical set)
    Weight hcut_upper = 0;        // best h-cut value observed across the phases
    std::size_t repetitions = 0;
};

/// All proper nonempty subsets A with w(boundary A) <= alpha * Hhat / h, where
/// Hhat >= OPT_h is the best h-cut seen across the contraction phases; with
/// high probability a superset of every A below the true threshold
/// alpha * OPT_h / h. Repetitions ceil(c_rep n^{2 alpha} ln n).
SmallCutsResult enum_small_cuts(const WeightedGraph& g, std::size_t h, const Frac& alpha,
                                const ScheduleConfig& cfg, std::uint64_t seed,
                                Exec exec = Exec::parallel);

struct KsResult {
    Weight weight = 0;
    std::set<Partition> partitions;
    std::size_t repetitions = 0;
};

/// Repeated contraction to k supernodes (c_rep n^{2(k-1)} ln n times), keeping
/// every minimum-weight outcome; w.h.p. all minimum k-cuts.
KsResult karger_stein_min_kcut(const WeightedGraph& g, std::size_t k, const ScheduleConfig& cfg,
                               std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace kcut
