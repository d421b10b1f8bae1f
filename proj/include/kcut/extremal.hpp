#pragma once

#include "kcut/contraction.hpp"
#include "kcut/graph.hpp"
#include "kcut/schedule.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kcut {

struct CensusRow {
    Frac beta;                     // normalized threshold
    std::size_t count = 0;         // sets found at this threshold
    double cap = 0;                // applicable extremal cap (report only)
    std::string cap_kind;          // which bound the cap comes from
    std::vector<CutRecord> cuts;
};

/// Small-cut census: for each normalized threshold beta, the sets A with
/// wbar(A) <= beta found by the contraction enumerator at alpha = beta/2,
/// with the applicable cap 2^k * n^{1 | 2 | 3-1/4 | 4-1/4} (or the generic
/// 2^k n^beta) reported alongside for comparison.
std::vector<CensusRow> small_cut_census(const WeightedGraph& g, std::size_t k,
                                        const NormContext& norm, const std::vector<Frac>& thresholds,
                                        const ScheduleConfig& cfg, std::uint64_t seed,
                                        Exec exec = Exec::parallel);

std::string census_csv(const WeightedGraph& g, std::size_t k, const std::vector<CensusRow>& rows);

struct AssembledCut {
    Partition partition;
    Frac normalized_weight;  // 2 k w(partition) / opt_upper
    std::size_t pair_steps = 0;    // crossing-pair applications (stage 1)
    std::size_t single_steps = 0;  // single-split applications
};

/// Two-stage constructive assembly from the small-cut supply: stage 1 grows
/// the component count by 2 (a cut splitting two current components) or by 3
/// (a crossing pair found among the one-component buckets) until k-2 parts
/// exist; stage 2 splits single components up to exactly k; an overshoot is
/// merged back down greedily. Returns nullopt when the supply runs out, the
/// expected outcome when |cuts| is below the extremal cap.
std::optional<AssembledCut> assemble_cheap_kcut(const WeightedGraph& g,
                                                const std::vector<CutRecord>& cuts, std::size_t k,
                                                const Frac& gamma, const NormContext& norm);

}  // namespace kcut
