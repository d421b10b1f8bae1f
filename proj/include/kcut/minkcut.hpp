#pragma once

#include "kcut/contraction.hpp"
#include "kcut/graph.hpp"
#include "kcut/parallel.hpp"
#include "kcut/schedule.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace kcut {

using PartitionSet = std::set<Partition>;

/// Per-depth counters for the recursion; merged associatively.
struct Telemetry {
    struct Depth {
        std::size_t calls = 0;
        std::size_t karger_base = 0;   // "k < base_k" branch taken
        std::size_t brute_force = 0;   // "z < 0" branch taken
        std::size_t branched = 0;      // recursive branch taken
        std::size_t degenerate = 0;    // k==1 / components / tiny-graph exits
        std::size_t candidates = 0;    // total branch candidates examined
        std::map<std::size_t, std::size_t> family_sizes;  // ell -> sum |A^ell|
        double phi_min = 0, phi_max = 0;
        bool phi_seen = false;
        void note_phi(double phi);
    };
    std::vector<Depth> depths;

    Depth& at_depth(std::size_t d);
    void merge(const Telemetry& other);
    std::string report() const;
};

/// One node of the recursion. Vertex ids in g/f are local; orig_of maps them
/// back to the top-level universe of size n0. Invariant expected by valid
/// partitions: s + kappa(f) >= k (callers may violate it, in which case the
/// call simply finds nothing on the brute-force path).
struct BranchState {
    WeightedGraph g;
    Forest f;
    std::vector<VertexId> orig_of;
    std::size_t n0 = 0;
    std::size_t k = 0;
    std::size_t s = 0;
    std::size_t k0 = 0;       // root k, fixed across the recursion (potential)
    NormContext norm;         // opt_upper == 0 means "unknown, self-normalize"
    std::size_t depth = 0;

    static BranchState top_level(const WeightedGraph& g, const Forest& tree, std::size_t k,
                                 std::size_t s, Weight opt_upper);
};

struct MkResult {
    Weight weight = UINT64_MAX;  // UINT64_MAX when nothing was found
    PartitionSet partitions;     // argmin partitions over the original universe

    void absorb(Weight w, const Partition& p);
    void absorb(const MkResult& other);
};

/// EnumCuts(G, beta, N): candidates A with normalized weight wbar(A) <= beta,
/// the N smallest by (weight, canonical set). Runs the contraction enumerator
/// with alpha = beta/2; the threshold uses min(norm.opt_upper if nonzero, best
/// k-cut observed across the phases), both true upper bounds on OPT.
std::vector<CutRecord> enum_cuts(const WeightedGraph& g, const NormContext& norm, const Frac& beta,
                                 std::size_t cap, const ScheduleConfig& cfg, std::uint64_t seed,
                                 Exec exec = Exec::parallel);

/// Every (F,s,k)-valid partition exactly once: choose s forest edges to
/// delete, then merge the s+kappa(F) pieces into k unlabeled nonempty groups.
/// Throws InvalidBudget when s > |E(F)| or s + kappa(F) < k.
std::vector<Partition> valid_partitions(const WeightedGraph& g, const Forest& f, std::size_t s,
                                        std::size_t k);

/// The crossing-free and single-crossing candidate families:
/// zero = proper nonempty unions of whole forest components (at most
/// 2^kappa(F) of them), one = one side of a single forest edge plus any union
/// of the other components (at most 2^(kappa(F)+1) * n of them). Both
/// deduplicated and canonically ordered.
std::pair<std::vector<VertexSet>, std::vector<VertexSet>> forest_crossing_families(
    const Forest& f);

/// The recursive branching algorithm. Returns a superset of the (F,s,k)-valid
/// minimum k-cuts (w.h.p.), filtered to the minimum weight found.
MkResult min_kcut(const BranchState& state, const ScheduleConfig& cfg, std::uint64_t seed,
                  Telemetry* telemetry = nullptr, Exec exec = Exec::parallel);

struct EnumerateResult {
    Weight weight = UINT64_MAX;
    PartitionSet partitions;
    Telemetry telemetry;
    std::size_t trees_packed = 0;
    std::size_t ks_repetitions = 0;
};

/// Top-level driver: one Karger-Stein pass seeds the optimum upper bound and
/// the result pool; then for every packed tree and every s in [k-1, 2k-2]
/// min_kcut runs against that tree; global minimizers, deduplicated.
EnumerateResult enumerate_min_kcuts(const WeightedGraph& g, std::size_t k,
                                    const ScheduleConfig& cfg, std::uint64_t seed,
                                    Exec exec = Exec::parallel);

}  // namespace kcut
