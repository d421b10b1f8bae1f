#include "kcut/contraction.hpp"

#include "kcut/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace kcut {

namespace {

/// Dense contraction workspace. Supernodes live in slots 0..cnt-1; merging
/// folds one row/column into another and swaps the last slot in. All state is
/// rebuilt by reset(), so one workspace serves a whole repetition loop.
class DenseContraction {
public:
    explicit DenseContraction(const WeightedGraph& g)
        : n0_(g.vertex_count()), w_(n0_ * n0_, 0), adj_(n0_ * n0_, 0) {
        for (const auto& e : g.edges()) {
            at(w_, e.u, e.v) = at(w_, e.v, e.u) = e.w;
            at(adj_, e.u, e.v) = at(adj_, e.v, e.u) = 1;
        }
        base_w_ = w_;
        base_adj_ = adj_;
    }

    void reset() {
        w_ = base_w_;
        adj_ = base_adj_;
        cnt_ = n0_;
        blocks_.clear();
        for (std::size_t v = 0; v < n0_; ++v) blocks_.push_back(VertexSet::singleton(n0_, v));
    }

    /// Contract down to h supernodes. Returns false when stuck (kappa > h).
    bool run(std::size_t h, SplitMix64& rng) {
        while (cnt_ > h) {
            Weight total = 0;
            bool any_adjacent = false;
            for (std::size_t i = 0; i < cnt_; ++i)
                for (std::size_t j = i + 1; j < cnt_; ++j) {
                    total += at(w_, i, j);
                    any_adjacent |= at(adj_, i, j) != 0;
                }
            if (!any_adjacent) return false;

            std::size_t pi = 0, pj = 1;
            if (total > 0) {
                // Exact weight-proportional pick: first pair whose inclusive
                // prefix P satisfies P * 2^64 > r * total. Invariant under
                // scaling all weights by a constant.
                const std::uint64_t r = rng.next();
                using u128 = unsigned __int128;
                const u128 target = static_cast<u128>(r) * total;
                Weight prefix = 0;
                bool picked = false;
                for (std::size_t i = 0; i < cnt_ && !picked; ++i)
                    for (std::size_t j = i + 1; j < cnt_; ++j) {
                        prefix += at(w_, i, j);
                        if ((static_cast<u128>(prefix) << 64) > target) {
                            pi = i;
                            pj = j;
                            picked = true;
                            break;
                        }
                    }
            } else {
                // Only zero-weight edges left: take the first adjacent pair.
                bool picked = false;
                for (std::size_t i = 0; i < cnt_ && !picked; ++i)
                    for (std::size_t j = i + 1; j < cnt_; ++j)
                        if (at(adj_, i, j)) {
                            pi = i;
                            pj = j;
                            picked = true;
                            break;
                        }
            }
            merge(pi, pj);
        }
        return true;
    }

    std::size_t count() const { return cnt_; }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    Weight pair_weight(std::size_t i, std::size_t j) const { return at(w_, i, j); }
    bool pair_adjacent(std::size_t i, std::size_t j) const { return at(adj_, i, j); }

    Weight cut_total() const {
        Weight t = 0;
        for (std::size_t i = 0; i < cnt_; ++i)
            for (std::size_t j = i + 1; j < cnt_; ++j) t += at(w_, i, j);
        return t;
    }

    /// Boundary weight of a slot subset given as a bitmask over 0..cnt-1.
    Weight mask_boundary(std::uint32_t mask) const {
        Weight t = 0;
        for (std::size_t i = 0; i < cnt_; ++i)
            for (std::size_t j = i + 1; j < cnt_; ++j)
                if (((mask >> i) & 1u) != ((mask >> j) & 1u)) t += at(w_, i, j);
        return t;
    }

    VertexSet mask_union(std::uint32_t mask) const {
        VertexSet s(n0_);
        for (std::size_t i = 0; i < cnt_; ++i)
            if ((mask >> i) & 1u) s = s | blocks_[i];
        return s;
    }

private:
    template <typename T>
    T& at(std::vector<T>& m, std::size_t i, std::size_t j) const {
        return m[i * n0_ + j];
    }
    template <typename T>
    const T& at(const std::vector<T>& m, std::size_t i, std::size_t j) const {
        return m[i * n0_ + j];
    }

    void merge(std::size_t i, std::size_t j) {  // i < j; j absorbed into i
        for (std::size_t t = 0; t < cnt_; ++t) {
            if (t == i || t == j) continue;
            at(w_, i, t) += at(w_, j, t);
            at(w_, t, i) = at(w_, i, t);
            at(adj_, i, t) |= at(adj_, j, t);
            at(adj_, t, i) = at(adj_, i, t);
        }
        blocks_[i] = blocks_[i] | blocks_[j];
        const std::size_t last = cnt_ - 1;
        if (j != last) {
            for (std::size_t t = 0; t < cnt_; ++t) {
                at(w_, j, t) = at(w_, last, t);
                at(w_, t, j) = at(w_, t, last);
                at(adj_, j, t) = at(adj_, last, t);
                at(adj_, t, j) = at(adj_, t, last);
            }
            at(w_, j, j) = 0;
            at(adj_, j, j) = 0;
            blocks_[j] = blocks_[last];
        }
        blocks_.pop_back();
        --cnt_;
    }

    std::size_t n0_;
    std::size_t cnt_ = 0;
    std::vector<Weight> w_, base_w_;
    std::vector<std::uint8_t> adj_, base_adj_;
    std::vector<VertexSet> blocks_;
};

void check_phase_preconditions(const WeightedGraph& g, std::size_t h) {
    if (g.vertex_count() < h) throw TooFewVerticesError();
    if (g.component_count() > h)
        throw DisconnectedError("graph has more than h components; cannot contract to h supernodes");
}

}  // namespace

std::size_t repetition_count(std::size_t n, const Frac& alpha, const ScheduleConfig& cfg) {
    if (n <= 2) return 1;
    const double exponent = 2.0 * to_double(alpha);
    const double raw = static_cast<double>(cfg.c_rep) * std::pow(static_cast<double>(n), exponent) *
                       std::log(static_cast<double>(n));
    if (raw <= 1.0) return 1;
    if (raw >= 1e12) return static_cast<std::size_t>(1e12);
    return static_cast<std::size_t>(std::ceil(raw));
}

std::pair<WeightedGraph, std::vector<VertexSet>> contraction_phase(const WeightedGraph& g,
                                                                   std::size_t h,
                                                                   std::uint64_t seed) {
    check_phase_preconditions(g, h);
    DenseContraction ker(g);
    ker.reset();
    SplitMix64 rng(seed);
    if (!ker.run(h, rng)) throw DisconnectedError();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j)
            if (ker.pair_adjacent(i, j))
                edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j),
                                 ker.pair_weight(i, j)});
    return {WeightedGraph(h, std::move(edges)), ker.blocks()};
}

SmallCutsResult enum_small_cuts(const WeightedGraph& g, std::size_t h, const Frac& alpha,
                                const ScheduleConfig& cfg, std::uint64_t seed, Exec exec) {
    if (h < 2) throw Error("enum_small_cuts requires h >= 2");
    if (alpha < 0) throw Error("enum_small_cuts requires alpha >= 0");
    check_phase_preconditions(g, h);
    const std::size_t n = g.vertex_count();
    // n == h contracts nothing; one pass is exhaustive
    const std::size_t reps = n == h ? 1 : repetition_count(n, alpha, cfg);

    // The per-phase prefilter runs in 128-bit integer arithmetic when alpha is
    // small enough (always, in practice); otherwise it falls back to one exact
    // rational cutoff per phase.
    const bool narrow_alpha = boost::multiprecision::numerator(alpha) < BigInt(1) << 32 &&
                              boost::multiprecision::denominator(alpha) < BigInt(1) << 32;
    const std::uint64_t a_num =
        narrow_alpha ? boost::multiprecision::numerator(alpha).convert_to<std::uint64_t>() : 0;
    const std::uint64_t a_den =
        narrow_alpha ? boost::multiprecision::denominator(alpha).convert_to<std::uint64_t>() : 1;

    const int nthreads = exec == Exec::parallel ? max_threads() : 1;
    std::vector<std::map<VertexSet, Weight>> found(nthreads);
    std::vector<Weight> best(nthreads, UINT64_MAX);
    std::vector<DenseContraction> kernels(nthreads, DenseContraction(g));

    parallel_for(reps, exec, [&](std::size_t rep) {
#ifdef _OPENMP
        const int tid = exec == Exec::parallel ? omp_get_thread_num() : 0;
#else
        const int tid = 0;
#endif
        DenseContraction& ker = kernels[tid];
        ker.reset();
        SplitMix64 rng(derive_stream(seed, rep));
        if (!ker.run(h, rng)) return;  // unreachable after the kappa check
        const Weight phase_cut = ker.cut_total();
        best[tid] = std::min(best[tid], phase_cut);
        // Loose per-phase prefilter w <= alpha * phase_cut / h; the final
        // filter below uses the global best and can only be tighter.
        using u128 = unsigned __int128;
        const u128 limit = static_cast<u128>(a_num) * phase_cut;
        const Weight exact_max =
            narrow_alpha ? 0
                         : floor_to_u64(alpha * Frac(BigInt(phase_cut)) /
                                        Frac(static_cast<long long>(h)));
        const std::uint32_t full = (h >= 32) ? 0xffffffffu : ((1u << h) - 1u);
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            const Weight w = ker.mask_boundary(mask);
            const bool keep = narrow_alpha ? static_cast<u128>(w) * h * a_den <= limit
                                           : w <= exact_max;
            if (keep) {
                auto& slot = found[tid];
                slot.emplace(ker.mask_union(mask), w);
            }
        }
    });

    Weight hcut_upper = UINT64_MAX;
    for (auto b : best) hcut_upper = std::min(hcut_upper, b);
    if (hcut_upper == UINT64_MAX) hcut_upper = 0;

    const Frac threshold = alpha * Frac(BigInt(hcut_upper)) /
                           Frac(static_cast<long long>(h));
    const Weight wmax = floor_to_u64(threshold);

    std::map<VertexSet, Weight> merged;
    for (auto& m : found)
        for (auto& [s, w] : m)
            if (w <= wmax) merged.emplace(s, w);

    SmallCutsResult out;
    out.hcut_upper = hcut_upper;
    out.repetitions = reps;
    out.cuts.reserve(merged.size());
    for (auto& [s, w] : merged) out.cuts.push_back({s, w, -1});
    std::sort(out.cuts.begin(), out.cuts.end(), [](const CutRecord& a, const CutRecord& b) {
        return a.weight != b.weight ? a.weight < b.weight : a.set < b.set;
    });
    return out;
}

KsResult karger_stein_min_kcut(const WeightedGraph& g, std::size_t k, const ScheduleConfig& cfg,
                               std::uint64_t seed, Exec exec) {
    const std::size_t n = g.vertex_count();
    if (n < k) throw TooFewVerticesError("karger_stein_min_kcut: n < k");
    if (k == 0) throw Error("k must be positive");
    check_phase_preconditions(g, k);

    const Frac alpha(static_cast<long long>(k) - 1);  // n^{2(k-1)} ln n repetitions
    const std::size_t reps = n == k ? 1 : repetition_count(n, alpha, cfg);

    const int nthreads = exec == Exec::parallel ? max_threads() : 1;
    std::vector<Weight> best(nthreads, UINT64_MAX);
    std::vector<std::set<Partition>> argmin(nthreads);
    std::vector<DenseContraction> kernels(nthreads, DenseContraction(g));

    parallel_for(reps, exec, [&](std::size_t rep) {
#ifdef _OPENMP
        const int tid = exec == Exec::parallel ? omp_get_thread_num() : 0;
#else
        const int tid = 0;
#endif
        DenseContraction& ker = kernels[tid];
        ker.reset();
        SplitMix64 rng(derive_stream(seed, rep, 0x6b73));
        if (!ker.run(k, rng)) return;
        const Weight cut = ker.cut_total();
        if (cut > best[tid]) return;
        if (cut < best[tid]) {
            best[tid] = cut;
            argmin[tid].clear();
        }
        argmin[tid].insert(Partition(ker.blocks()));
    });

    KsResult out;
    out.repetitions = reps;
    out.weight = UINT64_MAX;
    for (int t = 0; t < nthreads; ++t) out.weight = std::min(out.weight, best[t]);
    if (out.weight == UINT64_MAX) throw DisconnectedError();
    for (int t = 0; t < nthreads; ++t)
        if (best[t] == out.weight)
            out.partitions.insert(argmin[t].begin(), argmin[t].end());
    return out;
}

}  // namespace kcut
