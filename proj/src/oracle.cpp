#include "kcut/oracle.hpp"

#include "kcut/errors.hpp"

#include <algorithm>

namespace kcut {

namespace {

/// Enumerate restricted-growth strings with exactly k labels, parallelized by
/// the first few positions: prefixes are generated serially, completions run
/// independently.
template <typename Fn>
void for_each_k_labeling(std::size_t n, std::size_t k, Exec exec, Fn&& per_thread_fn) {
    if (k == 0 || k > n) return;
    const std::size_t prefix_len = std::min<std::size_t>(n, 7);
    struct Prefix {
        std::vector<std::size_t> label;
        std::size_t used;
    };
    std::vector<Prefix> prefixes;
    {
        std::vector<std::size_t> label(prefix_len, 0);
        auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
            if (used + (n - pos) < k) return;
            if (used > k) return;
            if (pos == prefix_len) {
                prefixes.push_back({label, used});
                return;
            }
            for (std::size_t l = 0; l < used; ++l) {
                label[pos] = l;
                self(self, pos + 1, used);
            }
            if (used < k) {
                label[pos] = used;
                self(self, pos + 1, used + 1);
            }
        };
        rec(rec, 0, 0);
    }

    parallel_for(prefixes.size(), exec, [&](std::size_t pi) {
        std::vector<std::size_t> label(n);
        std::copy(prefixes[pi].label.begin(), prefixes[pi].label.end(), label.begin());
        auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
            if (used + (n - pos) < k) return;
            if (pos == n) {
                if (used == k) per_thread_fn(label);
                return;
            }
            for (std::size_t l = 0; l < used; ++l) {
                label[pos] = l;
                self(self, pos + 1, used);
            }
            if (used < k) {
                label[pos] = used;
                self(self, pos + 1, used + 1);
            }
        };
        rec(rec, prefix_len, prefixes[pi].used);
    });
}

Partition labels_to_partition(std::size_t n, const std::vector<std::size_t>& label,
                              std::size_t k) {
    std::vector<VertexSet> parts(k, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v) parts[label[v]].set(v);
    return Partition(std::move(parts));
}

}  // namespace

BruteKcuts brute_min_kcuts(const WeightedGraph& g, std::size_t k, Exec exec) {
    const std::size_t n = g.vertex_count();
    if (k == 0 || k > n) throw TooFewVerticesError("brute_min_kcuts: need 1 <= k <= n");

    const int nthreads = exec == Exec::parallel ? max_threads() : 1;
    std::vector<BruteKcuts> local(nthreads);

    for_each_k_labeling(n, k, exec, [&](const std::vector<std::size_t>& label) {
#ifdef _OPENMP
        const int tid = exec == Exec::parallel ? omp_get_thread_num() : 0;
#else
        const int tid = 0;
#endif
        Weight w = 0;
        for (const auto& e : g.edges())
            if (label[e.u] != label[e.v]) w += e.w;
        auto& slot = local[tid];
        if (w > slot.weight) return;
        if (w < slot.weight) {
            slot.weight = w;
            slot.partitions.clear();
        }
        slot.partitions.insert(labels_to_partition(n, label, k));
    });

    BruteKcuts out;
    for (auto& l : local) {
        if (l.weight > out.weight) continue;
        if (l.weight < out.weight) {
            out.weight = l.weight;
            out.partitions.clear();
        }
        out.partitions.insert(l.partitions.begin(), l.partitions.end());
    }
    return out;
}

std::vector<VertexSet> brute_cut_census(const WeightedGraph& g,
                                        const std::function<bool(Weight)>& pred, Exec exec) {
    const std::size_t n = g.vertex_count();
    if (n > 24) throw Error("brute_cut_census: universe too large for a 2^n scan");
    if (n < 2) return {};
    const std::uint32_t full = (1u << n) - 1u;

    const int nthreads = exec == Exec::parallel ? max_threads() : 1;
    std::vector<std::vector<VertexSet>> local(nthreads);
    parallel_for(full - 1, exec, [&](std::size_t i) {
#ifdef _OPENMP
        const int tid = exec == Exec::parallel ? omp_get_thread_num() : 0;
#else
        const int tid = 0;
#endif
        const std::uint32_t mask = static_cast<std::uint32_t>(i) + 1;  // 1 .. full-1
        Weight w = 0;
        for (const auto& e : g.edges())
            if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) w += e.w;
        if (!pred(w)) return;
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1u) s.set(v);
        local[tid].push_back(std::move(s));
    });

    std::vector<VertexSet> out;
    for (auto& l : local) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> brute_cut_census(const WeightedGraph& g, Weight max_weight, Exec exec) {
    return brute_cut_census(
        g, [max_weight](Weight w) { return w <= max_weight; }, exec);
}

std::set<Partition> brute_valid_partitions(const Forest& f, std::size_t s, std::size_t k) {
    if (s > f.edge_count() || s + f.kappa() < k)
        throw InvalidBudgetError("brute_valid_partitions: need s <= |E(F)| and s + kappa(F) >= k");
    const std::size_t n = f.vertex_count();
    std::set<Partition> out;
    for_each_k_labeling(n, k, Exec::serial, [&](const std::vector<std::size_t>& label) {
        std::size_t crossings = 0;
        for (const auto& [u, v] : f.edges()) crossings += (label[u] != label[v]);
        if (crossings <= s) out.insert(labels_to_partition(n, label, k));
    });
    return out;
}

}  // namespace kcut
