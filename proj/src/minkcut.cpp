#include "kcut/minkcut.hpp"

#include "kcut/errors.hpp"
#include "kcut/rng.hpp"
#include "kcut/tree_packing.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

namespace kcut {

void Telemetry::Depth::note_phi(double phi) {
    if (!phi_seen) {
        phi_min = phi_max = phi;
        phi_seen = true;
    } else {
        phi_min = std::min(phi_min, phi);
        phi_max = std::max(phi_max, phi);
    }
}

Telemetry::Depth& Telemetry::at_depth(std::size_t d) {
    if (depths.size() <= d) depths.resize(d + 1);
    return depths[d];
}

void Telemetry::merge(const Telemetry& other) {
    for (std::size_t d = 0; d < other.depths.size(); ++d) {
        auto& mine = at_depth(d);
        const auto& o = other.depths[d];
        mine.calls += o.calls;
        mine.karger_base += o.karger_base;
        mine.brute_force += o.brute_force;
        mine.branched += o.branched;
        mine.degenerate += o.degenerate;
        mine.candidates += o.candidates;
        for (auto& [l, c] : o.family_sizes) mine.family_sizes[l] += c;
        if (o.phi_seen) {
            mine.note_phi(o.phi_min);
            mine.note_phi(o.phi_max);
        }
    }
}

std::string Telemetry::report() const {
    std::ostringstream os;
    os << "depth  calls  ks-base  brute  branch  degen  candidates  phi[min,max]\n";
    for (std::size_t d = 0; d < depths.size(); ++d) {
        const auto& t = depths[d];
        os << d << "  " << t.calls << "  " << t.karger_base << "  " << t.brute_force << "  "
           << t.branched << "  " << t.degenerate << "  " << t.candidates << "  ";
        if (t.phi_seen)
            os << "[" << t.phi_min << ", " << t.phi_max << "]";
        else
            os << "-";
        if (!t.family_sizes.empty()) {
            os << "  |A^l|:";
            for (auto& [l, c] : t.family_sizes) os << " " << l << ":" << c;
        }
        os << "\n";
    }
    return os.str();
}

BranchState BranchState::top_level(const WeightedGraph& g, const Forest& tree, std::size_t k,
                                   std::size_t s, Weight opt_upper) {
    BranchState st;
    st.g = g;
    st.f = tree;
    st.orig_of.resize(g.vertex_count());
    std::iota(st.orig_of.begin(), st.orig_of.end(), 0);
    st.n0 = g.vertex_count();
    st.k = k;
    st.s = s;
    st.k0 = k;
    st.norm = NormContext{opt_upper, k};
    return st;
}

void MkResult::absorb(Weight w, const Partition& p) {
    if (w > weight) return;
    if (w < weight) {
        weight = w;
        partitions.clear();
    }
    partitions.insert(p);
}

void MkResult::absorb(const MkResult& other) {
    if (other.weight > weight) return;
    if (other.weight < weight) {
        weight = other.weight;
        partitions.clear();
    }
    partitions.insert(other.partitions.begin(), other.partitions.end());
}

std::vector<CutRecord> enum_cuts(const WeightedGraph& g, const NormContext& norm, const Frac& beta,
                                 std::size_t cap, const ScheduleConfig& cfg, std::uint64_t seed,
                                 Exec exec) {
    if (beta <= 0 || cap == 0) return {};
    SmallCutsResult raw = enum_small_cuts(g, norm.k, beta / 2, cfg, seed, exec);
    std::vector<CutRecord> cuts = std::move(raw.cuts);
    if (norm.opt_upper != 0) {
        const Weight wmax = norm.max_weight_for(beta);
        std::erase_if(cuts, [&](const CutRecord& c) { return c.weight > wmax; });
    }
    if (cuts.size() > cap) cuts.resize(cap);  // already sorted by (weight, set)
    return cuts;
}

namespace {

/// Visit restricted-growth strings over `count` items using exactly k labels.
template <typename Fn>
void for_each_grouping(std::size_t count, std::size_t k, Fn&& fn) {
    if (k == 0 || k > count) return;
    std::vector<std::size_t> label(count, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> void {
        if (used + (count - pos) < k) return;  // cannot reach k labels anymore
        if (pos == count) {
            if (used == k) fn(label);
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

Partition partition_from_labels(std::size_t n0, const std::vector<VertexId>& orig_of,
                                const std::vector<std::size_t>& vertex_group, std::size_t groups) {
    std::vector<VertexSet> parts(groups, VertexSet(n0));
    for (std::size_t v = 0; v < vertex_group.size(); ++v)
        parts[vertex_group[v]].set(orig_of[v]);
    return Partition(std::move(parts));
}

}  // namespace

std::vector<Partition> valid_partitions(const WeightedGraph& g, const Forest& f, std::size_t s,
                                        std::size_t k) {
    if (g.vertex_count() != f.vertex_count()) throw Error("graph/forest universe mismatch");
    if (s > f.edge_count() || s + f.kappa() < k)
        throw InvalidBudgetError("valid_partitions: need s <= |E(F)| and s + kappa(F) >= k");
    const std::size_t n = f.vertex_count();
    std::vector<VertexId> ident(n);
    std::iota(ident.begin(), ident.end(), 0);

    std::set<Partition> out;
    std::vector<std::size_t> combo(s);
    std::iota(combo.begin(), combo.end(), 0);
    const std::size_t m = f.edge_count();

    auto process = [&]() {
        const auto piece_of = f.piece_labels(combo);
        const std::size_t pieces = s + f.kappa();
        for_each_grouping(pieces, k, [&](const std::vector<std::size_t>& group_of_piece) {
            std::vector<std::size_t> vgroup(n);
            for (std::size_t v = 0; v < n; ++v) vgroup[v] = group_of_piece[piece_of[v]];
            out.insert(partition_from_labels(n, ident, vgroup, k));
        });
    };

    if (s == 0) {
        process();
    } else {
        while (true) {
            process();
            // next s-combination of [0, m)
            long i = static_cast<long>(s) - 1;
            while (i >= 0 && combo[i] == m - s + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (std::size_t j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

namespace {

struct FamilyEntry {
    VertexSet set;  // local ids
    std::size_t crossings;
};

void zero_one_crossing_families(const Forest& f, std::vector<FamilyEntry>& out0,
                                std::vector<FamilyEntry>& out1) {
    const std::size_t n = f.vertex_count();
    const auto comp = f.piece_labels({});
    const std::size_t kappa = f.kappa();
    if (kappa > 20) throw Error("forest has too many components for subset expansion");

    std::vector<VertexSet> comp_sets(kappa, VertexSet(n));
    for (std::size_t v = 0; v < n; ++v) comp_sets[comp[v]].set(v);

    std::set<VertexSet> seen0;
    if (kappa >= 2) {
        for (std::uint32_t mask = 1; mask + 1 < (1u << kappa); ++mask) {
            VertexSet a(n);
            for (std::size_t c = 0; c < kappa; ++c)
                if ((mask >> c) & 1u) a = a | comp_sets[c];
            seen0.insert(a);
        }
    }
    for (auto& s : seen0) out0.push_back({s, 0});

    std::set<VertexSet> seen1;
    for (std::size_t ei = 0; ei < f.edge_count(); ++ei) {
        const auto pieces = f.piece_labels({ei});
        const auto [eu, ev] = f.edges()[ei];
        VertexSet side_u(n);
        for (std::size_t v = 0; v < n; ++v)
            if (pieces[v] == pieces[eu]) side_u.set(v);
        VertexSet side_v(n);
        for (std::size_t v = 0; v < n; ++v)
            if (pieces[v] == pieces[ev]) side_v.set(v);
        const std::size_t home = comp[eu];  // == comp[ev]
        // whole components other than the edge's own
        std::vector<std::size_t> others;
        for (std::size_t c = 0; c < kappa; ++c)
            if (c != home) others.push_back(c);
        const std::uint32_t lim = 1u << others.size();
        for (std::uint32_t mask = 0; mask < lim; ++mask) {
            VertexSet u_union(n);
            for (std::size_t t = 0; t < others.size(); ++t)
                if ((mask >> t) & 1u) u_union = u_union | comp_sets[others[t]];
            seen1.insert(side_u | u_union);
            seen1.insert(side_v | u_union);
        }
    }
    for (auto& s : seen1) out1.push_back({s, 1});
}

}  // namespace

std::pair<std::vector<VertexSet>, std::vector<VertexSet>> forest_crossing_families(
    const Forest& f) {
    std::vector<FamilyEntry> f0, f1;
    zero_one_crossing_families(f, f0, f1);
    std::pair<std::vector<VertexSet>, std::vector<VertexSet>> out;
    for (auto& e : f0) out.first.push_back(std::move(e.set));
    for (auto& e : f1) out.second.push_back(std::move(e.set));
    return out;
}

namespace {

std::size_t theta_cap(std::size_t cap_const, std::size_t k, double n, double exponent) {
    const double v = static_cast<double>(cap_const) * std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(k, 40))) *
                     std::pow(n, exponent);
    if (v >= 9e18) return SIZE_MAX;
    return static_cast<std::size_t>(std::ceil(v));
}

MkResult component_groupings(const WeightedGraph& g, const std::vector<VertexId>& orig_of,
                             std::size_t n0, std::size_t k) {
    const auto labels = g.component_labels();
    const std::size_t kappa = g.component_count();
    if (kappa > 22)
        throw Error("too many components: the zero-weight k-cut family is astronomically large");
    MkResult res;
    for_each_grouping(kappa, k, [&](const std::vector<std::size_t>& group_of_comp) {
        std::vector<std::size_t> vgroup(g.vertex_count());
        for (std::size_t v = 0; v < g.vertex_count(); ++v) vgroup[v] = group_of_comp[labels[v]];
        res.absorb(0, partition_from_labels(n0, orig_of, vgroup, k));
    });
    return res;
}

Partition translate_partition(const Partition& local, const std::vector<VertexId>& orig_of,
                              std::size_t n0) {
    std::vector<VertexSet> parts;
    parts.reserve(local.parts().size());
    for (const auto& p : local.parts()) {
        VertexSet t(n0);
        for (auto v : p.elements()) t.set(orig_of[v]);
        parts.push_back(std::move(t));
    }
    return Partition(std::move(parts));
}

}  // namespace

MkResult min_kcut(const BranchState& st, const ScheduleConfig& cfg, std::uint64_t seed,
                  Telemetry* telemetry, Exec exec) {
    Telemetry scratch;
    Telemetry& tel = telemetry ? *telemetry : scratch;
    auto& depth = tel.at_depth(st.depth);
    ++depth.calls;

    MkResult res;
    const std::size_t n = st.g.vertex_count();
    if (st.k == 0 || n < st.k) {
        ++depth.degenerate;
        return res;
    }
    if (st.k == 1) {
        ++depth.degenerate;
        std::vector<std::size_t> vgroup(n, 0);
        res.absorb(0, partition_from_labels(st.n0, st.orig_of, vgroup, 1));
        return res;
    }
    const std::size_t kappa_g = st.g.component_count();
    if (kappa_g >= st.k) {
        ++depth.degenerate;
        return component_groupings(st.g, st.orig_of, st.n0, st.k);
    }

    if (st.k < cfg.base_k) {
        ++depth.karger_base;
        KsResult ks = karger_stein_min_kcut(st.g, st.k, cfg, derive_stream(seed, 0xba5e), exec);
        for (const auto& p : ks.partitions)
            res.absorb(ks.weight, translate_partition(p, st.orig_of, st.n0));
        return res;
    }

    const Frac z = budget_z(st.k, st.s, cfg);
    if (z < 0) {
        ++depth.brute_force;
        if (st.s > st.f.edge_count() || st.s + st.f.kappa() < st.k) return res;
        for (const auto& p : valid_partitions(st.g, st.f, st.s, st.k)) {
            const Weight w = partition_weight(st.g, p);
            res.absorb(w, translate_partition(p, st.orig_of, st.n0));
        }
        return res;
    }

    ++depth.branched;
    depth.note_phi(potential_phi(st.k, st.s, st.k0, cfg));

    // Candidate families A^0 .. A^s by forest-crossing count.
    std::vector<std::vector<FamilyEntry>> families(st.s + 1);
    {
        std::vector<FamilyEntry> f0, f1;
        zero_one_crossing_families(st.f, f0, f1);
        families[0] = std::move(f0);
        if (st.s >= 1) families[1] = std::move(f1);
    }
    const double nd = static_cast<double>(n);
    const NormContext norm{st.norm.opt_upper, st.k};
    auto enum_family = [&](std::size_t ell, const Frac& beta, std::size_t cap, std::uint64_t salt) {
        if (ell > st.s) return;
        auto cuts = enum_cuts(st.g, norm, beta, cap, cfg, derive_stream(seed, salt), exec);
        for (auto& c : cuts) {
            const std::size_t cross = forest_crossing(st.f, c.set);
            c.forest_crossings = static_cast<int>(cross);
            if (cross == ell) families[ell].push_back({c.set, cross});
        }
    };
    enum_family(2, 3 - cfg.gamma, theta_cap(cfg.cap_const, st.k, nd, 1.0), 2);
    enum_family(3, 4 - cfg.gamma, theta_cap(cfg.cap_const, st.k, nd, 2.75), 3);
    enum_family(4, Frac(14, 3) - cfg.gamma, theta_cap(cfg.cap_const, st.k, nd, 3.75), 4);
    for (std::size_t ell = 5; ell <= st.s; ++ell)
        enum_family(ell, beta_ell(st.k, st.s, cfg, Frac(static_cast<long long>(ell))), SIZE_MAX,
                    ell);

    for (std::size_t ell = 0; ell <= st.s; ++ell) {
        if (families[ell].empty()) continue;
        depth.family_sizes[ell] += families[ell].size();
        std::size_t idx = 0;
        for (const auto& cand : families[ell]) {
            ++depth.candidates;
            const std::size_t remaining = n - cand.set.count();
            ++idx;
            if (remaining < st.k - 1) continue;
            BranchState child;
            child.g = delete_vertices(st.g, cand.set);
            child.f = forest_restrict(st.f, cand.set);
            child.n0 = st.n0;
            child.k = st.k - 1;
            child.s = st.s - ell;
            child.k0 = st.k0;
            child.norm = NormContext{0, st.k - 1};  // self-normalize below the root
            child.depth = st.depth + 1;
            const auto cmap = compaction_map(n, cand.set);
            child.orig_of.resize(remaining);
            for (std::size_t v = 0; v < n; ++v)
                if (cmap[v] != WeightedGraph::npos) child.orig_of[cmap[v]] = st.orig_of[v];
            assert(child.s + child.f.kappa() <= st.s + st.f.kappa());

            MkResult sub = min_kcut(child, cfg, derive_stream(seed, ell, idx), &tel, exec);
            if (sub.weight == UINT64_MAX) continue;
            const Weight border = boundary_weight(st.g, cand.set);
            VertexSet a_orig(st.n0);
            for (auto v : cand.set.elements()) a_orig.set(st.orig_of[v]);
            for (const auto& p : sub.partitions) {
                std::vector<VertexSet> parts = p.parts();
                parts.push_back(a_orig);
                res.absorb(border + sub.weight, Partition(std::move(parts)));
            }
        }
    }
    return res;
}

EnumerateResult enumerate_min_kcuts(const WeightedGraph& g, std::size_t k,
                                    const ScheduleConfig& cfg, std::uint64_t seed, Exec exec) {
    const std::size_t n = g.vertex_count();
    if (k == 0) throw Error("k must be positive");
    if (k > n) throw TooFewVerticesError("k exceeds the vertex count");

    EnumerateResult out;
    std::vector<VertexId> ident(n);
    std::iota(ident.begin(), ident.end(), 0);

    if (k == 1) {
        std::vector<std::size_t> vgroup(n, 0);
        out.partitions.insert(partition_from_labels(n, ident, vgroup, 1));
        out.weight = 0;
        return out;
    }
    if (k == n) {
        std::vector<std::size_t> vgroup(n);
        std::iota(vgroup.begin(), vgroup.end(), 0);
        out.partitions.insert(partition_from_labels(n, ident, vgroup, n));
        out.weight = g.total_weight();
        return out;
    }
    const std::size_t kappa = g.component_count();
    if (kappa >= k) {
        MkResult res = component_groupings(g, ident, n, k);
        out.weight = res.weight;
        out.partitions = std::move(res.partitions);
        return out;
    }
    if (kappa > 1) throw DisconnectedError();

    KsResult ks = karger_stein_min_kcut(g, k, cfg, derive_stream(seed, 0x12a9), exec);
    out.ks_repetitions = ks.repetitions;
    MkResult pool;
    for (const auto& p : ks.partitions) pool.absorb(ks.weight, p);

    // Below base_k every MinKCut(G,k,T,s) call takes the Karger-Stein base
    // case on this same graph, so the tree loop would only repeat the run
    // above.
    if (k >= cfg.base_k) {
        std::size_t count = pack_size_for(k, g.edge_count(), cfg);
        if (cfg.tree_cap) count = std::min(count, cfg.tree_cap);
        const auto trees = greedy_tree_pack(g, count);
        out.trees_packed = trees.size();
        for (std::size_t ti = 0; ti < trees.size(); ++ti) {
            for (std::size_t s = k - 1; s <= 2 * k - 2; ++s) {
                if (s > trees[ti].edge_count()) break;
                BranchState st = BranchState::top_level(g, trees[ti], k, s, pool.weight);
                MkResult r =
                    min_kcut(st, cfg, derive_stream(seed, ti, s), &out.telemetry, exec);
                pool.absorb(r);  // best-so-far tightens opt_upper for later runs
            }
        }
    }
    out.weight = pool.weight;
    out.partitions = std::move(pool.partitions);
    return out;
}

}  // namespace kcut
