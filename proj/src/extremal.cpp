#include "kcut/extremal.hpp"

#include "kcut/errors.hpp"
#include "kcut/minkcut.hpp"
#include "kcut/set_system.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace kcut {

std::vector<CensusRow> small_cut_census(const WeightedGraph& g, std::size_t k,
                                        const NormContext& norm, const std::vector<Frac>& thresholds,
                                        const ScheduleConfig& cfg, std::uint64_t seed, Exec exec) {
    std::vector<CensusRow> rows;
    rows.reserve(thresholds.size());
    const double n = static_cast<double>(g.vertex_count());
    const double two_k = std::ldexp(1.0, static_cast<int>(std::min<std::size_t>(k, 60)));
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        const Frac& beta = thresholds[i];
        CensusRow row;
        row.beta = beta;
        NormContext nc{norm.opt_upper, k};
        row.cuts = enum_cuts(g, nc, beta, SIZE_MAX, cfg, derive_stream(seed, i), exec);
        row.count = row.cuts.size();
        const Frac& gm = cfg.gamma;
        if (beta <= 3 - gm) {
            row.cap = two_k * n;
            row.cap_kind = "2^k n";
        } else if (beta <= Frac(10, 3) - gm) {
            row.cap = two_k * n * n;
            row.cap_kind = "2^k n^2";
        } else if (beta <= 4 - gm) {
            row.cap = two_k * std::pow(n, 2.75);
            row.cap_kind = "2^k n^(3-1/4)";
        } else if (beta <= Frac(14, 3) - gm) {
            row.cap = two_k * std::pow(n, 3.75);
            row.cap_kind = "2^k n^(4-1/4)";
        } else {
            row.cap = two_k * std::pow(n, to_double(beta));
            row.cap_kind = "2^k n^beta";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string census_csv(const WeightedGraph& g, std::size_t k, const std::vector<CensusRow>& rows) {
    std::ostringstream os;
    os << "n,k,beta,count,cap,cap_kind\n";
    for (const auto& r : rows)
        os << g.vertex_count() << ',' << k << ',' << to_double(r.beta) << ',' << r.count << ','
           << r.cap << ',' << r.cap_kind << '\n';
    return os.str();
}

namespace {

std::vector<std::size_t> parts_cut_by(const std::vector<VertexSet>& parts, const VertexSet& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].intersects(a) && !a.contains(parts[i])) out.push_back(i);
    return out;
}

void refine_all(std::vector<VertexSet>& parts, const VertexSet& a) {
    std::vector<VertexSet> next;
    next.reserve(parts.size() + 4);
    for (auto& p : parts) {
        VertexSet in = p & a;
        VertexSet outp = p.minus(a);
        if (!in.empty() && !outp.empty()) {
            next.push_back(std::move(in));
            next.push_back(std::move(outp));
        } else {
            next.push_back(std::move(p));
        }
    }
    parts = std::move(next);
}

void refine_one(std::vector<VertexSet>& parts, const VertexSet& a, std::size_t idx) {
    VertexSet in = parts[idx] & a;
    VertexSet outp = parts[idx].minus(a);
    parts[idx] = std::move(in);
    parts.push_back(std::move(outp));
}

}  // namespace

std::optional<AssembledCut> assemble_cheap_kcut(const WeightedGraph& g,
                                                const std::vector<CutRecord>& cuts, std::size_t k,
                                                const Frac& gamma, const NormContext& norm) {
    (void)gamma;
    const std::size_t n = g.vertex_count();
    if (k < 2 || n < k) return std::nullopt;
    std::vector<VertexSet> parts{VertexSet::full(n)};
    AssembledCut result;

    // Stage 1: grow by 2 (multi-component cut) or 3 (crossing bucket pair).
    while (parts.size() + 2 < k) {
        bool advanced = false;
        for (const auto& c : cuts) {
            if (parts_cut_by(parts, c.set).size() >= 2) {
                refine_all(parts, c.set);
                advanced = true;
                break;
            }
        }
        if (advanced) continue;

        // Bucket the one-component cutters by (part, intersection) and look
        // for a crossing pair of intersections within one part.
        for (std::size_t pi = 0; pi < parts.size() && !advanced; ++pi) {
            const auto members = parts[pi].elements();
            std::map<VertexSet, std::size_t> buckets;  // compacted X -> cut index
            std::vector<std::size_t> pos(n, 0);
            for (std::size_t t = 0; t < members.size(); ++t) pos[members[t]] = t;
            for (std::size_t ci = 0; ci < cuts.size(); ++ci) {
                const auto hit = parts_cut_by(parts, cuts[ci].set);
                if (hit.size() != 1 || hit[0] != pi) continue;
                VertexSet x(members.size());
                for (auto v : (parts[pi] & cuts[ci].set).elements()) x.set(pos[v]);
                buckets.emplace(x, ci);
            }
            if (buckets.size() < 2) continue;
            RangeSpace rs;
            rs.n = members.size();
            std::vector<std::size_t> owner;
            for (auto& [x, ci] : buckets) {
                rs.ranges.push_back(x);
                owner.push_back(ci);
            }
            if (auto pair = find_crossing_pair(rs)) {
                refine_all(parts, cuts[owner[pair->first]].set);
                refine_all(parts, cuts[owner[pair->second]].set);
                ++result.pair_steps;
                advanced = true;
            }
        }
        if (!advanced) return std::nullopt;  // supply exhausted
    }

    // Stage 2: single splits up to exactly k parts.
    while (parts.size() < k) {
        bool advanced = false;
        for (const auto& c : cuts) {
            const auto hit = parts_cut_by(parts, c.set);
            if (hit.empty()) continue;
            refine_one(parts, c.set, hit.front());
            ++result.single_steps;
            advanced = true;
            break;
        }
        if (!advanced) return std::nullopt;
    }

    // Stage 1 can overshoot; merge back down, preferring merges that remove
    // the most cut weight.
    while (parts.size() > k) {
        std::vector<std::size_t> part_of(n);
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (auto v : parts[i].elements()) part_of[v] = i;
        std::vector<std::vector<Weight>> between(parts.size(),
                                                 std::vector<Weight>(parts.size(), 0));
        for (const auto& e : g.edges()) {
            const auto a = part_of[e.u], b = part_of[e.v];
            if (a != b) between[std::min(a, b)][std::max(a, b)] += e.w;
        }
        std::size_t bi = 0, bj = 1;
        Weight best = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                if (between[i][j] > best) {
                    best = between[i][j];
                    bi = i;
                    bj = j;
                }
        parts[bi] = parts[bi] | parts[bj];
        parts.erase(parts.begin() + static_cast<long>(bj));
    }

    result.partition = Partition(parts);
    const Weight w = partition_weight(g, result.partition);
    result.normalized_weight =
        Frac(2 * static_cast<long long>(k)) * Frac(BigInt(w)) / Frac(BigInt(norm.opt_upper));
    return result;
}

}  // namespace kcut
