#include "kcut/set_system.hpp"

#include "kcut/errors.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

namespace kcut {

void RangeSpace::validate() const {
    std::set<VertexSet> seen;
    for (const auto& r : ranges) {
        if (r.universe_size() != n) throw Error("range universe mismatch");
        if (!seen.insert(r).second) throw Error("duplicate range");
    }
}

VennOccupancy venn_occupancy(const VertexSet& r1, const VertexSet& r2, const VertexSet& r3) {
    const VertexSet sets[3] = {r1, r2, r3};
    const VertexSet comps[3] = {r1.complement(), r2.complement(), r3.complement()};
    VennOccupancy occ;
    for (unsigned cell = 0; cell < 8; ++cell) {
        VertexSet probe = (cell & 1u) ? sets[0] : comps[0];
        probe = probe & ((cell & 2u) ? sets[1] : comps[1]);
        probe = probe & ((cell & 4u) ? sets[2] : comps[2]);
        if (!probe.empty()) occ.cells |= static_cast<std::uint8_t>(1u << cell);
    }
    return occ;
}

Frac witness_fraction(const std::vector<VertexSet>& ranges,
                      const std::vector<std::uint32_t>& family) {
    if (family.empty()) throw Error("witness_fraction: empty family");
    const std::size_t k = ranges.size();
    if (k == 0 || k > 20) throw Error("witness_fraction: k out of range");
    const std::size_t n = ranges[0].universe_size();
    std::unordered_set<std::uint32_t> witnessed;
    for (std::size_t x = 0; x < n; ++x) {
        std::uint32_t sig = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (ranges[i].test(x)) sig |= (1u << i);
        witnessed.insert(sig);
    }
    long long hit = 0;
    for (auto s : family) hit += witnessed.count(s);
    return Frac(hit, static_cast<long long>(family.size()));
}

namespace {

bool pair_crosses(const VertexSet& a, const VertexSet& b) {
    return !a.minus(b).empty() && !b.minus(a).empty() && !(a & b).empty() &&
           !(a | b).complement().empty();
}

}  // namespace

std::optional<std::pair<std::size_t, std::size_t>> find_crossing_pair(const RangeSpace& rs) {
    if (rs.n == 0 || rs.ranges.size() < 2) return std::nullopt;

    // Fix x = 0 and replace every range containing it by its complement; the
    // images all avoid x, so a laminarity violation among them is a crossing
    // pair in X. R and its complement share an image; keeping one original
    // per image is enough because crossing survives complementation.
    struct Img {
        VertexSet set;
        std::size_t orig;
        std::size_t size;
    };
    std::vector<Img> imgs;
    imgs.reserve(rs.ranges.size());
    {
        std::set<VertexSet> dedup;
        for (std::size_t i = 0; i < rs.ranges.size(); ++i) {
            VertexSet im = rs.ranges[i].test(0) ? rs.ranges[i].complement() : rs.ranges[i];
            if (dedup.insert(im).second) imgs.push_back({im, i, im.count()});
        }
    }
    std::sort(imgs.begin(), imgs.end(), [](const Img& a, const Img& b) {
        return a.size != b.size ? a.size > b.size : a.set < b.set;
    });

    // innermost[e] = processing index of the last processed image containing e.
    std::vector<long> innermost(rs.n, -1);
    for (std::size_t idx = 0; idx < imgs.size(); ++idx) {
        const auto elems = imgs[idx].set.elements();
        if (elems.empty()) continue;
        const long p0 = innermost[elems[0]];
        long other = p0;
        for (auto e : elems) {
            if (innermost[e] != p0) {
                other = innermost[e];
                break;
            }
        }
        if (other != p0) {
            // Violation: the later-processed of the two innermost sets
            // crosses imgs[idx].
            const long q = std::max(p0, other);
            std::size_t a = imgs[idx].orig, b = imgs[static_cast<std::size_t>(q)].orig;
            if (a > b) std::swap(a, b);
            if (!pair_crosses(rs.ranges[a], rs.ranges[b]))
                throw Error("internal: crossing pair failed verification");
            return std::make_pair(a, b);
        }
        for (auto e : elems) innermost[e] = static_cast<long>(idx);
    }
    return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_triple(const RangeSpace& rs, int min_cells,
                                                      std::uint8_t forbidden_cells, Exec exec) {
    if (min_cells < 4 || min_cells > 8) throw Error("find_triple: min_cells must be in 4..8");
    const std::size_t m = rs.ranges.size();
    if (m < 3) return std::nullopt;

    // Sharded by first index; the answer is the lexicographically smallest hit
    // regardless of scheduling. best_i only prunes shards that cannot win.
    std::atomic<std::size_t> best_i{m};
    const int nthreads = exec == Exec::parallel ? max_threads() : 1;
    std::vector<std::optional<std::array<std::size_t, 3>>> local(nthreads);

    parallel_for(m, exec, [&](std::size_t i) {
#ifdef _OPENMP
        const int tid = exec == Exec::parallel ? omp_get_thread_num() : 0;
#else
        const int tid = 0;
#endif
        if (i + 2 >= m || i > best_i.load(std::memory_order_relaxed)) return;
        if (local[tid] && (*local[tid])[0] < i) return;
        const VertexSet& r1 = rs.ranges[i];
        for (std::size_t j = i + 1; j + 1 < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) {
                const auto occ = venn_occupancy(r1, rs.ranges[j], rs.ranges[k]);
                if (occ.count_outside(forbidden_cells) >= min_cells) {
                    if (!local[tid] || std::array<std::size_t, 3>{i, j, k} < *local[tid])
                        local[tid] = {{i, j, k}};
                    std::size_t cur = best_i.load(std::memory_order_relaxed);
                    while (i < cur && !best_i.compare_exchange_weak(cur, i)) {
                    }
                    return;  // first hit for this i is the best with this i
                }
            }
        }
    });

    std::optional<std::array<std::size_t, 3>> best;
    for (const auto& h : local)
        if (h && (!best || *h < *best)) best = h;
    return best;
}

namespace {

/// True when some extension of the chosen prefix to d ranges shatters all 2^d
/// cells. Prefix pruning: a prefix of j ranges must itself occupy all 2^j
/// cells.
bool shatter_search(const RangeSpace& rs, int d, std::vector<std::size_t>& chosen,
                    std::size_t from) {
    const int j = static_cast<int>(chosen.size());
    if (j == d) return true;
    for (std::size_t i = from; i < rs.ranges.size(); ++i) {
        chosen.push_back(i);
        const std::uint32_t all_cells = (1u << (1u << chosen.size())) - 1u;
        std::uint32_t cells = 0;
        for (std::size_t x = 0; x < rs.n && cells != all_cells; ++x) {
            std::uint32_t sig = 0;
            for (std::size_t t = 0; t < chosen.size(); ++t)
                if (rs.ranges[chosen[t]].test(x)) sig |= (1u << t);
            cells |= (1u << sig);
        }
        if (cells == all_cells && shatter_search(rs, d, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

int dual_vc_dimension(const RangeSpace& rs) {
    int best = 0;
    for (int d = 1; d <= 4; ++d) {
        if (rs.n < (1u << d)) break;  // 2^d nonempty cells need 2^d elements
        if (rs.ranges.size() < static_cast<std::size_t>(d)) break;
        std::vector<std::size_t> chosen;
        if (shatter_search(rs, d, chosen, 0))
            best = d;
        else
            break;  // shattering is monotone: no d-tuple means no (d+1)-tuple
    }
    return best;
}

RangeSpace read_range_space(std::istream& in) {
    RangeSpace rs;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        for (char c : line)
            if (c != '0' && c != '1') throw ParseError(lineno, "expected a 0/1 bitstring");
        if (rs.ranges.empty()) rs.n = line.size();
        if (line.size() != rs.n) throw ParseError(lineno, "bitstring length mismatch");
        rs.ranges.push_back(VertexSet::from_bitstring(line));
    }
    rs.validate();
    return rs;
}

void write_range_space(std::ostream& out, const RangeSpace& rs) {
    for (const auto& r : rs.ranges) out << r.to_bitstring() << '\n';
}

}  // namespace kcut
