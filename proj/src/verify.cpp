#include "kcut/verify.hpp"

#include "kcut/contraction.hpp"
#include "kcut/generators.hpp"
#include "kcut/graph.hpp"
#include "kcut/minkcut.hpp"
#include "kcut/oracle.hpp"
#include "kcut/schedule.hpp"
#include "kcut/set_system.hpp"
#include "kcut/tree_packing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>

namespace kcut {

namespace {

using Clock = std::chrono::steady_clock;

double binomial(std::size_t n, std::size_t k) {
    double r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
    return r;
}

// ---- criterion 1 & 10 share the instance list ----

struct Instance {
    WeightedGraph g;
    std::size_t n;
    std::uint64_t seed;
};

std::vector<Instance> criterion1_instances(std::uint64_t seed) {
    std::vector<Instance> out;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = 4 + (i % 4);  // 4..7
        const std::uint64_t s = derive_stream(seed, 0xc1, i);
        out.push_back({make_random_connected(n, 1, 5, s), n, s});
    }
    return out;
}

ScheduleConfig criterion1_config() {
    ScheduleConfig cfg = ScheduleConfig::with_gamma(Frac(1, 20));
    cfg.base_k = 2;
    return cfg;
}

CriterionResult criterion1(std::uint64_t seed, Exec exec) {
    CriterionResult r{1, "oracle equivalence (100 random graphs, k in {2,3,4})", true, "", 0};
    const auto cfg = criterion1_config();
    auto instances = criterion1_instances(seed);
    std::size_t checked = 0, failed = 0;
    std::ostringstream detail;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (std::size_t k = 2; k <= 4; ++k) {
            if (k > instances[i].n) continue;
            ++checked;
            const auto expected = brute_min_kcuts(instances[i].g, k, exec);
            const auto got =
                enumerate_min_kcuts(instances[i].g, k, cfg, derive_stream(seed, 0xe1, i, k), exec);
            if (got.weight != expected.weight || got.partitions != expected.partitions) {
                ++failed;
                if (failed <= 3)
                    detail << " [instance " << i << " k=" << k << ": got w=" << got.weight << " x"
                           << got.partitions.size() << ", want w=" << expected.weight << " x"
                           << expected.partitions.size() << "]";
            }
        }
    }
    r.pass = failed == 0;
    std::ostringstream os;
    os << checked << " instance/k pairs, " << failed << " mismatches" << detail.str();
    r.detail = os.str();
    return r;
}

CriterionResult criterion2(std::uint64_t seed, Exec exec) {
    CriterionResult r{2, "cycle closed form: weight k, C(n,k) cuts (5<=n<=12)", true, "", 0};
    ScheduleConfig cfg;  // defaults
    std::ostringstream detail;
    std::size_t checked = 0, failed = 0;
    for (std::size_t n = 5; n <= 12; ++n) {
        for (std::size_t k = 2; k <= 4 && k < n; ++k) {
            ++checked;
            const auto got = enumerate_min_kcuts(make_cycle(n), k, cfg,
                                                 derive_stream(seed, 0xc2, n, k), exec);
            const auto want = static_cast<std::size_t>(std::llround(binomial(n, k)));
            if (got.weight != k || got.partitions.size() != want) {
                ++failed;
                if (failed <= 4)
                    detail << " [C" << n << " k=" << k << ": w=" << got.weight << " count="
                           << got.partitions.size() << " want " << k << "/" << want << "]";
            }
        }
    }
    r.pass = failed == 0;
    std::ostringstream os;
    os << checked << " (n,k) pairs, " << failed << " mismatches" << detail.str();
    r.detail = os.str();
    return r;
}

// Independent quadrature of the potential integrand (test-side oracle).
double phi_integrand(double t, double k0, double theta) {
    const double second = 4.0 * t / (6.5 * t + 4.875 * k0) * (1.0 - theta);
    return std::min(1.0 / 9.0, second);
}

double simpson(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    return (b - a) / 6.0 * (f(a) + 4.0 * f(c) + f(b));
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double eps,
                        double whole, int depth) {
    const double c = 0.5 * (a + b);
    const double left = simpson(f, a, c), right = simpson(f, c, b);
    if (depth <= 0 || std::abs(left + right - whole) <= 15 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, c, eps / 2, left, depth - 1) +
           adaptive_simpson(f, c, b, eps / 2, right, depth - 1);
}

double phi_quadrature(double z, std::size_t k0, const ScheduleConfig& cfg) {
    if (z <= 0) return 0.0;
    const double theta = to_double(cfg.budget_slack());
    auto f = [&](double t) { return phi_integrand(t, static_cast<double>(k0), theta); };
    return adaptive_simpson(f, 0.0, z, 1e-13 * std::max(1.0, z), simpson(f, 0.0, z), 60);
}

CriterionResult criterion3(std::uint64_t seed, Exec) {
    CriterionResult r{3, "potential constant 0.0192055688 and quadrature agreement", true, "", 0};
    std::ostringstream detail;

    ScheduleConfig zero = ScheduleConfig::with_gamma(0);
    const std::size_t k0 = 1000000;
    const double phi = potential_phi(k0, 2 * k0 - 2, k0, zero);
    const double ratio = phi / static_cast<double>(k0);
    const double target = 0.0192055688;
    const bool limit_ok = std::abs(ratio - target) <= 1e-6;
    const double exponent = 2.0 - target;
    const bool exponent_ok = exponent <= 1.981;
    detail << "phi(k0,2k0-2)/k0 = " << ratio << " (target " << target << "), exponent "
           << exponent << " <= 1.981";

    // Closed form vs quadrature on 1000 random (k, s, k0) with z >= 0
    // (negative budgets define Phi as 1, so there is nothing to integrate).
    std::size_t bad = 0, done = 0;
    SplitMix64 rng(derive_stream(seed, 0xc3));
    const Frac gammas[3] = {Frac(0), Frac(1, 1000), Frac(1, 100)};
    while (done < 1000) {
        ScheduleConfig cfg = ScheduleConfig::with_gamma(gammas[done % 3]);
        const std::size_t kk0 = 2 + rng.below(300);
        const std::size_t k = 2 + rng.below(kk0 - 1);
        const std::size_t smin = (7 * k + 3) / 4;
        const std::size_t s = smin + rng.below(2 * k - smin + 1);
        const Frac z = budget_z(k, s, cfg);
        if (z < 0) continue;
        ++done;
        const double closed = potential_phi(k, s, kk0, cfg);
        const double quad = phi_quadrature(to_double(z), kk0, cfg);
        const double denom = std::max({1e-30, std::abs(closed), std::abs(quad)});
        if (std::abs(closed - quad) / denom > 1e-9) {
            ++bad;
            if (bad <= 3)
                detail << " [k=" << k << " s=" << s << " k0=" << kk0 << ": closed=" << closed
                       << " quad=" << quad << "]";
        }
    }
    detail << "; quadrature mismatches " << bad << "/" << done;
    r.pass = limit_ok && exponent_ok && bad == 0;
    r.detail = detail.str();
    return r;
}

CriterionResult criterion4(std::uint64_t, Exec exec) {
    CriterionResult r{4, "potential-function inequalities (five items) on k in [2,200]", true, "", 0};
    const Frac gammas[3] = {Frac(0), Frac(1, 1000), Frac(1, 100)};
    std::size_t points = 0, violations = 0;
    std::ostringstream detail;
    const double tol = 1e-9;
    for (const auto& gm : gammas) {
        ScheduleConfig cfg = ScheduleConfig::with_gamma(gm);
        std::vector<std::size_t> viol_per_k(199, 0);
        parallel_for(199, exec, [&](std::size_t ki) {
            const std::size_t k = ki + 2;
            const std::size_t smin =
                (7 * k + 3) / 4;
            for (std::size_t s = smin; s <= 2 * k; ++s) {
                if (budget_z(k, s, cfg) < 0) continue;
                for (std::size_t k0 : {k, static_cast<std::size_t>(200)}) {
                    const double phi = potential_phi(k, s, k0, cfg);
                    auto le = [&](double a, double b) { return a <= b + tol * std::max(1.0, std::abs(b)); };
                    if (!le(phi, static_cast<double>(s))) ++viol_per_k[ki];                     // item 1
                    if (!le(phi, potential_phi(k, s - 1, k0, cfg) + 1.0)) ++viol_per_k[ki];     // item 2
                    if (!le(phi, potential_phi(k - 1, s, k0, cfg)) ||
                        !le(phi, potential_phi(k - 1, s - 1, k0, cfg)))
                        ++viol_per_k[ki];                                                        // item 3
                    for (std::size_t ell = 2; ell <= s; ++ell) {                                 // item 4
                        const Frac w = beta_ell(k, s, cfg, Frac(static_cast<long long>(ell)));
                        const double gain = static_cast<double>(ell) - to_double(branch_cap_d(w, cfg));
                        if (!le(phi, potential_phi(k - 1, s - ell, k0, cfg) + gain)) ++viol_per_k[ki];
                    }
                    const Frac ginv = beta_ell(k, s, cfg, Frac(static_cast<long long>(s)));
                    if (!le(to_double(ginv), static_cast<double>(s) - phi + 3.0)) ++viol_per_k[ki];  // item 5
                }
            }
        });
        for (std::size_t ki = 0; ki < 199; ++ki) violations += viol_per_k[ki];
        for (std::size_t k = 2; k <= 200; ++k) {
            const std::size_t smin =
                (7 * k + 3) / 4;
            for (std::size_t s = smin; s <= 2 * k; ++s)
                if (!(budget_z(k, s, cfg) < 0)) points += 2;  // two k0 values
        }
    }
    r.pass = violations == 0;
    detail << points << " grid points x 3 gammas, " << violations << " violations";
    r.detail = detail.str();
    return r;
}

CriterionResult criterion5(std::uint64_t, Exec exec) {
    CriterionResult r{5, "budget-gain ratio lower bound on the same grid", true, "", 0};
    const Frac gammas[3] = {Frac(0), Frac(1, 1000), Frac(1, 100)};
    std::size_t violations = 0, points = 0;
    std::ostringstream first;
    for (const auto& gm : gammas) {
        ScheduleConfig cfg = ScheduleConfig::with_gamma(gm);
        std::vector<std::size_t> viol_per_k(199, 0);
        std::vector<std::size_t> pts_per_k(199, 0);
        parallel_for(199, exec, [&](std::size_t ki) {
            const std::size_t k = ki + 2;
            const std::size_t smin =
                (7 * k + 3) / 4;
            for (std::size_t s = smin; s <= 2 * k; ++s) {
                const Frac z = budget_z(k, s, cfg);
                if (z < 0) continue;
                const Frac bound = gain_bound(z, k, cfg);
                // The ratio is piecewise monotone in w between the d(w)
                // breakpoints for fixed ell, so the on-line points (one per
                // integer ell) plus the breakpoints and their right
                // neighborhoods are the binding sample.
                std::vector<Frac> ws;
                for (std::size_t ell = 2; ell <= s; ++ell)
                    ws.push_back(beta_ell(k, s, cfg, Frac(static_cast<long long>(ell))));
                const Frac eps(1, 1000);
                for (const Frac& b :
                     {Frac(3) - cfg.gamma, Frac(4) - cfg.gamma, Frac(14, 3) - cfg.gamma}) {
                    ws.push_back(b);
                    ws.push_back(b + eps);
                }
                const Frac wmax = beta_ell(k, s, cfg, Frac(static_cast<long long>(s)));
                for (const Frac& w : ws) {
                    if (w <= 0 || w > wmax) continue;
                    Frac gw = line_g(k, s, cfg, w);
                    // ell = max(2, ceil(g(w)))
                    BigInt num = boost::multiprecision::numerator(gw);
                    BigInt den = boost::multiprecision::denominator(gw);
                    BigInt up = num >= 0 ? BigInt((num + den - 1) / den) : BigInt(num / den);
                    long long ell = up.convert_to<long long>();
                    if (ell < 2) ell = 2;
                    if (ell > static_cast<long long>(s)) continue;
                    ++pts_per_k[ki];
                    const Frac ratio = gain_ratio(w, Frac(ell), k, s, k, cfg);
                    if (ratio < bound) {
                        ++viol_per_k[ki];
#ifdef _OPENMP
#pragma omp critical(kcut_c5_first)
#endif
                        if (first.str().empty())
                            first << " [k=" << k << " s=" << s << " w=" << to_double(w)
                                  << " ell=" << ell << " ratio=" << to_double(ratio)
                                  << " bound=" << to_double(bound) << "]";
                    }
                }
            }
        });
        for (std::size_t ki = 0; ki < 199; ++ki) {
            violations += viol_per_k[ki];
            points += pts_per_k[ki];
        }
    }
    r.pass = violations == 0;
    std::ostringstream os;
    os << points << " sampled (w,ell) points x 3 gammas, " << violations << " violations"
       << first.str();
    r.detail = os.str();
    return r;
}

CriterionResult criterion6(std::uint64_t seed, Exec exec) {
    CriterionResult r{6, "enumeration cap and superset (50 graphs, h in {2,3})", true, "", 0};
    ScheduleConfig cfg;
    std::size_t checked = 0, cap_fail = 0, superset_fail = 0;
    std::ostringstream detail;
    const Frac alphas[3] = {Frac(1), Frac(3, 2), Frac(2)};
    for (std::size_t i = 0; i < 50; ++i) {
        const std::size_t n = 4 + (i % 9);  // 4..12
        const auto g = make_random_connected(n, 1, 5, derive_stream(seed, 0xc6, i));
        for (std::size_t h : {2, 3}) {
            if (n < h) continue;
            const Weight opt_h = brute_min_kcuts(g, h, exec).weight;
            for (const auto& alpha : alphas) {
                ++checked;
                const Weight wmax = floor_to_u64(alpha * Frac(static_cast<long long>(opt_h)) /
                                                 Frac(static_cast<long long>(h)));
                const auto census = brute_cut_census(g, wmax, exec);
                const double cap = std::ldexp(1.0, static_cast<int>(h)) *
                                   std::pow(static_cast<double>(n), 2.0 * to_double(alpha));
                if (static_cast<double>(census.size()) > cap) {
                    ++cap_fail;
                    detail << " [cap: i=" << i << " h=" << h << " alpha=" << to_double(alpha)
                           << " count=" << census.size() << " cap=" << cap << "]";
                }
                const auto got =
                    enum_small_cuts(g, h, alpha, cfg, derive_stream(seed, 0xe6, i, h), exec);
                std::set<VertexSet> got_sets;
                for (const auto& c : got.cuts) got_sets.insert(c.set);
                for (const auto& s : census)
                    if (!got_sets.count(s)) {
                        ++superset_fail;
                        if (superset_fail <= 3)
                            detail << " [missing: i=" << i << " h=" << h
                                   << " alpha=" << to_double(alpha) << " set=" << s.to_bitstring()
                                   << "]";
                        break;
                    }
            }
        }
    }
    r.pass = cap_fail == 0 && superset_fail == 0;
    std::ostringstream os;
    os << checked << " (graph,h,alpha) runs, " << cap_fail << " cap breaches, " << superset_fail
       << " superset misses" << detail.str();
    r.detail = os.str();
    return r;
}

CriterionResult criterion7(std::uint64_t seed, Exec) {
    CriterionResult r{7, "crossing pairs at 4n-3 ranges; co-singleton family has none", true, "",
                      0};
    std::size_t fail_found = 0, fail_cosingleton = 0;
    SplitMix64 rng(derive_stream(seed, 0xc7));
    for (std::size_t trial = 0; trial < 200; ++trial) {
        const std::size_t n = 4 + (trial % 13);  // 4..16
        RangeSpace rs;
        rs.n = n;
        std::set<VertexSet> seen;
        while (seen.size() < 4 * n - 3) {
            VertexSet s(n);
            for (std::size_t v = 0; v < n; ++v)
                if (rng.next() & 1u) s.set(v);
            seen.insert(s);
        }
        rs.ranges.assign(seen.begin(), seen.end());
        auto pair = find_crossing_pair(rs);
        bool ok = pair.has_value();
        if (ok) {
            const auto& a = rs.ranges[pair->first];
            const auto& b = rs.ranges[pair->second];
            ok = !a.minus(b).empty() && !b.minus(a).empty() && !(a & b).empty() &&
                 !(a | b).complement().empty();
        }
        if (!ok) ++fail_found;
    }
    for (std::size_t n = 4; n <= 16; ++n) {
        RangeSpace rs;
        rs.n = n;
        for (std::size_t v = 0; v < n; ++v) rs.ranges.push_back(VertexSet::singleton(n, v));
        for (std::size_t v = 0; v < n; ++v)
            rs.ranges.push_back(VertexSet::singleton(n, v).complement());
        rs.ranges.push_back(VertexSet(n));
        rs.ranges.push_back(VertexSet::full(n));
        if (find_crossing_pair(rs).has_value()) ++fail_cosingleton;
    }
    r.pass = fail_found == 0 && fail_cosingleton == 0;
    std::ostringstream os;
    os << "200 random systems (" << fail_found << " without verified pair), co-singleton misses "
       << fail_cosingleton;
    r.detail = os.str();
    return r;
}

CriterionResult criterion8(std::uint64_t, Exec exec) {
    CriterionResult r{8, "triples: 3-subsets of [10] have no 8-cell triple; 2^[8] does", true, "",
                      0};
    RangeSpace tri;
    tri.n = 10;
    for (std::size_t a = 0; a < 10; ++a)
        for (std::size_t b = a + 1; b < 10; ++b)
            for (std::size_t c = b + 1; c < 10; ++c) {
                VertexSet s(10);
                s.set(a);
                s.set(b);
                s.set(c);
                tri.ranges.push_back(s);
            }
    const bool none = !find_triple(tri, 8, 0, exec).has_value();
    const int vc_tri = dual_vc_dimension(tri);

    RangeSpace pow;
    pow.n = 8;
    for (std::uint32_t mask = 1; mask < 256; ++mask) {
        VertexSet s(8);
        for (std::size_t v = 0; v < 8; ++v)
            if ((mask >> v) & 1u) s.set(v);
        pow.ranges.push_back(s);
    }
    const auto full_triple = find_triple(pow, 8, 0, exec);
    const int vc_pow = dual_vc_dimension(pow);

    r.pass = none && vc_tri == 2 && full_triple.has_value() && vc_pow >= 3;
    std::ostringstream os;
    os << "3-subsets: 8-cell triple " << (none ? "absent" : "FOUND") << ", dual VC " << vc_tri
       << "; powerset[8]: 8-cell triple " << (full_triple ? "found" : "MISSING") << ", dual VC "
       << vc_pow;
    r.detail = os.str();
    return r;
}

CriterionResult criterion9(std::uint64_t seed, Exec exec) {
    CriterionResult r{9, "tree packing covers an optimal cut with <= 2k-2 crossings (soft 99%)",
                      true, "", 0};
    ScheduleConfig cfg;
    std::size_t total = 0, good = 0;
    std::ostringstream failures;
    for (std::size_t i = 0; i < 50; ++i) {
        const std::size_t n = 5 + (i % 6);  // 5..10
        const auto g = make_random_connected(n, 1, 5, derive_stream(seed, 0xc9, i));
        for (std::size_t k : {2, 3}) {
            ++total;
            const auto opt = brute_min_kcuts(g, k, exec);
            const auto trees = greedy_tree_pack(g, pack_size_for(k, g.edge_count(), cfg));
            bool covered = false;
            for (const auto& p : opt.partitions) {
                const auto [idx, cross] = best_tree_crossing(trees, p);
                (void)idx;
                if (cross <= 2 * k - 2) {
                    covered = true;
                    break;
                }
            }
            good += covered;
            if (!covered) {
                failures << "\n  uncovered instance i=" << i << " k=" << k << " n=" << n << ":";
                std::ostringstream dump;
                for (const auto& e : g.edges())
                    dump << " (" << e.u << "," << e.v << ")w" << e.w;
                failures << dump.str();
            }
        }
    }
    const double rate = static_cast<double>(good) / static_cast<double>(total);
    r.pass = rate >= 0.99;
    std::ostringstream os;
    os << good << "/" << total << " covered (" << 100.0 * rate << "%)" << failures.str();
    r.detail = os.str();
    return r;
}

CriterionResult criterion10(std::uint64_t seed, Exec exec) {
    CriterionResult r{10, "scale invariance under x2, x7, x1000", true, "", 0};
    const auto cfg = criterion1_config();
    auto instances = criterion1_instances(seed);
    std::size_t checked = 0, failed = 0;
    std::ostringstream detail;
    const Weight factors[3] = {2, 7, 1000};
    for (std::size_t i = 0; i < instances.size(); ++i) {
        for (std::size_t k = 2; k <= 4; ++k) {
            if (k > instances[i].n) continue;
            const auto base =
                enumerate_min_kcuts(instances[i].g, k, cfg, derive_stream(seed, 0xe1, i, k), exec);
            for (Weight f : factors) {
                ++checked;
                std::vector<Edge> scaled = instances[i].g.edges();
                for (auto& e : scaled) e.w *= f;
                WeightedGraph gs(instances[i].g.vertex_count(), std::move(scaled));
                const auto got =
                    enumerate_min_kcuts(gs, k, cfg, derive_stream(seed, 0xe1, i, k), exec);
                if (got.partitions != base.partitions || got.weight != base.weight * f) {
                    ++failed;
                    if (failed <= 3)
                        detail << " [i=" << i << " k=" << k << " x" << f << "]";
                }
            }
        }
    }
    r.pass = failed == 0;
    std::ostringstream os;
    os << checked << " scaled runs, " << failed << " mismatches" << detail.str();
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream* progress) {
    using CriterionFn = CriterionResult (*)(std::uint64_t, Exec);
    const CriterionFn fns[10] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                 criterion6, criterion7, criterion8, criterion9, criterion10};
    std::vector<CriterionResult> results;
    for (int id = 1; id <= 10; ++id) {
        if (!opt.only.empty() &&
            std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end())
            continue;
        const auto t0 = Clock::now();
        CriterionResult res = fns[id - 1](opt.seed, opt.exec);
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (progress)
            (*progress) << (res.pass ? "PASS" : "FAIL") << " criterion " << res.id << ": "
                        << res.name << " — " << res.detail << " (" << res.seconds << "s)"
                        << std::endl;
        results.push_back(std::move(res));
    }
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace kcut
