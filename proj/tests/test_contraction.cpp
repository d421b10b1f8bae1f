#include "kcut/contraction.hpp"
#include "kcut/generators.hpp"
#include "kcut/oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace kcut;

namespace {

bool is_cycle_arc(const VertexSet& s, std::size_t n) {
    const auto elems = s.elements();
    if (elems.empty() || elems.size() == n) return false;
    std::size_t breaks = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (s.test(v) && !s.test((v + 1) % n)) ++breaks;
    return breaks == 1;
}

}  // namespace

TEST_CASE("contraction_phase identity and tiny cases") {
    const auto c4 = make_cycle(4);
    auto [same, blocks] = contraction_phase(c4, 4, 123);
    CHECK(same.vertex_count() == 4);
    CHECK(same.edge_count() == c4.edge_count());
    CHECK(same.total_weight() == c4.total_weight());
    for (std::size_t v = 0; v < 4; ++v) CHECK(blocks[v] == VertexSet::singleton(4, v));

    const auto p2 = make_path(2);
    auto [one, blk] = contraction_phase(p2, 1, 5);
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);
    CHECK(blk[0] == VertexSet::full(2));

    CHECK_THROWS_AS(contraction_phase(p2, 3, 1), TooFewVerticesError);
    const WeightedGraph two_isolated(2, {});
    CHECK_THROWS_AS(contraction_phase(two_isolated, 1, 1), DisconnectedError);
}

TEST_CASE("contraction of a cycle only produces arcs") {
    const auto c4 = make_cycle(4);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [g2, blocks] = contraction_phase(c4, 2, seed);
        REQUIRE(blocks.size() == 2);
        CHECK(is_cycle_arc(blocks[0], 4));
        CHECK(is_cycle_arc(blocks[1], 4));
    }
}

TEST_CASE("enum_small_cuts on cycles matches the census oracle") {
    ScheduleConfig cfg;

    SUBCASE("C6, h=2, alpha=2: exactly the 30 arcs") {
        const auto c6 = make_cycle(6);
        const auto res = enum_small_cuts(c6, 2, Frac(2), cfg, 42);
        CHECK(res.hcut_upper == 2);  // OPT_2 of C6
        const auto oracle = brute_cut_census(c6, 2);
        CHECK(oracle.size() == 30);
        REQUIRE(res.cuts.size() == 30);
        std::set<VertexSet> got;
        for (const auto& c : res.cuts) {
            CHECK(c.weight == boundary_weight(c6, c.set));
            CHECK(is_cycle_arc(c.set, 6));
            got.insert(c.set);
        }
        CHECK(got == std::set<VertexSet>(oracle.begin(), oracle.end()));
    }

    SUBCASE("alpha=0 finds nothing on a connected graph") {
        const auto res = enum_small_cuts(make_cycle(5), 2, Frac(0), cfg, 1);
        CHECK(res.cuts.empty());
    }

    SUBCASE("C5, h=2, alpha=2: 20 arcs, below the 2^h n^{2 alpha} cap") {
        const auto res = enum_small_cuts(make_cycle(5), 2, Frac(2), cfg, 9);
        CHECK(res.cuts.size() == 20);
        CHECK(res.cuts.size() <= 4 * 5 * 5 * 5 * 5);
    }
}

TEST_CASE("enum_small_cuts superset and cap properties on random graphs") {
    ScheduleConfig cfg;
    std::size_t checked = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const std::size_t n = 4 + (i % 7);  // 4..10
        const auto g = make_random_connected(n, 1, 5, derive_stream(77, i));
        for (std::size_t h : {2, 3}) {
            if (n < h) continue;
            const Weight opt_h = brute_min_kcuts(g, h).weight;
            for (const Frac& alpha : {Frac(1), Frac(3, 2), Frac(2)}) {
                ++checked;
                const Weight true_max =
                    floor_to_u64(alpha * Frac((long long)opt_h) / (long long)h);
                const auto oracle = brute_cut_census(g, true_max);
                const double cap =
                    std::ldexp(1.0, (int)h) * std::pow((double)n, 2.0 * to_double(alpha));
                REQUIRE((double)oracle.size() <= cap);

                const auto got = enum_small_cuts(g, h, alpha, cfg, derive_stream(78, i, h));
                std::set<VertexSet> got_sets;
                for (const auto& c : got.cuts) got_sets.insert(c.set);
                for (const auto& s : oracle) REQUIRE(got_sets.count(s) == 1);
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("enum_small_cuts is deterministic in the seed") {
    const auto g = make_random_connected(8, 1, 5, 5150);
    ScheduleConfig cfg;
    const auto a = enum_small_cuts(g, 3, Frac(3, 2), cfg, 1234);
    const auto b = enum_small_cuts(g, 3, Frac(3, 2), cfg, 1234);
    REQUIRE(a.cuts.size() == b.cuts.size());
    for (std::size_t i = 0; i < a.cuts.size(); ++i) {
        CHECK(a.cuts[i].set == b.cuts[i].set);
        CHECK(a.cuts[i].weight == b.cuts[i].weight);
    }
    CHECK(a.hcut_upper == b.hcut_upper);
}

TEST_CASE("karger_stein_min_kcut examples") {
    ScheduleConfig cfg;

    SUBCASE("C5 with k=3: all 10 three-arc partitions of weight 3") {
        const auto res = karger_stein_min_kcut(make_cycle(5), 3, cfg, 31);
        CHECK(res.weight == 3);
        CHECK(res.partitions.size() == 10);
        const auto oracle = brute_min_kcuts(make_cycle(5), 3);
        CHECK(res.partitions == oracle.partitions);
    }

    SUBCASE("P3 with k=3: the all-singleton partition") {
        const auto res = karger_stein_min_kcut(make_path(3), 3, cfg, 7);
        CHECK(res.weight == 2);
        REQUIRE(res.partitions.size() == 1);
        CHECK(res.partitions.begin()->size() == 3);
    }

    SUBCASE("trees with k=2 cut one minimum-weight edge") {
        WeightedGraph tree(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 2}});
        const auto res = karger_stein_min_kcut(tree, 2, cfg, 11);
        CHECK(res.weight == 1);
        REQUIRE(res.partitions.size() == 1);
        CHECK(res.partitions.begin()->parts()[0].count() == 2);
    }

    SUBCASE("n < k is an error") {
        CHECK_THROWS_AS(karger_stein_min_kcut(make_path(2), 3, cfg, 1), TooFewVerticesError);
    }
}
