#include "kcut/generators.hpp"
#include "kcut/oracle.hpp"
#include "kcut/rng.hpp"

#include <doctest.h>

#include <algorithm>

using namespace kcut;

TEST_CASE("brute_min_kcuts on closed forms") {
    const auto c5 = brute_min_kcuts(make_cycle(5), 3);
    CHECK(c5.weight == 3);
    CHECK(c5.partitions.size() == 10);

    const auto p3 = brute_min_kcuts(make_path(3), 2);
    CHECK(p3.weight == 1);
    CHECK(p3.partitions.size() == 2);

    const auto k3 = brute_min_kcuts(make_complete(3), 2);
    CHECK(k3.weight == 2);
    CHECK(k3.partitions.size() == 3);

    CHECK_THROWS_AS(brute_min_kcuts(make_path(3), 4), TooFewVerticesError);
}

TEST_CASE("brute_min_kcuts is invariant under vertex relabeling") {
    SplitMix64 rng(2718);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 5 + rng.below(3);
        const auto g = make_random_connected(n, 1, 5, rng.next());
        std::vector<VertexId> perm(n);
        for (std::size_t v = 0; v < n; ++v) perm[v] = static_cast<VertexId>(v);
        for (std::size_t v = n; v > 1; --v) std::swap(perm[v - 1], perm[rng.below(v)]);
        std::vector<Edge> relabeled;
        for (const auto& e : g.edges()) relabeled.push_back({perm[e.u], perm[e.v], e.w});
        const WeightedGraph h(n, std::move(relabeled));
        for (std::size_t k : {2, 3}) {
            CHECK(brute_min_kcuts(g, k).weight == brute_min_kcuts(h, k).weight);
            CHECK(brute_min_kcuts(g, k).partitions.size() ==
                  brute_min_kcuts(h, k).partitions.size());
        }
    }
}

TEST_CASE("brute_cut_census") {
    const auto c6 = make_cycle(6);
    CHECK(brute_cut_census(c6, 2).size() == 30);
    CHECK(brute_cut_census(c6, 1).empty());  // below the minimum degree

    SUBCASE("complement closure") {
        const auto sets = brute_cut_census(c6, 2);
        std::set<VertexSet> pool(sets.begin(), sets.end());
        for (const auto& s : sets) CHECK(pool.count(s.complement()) == 1);
    }

    SUBCASE("handshake over singleton sides") {
        SplitMix64 rng(11);
        const auto g = make_random_connected(7, 1, 5, rng.next());
        const auto singles = brute_cut_census(
            g, [](Weight) { return true; });
        Weight singleton_sum = 0;
        for (const auto& s : singles)
            if (s.count() == 1) singleton_sum += boundary_weight(g, s);
        CHECK(singleton_sum == 2 * g.total_weight());
    }
}

TEST_CASE("brute_valid_partitions mirrors the definition") {
    Forest path4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(brute_valid_partitions(path4, 3, 4).size() == 1);
    CHECK(brute_valid_partitions(path4, 2, 2).size() == 6);

    Forest path3(3, {{0, 1}, {1, 2}});
    CHECK(brute_valid_partitions(path3, 1, 2).size() == 2);

    CHECK_THROWS_AS(brute_valid_partitions(path4, 5, 2), InvalidBudgetError);
}
