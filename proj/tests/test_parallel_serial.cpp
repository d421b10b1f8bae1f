// The OpenMP kernels must reproduce the serial reference exactly: merges are
// keyed, associative set unions, and every repetition derives its own RNG
// stream, so scheduling cannot change any result.

#include "kcut/contraction.hpp"
#include "kcut/generators.hpp"
#include "kcut/minkcut.hpp"
#include "kcut/oracle.hpp"
#include "kcut/set_system.hpp"

#include <doctest.h>

using namespace kcut;

TEST_CASE("enum_small_cuts: parallel == serial") {
    ScheduleConfig cfg;
    for (std::uint64_t i = 0; i < 6; ++i) {
        const auto g = make_random_connected(6 + i % 4, 1, 5, derive_stream(21, i));
        const auto a = enum_small_cuts(g, 2 + i % 2, Frac(3, 2), cfg, 100 + i, Exec::serial);
        const auto b = enum_small_cuts(g, 2 + i % 2, Frac(3, 2), cfg, 100 + i, Exec::parallel);
        REQUIRE(a.cuts.size() == b.cuts.size());
        CHECK(a.hcut_upper == b.hcut_upper);
        for (std::size_t j = 0; j < a.cuts.size(); ++j) {
            CHECK(a.cuts[j].set == b.cuts[j].set);
            CHECK(a.cuts[j].weight == b.cuts[j].weight);
        }
    }
}

TEST_CASE("karger_stein_min_kcut: parallel == serial") {
    ScheduleConfig cfg;
    for (std::uint64_t i = 0; i < 4; ++i) {
        const auto g = make_random_connected(6 + i % 3, 1, 5, derive_stream(22, i));
        const auto a = karger_stein_min_kcut(g, 2 + i % 2, cfg, 7 + i, Exec::serial);
        const auto b = karger_stein_min_kcut(g, 2 + i % 2, cfg, 7 + i, Exec::parallel);
        CHECK(a.weight == b.weight);
        CHECK(a.partitions == b.partitions);
    }
}

TEST_CASE("brute oracles: parallel == serial") {
    for (std::uint64_t i = 0; i < 4; ++i) {
        const auto g = make_random_connected(7 + i % 3, 1, 5, derive_stream(23, i));
        const auto a = brute_min_kcuts(g, 3, Exec::serial);
        const auto b = brute_min_kcuts(g, 3, Exec::parallel);
        CHECK(a.weight == b.weight);
        CHECK(a.partitions == b.partitions);

        const auto ca = brute_cut_census(g, 4, Exec::serial);
        const auto cb = brute_cut_census(g, 4, Exec::parallel);
        CHECK(ca == cb);
    }
}

TEST_CASE("find_triple: parallel == serial (first hit)") {
    SplitMix64 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 5 + rng.below(4);
        RangeSpace rs;
        rs.n = n;
        std::set<VertexSet> seen;
        while (seen.size() < 3 + rng.below(20)) {
            VertexSet s(n);
            for (std::size_t v = 0; v < n; ++v)
                if (rng.next() & 1) s.set(v);
            seen.insert(s);
        }
        rs.ranges.assign(seen.begin(), seen.end());
        for (int cells : {5, 7}) {
            const auto a = find_triple(rs, cells, 0, Exec::serial);
            const auto b = find_triple(rs, cells, 0, Exec::parallel);
            REQUIRE(a.has_value() == b.has_value());
            if (a) CHECK(*a == *b);
        }
    }
}

TEST_CASE("enumerate_min_kcuts: parallel == serial") {
    ScheduleConfig cfg = ScheduleConfig::with_gamma(Frac(1, 20));
    cfg.base_k = 2;
    const auto g = make_random_connected(6, 1, 5, 25);
    const auto a = enumerate_min_kcuts(g, 3, cfg, 99, Exec::serial);
    const auto b = enumerate_min_kcuts(g, 3, cfg, 99, Exec::parallel);
    CHECK(a.weight == b.weight);
    CHECK(a.partitions == b.partitions);
}
