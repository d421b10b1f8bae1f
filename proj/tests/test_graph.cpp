#include "kcut/generators.hpp"
#include "kcut/graph.hpp"
#include "kcut/rng.hpp"

#include <doctest.h>

#include <numeric>

using namespace kcut;

namespace {

VertexSet bits(std::size_t n, std::initializer_list<std::size_t> elems) {
    VertexSet s(n);
    for (auto v : elems) s.set(v);
    return s;
}

Partition two_sided(std::size_t n, const VertexSet& side) {
    return Partition({side, side.complement()});
}

}  // namespace

TEST_CASE("boundary_weight basics") {
    const auto k3 = make_complete(3);
    CHECK(boundary_weight(k3, bits(3, {0})) == 2);

    const auto c4 = make_cycle(4);
    CHECK(boundary_weight(c4, bits(4, {0, 1})) == 2);

    CHECK(boundary_weight(c4, VertexSet(4)) == 0);
    CHECK(boundary_weight(c4, VertexSet::full(4)) == 0);
}

TEST_CASE("partition_weight basics and validation") {
    const auto c6 = make_cycle(6);
    Partition arcs({bits(6, {0, 1}), bits(6, {2, 3}), bits(6, {4, 5})});
    CHECK(partition_weight(c6, arcs) == 3);

    CHECK(partition_weight(c6, Partition({VertexSet::full(6)})) == 0);

    const auto k4 = make_complete(4);
    Partition singletons({bits(4, {0}), bits(4, {1}), bits(4, {2}), bits(4, {3})});
    CHECK(partition_weight(k4, singletons) == 6);

    CHECK_THROWS_AS(partition_weight(c6, Partition({bits(6, {0, 1}), bits(6, {1, 2})})),
                    OverlappingPartsError);
    CHECK_THROWS_AS(partition_weight(c6, Partition({bits(6, {0, 1}), bits(6, {2, 3})})),
                    IncompleteCoverError);
}

TEST_CASE("contract_edge merges parallels and keeps the mapping") {
    const auto c3 = make_cycle(3);
    std::vector<VertexSet> map0;
    for (std::size_t v = 0; v < 3; ++v) map0.push_back(VertexSet::singleton(3, v));

    auto [g1, map1] = contract_edge(c3, c3.find_edge(0, 1), map0);
    CHECK(g1.vertex_count() == 2);
    REQUIRE(g1.edge_count() == 1);
    CHECK(g1.edges()[0].w == 2);  // two parallel edges merged

    const auto p2 = make_path(2);
    std::vector<VertexSet> pmap{VertexSet::singleton(2, 0), VertexSet::singleton(2, 1)};
    auto [g2, map2] = contract_edge(p2, 0, pmap);
    CHECK(g2.vertex_count() == 1);
    CHECK(g2.edge_count() == 0);
    CHECK(map2[0] == bits(2, {0, 1}));

    const auto c4 = make_cycle(4);
    std::vector<VertexSet> cmap;
    for (std::size_t v = 0; v < 4; ++v) cmap.push_back(VertexSet::singleton(4, v));
    auto [g3, map3] = contract_edge(c4, c4.find_edge(0, 1), cmap);
    CHECK(g3.vertex_count() == 3);
    CHECK(map3[0] == bits(4, {0, 1}));  // supernode absorbed both endpoints

    CHECK_THROWS_AS(contract_edge(c4, 99, map0), EdgeNotFoundError);
}

TEST_CASE("delete_vertices and forest_restrict") {
    const auto c4 = make_cycle(4);
    const auto g = delete_vertices(c4, bits(4, {0}));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);  // path on 3 vertices
    CHECK(g.component_count() == 1);

    const auto star = make_star(3);
    const auto iso = delete_vertices(star, bits(4, {0}));
    CHECK(iso.vertex_count() == 3);
    CHECK(iso.edge_count() == 0);
    CHECK(iso.component_count() == 3);

    Forest path5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const auto f = forest_restrict(path5, bits(5, {4}));
    CHECK(f.vertex_count() == 4);
    CHECK(f.edge_count() == 3);
    CHECK(f.kappa() == 1);

    CHECK_THROWS_AS(delete_vertices(c4, VertexSet::full(4)), FullDeletionError);
}

TEST_CASE("forest_crossing") {
    Forest path(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(forest_crossing(path, bits(4, {1, 2})) == 2);
    CHECK(forest_crossing(path, VertexSet(4)) == 0);

    Forest star(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(forest_crossing(star, bits(4, {1})) == 1);
}

TEST_CASE("boundary symmetry and handshake identity") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + rng.below(5);
        const auto g = make_random_connected(n, 1, 5, rng.next());
        VertexSet s(n);
        for (std::size_t v = 0; v < n; ++v)
            if (rng.next() & 1) s.set(v);
        CHECK(boundary_weight(g, s) == boundary_weight(g, s.complement()));
        if (!s.empty() && !s.complement().empty())
            CHECK(partition_weight(g, two_sided(n, s)) == boundary_weight(g, s));

        // random partition into <= 3 labels
        std::vector<VertexSet> parts(3, VertexSet(n));
        for (std::size_t v = 0; v < n; ++v) parts[rng.below(3)].set(v);
        std::vector<VertexSet> nonempty;
        for (auto& p : parts)
            if (!p.empty()) nonempty.push_back(p);
        Partition part(nonempty);
        Weight sum = 0;
        for (const auto& p : part.parts()) sum += boundary_weight(g, p);
        CHECK(2 * partition_weight(g, part) == sum);
    }
}

TEST_CASE("contraction preserves weight minus dropped self-loops") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 4 + rng.below(4);
        auto g = make_random_connected(n, 1, 5, rng.next());
        std::vector<VertexSet> map;
        for (std::size_t v = 0; v < n; ++v) map.push_back(VertexSet::singleton(n, v));
        const std::size_t ei = rng.below(g.edge_count());
        const Edge picked = g.edges()[ei];
        const Weight dropped = picked.w;  // merged form: one edge per pair
        auto [h, hmap] = contract_edge(g, ei, map);
        CHECK(h.total_weight() == g.total_weight() - dropped);
    }
}

TEST_CASE("delete_vertices agrees with boundary over surviving edges (exhaustive n<=6)") {
    for (std::size_t n : {std::size_t{5}, std::size_t{6}}) {
        const auto g = make_random_connected(n, 1, 4, 7 * n);
        for (std::uint32_t amask = 1; amask < (1u << n) - 1; ++amask) {
            VertexSet a(n);
            for (std::size_t v = 0; v < n; ++v)
                if ((amask >> v) & 1u) a.set(v);
            const auto sub = delete_vertices(g, a);
            const auto cmap = compaction_map(n, a);
            VertexSet s_sub(sub.vertex_count());
            VertexSet s_orig(n);
            bool flip = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (a.test(v)) continue;
                flip = !flip;
                if (flip) {
                    s_sub.set(cmap[v]);
                    s_orig.set(v);
                }
            }
            Weight direct = 0;
            for (const auto& e : g.edges()) {
                if (a.test(e.u) || a.test(e.v)) continue;
                if (s_orig.test(e.u) != s_orig.test(e.v)) direct += e.w;
            }
            REQUIRE(boundary_weight(sub, s_sub) == direct);
        }
    }
}

TEST_CASE("partition canonical order sorts by minimum vertex") {
    Partition p({bits(5, {2, 3}), bits(5, {0, 4}), bits(5, {1})});
    CHECK(p.parts()[0] == bits(5, {0, 4}));
    CHECK(p.parts()[1] == bits(5, {1}));
    CHECK(p.parts()[2] == bits(5, {2, 3}));
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(WeightedGraph(3, {{1, 1, 2}}), SelfLoopError);
    CHECK_THROWS_AS(WeightedGraph(2, {{0, 1, UINT64_MAX}, {0, 1, 1}}), OverflowError);
    CHECK_THROWS_AS(Forest(3, {{0, 1}, {1, 2}, {0, 2}}), Error);  // cycle
}
