#include "kcut/errors.hpp"
#include "kcut/rng.hpp"
#include "kcut/set_system.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

using namespace kcut;

namespace {

VertexSet bits(std::size_t n, std::initializer_list<std::size_t> elems) {
    VertexSet s(n);
    for (auto v : elems) s.set(v);
    return s;
}

RangeSpace all_triples_of_10() {
    RangeSpace rs;
    rs.n = 10;
    for (std::size_t a = 0; a < 10; ++a)
        for (std::size_t b = a + 1; b < 10; ++b)
            for (std::size_t c = b + 1; c < 10; ++c) rs.ranges.push_back(bits(10, {a, b, c}));
    return rs;
}

// Straightforward reference scan, deliberately separate from find_triple.
std::optional<std::array<std::size_t, 3>> naive_triple(const RangeSpace& rs, int min_cells,
                                                       std::uint8_t forbidden) {
    for (std::size_t i = 0; i + 2 < rs.ranges.size(); ++i)
        for (std::size_t j = i + 1; j + 1 < rs.ranges.size(); ++j)
            for (std::size_t k = j + 1; k < rs.ranges.size(); ++k) {
                int cells = 0;
                for (unsigned cell = 0; cell < 8; ++cell) {
                    if ((forbidden >> cell) & 1u) continue;
                    bool hit = false;
                    for (std::size_t x = 0; x < rs.n && !hit; ++x) {
                        unsigned sig = 0;
                        if (rs.ranges[i].test(x)) sig |= 1;
                        if (rs.ranges[j].test(x)) sig |= 2;
                        if (rs.ranges[k].test(x)) sig |= 4;
                        hit = sig == cell;
                    }
                    cells += hit;
                }
                if (cells >= min_cells) return {{i, j, k}};
            }
    return std::nullopt;
}

}  // namespace

TEST_CASE("venn_occupancy examples") {
    // X = {0..4}, R1 = {0,1}, R2 = {1,2}, R3 = {3}
    const auto occ = venn_occupancy(bits(5, {0, 1}), bits(5, {1, 2}), bits(5, {3}));
    CHECK(occ.count() == 5);
    CHECK(occ.has(0));      // element 4 in nothing
    CHECK(occ.has(0b001));  // 0 in R1 only
    CHECK(occ.has(0b011));  // 1 in R1 and R2
    CHECK(occ.has(0b010));  // 2 in R2 only
    CHECK(occ.has(0b100));  // 3 in R3 only
    CHECK(!occ.has(0b111));

    const auto empty = venn_occupancy(VertexSet(4), VertexSet(4), VertexSet(4));
    CHECK(empty.cells == 1);  // only the all-out cell

    // one element per cell
    VertexSet r1(8), r2(8), r3(8);
    for (std::size_t x = 0; x < 8; ++x) {
        if (x & 1) r1.set(x);
        if (x & 2) r2.set(x);
        if (x & 4) r3.set(x);
    }
    CHECK(venn_occupancy(r1, r2, r3).count() == 8);
}

TEST_CASE("venn_occupancy commutes with permuting the ranges") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 4 + rng.below(6);
        VertexSet r[3] = {VertexSet(n), VertexSet(n), VertexSet(n)};
        for (std::size_t v = 0; v < n; ++v)
            for (int i = 0; i < 3; ++i)
                if (rng.next() & 1) r[i].set(v);
        const auto base = venn_occupancy(r[0], r[1], r[2]);
        const auto swapped = venn_occupancy(r[1], r[0], r[2]);  // swap ranges 1,2
        for (unsigned cell = 0; cell < 8; ++cell) {
            const unsigned mapped = (cell & 0b100) | ((cell & 1) << 1) | ((cell >> 1) & 1);
            CHECK(base.has(cell) == swapped.has(mapped));
        }
    }
}

TEST_CASE("witness_fraction") {
    SUBCASE("the three-range figure: 5/8, 4/7, and a full family") {
        // universe of 8 with signatures: {} x1, {1} x2, {3} x1, {1,2} x2, {1,2,3} x2
        VertexSet r1(8), r2(8), r3(8);
        auto put = [&](std::size_t x, bool a, bool b, bool c) {
            if (a) r1.set(x);
            if (b) r2.set(x);
            if (c) r3.set(x);
        };
        put(0, false, false, false);
        put(1, true, false, false);
        put(2, true, false, false);
        put(3, false, false, true);
        put(4, true, true, false);
        put(5, true, true, false);
        put(6, true, true, true);
        put(7, true, true, true);

        std::vector<std::uint32_t> full;
        for (std::uint32_t s = 0; s < 8; ++s) full.push_back(s);
        CHECK(witness_fraction({r1, r2, r3}, full) == Frac(5, 8));

        std::vector<std::uint32_t> nonempty;
        for (std::uint32_t s = 1; s < 8; ++s) nonempty.push_back(s);
        CHECK(witness_fraction({r1, r2, r3}, nonempty) == Frac(4, 7));

        CHECK(witness_fraction({r1, r2, r3}, {0b000, 0b001, 0b100, 0b011, 0b111}) == Frac(1));
    }

    SUBCASE("k=1 with R1 = X") {
        CHECK(witness_fraction({VertexSet::full(4)}, {0b1}) == Frac(1));
    }

    SUBCASE("disjoint pair misses only the intersection cell") {
        CHECK(witness_fraction({bits(5, {0}), bits(5, {1})}, {0b00, 0b01, 0b10, 0b11}) ==
              Frac(3, 4));
    }
}

TEST_CASE("find_crossing_pair") {
    SUBCASE("singletons, 3-sets, empty and full on n=4: no crossing") {
        RangeSpace rs;
        rs.n = 4;
        for (std::size_t v = 0; v < 4; ++v) rs.ranges.push_back(bits(4, {v}));
        for (std::size_t v = 0; v < 4; ++v) rs.ranges.push_back(bits(4, {v}).complement());
        rs.ranges.push_back(VertexSet(4));
        rs.ranges.push_back(VertexSet::full(4));
        CHECK(rs.ranges.size() == 10);
        CHECK(!find_crossing_pair(rs).has_value());
    }

    SUBCASE("{1,2} and {2,3} cross on n=4") {
        RangeSpace rs;
        rs.n = 4;
        rs.ranges = {bits(4, {0, 1}), bits(4, {1, 2})};
        const auto p = find_crossing_pair(rs);
        REQUIRE(p.has_value());
        CHECK(p->first == 0);
        CHECK(p->second == 1);
    }

    SUBCASE("n=3 never has a crossing pair") {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SplitMix64 rng(seed);
            RangeSpace rs;
            rs.n = 3;
            std::set<VertexSet> seen;
            while (seen.size() < 8) {  // the full power set of [3]
                VertexSet s(3);
                for (std::size_t v = 0; v < 3; ++v)
                    if (rng.next() & 1) s.set(v);
                seen.insert(s);
            }
            rs.ranges.assign(seen.begin(), seen.end());
            CHECK(!find_crossing_pair(rs).has_value());
        }
    }

    SUBCASE("any returned pair has all four cells occupied (random systems)") {
        SplitMix64 rng(31337);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 4 + rng.below(10);
            RangeSpace rs;
            rs.n = n;
            std::set<VertexSet> seen;
            const std::size_t want = 2 + rng.below(4 * n);
            for (std::size_t tries = 0; tries < 20 * want && seen.size() < want; ++tries) {
                VertexSet s(n);
                for (std::size_t v = 0; v < n; ++v)
                    if (rng.next() & 1) s.set(v);
                seen.insert(s);
            }
            rs.ranges.assign(seen.begin(), seen.end());
            const auto p = find_crossing_pair(rs);
            // reference: quadratic scan
            bool exists = false;
            for (std::size_t i = 0; i < rs.ranges.size() && !exists; ++i)
                for (std::size_t j = i + 1; j < rs.ranges.size() && !exists; ++j) {
                    const auto& a = rs.ranges[i];
                    const auto& b = rs.ranges[j];
                    exists = !a.minus(b).empty() && !b.minus(a).empty() && !(a & b).empty() &&
                             !(a | b).complement().empty();
                }
            CHECK(p.has_value() == exists);
            if (p) {
                const auto& a = rs.ranges[p->first];
                const auto& b = rs.ranges[p->second];
                CHECK(!a.minus(b).empty());
                CHECK(!b.minus(a).empty());
                CHECK(!(a & b).empty());
                CHECK(!(a | b).complement().empty());
            }
        }
    }
}

TEST_CASE("find_triple") {
    SUBCASE("3-subsets of [10] never give 8 cells") {
        CHECK(!find_triple(all_triples_of_10(), 8).has_value());
    }

    SUBCASE("the power set of [8] gives 8 cells") {
        RangeSpace rs;
        rs.n = 8;
        for (std::uint32_t mask = 1; mask < 256; ++mask) {
            VertexSet s(8);
            for (std::size_t v = 0; v < 8; ++v)
                if ((mask >> v) & 1u) s.set(v);
            rs.ranges.push_back(s);
        }
        CHECK(find_triple(rs, 8).has_value());
    }

    SUBCASE("agrees with the naive scan, including forbidden cells") {
        SplitMix64 rng(555);
        for (int trial = 0; trial < 25; ++trial) {
            const std::size_t n = 4 + rng.below(5);
            RangeSpace rs;
            rs.n = n;
            std::set<VertexSet> seen;
            const std::size_t want = 3 + rng.below(12);
            for (int tries = 0; tries < 600 && seen.size() < want; ++tries) {
                VertexSet s(n);
                for (std::size_t v = 0; v < n; ++v)
                    if (rng.next() & 1) s.set(v);
                seen.insert(s);
            }
            rs.ranges.assign(seen.begin(), seen.end());
            for (int min_cells : {4, 6, 7, 8}) {
                for (std::uint8_t forbidden : {std::uint8_t{0}, std::uint8_t{0b10000001}}) {
                    const auto got = find_triple(rs, min_cells, forbidden, Exec::serial);
                    const auto want_triple = naive_triple(rs, min_cells, forbidden);
                    REQUIRE(got.has_value() == want_triple.has_value());
                    if (got) CHECK(*got == *want_triple);
                }
            }
        }
    }

    SUBCASE("3-subsets of [10] at 7 cells agrees with the oracle") {
        const auto rs = all_triples_of_10();
        const auto got = find_triple(rs, 7);
        const auto want = naive_triple(rs, 7, 0);
        REQUIRE(got.has_value() == want.has_value());
        if (got) CHECK(*got == *want);
    }
}

TEST_CASE("dual_vc_dimension") {
    RangeSpace one;
    one.n = 3;
    one.ranges = {bits(3, {0})};
    CHECK(dual_vc_dimension(one) == 1);

    RangeSpace pow8;
    pow8.n = 8;
    for (std::uint32_t mask = 1; mask < 256; ++mask) {
        VertexSet s(8);
        for (std::size_t v = 0; v < 8; ++v)
            if ((mask >> v) & 1u) s.set(v);
        pow8.ranges.push_back(s);
    }
    CHECK(dual_vc_dimension(pow8) >= 3);

    CHECK(dual_vc_dimension(all_triples_of_10()) == 2);
}

TEST_CASE("range space round trip") {
    RangeSpace rs;
    rs.n = 5;
    rs.ranges = {bits(5, {0, 2}), bits(5, {1}), VertexSet(5)};
    std::ostringstream out;
    write_range_space(out, rs);
    std::istringstream in(out.str());
    const auto back = read_range_space(in);
    CHECK(back.n == rs.n);
    CHECK(back.ranges == rs.ranges);

    std::istringstream bad("0120\n");
    CHECK_THROWS_AS(read_range_space(bad), ParseError);
}
