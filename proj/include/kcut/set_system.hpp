#pragma once

#include "kcut/fraction.hpp"
#include "kcut/parallel.hpp"
#include "kcut/vertex_set.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace kcut {

/// A set system (X, R): ranges are distinct subsets of a universe of size n.
struct RangeSpace {
    std::size_t n = 0;
    std::vector<VertexSet> ranges;

    /// Throws on duplicate ranges or universe-size mismatches.
    void validate() const;
};

/// Occupancy of the 8 Venn cells of an ordered triple (R1,R2,R3).
/// Cell S, a subset of {1,2,3} encoded as a 3-bit mask (bit i-1 for i), is
/// occupied iff some x has (x in R_i <=> i in S).
struct VennOccupancy {
    std::uint8_t cells = 0;  // bit S set <=> cell S occupied

    bool has(unsigned cell_mask) const { return (cells >> cell_mask) & 1u; }
    int count() const { return __builtin_popcount(cells); }
    int count_outside(std::uint8_t forbidden_mask) const {
        return __builtin_popcount(cells & static_cast<std::uint8_t>(~forbidden_mask));
    }
};

VennOccupancy venn_occupancy(const VertexSet& r1, const VertexSet& r2, const VertexSet& r3);

/// Fraction of subsets in `family` (bitmasks over [k], k = ranges.size(),
/// k <= 20) witnessed by the tuple: S is witnessed iff some x satisfies
/// x in R_i <=> bit i-1 of S, for all i.
Frac witness_fraction(const std::vector<VertexSet>& ranges, const std::vector<std::uint32_t>& family);

/// Some pair of ranges whose four 2-set Venn cells are all nonempty, or
/// nullopt. Implemented by the laminar reduction: fix x = 0, replace every
/// range containing x by its complement, and test the image family for
/// laminarity in one decreasing-size sweep (O(|R| n + |R| log |R|)); a
/// laminarity violation lifts back to a crossing pair. Any crossing-free
/// family therefore has at most 4n-4 ranges.
std::optional<std::pair<std::size_t, std::size_t>> find_crossing_pair(const RangeSpace& rs);

/// First (lexicographically, over index triples i<j<k) triple whose occupancy
/// restricted to the cells outside `forbidden_cells` has at least min_cells
/// occupied cells; nullopt after exhaustive search. min_cells in 4..8.
std::optional<std::array<std::size_t, 3>> find_triple(const RangeSpace& rs, int min_cells,
                                                      std::uint8_t forbidden_cells = 0,
                                                      Exec exec = Exec::parallel);

/// Largest d (tested up to 4) such that some d-tuple of ranges has all 2^d
/// Venn cells nonempty.
int dual_vc_dimension(const RangeSpace& rs);

/// Newline-delimited bitstrings; universe size = line length.
RangeSpace read_range_space(std::istream& in);
void write_range_space(std::ostream& out, const RangeSpace& rs);

}  // namespace kcut
