#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace kcut {

// All threshold comparisons and schedule functions are evaluated in exact
// rational arithmetic; floating point appears only where a formula is
// genuinely transcendental (the potential's logarithm).
using BigInt = boost::multiprecision::cpp_int;
using Frac = boost::multiprecision::cpp_rational;

inline Frac frac(long long num, long long den = 1) { return Frac(num, den); }

inline double to_double(const Frac& f) { return f.convert_to<double>(); }

/// floor(num/den) for a nonnegative rational, as an unsigned 64-bit value
/// clamped to max. Used to turn exact thresholds into integer weight cutoffs.
inline std::uint64_t floor_to_u64(const Frac& f) {
    if (f < 0) return 0;
    BigInt q = boost::multiprecision::numerator(f) / boost::multiprecision::denominator(f);
    if (q > BigInt(UINT64_MAX)) return UINT64_MAX;
    return q.convert_to<std::uint64_t>();
}

}  // namespace kcut
