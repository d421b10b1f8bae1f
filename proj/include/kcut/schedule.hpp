#pragma once

#include "kcut/fraction.hpp"

#include <cstddef>
#include <cstdint>

namespace kcut {

/// Every constant the analysis leaves symbolic, in one place. gamma and all
/// derived slack terms are exact rationals so threshold comparisons and the
/// gain suite can be evaluated without rounding.
struct ScheduleConfig {
    Frac gamma = Frac(1, 20);  // the small constant of the analysis, in (0, 1/10]
    Frac c_z = 10;             // Theta(gamma) in the budget and in (1-Theta(gamma)) factors
    Frac c_b = 1;              // base-case cutoff coefficient: base_k = ceil(c_b/gamma)
    std::size_t base_k = 20;   // "k < Theta(1/gamma)" cutoff; tests override to 2
    std::size_t cap_const = 4; // multiplier behind the Theta(2^k n^...) enumeration caps
    std::size_t c_rep = 3;     // contraction repetition multiplier
    std::size_t c_pack = 1;    // tree-packing size multiplier
    std::size_t tree_cap = 0;  // hard cap on packed trees (0 = use the formula)

    /// Theta(gamma) as used by z(k,s), the gain bound, and the potential.
    Frac budget_slack() const { return c_z * gamma; }

    static ScheduleConfig with_gamma(Frac g) {
        ScheduleConfig cfg;
        cfg.gamma = g;
        cfg.base_k = default_base_k(g, cfg.c_b);
        return cfg;
    }

    static std::size_t default_base_k(const Frac& gamma, const Frac& c_b) {
        if (gamma <= 0) return 2;
        Frac q = c_b / gamma;
        BigInt num = boost::multiprecision::numerator(q);
        BigInt den = boost::multiprecision::denominator(q);
        BigInt up = (num + den - 1) / den;
        std::size_t v = up.convert_to<std::size_t>();
        return v < 2 ? 2 : v;
    }
};

/// z(k,s) = s - (1.75 + Theta(gamma)) k. Negative budget means brute force.
Frac budget_z(std::size_t k, std::size_t s, const ScheduleConfig& cfg);

/// The branching line through (3-gamma, 2) and the centroid (4, 2s/k):
/// g(w) = ((2s/k - 2)/(1+gamma)) w + 8/(1+gamma) + (s/k)(2 - 8/(1+gamma)).
/// Requires s > k so the slope is positive.
Frac line_g(std::size_t k, std::size_t s, const ScheduleConfig& cfg, const Frac& w);

/// Inverse of line_g: the weight threshold beta_ell with g(beta_ell) = ell.
Frac beta_ell(std::size_t k, std::size_t s, const ScheduleConfig& cfg, const Frac& ell);

/// Enumeration-cost exponent d(w): 1, then 3-1/4, then 4-1/4, then w itself,
/// with breakpoints at 3-gamma, 4-gamma, 14/3-gamma.
Frac branch_cap_d(const Frac& w, const ScheduleConfig& cfg);

/// Budget-gain ratio (ell - d(w)) / (ell - (1.75 + Theta(gamma))).
Frac gain_ratio(const Frac& w, const Frac& ell, std::size_t k, std::size_t s, std::size_t k0,
                const ScheduleConfig& cfg);

/// Lower bound the gain ratio is tested against:
/// min(1/9, 4z/(6.5z + 4.875 k0) * (1 - Theta(gamma))), exact.
Frac gain_bound(const Frac& z, std::size_t k0, const ScheduleConfig& cfg);

/// Potential Phi(k,s): integral of min(1/9, 4t/(6.5t+4.875 k0)(1-Theta(gamma)))
/// from 0 to z(k,s) when the budget is nonnegative, and 1 otherwise.
/// Closed form: with theta = Theta(gamma) and breakpoint
/// T = 4.875 k0 / (36(1-theta) - 6.5),
///   Phi = ((1-theta)/1.625) (z - 0.75 k0 (ln(4z/k0 + 3) - ln 3))   for z <= T,
///   Phi = Phi(T) + (z - T)/9                                       for z >  T.
/// When 4(1-theta)/6.5 <= 1/9 the integrand never reaches 1/9 and the log form
/// applies everywhere. Must match direct quadrature to 1e-9 relative.
double potential_phi(std::size_t k, std::size_t s, std::size_t k0, const ScheduleConfig& cfg);

/// Same closed form evaluated at an explicit budget z >= 0 (k0 in the
/// integrand); exposed for the quadrature cross-check.
double potential_phi_at(double z, std::size_t k0, const ScheduleConfig& cfg);

}  // namespace kcut
