#include "kcut/schedule.hpp"

#include <cmath>

namespace kcut {

Frac budget_z(std::size_t k, std::size_t s, const ScheduleConfig& cfg) {
    return Frac(static_cast<long long>(s)) -
           (Frac(7, 4) + cfg.budget_slack()) * static_cast<long long>(k);
}

Frac line_g(std::size_t k, std::size_t s, const ScheduleConfig& cfg, const Frac& w) {
    Frac sk = Frac(static_cast<long long>(s), static_cast<long long>(k));
    Frac one_plus = 1 + cfg.gamma;
    Frac slope = (2 * sk - 2) / one_plus;
    Frac intercept = Frac(8) / one_plus + sk * (2 - Frac(8) / one_plus);
    return slope * w + intercept;
}

Frac beta_ell(std::size_t k, std::size_t s, const ScheduleConfig& cfg, const Frac& ell) {
    Frac sk = Frac(static_cast<long long>(s), static_cast<long long>(k));
    Frac one_plus = 1 + cfg.gamma;
    Frac slope = (2 * sk - 2) / one_plus;
    Frac intercept = Frac(8) / one_plus + sk * (2 - Frac(8) / one_plus);
    return (ell - intercept) / slope;
}

Frac branch_cap_d(const Frac& w, const ScheduleConfig& cfg) {
    const Frac& g = cfg.gamma;
    if (w <= 3 - g) return 1;
    if (w <= 4 - g) return Frac(11, 4);
    if (w <= Frac(14, 3) - g) return Frac(15, 4);
    return w;
}

Frac gain_ratio(const Frac& w, const Frac& ell, std::size_t k, std::size_t s, std::size_t k0,
                const ScheduleConfig& cfg) {
    (void)k;
    (void)s;
    (void)k0;
    return (ell - branch_cap_d(w, cfg)) / (ell - (Frac(7, 4) + cfg.budget_slack()));
}

Frac gain_bound(const Frac& z, std::size_t k0, const ScheduleConfig& cfg) {
    Frac second = 4 * z / (Frac(13, 2) * z + Frac(39, 8) * static_cast<long long>(k0));
    second *= (1 - cfg.budget_slack());
    Frac ninth(1, 9);
    return second < ninth ? second : ninth;
}

namespace {

// Antiderivative piece: integral over [0,z] of 4t(1-theta)/(6.5t + 4.875 k0),
// valid while the integrand stays below 1/9.
double phi_log_form(double z, double k0, double theta) {
    if (z <= 0) return 0.0;
    return ((1.0 - theta) / 1.625) * (z - 0.75 * k0 * std::log1p(4.0 * z / (3.0 * k0)));
}

}  // namespace

double potential_phi_at(double z, std::size_t k0, const ScheduleConfig& cfg) {
    const double theta = to_double(cfg.budget_slack());
    const double k0d = static_cast<double>(k0);
    if (z <= 0) return 0.0;
    if (theta >= 1.0) return 0.0;  // integrand is min(1/9, 0)
    const double denom = 36.0 * (1.0 - theta) - 6.5;
    if (denom <= 0) return phi_log_form(z, k0d, theta);  // never reaches 1/9
    const double breakpoint = 4.875 * k0d / denom;
    if (z <= breakpoint) return phi_log_form(z, k0d, theta);
    return phi_log_form(breakpoint, k0d, theta) + (z - breakpoint) / 9.0;
}

double potential_phi(std::size_t k, std::size_t s, std::size_t k0, const ScheduleConfig& cfg) {
    Frac z = budget_z(k, s, cfg);
    if (z < 0) return 1.0;
    return potential_phi_at(to_double(z), k0, cfg);
}

}  // namespace kcut
