#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ltlab::special {

namespace detail {

// Lanczos approximation, g = 7, 9 terms.  Relative accuracy is a few ulps
// short of double precision on x in (0, ~170), which covers every Gamma
// ratio appearing in the semiclassical constants.
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

inline double lanczos_series(double x) {
    double a = lanczos_coef[0];
    for (int i = 1; i < 9; ++i) a += lanczos_coef[i] / (x + i - 1.0);
    return a;
}

} // namespace detail

/// Gamma(x) for x > 0 (reflection handles the rest of the real line
/// away from the poles).
inline double gamma_fn(double x) {
    using std::numbers::pi;
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: pole at non-positive integer");
    if (x < 0.5)
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    const double z = x - 1.0;
    const double t = z + detail::lanczos_g + 0.5;
    return std::sqrt(2.0 * pi) * std::pow(t, z + 0.5) * std::exp(-t) *
           detail::lanczos_series(z + 1.0);
}

/// log Gamma(x), x > 0.  Avoids overflow of gamma_fn for large arguments.
inline double log_gamma(double x) {
    using std::numbers::pi;
    if (x <= 0.0)
        throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5)
        return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    const double z = x - 1.0;
    const double t = z + detail::lanczos_g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t +
           std::log(detail::lanczos_series(z + 1.0));
}

/// Euler Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
inline double beta_fn(double a, double b) {
    if (a <= 0.0 || b <= 0.0)
        throw std::domain_error("beta_fn: requires positive arguments");
    return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

/// Volume of the unit ball in R^d.
inline double unit_ball_volume(int d) {
    if (d < 1) throw std::domain_error("unit_ball_volume: d >= 1");
    using std::numbers::pi;
    return std::pow(pi, 0.5 * d) / gamma_fn(0.5 * d + 1.0);
}

/// Surface measure of the unit sphere S^{d-1}, equals d * |B_1|.
inline double unit_sphere_area(int d) { return d * unit_ball_volume(d); }

} // namespace ltlab::special
