#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "ltlab/special_functions.hpp"

namespace ltlab::semiclassics {

/// Riesz-mean parameter triple (kappa, d, s).  The validity flag follows
/// the case table of the fractional eigenvalue bound: the inequality holds
/// for kappa >= 0 when d > 2s, kappa > 0 when d = 2s, and
/// kappa >= 1 - d/(2s) when d < 2s.
struct RieszParams {
    double kappa = 0.0;
    int d = 1;
    double s = 1.0;

    bool valid() const {
        if (kappa < 0.0 || d < 1 || !(s > 0.0)) return false;
        if (d > 2.0 * s) return kappa >= 0.0;
        if (d == 2.0 * s) return kappa > 0.0;
        return kappa >= 1.0 - d / (2.0 * s);
    }
};

enum class ConstantKind { riesz, kinetic };

struct SemiclassicalConstant {
    double value = 0.0;
    RieszParams params{};
    ConstantKind kind = ConstantKind::riesz;
};

namespace detail {
inline void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}
} // namespace detail

/// Semiclassical Riesz constant: the phase-space integral
/// int (1 - |2 pi k|^{2s})_+^kappa dk in closed Beta/Gamma form,
/// (2 pi)^{-d} d |B_1| B(d/(2s), kappa+1) / (2s).
/// At s = 1 this reduces to (4 pi)^{-d/2} Gamma(kappa+1)/Gamma(kappa+1+d/2).
inline double lcl(double kappa, int d, double s = 1.0) {
    detail::require(kappa >= 0.0, "lcl: kappa must be >= 0");
    detail::require(d >= 1, "lcl: d must be >= 1");
    detail::require(s > 0.0, "lcl: s must be > 0");
    using std::numbers::pi;
    const double surface = special::unit_sphere_area(d);
    return std::pow(2.0 * pi, -d) * surface *
           special::beta_fn(d / (2.0 * s), kappa + 1.0) / (2.0 * s);
}

/// Semiclassical kinetic constant K^cl_{d,s} = d/(d+2s) ((2 pi)^d / |B_1|)^{2s/d}.
inline double kcl(int d, double s = 1.0) {
    detail::require(d >= 1, "kcl: d must be >= 1");
    detail::require(s > 0.0, "kcl: s must be > 0");
    using std::numbers::pi;
    const double ball = special::unit_ball_volume(d);
    return d / (d + 2.0 * s) *
           std::pow(std::pow(2.0 * pi, d) / ball, 2.0 * s / d);
}

/// Duality conversion: K_d (1 + 2/d) = [L_{1,d} (1 + d/2)]^{-2/d}.
inline double kinetic_from_riesz(double L1d, int d) {
    detail::require(L1d > 0.0, "kinetic_from_riesz: constant must be > 0");
    detail::require(d >= 1, "kinetic_from_riesz: d must be >= 1");
    return std::pow(L1d * (1.0 + 0.5 * d), -2.0 / d) / (1.0 + 2.0 / d);
}

/// Inverse of kinetic_from_riesz.
inline double riesz_from_kinetic(double Kd, int d) {
    detail::require(Kd > 0.0, "riesz_from_kinetic: constant must be > 0");
    detail::require(d >= 1, "riesz_from_kinetic: d must be >= 1");
    return std::pow(Kd * (1.0 + 2.0 / d), -0.5 * d) / (1.0 + 0.5 * d);
}

/// Layer-cake (Aizenman-Lieb) factor kappa B(kappa, 1 + d/(2s)) that lifts
/// a counting (kappa = 0) bound to Riesz exponent kappa.  Tends to 1 as
/// kappa -> 0+.
inline double al_lift_factor(double kappa, int d, double s) {
    if (!(kappa > 0.0))
        throw std::domain_error("al_lift_factor: integral diverges for kappa <= 0");
    detail::require(d >= 1 && s > 0.0, "al_lift_factor: invalid d or s");
    return kappa * special::beta_fn(kappa, 1.0 + d / (2.0 * s));
}

/// The d < 2s lift factor: int_0^1 E^{kappa + d/(2s) - 2} (1-E) dE
/// = B(kappa + d/(2s) - 1, 2), finite exactly when kappa > 1 - d/(2s).
inline double case4_lift_factor(double kappa, int d, double s) {
    detail::require(d >= 1 && s > 0.0, "case4_lift_factor: invalid d or s");
    if (!(d < 2.0 * s))
        throw std::domain_error("case4_lift_factor: requires d < 2s");
    const double a = kappa + d / (2.0 * s) - 1.0;
    if (!(a > 0.0))
        throw std::domain_error(
            "case4_lift_factor: integral diverges for kappa <= 1 - d/(2s)");
    return special::beta_fn(a, 2.0);
}

/// Uniform density bound prefactor for d < 2s:
/// C E^{d/(2s)-1} with C = int dk / (|2 pi k|^{2s} + 1)
/// = (2 pi)^{-d} d |B_1| pi / (2s sin(pi d / (2s))).
inline double uniform_density_bound(int d, double s, double E) {
    detail::require(d >= 1 && s > 0.0, "uniform_density_bound: invalid d or s");
    detail::require(E > 0.0, "uniform_density_bound: E must be > 0");
    if (!(d < 2.0 * s))
        throw std::domain_error("uniform_density_bound: diverges unless d < 2s");
    using std::numbers::pi;
    const double x = pi * d / (2.0 * s);
    const double C = std::pow(2.0 * pi, -d) * special::unit_sphere_area(d) *
                     pi / (2.0 * s * std::sin(x));
    return C * std::pow(E, d / (2.0 * s) - 1.0);
}

/// Discrete Legendre transform f*(y) = sup_t (y t - f(t)) of a sampled
/// function on [0, T].  attained_at_boundary is set when the sup for some
/// y sits on the last sample (the transform is then biased by truncation).
struct LegendreTransform {
    std::vector<double> values;
    bool attained_at_boundary = false;
};

/// t must be strictly ascending, y ascending.  The maximizer over samples
/// lies on the lower convex hull of (t_i, f_i), and moves monotonically to
/// the right as y grows, so one hull construction plus a single sweep covers
/// the whole y grid.
inline LegendreTransform legendre_transform(std::span<const double> t,
                                            std::span<const double> f,
                                            std::span<const double> y) {
    if (t.size() != f.size() || t.size() < 2)
        throw std::invalid_argument("legendre_transform: need matching samples, n >= 2");
    for (size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1]))
            throw std::invalid_argument("legendre_transform: t must be strictly ascending");

    // lower convex hull (Andrew scan over already-sorted abscissae)
    std::vector<size_t> hull;
    auto cross = [&](size_t a, size_t b, size_t c) {
        return (t[b] - t[a]) * (f[c] - f[a]) - (t[c] - t[a]) * (f[b] - f[a]);
    };
    for (size_t i = 0; i < t.size(); ++i) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), i) <= 0.0)
            hull.pop_back();
        hull.push_back(i);
    }

    LegendreTransform out;
    out.values.reserve(y.size());
    size_t j = 0;
    double last_y = -std::numeric_limits<double>::infinity();
    for (double yi : y) {
        if (yi < last_y) throw std::invalid_argument("legendre_transform: y must be ascending");
        last_y = yi;
        while (j + 1 < hull.size() &&
               yi * t[hull[j + 1]] - f[hull[j + 1]] >= yi * t[hull[j]] - f[hull[j]])
            ++j;
        if (j == hull.size() - 1) out.attained_at_boundary = true;
        out.values.push_back(yi * t[hull[j]] - f[hull[j]]);
    }
    return out;
}

} // namespace ltlab::semiclassics
