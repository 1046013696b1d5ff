#pragma once

#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ltlab::quad {

/// Tolerances and endpoint hints for the adaptive integrators.
/// endpoint_exponents records known singular behavior x^alpha at the
/// left/right end of the interval (alpha > -1); nonzero values trigger
/// geometric pre-refinement toward that endpoint.
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 4000;
    std::pair<double, double> endpoint_exponents{0.0, 0.0};

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureSpec: max_subdivisions must be >= 1");
    }
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    int evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1,1]: {abscissa, gauss weight, kronrod weight}.
inline constexpr double gk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529},
};

template <class F>
inline void gk15_panel(F&& f, double a, double b, double& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double y0 = f(mid);
    double g7 = gk15[0][1] * y0;
    double k15 = gk15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * gk15[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += gk15[i][1] * yi;
        k15 += gk15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    value = k15;
    // |G7 - K15| is a conservative estimate for the K15 error
    err = std::fabs(g7 - k15);
}

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over the finite interval [a,b].
/// Worst-error-first refinement until the summed error estimate meets the
/// requested tolerance or the subdivision budget runs out.
template <class F>
QuadResult integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
    spec.validate();
    QuadResult res;
    if (a == b) return res;

    std::priority_queue<detail::Segment> heap;
    std::vector<std::pair<double, double>> seed;

    // geometric pre-refinement toward singular endpoints
    double lo = a, hi = b;
    if (spec.endpoint_exponents.first != 0.0) {
        double len = (b - a) * 0x1p-40;
        double x = a + len;
        seed.emplace_back(a, x);
        while (x < a + (b - a) * 0.125) {
            double nx = a + (x - a) * 8.0;
            seed.emplace_back(x, nx);
            x = nx;
        }
        lo = x;
    }
    std::vector<std::pair<double, double>> tail_seed;
    if (spec.endpoint_exponents.second != 0.0) {
        double len = (b - a) * 0x1p-40;
        double x = b - len;
        tail_seed.emplace_back(x, b);
        while (x > b - (b - a) * 0.125) {
            double nx = b - (b - x) * 8.0;
            tail_seed.emplace_back(nx, x);
            x = nx;
        }
        hi = x;
    }
    seed.emplace_back(lo, hi);
    seed.insert(seed.end(), tail_seed.begin(), tail_seed.end());

    double total = 0.0, total_err = 0.0;
    for (auto [sa, sb] : seed) {
        detail::Segment s{sa, sb, 0.0, 0.0};
        detail::gk15_panel(f, sa, sb, s.value, s.error);
        total += s.value;
        total_err += s.error;
        res.evaluations += 15;
        heap.push(s);
    }

    int splits = 0;
    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)) &&
           splits < spec.max_subdivisions) {
        detail::Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at rounding limit; keep its estimate and stop splitting it
            detail::Segment dead = worst;
            dead.error = 0.0;
            heap.push(dead);
            continue;
        }
        detail::Segment l{worst.a, mid, 0.0, 0.0}, r{mid, worst.b, 0.0, 0.0};
        detail::gk15_panel(f, l.a, l.b, l.value, l.error);
        detail::gk15_panel(f, r.a, r.b, r.value, r.error);
        res.evaluations += 30;
        total += l.value + r.value - worst.value;
        total_err += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        ++splits;
    }
    res.value = total;
    res.error = total_err;
    res.converged =
        total_err <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
    return res;
}

/// Integral of f over [a, +inf) via the algebraic map t = a + u/(1-u).
template <class F>
QuadResult integrate_to_infinity(F&& f, double a, const QuadratureSpec& spec = {}) {
    auto g = [&f, a](double u) {
        if (u >= 1.0) return 0.0;
        const double w = 1.0 - u;
        return f(a + u / w) / (w * w);
    };
    QuadratureSpec s = spec;
    // the mapped integrand is typically non-smooth near u = 1
    s.endpoint_exponents.second = s.endpoint_exponents.second != 0.0
                                      ? s.endpoint_exponents.second
                                      : 1.0;
    return integrate(g, 0.0, 1.0, s);
}

} // namespace ltlab::quad
