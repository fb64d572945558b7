#ifndef YAMABE_QUADRATURE_HPP
#define YAMABE_QUADRATURE_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "yamabe/profile.hpp"

namespace yamabe {

// Deterministic double-exponential (tanh-sinh) quadrature in long double.
// Half-line integrals go through the rational compactification x -> x/(1-x)
// onto (0,1); the tanh-sinh nodes then cluster double-exponentially at both
// endpoints, which absorbs the algebraic decay of every integrand in scope.
// Node generation, refinement and summation order are fixed, so results are
// bit-identical across runs by construction.
struct QuadratureSpec {
    long double rel_tol = 1e-10L;
    int max_level = 10;
    int precision_bits = 64;
    std::string transform = "rational-unit-square";  // documented identity of the map
};

struct QuadratureResult {
    long double value = 0.0L;
    long double error_bound = 0.0L;
    int levels_used = 0;
};

namespace detail {

// Nodes for the unit interval (0,1): x = (1 + tanh((pi/2) sinh(jh)))/2.
// The complement 1-x is tracked separately so endpoint-singular factors can
// be evaluated without cancellation.
struct TSNode {
    long double x;
    long double xc;  // 1 - x
    long double w;
};

inline const std::vector<std::vector<TSNode>>& ts_levels() {
    static const std::vector<std::vector<TSNode>> levels = [] {
        const long double pi_half = 1.57079632679489661923132169163975144L;
        const long double t_max = 4.6L;
        std::vector<std::vector<TSNode>> out;
        for (int level = 0; level <= 12; ++level) {
            long double h = 1.0L / static_cast<long double>(1 << level);
            int nmax = static_cast<int>(t_max / h);
            std::vector<TSNode> nodes;
            nodes.reserve(2 * nmax + 1);
            for (int j = -nmax; j <= nmax; ++j) {
                long double u = pi_half * std::sinh(j * h);
                long double ch = std::cosh(u);
                // 1 - tanh(u) = 2 exp(-2u) / (1 + exp(-2u)) keeps the
                // complement accurate for large positive u
                long double e = std::exp(-2.0L * u);
                long double xc = e / (1.0L + e);
                long double x = 1.0L / (1.0L + e);
                long double w = 0.5L * h * pi_half * std::cosh(j * h) / (ch * ch);
                if (w < 1e-30L || xc < 1e-30L || x < 1e-30L) continue;
                nodes.push_back({x, xc, w});
            }
            out.push_back(std::move(nodes));
        }
        return out;
    }();
    return levels;
}

inline long double kahan_add(long double& sum, long double& comp, long double v) {
    long double y = v - comp;
    long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    return sum;
}

}  // namespace detail

// Integral over (0,1). The integrand receives (x, 1-x).
template <class F>
QuadratureResult integrate_unit(const F& f, const QuadratureSpec& spec = {}) {
    if (spec.precision_bits > 64)
        throw std::domain_error("integrate: requested precision exceeds working precision");
    const auto& levels = detail::ts_levels();
    int lmax = std::min<int>(spec.max_level, static_cast<int>(levels.size()) - 1);
    long double prev = 0.0L;
    QuadratureResult res;
    for (int level = 2; level <= lmax; ++level) {
        long double sum = 0.0L, comp = 0.0L;
        for (const auto& nd : levels[level]) detail::kahan_add(sum, comp, nd.w * f(nd.x, nd.xc));
        res.levels_used = level;
        res.value = sum;
        res.error_bound = std::fabs(sum - prev);
        if (level > 2) {
            long double scale = std::max(std::fabs(sum), 1e-300L);
            if (res.error_bound <= spec.rel_tol * scale) return res;
        }
        prev = sum;
    }
    long double scale = std::max(std::fabs(res.value), 1e-300L);
    if (res.error_bound > spec.rel_tol * scale)
        throw std::runtime_error("integrate: refinement limit hit before tolerance");
    return res;
}

// Integral over (0, inf) via x -> x/(1-x).
template <class F>
QuadratureResult integrate_halfline(const F& f, const QuadratureSpec& spec = {}) {
    return integrate_unit(
        [&](long double x, long double xc) {
            long double r = x / xc;
            return f(r) / (xc * xc);
        },
        spec);
}

// Integral over a finite interval (a, b).
template <class F>
QuadratureResult integrate_interval(const F& f, long double a, long double b,
                                    const QuadratureSpec& spec = {}) {
    long double len = b - a;
    return integrate_unit([&](long double x, long double) { return f(a + len * x) * len; }, spec);
}

// Integral over the quadrant (rho, t) in (0, inf)^2 with an extra rho^deg
// factor (the surface weight). Tensor tanh-sinh grid, fixed order.
template <class F>
QuadratureResult integrate_quadrant(const F& f, int weight_rho_deg,
                                    const QuadratureSpec& spec = {}) {
    if (spec.precision_bits > 64)
        throw std::domain_error("integrate: requested precision exceeds working precision");
    const auto& levels = detail::ts_levels();
    int lmax = std::min<int>(spec.max_level, static_cast<int>(levels.size()) - 1);
    long double prev = 0.0L;
    QuadratureResult res;
    for (int level = 2; level <= lmax; ++level) {
        long double sum = 0.0L, comp = 0.0L;
        for (const auto& nr : levels[level]) {
            long double rho = nr.x / nr.xc;
            long double jr = nr.w / (nr.xc * nr.xc);
            long double wfac = jr * std::pow(rho, static_cast<long double>(weight_rho_deg));
            long double row = 0.0L, rowc = 0.0L;
            for (const auto& nt : levels[level]) {
                long double t = nt.x / nt.xc;
                long double jt = nt.w / (nt.xc * nt.xc);
                detail::kahan_add(row, rowc, jt * f(rho, t));
            }
            detail::kahan_add(sum, comp, wfac * row);
        }
        res.levels_used = level;
        res.value = sum;
        res.error_bound = std::fabs(sum - prev);
        if (level > 2) {
            long double scale = std::max(std::fabs(sum), 1e-300L);
            if (res.error_bound <= spec.rel_tol * scale) return res;
        }
        prev = sum;
    }
    long double scale = std::max(std::fabs(res.value), 1e-300L);
    if (res.error_bound > spec.rel_tol * scale)
        throw std::runtime_error("integrate: refinement limit hit before tolerance");
    return res;
}

// Finite rectangle (0,R) x (0,T), used for the truncated cylinder fits.
template <class F>
QuadratureResult integrate_rectangle(const F& f, long double R, long double T,
                                     const QuadratureSpec& spec = {}) {
    const auto& levels = detail::ts_levels();
    int lmax = std::min<int>(spec.max_level, static_cast<int>(levels.size()) - 1);
    long double prev = 0.0L;
    QuadratureResult res;
    for (int level = 2; level <= lmax; ++level) {
        long double sum = 0.0L, comp = 0.0L;
        for (const auto& nr : levels[level]) {
            long double rho = R * nr.x;
            long double row = 0.0L, rowc = 0.0L;
            for (const auto& nt : levels[level])
                detail::kahan_add(row, rowc, nt.w * T * f(rho, nt.x * T));
            detail::kahan_add(sum, comp, nr.w * R * row);
        }
        res.levels_used = level;
        res.value = sum;
        res.error_bound = std::fabs(sum - prev);
        if (level > 2) {
            long double scale = std::max(std::fabs(sum), 1e-300L);
            if (res.error_bound <= spec.rel_tol * scale) return res;
        }
        prev = sum;
    }
    long double scale = std::max(std::fabs(res.value), 1e-300L);
    if (res.error_bound > spec.rel_tol * scale)
        throw std::runtime_error("integrate: refinement limit hit before tolerance");
    return res;
}

// Max residual of a pointwise identity over a fixed geometric ladder of
// sample points, relative to the scale of the right-hand side.
struct ResidualGrid {
    long double max_abs = 0.0L;
    long double max_rel = 0.0L;
    int points = 0;
};

template <class F, class G>
ResidualGrid residual_max(const F& lhs, const G& rhs, int points_per_axis = 16,
                          long double lo = 1e-2L, long double hi = 1e3L) {
    ResidualGrid out;
    long double rhs_scale = 0.0L;
    std::vector<long double> ladder(points_per_axis);
    long double lg_lo = std::log10(lo), lg_hi = std::log10(hi);
    for (int i = 0; i < points_per_axis; ++i)
        ladder[i] = std::pow(10.0L, lg_lo + (lg_hi - lg_lo) * i / (points_per_axis - 1));
    for (long double rho : ladder)
        for (long double t : ladder) rhs_scale = std::max(rhs_scale, std::fabs(rhs(rho, t)));
    if (rhs_scale == 0.0L) rhs_scale = 1.0L;
    for (long double rho : ladder) {
        for (long double t : ladder) {
            long double r = std::fabs(lhs(rho, t) - rhs(rho, t));
            out.max_abs = std::max(out.max_abs, r);
            ++out.points;
        }
    }
    out.max_rel = out.max_abs / rhs_scale;
    return out;
}

// Pass/fail comparison of an exact value against a quadrature result.
struct CrossCheck {
    bool pass = false;
    long double exact_value = 0.0L;
    long double numeric_value = 0.0L;
    long double rel_err = 0.0L;
};

inline CrossCheck crosscheck(long double exact_value, const QuadratureResult& numeric,
                             long double tol) {
    CrossCheck c;
    c.exact_value = exact_value;
    c.numeric_value = numeric.value;
    long double scale = std::max(std::fabs(exact_value), std::fabs(numeric.value));
    if (scale == 0.0L) {
        c.rel_err = 0.0L;
        c.pass = true;
        return c;
    }
    c.rel_err = std::fabs(exact_value - numeric.value) / scale;
    c.pass = c.rel_err <= tol + numeric.error_bound / scale;
    return c;
}

}  // namespace yamabe

#endif
