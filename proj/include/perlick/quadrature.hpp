#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace perlick {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton iteration on P_n).
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

// P_n(x) and P_n'(x) by the three-term recurrence.
inline std::pair<double, double> legendre_with_derivative(int n, double x)
{
    double p0 = 1.0, p1 = x;
    if (n == 0) return {1.0, 0.0};
    for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
    }
    return {p1, n * (x * p1 - p0) / (x * x - 1.0)};
}

} // namespace detail

inline GaussRule gauss_legendre(int n)
{
    if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
    GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = detail::legendre_with_derivative(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double dp = detail::legendre_with_derivative(n, x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

/// Composite Gauss-Legendre: `panels` uniform panels of `nodes` points, plus
/// `graded_layers` geometrically shrinking panels (ratio `grading_ratio`)
/// at each end for endpoint singularities. Semi-infinite intervals are
/// mapped by x = a + scale * u/(1 - u).
struct QuadratureSpec {
    int panels = 64;
    int nodes = 16;
    int graded_layers = 0;
    double grading_ratio = 0.15;
    double infinite_scale = 1.0;
};

namespace detail {

inline std::vector<double> panel_breaks(double a, double b, const QuadratureSpec& spec)
{
    std::vector<double> br;
    const double len = b - a;
    std::vector<double> layers; // distances from an end, shrinking
    for (int i = 1; i <= spec.graded_layers; ++i) layers.push_back(std::pow(spec.grading_ratio, i));
    // graded zone occupies the first uniform panel at each end
    const double cell = len / spec.panels;
    br.push_back(a);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) br.push_back(a + cell * (*it));
    for (int i = 1; i < spec.panels; ++i) br.push_back(a + cell * i);
    for (double d : layers) br.push_back(b - cell * d);
    br.push_back(b);
    // drop layers too thin to resolve in floating point (relative to the
    // break points themselves, so an end at 0 can be graded deeply)
    auto resolvable = [](double lo, double hi) {
        return hi - lo > 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi));
    };
    std::vector<double> kept{br.front()};
    for (std::size_t i = 1; i + 1 < br.size(); ++i)
        if (resolvable(kept.back(), br[i]) && resolvable(br[i], br.back())) kept.push_back(br[i]);
    kept.push_back(br.back());
    return kept;
}

} // namespace detail

namespace detail {

template <class F>
double integrate_finite(const F& f, double a, double b, const QuadratureSpec& spec)
{
    const GaussRule rule = gauss_legendre(spec.nodes);
    const auto br = panel_breaks(a, b, spec);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < br.size(); ++p) {
        const double lo = br[p], hi = br[p + 1];
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double acc = 0.0;
        for (int i = 0; i < spec.nodes; ++i) {
            const double v = f(mid + half * rule.nodes[i]);
            if (!std::isfinite(v)) throw std::domain_error("non-finite integrand at a quadrature node");
            acc += rule.weights[i] * v;
        }
        total += half * acc;
    }
    return total;
}

} // namespace detail

/// Integral of f over [a, b]; b may be +infinity.
template <class F>
double integrate(const F& f, double a, double b, const QuadratureSpec& spec = {})
{
    if (!(b > a)) throw std::invalid_argument("integration interval must be non-empty");
    if (spec.panels < 1 || spec.nodes < 1) throw std::invalid_argument("invalid quadrature spec");
    if (std::isinf(b)) {
        const double s = spec.infinite_scale;
        auto mapped = [&](double u) {
            const double v = 1.0 - u;
            return f(a + s * u / v) * s / (v * v);
        };
        return detail::integrate_finite(mapped, 0.0, 1.0, spec);
    }
    return detail::integrate_finite(f, a, b, spec);
}

} // namespace perlick
