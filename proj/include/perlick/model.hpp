#pragma once

// Geometry of the Perlick family I (Kepler type) systems: parameters,
// coordinate charts, metric, potential, scalar product weights and curvature.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace perlick {

/// Raised when an argument lies outside the domain of a formula or chart.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters (beta, k, mu, G) of family I. k = 0 is the flat limit and is
/// only meaningful for the pointwise formulas.
struct PerlickIParams {
    double beta = 1.0;
    double k = 1.0;
    double mu = 1.0;
    double g_shift = 0.0;

    void validate() const
    {
        if (!(std::isfinite(beta) && beta > 0.0)) throw DomainError("beta must be positive");
        if (!(std::isfinite(k) && k >= 0.0)) throw DomainError("k must be non-negative");
        if (!(std::isfinite(mu) && mu > 0.0)) throw DomainError("mu must be positive");
        if (!std::isfinite(g_shift)) throw DomainError("G must be finite");
    }

    void require_curved() const
    {
        validate();
        if (!(k > 0.0)) throw DomainError("k must be positive for this operation");
    }
};

enum class ChartId {
    hyperbolic,  ///< r, arc length of the constant-curvature (beta = 1) space
    flat_radius, ///< r' = sinh(k r)/k, the areal radius of the metric
    conformal,   ///< rho with r' = 2/(rho^-beta - k^2 rho^beta)
};

/// The conformal chart has two sheets; only the inner one carries spectra.
enum class ConformalBranch { inner, outer };

inline const char* to_string(ChartId id)
{
    switch (id) {
    case ChartId::hyperbolic: return "hyperbolic";
    case ChartId::flat_radius: return "flat_radius";
    case ChartId::conformal: return "conformal";
    }
    return "?";
}

struct Interval {
    double lower = 0.0;
    double upper = std::numeric_limits<double>::infinity();
    bool lower_closed = false;
    bool upper_closed = false;

    bool contains(double x) const
    {
        if (!std::isfinite(x)) return false;
        bool lo = lower_closed ? x >= lower : x > lower;
        bool hi = upper_closed ? x <= upper : x < upper;
        return lo && hi;
    }
};

struct CoordinateChart {
    ChartId id = ChartId::hyperbolic;
    Interval domain;
    ConformalBranch branch = ConformalBranch::inner;
};

/// Evaluations closer than this (relative) to a finite nonzero chart boundary
/// are rejected.
inline constexpr double boundary_guard = 1e-10;

inline CoordinateChart make_chart(ChartId id, const PerlickIParams& p,
                                  ConformalBranch branch = ConformalBranch::inner)
{
    p.require_curved();
    CoordinateChart chart{id, {}, branch};
    if (id == ChartId::conformal) {
        double edge = std::pow(p.k, -1.0 / p.beta);
        if (branch == ConformalBranch::inner)
            chart.domain = {0.0, edge, true, false};
        else
            chart.domain = {edge, std::numeric_limits<double>::infinity(), false, false};
    }
    return chart;
}

namespace detail {

inline void require_in_chart(const CoordinateChart& chart, double x)
{
    if (!chart.domain.contains(x))
        throw DomainError(std::string("point outside ") + to_string(chart.id) + " chart domain");
    for (double b : {chart.domain.lower, chart.domain.upper}) {
        if (std::isfinite(b) && b != 0.0 && std::abs(x - b) < boundary_guard * std::abs(b))
            throw DomainError(std::string("point within guard distance of ") + to_string(chart.id)
                              + " chart boundary");
    }
}

inline void require_positive_radius(double r)
{
    if (!(std::isfinite(r) && r > 0.0)) throw DomainError("radius must be positive");
}

// Areal radius -> beta = 1 conformal radius t (t = rho^beta).
inline double flat_to_conformal_t(double rp, double k, ConformalBranch branch)
{
    double root = std::sqrt(1.0 + k * k * rp * rp);
    if (branch == ConformalBranch::inner) return rp / (1.0 + root);
    return (1.0 + root) / (k * k * rp);
}

inline double conformal_t_to_flat(double t, double k, ConformalBranch branch)
{
    double kt2 = k * k * t * t;
    if (branch == ConformalBranch::inner) return 2.0 * t / (1.0 - kt2);
    return 2.0 * t / (kt2 - 1.0);
}

} // namespace detail

/// Maps a coordinate value between charts. hyperbolic <-> flat_radius does
/// not involve beta; the conformal chart uses rho = t^(1/beta).
inline double chart_map(const CoordinateChart& from, const CoordinateChart& to, double x,
                        const PerlickIParams& p)
{
    p.require_curved();
    detail::require_in_chart(from, x);
    if (from.id == to.id && from.branch == to.branch) return x;
    const double k = p.k;

    double rp = 0.0; // areal radius
    switch (from.id) {
    case ChartId::hyperbolic:
        if (to.id == ChartId::conformal && to.branch == ConformalBranch::inner) {
            double t = std::tanh(0.5 * k * x) / k;
            return std::pow(t, 1.0 / p.beta);
        }
        rp = std::sinh(k * x) / k;
        break;
    case ChartId::flat_radius: rp = x; break;
    case ChartId::conformal: {
        double t = std::pow(x, p.beta);
        if (x == 0.0) throw DomainError("conformal origin has no image in the target chart");
        if (to.id == ChartId::hyperbolic && from.branch == ConformalBranch::inner)
            return 2.0 * std::atanh(k * t) / k;
        rp = detail::conformal_t_to_flat(t, k, from.branch);
        break;
    }
    }

    double y = 0.0;
    switch (to.id) {
    case ChartId::hyperbolic: y = std::asinh(k * rp) / k; break;
    case ChartId::flat_radius: y = rp; break;
    case ChartId::conformal:
        y = std::pow(detail::flat_to_conformal_t(rp, k, to.branch), 1.0 / p.beta);
        break;
    }
    if (!to.domain.contains(y)) throw DomainError("image outside target chart branch");
    return y;
}

/// f(r) = beta^2 (1 + k^2 r^2): the inverse radial metric coefficient.
inline double metric_coefficient(double r, const PerlickIParams& p)
{
    p.validate();
    detail::require_positive_radius(r);
    return p.beta * p.beta * (1.0 + p.k * p.k * r * r);
}

/// V(r) = -mu sqrt(1/r^2 + k^2) + G.
inline double family1_potential(double r, const PerlickIParams& p)
{
    p.validate();
    detail::require_positive_radius(r);
    return -p.mu * std::hypot(1.0 / r, p.k) + p.g_shift;
}

/// Scalar curvature of the family I metric at conformal radius rho.
/// Constant -6 k^2 for beta = 1.
inline double perlick_curvature(double rho, const PerlickIParams& p)
{
    p.validate();
    detail::require_positive_radius(rho);
    const double b = p.beta;
    const double k2 = p.k * p.k;
    double deformation = (b * b - 1.0);
    double tail = deformation == 0.0
                      ? 0.0
                      : deformation * (k2 * k2 * std::pow(rho, 2 * b) + std::pow(rho, -2 * b));
    return -0.5 * (tail + 2.0 * k2 * (1.0 + 5.0 * b * b));
}

/// Conformal factor f(rho) = 4/(rho^2 (rho^-beta - k^2 rho^beta)^2), so that
/// ds^2 = f (d rho^2 + rho^2 dOmega^2).
inline double perlick_conformal_factor(double rho, const PerlickIParams& p)
{
    p.validate();
    detail::require_positive_radius(rho);
    double t = std::pow(rho, p.beta);
    double gap = 1.0 - p.k * p.k * t * t;
    if (std::abs(gap) < boundary_guard) throw DomainError("conformal factor evaluated at the chart boundary");
    double s = rho * (1.0 / t - p.k * p.k * t);
    return 4.0 / (s * s);
}

/// Value, gradient and diagonal second partials of a conformal factor at a point.
struct ConformalFieldSample {
    double value = 0.0;
    std::array<double, 3> gradient{};
    std::array<double, 3> second{};
};

/// R = sum_i (3 f_i^2 - 4 f f_ii) / (2 f^3) for ds^2 = f (dx1^2 + dx2^2 + dx3^2).
inline double conformal_curvature(const ConformalFieldSample& s)
{
    if (!(s.value > 0.0) || !std::isfinite(s.value)) throw DomainError("conformal factor must be positive");
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) acc += 3.0 * s.gradient[i] * s.gradient[i] - 4.0 * s.value * s.second[i];
    return acc / (2.0 * s.value * s.value * s.value);
}

/// Same, with partials from second-order central differences of step h.
template <class Field>
double conformal_curvature(const Field& f, const std::array<double, 3>& x, double h)
{
    ConformalFieldSample s;
    s.value = f(x);
    for (int i = 0; i < 3; ++i) {
        auto xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        double fp = f(xp), fm = f(xm);
        if (!(fp > 0.0 && fm > 0.0) || !std::isfinite(fp) || !std::isfinite(fm))
            throw DomainError("conformal factor must be positive on the stencil");
        s.gradient[i] = (fp - fm) / (2.0 * h);
        s.second[i] = (fp - 2.0 * s.value + fm) / (h * h);
    }
    return conformal_curvature(s);
}

/// Scalar product weight attached to a chart (beta = 1 conventions).
struct WeightFunction {
    ChartId chart = ChartId::hyperbolic;
    double k = 1.0;

    double operator()(double x) const
    {
        switch (chart) {
        case ChartId::hyperbolic: return 1.0;
        case ChartId::flat_radius: return x * x / std::sqrt(1.0 + k * k * x * x);
        case ChartId::conformal: {
            double g = 1.0 - k * k * x * x;
            return 8.0 * x * x / (g * g * g);
        }
        }
        return 0.0;
    }
};

inline WeightFunction weight_for(ChartId chart, const PerlickIParams& p)
{
    p.require_curved();
    return {chart, p.k};
}

} // namespace perlick
