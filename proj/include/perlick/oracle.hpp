#pragma once

// Independent finite-difference oracle for H_q = -d^2/dr^2 + V_q(r): a
// symmetric tridiagonal discretization, Sturm-sequence bisection for its
// eigenvalues, weighted Gram matrices by composite Gauss-Legendre, and node
// counting.

#include "perlick/closedform.hpp"
#include "perlick/model.hpp"
#include "perlick/quadrature.hpp"
#include "perlick/susy.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <stdexcept>
#include <vector>

namespace perlick {

/// Nodes r_i = x_i^m with x uniform between r_min^(1/m) and r_max^(1/m),
/// i = 0..n_points+1; the two end nodes carry the boundary conditions.
/// map_power = 1 is the plain uniform grid with h = (r_max - r_min)/(n_points + 1).
struct RadialGrid {
    double r_min = 1e-3;
    double r_max = 30.0;
    int n_points = 1000;
    int map_power = 1;

    void validate() const
    {
        if (!(r_min > 0.0)) throw DomainError("grid r_min must be positive");
        if (!(r_max > r_min) || !std::isfinite(r_max)) throw DomainError("grid r_max must exceed r_min");
        if (n_points < 3) throw DomainError("grid needs at least 3 interior points");
        if (map_power < 1) throw DomainError("grid map power must be >= 1");
    }

    double x_min() const { return std::pow(r_min, 1.0 / map_power); }
    double x_max() const { return std::pow(r_max, 1.0 / map_power); }
    /// Spacing in the mapped coordinate (equals the r spacing when map_power = 1).
    double spacing() const { return (x_max() - x_min()) / (n_points + 1); }
    double x_node(int i) const { return x_min() + i * spacing(); }
    double node(int i) const
    {
        if (i == 0) return r_min;
        if (i == n_points + 1) return r_max;
        return std::pow(x_node(i), map_power);
    }
};

/// exp(-2 (mu/s - k s) r_max): weight of the level-s tail cut off by the grid.
inline double truncation_factor(const RadialGrid& grid, double s, double mu, double k)
{
    return std::exp(-2.0 * (mu / s - k * s) * grid.r_max);
}

struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    std::size_t size() const { return diagonal.size(); }
};

enum class InnerBoundary {
    dirichlet, ///< psi(r_min) = 0
    frobenius, ///< psi(r_min)/psi(r_1) from the local behaviour r^e (1 - mu r / e)
};

/// Local solution data used by the Frobenius closure.
struct InnerClosure {
    InnerBoundary kind = InnerBoundary::dirichlet;
    double exponent = 1.0;
    double coulomb_mu = 0.0;
};

/// Discretizes -d^2/dr^2 + V(r) on the grid (Sturm-Liouville form in the
/// mapped coordinate, symmetrized), Dirichlet at r_max.
template <class Potential>
TridiagonalOperator discretize_potential(const Potential& potential, const RadialGrid& grid,
                                         const InnerClosure& closure = {})
{
    grid.validate();
    const int n = grid.n_points;
    const int m = grid.map_power;
    const double h = grid.spacing();
    auto dg = [m](double x) { return m == 1 ? 1.0 : m * std::pow(x, m - 1); };

    TridiagonalOperator t;
    t.diagonal.resize(n);
    t.off_diagonal.resize(n - 1);
    std::vector<double> w(n);
    for (int i = 1; i <= n; ++i) {
        const double x = grid.x_node(i);
        const double p_lo = 1.0 / dg(x - 0.5 * h);
        const double p_hi = 1.0 / dg(x + 0.5 * h);
        w[i - 1] = dg(x);
        t.diagonal[i - 1] = (p_lo + p_hi) / (h * h) + w[i - 1] * potential(grid.node(i));
        if (i < n) t.off_diagonal[i - 1] = -p_hi / (h * h);
    }
    if (closure.kind == InnerBoundary::frobenius) {
        const double e = closure.exponent;
        auto local = [&](double r) { return std::pow(r, e) * (1.0 - closure.coulomb_mu * r / e); };
        double f0 = local(grid.node(0)), f1 = local(grid.node(1));
        if (!(f0 > 0.0 && f1 > 0.0)) {
            f0 = std::pow(grid.node(0), e);
            f1 = std::pow(grid.node(1), e);
        }
        const double p_half = 1.0 / dg(grid.x_min() + 0.5 * h);
        t.diagonal[0] -= p_half / (h * h) * (f0 / f1);
    }
    for (int i = 0; i < n; ++i) t.diagonal[i] /= w[i];
    for (int i = 0; i + 1 < n; ++i) t.off_diagonal[i] /= std::sqrt(w[i] * w[i + 1]);
    return t;
}

/// H_q on the grid. Verification runs need at least 10 interior points.
inline TridiagonalOperator discretize(double q, const PerlickIParams& p, const RadialGrid& grid,
                                      InnerBoundary boundary = InnerBoundary::frobenius)
{
    p.require_curved();
    grid.validate();
    if (!(q >= 0.0)) throw DomainError("shape parameter q must be non-negative");
    if (grid.n_points < 10) throw DomainError("grid too coarse: need at least 10 interior points");
    const double mu = p.mu, k = p.k;
    auto potential = [=](double r) { return hyperbolic_potential(q, r, mu, k); };
    InnerClosure closure{boundary, q > 0.0 ? q : 1.0 - q, mu};
    return discretize_potential(potential, grid, closure);
}

/// Number of eigenvalues strictly below x (LDL^T inertia).
inline std::size_t sturm_count(const TridiagonalOperator& t, double x)
{
    const auto& a = t.diagonal;
    const auto& b = t.off_diagonal;
    if (a.empty()) return 0;
    double bmax = 0.0;
    for (double v : b) bmax = std::max(bmax, v * v);
    const double pivmin = std::numeric_limits<double>::min() * std::max(1.0, bmax);
    std::size_t count = 0;
    double d = a[0] - x;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < a.size(); ++i) {
        d = a[i] - x - b[i - 1] * b[i - 1] / d;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

/// Closed interval containing the whole spectrum.
inline std::pair<double, double> gershgorin_bounds(const TridiagonalOperator& t)
{
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    const std::size_t n = t.size();
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.off_diagonal[i - 1]);
        if (i + 1 < n) r += std::abs(t.off_diagonal[i]);
        lo = std::min(lo, t.diagonal[i] - r);
        hi = std::max(hi, t.diagonal[i] + r);
    }
    return {lo, hi};
}

/// index-th smallest eigenvalue (0-based), bracketed to 1e-12 max(1, |lambda|).
inline double sturm_eigenvalue(const TridiagonalOperator& t, std::size_t index)
{
    if (index >= t.size()) throw DomainError("eigenvalue index exceeds matrix size");
    auto [lo, hi] = gershgorin_bounds(t);
    const double pad = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
    lo -= pad;
    hi += pad;
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-12 * std::max(1.0, std::abs(mid)) || mid == lo || mid == hi) break;
        if (sturm_count(t, mid) > index)
            hi = mid;
        else
            lo = mid;
    }
    if (!(sturm_count(t, lo) <= index && sturm_count(t, hi) > index))
        throw std::logic_error("Sturm bracket lost its eigenvalue");
    return 0.5 * (lo + hi);
}

/// Lowest `count` eigenvalues in ascending order. With parallel = true each
/// index is bisected on its own thread; the result is identical.
inline std::vector<double> sturm_eigenvalues(const TridiagonalOperator& t, std::size_t count, bool parallel = false)
{
    if (count > t.size()) throw DomainError("requested more eigenvalues than the matrix has");
    std::vector<double> out(count);
    if (!parallel) {
        for (std::size_t j = 0; j < count; ++j) out[j] = sturm_eigenvalue(t, j);
        return out;
    }
    std::vector<std::future<double>> jobs;
    jobs.reserve(count);
    for (std::size_t j = 0; j < count; ++j)
        jobs.push_back(std::async(std::launch::async, [&t, j] { return sturm_eigenvalue(t, j); }));
    for (std::size_t j = 0; j < count; ++j) out[j] = jobs[j].get();
    return out;
}

/// Observed order from three grids h, h/2, h/4 (no exact value needed).
inline double observed_order(double coarse, double medium, double fine)
{
    return std::log2(std::abs((coarse - medium) / (medium - fine)));
}

using Matrix = std::vector<std::vector<double>>;

/// <psi_i | psi_j>_w over `domain` (upper end may be infinite).
inline Matrix gram_matrix(const std::vector<RadialFunction>& states, const std::function<double(double)>& weight,
                          const Interval& domain, const QuadratureSpec& spec = {})
{
    const std::size_t n = states.size();
    Matrix g(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto integrand = [&](double x) {
                const double v = states[i](x) * states[j](x) * weight(x);
                if (!std::isfinite(v)) throw DomainError("state not finite at a quadrature node");
                return v;
            };
            g[i][j] = g[j][i] = integrate(integrand, domain.lower, domain.upper, spec);
        }
    }
    return g;
}

/// G_ij / sqrt(G_ii G_jj)
inline Matrix normalized(const Matrix& g)
{
    Matrix out = g;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j) out[i][j] = g[i][j] / std::sqrt(g[i][i] * g[j][j]);
    return out;
}

/// Strict sign changes across consecutive interior nodes; exact zeros skipped.
template <class Psi>
int node_count(const Psi& psi, const RadialGrid& grid)
{
    grid.validate();
    int changes = 0;
    int last = 0;
    for (int i = 1; i <= grid.n_points; ++i) {
        const double v = psi(grid.node(i));
        if (!std::isfinite(v)) throw DomainError("state not finite on the grid");
        const int sign = (v > 0.0) - (v < 0.0);
        if (sign == 0) continue;
        if (last != 0 && sign != last) ++changes;
        last = sign;
    }
    return changes;
}

/// int_0^r_max exp(2 W_s(r)) dr; grows without bound in r_max exactly when
/// s k >= mu/s.
inline double ground_norm_integral(double s, double mu, double k, double r_max, const QuadratureSpec& spec = {})
{
    auto f = [=](double r) { return r > 0.0 ? std::exp(2.0 * prepotential(s, r, mu, k)) : 0.0; };
    return integrate(f, 0.0, r_max, spec);
}

} // namespace perlick
