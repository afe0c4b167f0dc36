#pragma once

// Closed-form bound states in the conformal chart and the similarity chain
//   hyperbolic --(1/r')--> flat_radius (LB) --(point map)--> conformal (LB)
//   --(1/sqrt(1 - k^2 t^2))--> conformal (Schrodinger / vm)
// relating them to the ladder-built states. All of it is the beta = 1 geometry;
// general beta enters through general_beta_reduce (quantize.hpp).

#include "perlick/jacobi.hpp"
#include "perlick/model.hpp"
#include "perlick/susy.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace perlick {

/// Jacobi parameters of the level with shape parameter q and excitation n,
/// s = q + n:  alpha = mu/(k s) - s,  beta = -mu/(k s) - s.
inline JacobiParams level_jacobi_params(int n, double q, double mu, double k)
{
    const double s = q + n;
    return {n, mu / (k * s) - s, -mu / (k * s) - s};
}

/// Schrodinger-quantized (vm) eigenfunction in the conformal coordinate t for
/// shape parameter q, up to normalization:
///   exp(-2 mu atanh(kt)/(k s)) t^(s-1) (1 - k^2 t^2)^-(s - 1/2) P_n(x),
///   x = (1 + k^2 t^2)/(2 k t) = coth of the hyperbolic radius.
inline double closedform_vm_state(int n, double q, double t, double mu, double k)
{
    if (!(k > 0.0) || !(mu > 0.0)) throw DomainError("mu and k must be positive");
    if (n < 0 || !(q > 0.0)) throw DomainError("invalid level");
    const double s = q + n;
    if (!(s * s < mu / k)) throw DomainError("level not bound: s^2 >= mu/k");
    const double kt = k * t;
    if (!(t > 0.0) || !(kt < 1.0)) throw DomainError("conformal radius outside (0, 1/k)");
    if (1.0 - kt < boundary_guard) throw DomainError("conformal radius within guard distance of 1/k");
    const double gap = 1.0 - kt * kt;
    const double x = (1.0 + kt * kt) / (2.0 * kt);
    const double log_env = -2.0 * mu * std::atanh(kt) / (k * s) + (s - 1.0) * std::log(t)
                           - (s - 0.5) * std::log(gap);
    return std::exp(log_env) * jacobi_eval(level_jacobi_params(n, q, mu, k), x);
}

/// psi_{n,l}(t) for the beta = 1 problem (q = l + 1).
inline double closedform_eigenfunction(int n, int l, double t, double mu, double k)
{
    if (l < 0) throw DomainError("angular momentum must be non-negative");
    return closedform_vm_state(n, l + 1.0, t, mu, k);
}

/// E = -mu^2/(2 s^2) - k^2 s^2/2 + k^2/8 with s = n + l + 1.
inline double closedform_energy(int n, int l, double mu, double k)
{
    if (n < 0 || l < 0) throw DomainError("quantum numbers must be non-negative");
    const double s = n + l + 1.0;
    if (!(s * s * k < mu)) throw DomainError("level not bound: (n+l+1)^2 >= mu/k");
    return 0.5 * factorization_energy(s, mu, k) + k * k / 8.0;
}

/// Where a radial function lives: chart plus the operator family it belongs to.
enum class Representation {
    hyperbolic,     ///< r, plain dr measure, H_q
    flat_radius_lb, ///< r', weight r'^2/sqrt(1 + k^2 r'^2), Laplace-Beltrami
    conformal_lb,   ///< t, weight 8 t^2/(1 - k^2 t^2)^3, Laplace-Beltrami
    conformal_vm,   ///< t, weight 8 t^2/(1 - k^2 t^2)^2, Schrodinger ordering
};

inline const char* to_string(Representation r)
{
    switch (r) {
    case Representation::hyperbolic: return "hyperbolic";
    case Representation::flat_radius_lb: return "flat_radius_lb";
    case Representation::conformal_lb: return "conformal_lb";
    case Representation::conformal_vm: return "conformal_vm";
    }
    return "?";
}

inline ChartId chart_of(Representation r)
{
    switch (r) {
    case Representation::hyperbolic: return ChartId::hyperbolic;
    case Representation::flat_radius_lb: return ChartId::flat_radius;
    default: return ChartId::conformal;
    }
}

inline double representation_weight(Representation r, double x, double k)
{
    switch (r) {
    case Representation::hyperbolic: return 1.0;
    case Representation::flat_radius_lb: return x * x / std::sqrt(1.0 + k * k * x * x);
    case Representation::conformal_lb: {
        double g = 1.0 - k * k * x * x;
        return 8.0 * x * x / (g * g * g);
    }
    case Representation::conformal_vm: {
        double g = 1.0 - k * k * x * x;
        return 8.0 * x * x / (g * g);
    }
    }
    return 0.0;
}

/// Interval on which a representation's functions live.
inline Interval representation_domain(Representation r, double k)
{
    if (chart_of(r) == ChartId::conformal) return {0.0, 1.0 / k, false, false};
    return {};
}

using RadialFunction = std::function<double(double)>;

/// Moves a function one step along the chain, preserving scalar products.
/// Only adjacent pairs (or the identity) are supported.
inline RadialFunction similarity_transport(RadialFunction psi, Representation from, Representation to,
                                           const PerlickIParams& p)
{
    p.require_curved();
    const double k = p.k;
    const int a = static_cast<int>(from), b = static_cast<int>(to);
    if (a == b) return psi;
    if (std::abs(a - b) != 1)
        throw DomainError(std::string("unsupported transport ") + to_string(from) + " -> " + to_string(to));

    using R = Representation;
    if (from == R::hyperbolic && to == R::flat_radius_lb)
        return [psi, k](double rp) { return psi(std::asinh(k * rp) / k) / rp; };
    if (from == R::flat_radius_lb && to == R::hyperbolic)
        return [psi, k](double r) {
            double rp = std::sinh(k * r) / k;
            return psi(rp) * rp;
        };
    if (from == R::flat_radius_lb && to == R::conformal_lb)
        return [psi, k](double t) { return psi(detail::conformal_t_to_flat(t, k, ConformalBranch::inner)); };
    if (from == R::conformal_lb && to == R::flat_radius_lb)
        return [psi, k](double rp) { return psi(detail::flat_to_conformal_t(rp, k, ConformalBranch::inner)); };
    if (from == R::conformal_lb && to == R::conformal_vm)
        return [psi, k](double t) { return psi(t) / std::sqrt(1.0 - k * k * t * t); };
    // conformal_vm -> conformal_lb
    return [psi, k](double t) { return psi(t) * std::sqrt(1.0 - k * k * t * t); };
}

/// Composition of adjacent steps.
inline RadialFunction transport_along_chain(RadialFunction psi, Representation from, Representation to,
                                            const PerlickIParams& p)
{
    int a = static_cast<int>(from);
    const int b = static_cast<int>(to);
    while (a != b) {
        int next = a + (b > a ? 1 : -1);
        psi = similarity_transport(std::move(psi), static_cast<Representation>(a),
                                   static_cast<Representation>(next), p);
        a = next;
    }
    return psi;
}

} // namespace perlick
