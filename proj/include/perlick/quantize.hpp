#pragma once

// Quantization schemes for the radial kinetic term and the concrete radial
// Hamiltonians. Each HamiltonianVariant carries its conventions explicitly:
// the kinetic normalization (energy_scale), the constant written into the
// operator, and the resulting eigenvalue offset, so that
//   eigenvalue = energy_scale * eps_s + shift_k2 * k^2.

#include "perlick/closedform.hpp"
#include "perlick/derivatives.hpp"
#include "perlick/model.hpp"
#include "perlick/rational.hpp"
#include "perlick/susy.hpp"

#include <array>
#include <cmath>
#include <string_view>

namespace perlick {

/// Exponents of -f^a d/dr f^(1-a-b) d/dr f^b.
struct OrderingScheme {
    double a_ord = 0.5;
    double b_ord = 0.0;
};

/// (-f^a d/dr f^(1-a-b) d/dr f^b psi)(r). f and psi are Jet-capable callables
/// or plain callables (then differentiated with step h).
template <class F, class Psi>
double vonroos_kinetic(const OrderingScheme& scheme, const F& f, const Psi& psi, double r, double h = 1e-4)
{
    const Jet fj = jet_at(f, r, h);
    if (!(fj.value > 0.0)) throw DomainError("ordering function must be positive");
    const Jet pj = jet_at(psi, r, h);
    const double a = scheme.a_ord, b = scheme.b_ord, c = 1.0 - a - b;
    const double fv = fj.value, f1 = fj.d1, f2 = fj.d2;

    // g = f^b psi
    const double fb = std::pow(fv, b);
    const double g1 = b * fb / fv * f1 * pj.value + fb * pj.d1;
    const double g2 = b * (b - 1.0) * fb / (fv * fv) * f1 * f1 * pj.value + b * fb / fv * f2 * pj.value
                      + 2.0 * b * fb / fv * f1 * pj.d1 + fb * pj.d2;
    // h = f^c g'
    const double fc = std::pow(fv, c);
    const double h1 = c * fc / fv * f1 * g1 + fc * g2;
    return -std::pow(fv, a) * h1;
}

enum class VariantName {
    hyperbolic_1d,   ///< -d^2 + k^2 q(q-1)/sinh^2 - 2 mu k coth
    lb_flatradius,   ///< Laplace-Beltrami form in r', shape parameter q
    lb_3d,           ///< same operator with q(q-1) -> l(l+1)
    lb_conformal,    ///< Laplace-Beltrami form in the conformal coordinate
    vm_conformal,    ///< Schrodinger ordering in the conformal coordinate, no constant
    vm_general_beta, ///< Schrodinger ordering on the general-beta conformal chart
    h_prime,         ///< general-beta operator after r = r'^a and conjugation
};

inline constexpr std::array<VariantName, 7> all_variants{
    VariantName::hyperbolic_1d, VariantName::lb_flatradius, VariantName::lb_3d, VariantName::lb_conformal,
    VariantName::vm_conformal,  VariantName::vm_general_beta, VariantName::h_prime};

struct HamiltonianVariant {
    VariantName name;
    std::string_view id;
    ChartId chart;
    double energy_scale;     ///< factor in front of eps_s
    double constant_term_k2; ///< constant written into the operator, in units of k^2
    double shift_k2;         ///< eigenvalue offset relative to energy_scale * eps_s, units of k^2
    std::string_view level_parameter;
    std::string_view eigenvalue_formula;
};

inline const HamiltonianVariant& describe(VariantName v)
{
    static const std::array<HamiltonianVariant, 7> table{{
        {VariantName::hyperbolic_1d, "hyperbolic_1d", ChartId::hyperbolic, 1.0, 0.0, 0.0, "q",
         "eps_s = -mu^2/s^2 - k^2 s^2, s = q + n"},
        {VariantName::lb_flatradius, "lb_flatradius", ChartId::flat_radius, 0.5, -0.5, 0.0, "q",
         "E = eps_s/2, s = q + n"},
        {VariantName::lb_3d, "lb_3d", ChartId::flat_radius, 0.5, -0.5, 0.0, "l",
         "E = eps_s/2, s = n + l + 1"},
        {VariantName::lb_conformal, "lb_conformal", ChartId::conformal, 0.5, -0.5, 0.0, "q",
         "E = eps_s/2, s = q + n"},
        {VariantName::vm_conformal, "vm_conformal", ChartId::conformal, 0.5, 0.0, 0.125, "q",
         "E = eps_s/2 + k^2/8, s = q + n"},
        {VariantName::vm_general_beta, "vm_general_beta", ChartId::conformal, 0.5, 0.0, 0.125, "l",
         "E = eps_w/2 + k^2/8, w = n + a l + (a+1)/2, a = 1/beta"},
        {VariantName::h_prime, "h_prime", ChartId::conformal, 0.5, 0.0, 0.125, "l",
         "E = eps_w/2 + k^2/8, w = n + a l + (a+1)/2, a = 1/beta"},
    }};
    return table[static_cast<std::size_t>(v)];
}

/// Level label understood by every variant: q for the one-dimensional
/// variants, l for lb_3d, vm_general_beta and h_prime.
struct ShapeParam {
    double q = 1.0;
    int l = 0;
};

/// Eigenvalue of a variant given its effective principal parameter s (or w).
inline double variant_eigenvalue(VariantName v, double s, const PerlickIParams& p)
{
    const auto& d = describe(v);
    return d.energy_scale * factorization_energy(s, p.mu, p.k) + d.shift_k2 * p.k * p.k;
}

/// Domain of the variant's radial coordinate.
inline Interval variant_domain(VariantName v, const PerlickIParams& p)
{
    switch (v) {
    case VariantName::hyperbolic_1d:
    case VariantName::lb_flatradius:
    case VariantName::lb_3d: return {};
    case VariantName::vm_general_beta: return {0.0, std::pow(p.k, -1.0 / p.beta), false, false};
    default: return {0.0, 1.0 / p.k, false, false};
    }
}

/// Weight under which the variant is symmetric.
inline double variant_weight(VariantName v, double x, const PerlickIParams& p)
{
    const double k2 = p.k * p.k;
    switch (v) {
    case VariantName::hyperbolic_1d: return 1.0;
    case VariantName::lb_flatradius:
    case VariantName::lb_3d: return x * x / std::sqrt(1.0 + k2 * x * x);
    case VariantName::lb_conformal: {
        double g = 1.0 - k2 * x * x;
        return 8.0 * x * x / (g * g * g);
    }
    case VariantName::vm_conformal:
    case VariantName::h_prime: {
        double g = 1.0 - k2 * x * x;
        return 8.0 * x * x / (g * g);
    }
    case VariantName::vm_general_beta: {
        double s = std::pow(x, -p.beta) - k2 * std::pow(x, p.beta);
        return 8.0 * p.beta * p.beta / (s * s);
    }
    }
    return 0.0;
}

namespace detail {

inline void require_in(const Interval& dom, double x)
{
    if (!dom.contains(x)) throw DomainError("point outside the variant's chart domain");
    if (std::isfinite(dom.upper) && std::abs(dom.upper - x) < boundary_guard * dom.upper)
        throw DomainError("point within guard distance of the chart boundary");
}

} // namespace detail

/// Applies the operator to a Jet at x.
inline double apply_variant_jet(VariantName v, const Jet& j, double x, const PerlickIParams& p,
                                const ShapeParam& shape)
{
    p.require_curved();
    detail::require_in(variant_domain(v, p), x);
    const double k = p.k, k2 = k * k, mu = p.mu;
    const double q = shape.q;
    switch (v) {
    case VariantName::hyperbolic_1d:
        return -j.d2 + hyperbolic_potential(q, x, mu, k) * j.value;
    case VariantName::lb_flatradius:
    case VariantName::lb_3d: {
        const double cent = v == VariantName::lb_3d ? shape.l * (shape.l + 1.0) : q * (q - 1.0);
        const double kin = -0.5 * ((1.0 + k2 * x * x) * j.d2 + (2.0 / x + 3.0 * k2 * x) * j.d1);
        return kin + (cent / (2.0 * x * x) - mu * std::hypot(1.0 / x, k) - 0.5 * k2) * j.value;
    }
    case VariantName::lb_conformal: {
        const double g = 1.0 - k2 * x * x;
        const double inner = j.d2 + (2.0 * k2 * x / g + 2.0 / x) * j.d1 - q * (q - 1.0) / (x * x) * j.value;
        return -0.125 * g * g * inner - mu * (0.5 / x + 0.5 * k2 * x) * j.value - 0.5 * k2 * j.value;
    }
    case VariantName::vm_conformal: {
        const double g = 1.0 - k2 * x * x;
        const double inner = j.d2 + 2.0 / x * j.d1 - q * (q - 1.0) / (x * x) * j.value;
        return -0.125 * g * g * inner - mu * (0.5 / x + 0.5 * k2 * x) * j.value;
    }
    case VariantName::vm_general_beta: {
        const double b = p.beta;
        const double lo = std::pow(x, -b), hi = std::pow(x, b);
        const double sq = x * (lo - k2 * hi);
        const double inner = j.d2 + 2.0 / x * j.d1 - shape.l * (shape.l + 1.0) / (x * x) * j.value;
        return -sq * sq / (8.0 * b * b) * inner - 0.5 * mu * (lo + k2 * hi) * j.value;
    }
    case VariantName::h_prime: {
        const double a = 1.0 / p.beta;
        const double l = shape.l;
        const double cent = a * a * l * (l + 1.0) - (1.0 - a * a) / 4.0;
        const double g = 1.0 - k2 * x * x;
        const double inner = j.d2 + 2.0 / x * j.d1 - cent / (x * x) * j.value;
        return -0.125 * g * g * inner - 0.5 * mu * (1.0 / x + k2 * x) * j.value;
    }
    }
    return 0.0;
}

/// (H psi)(x). Analytic derivatives are used when psi provides jet(),
/// otherwise 4th-order central differences with step h.
template <class Psi>
double apply_variant(VariantName v, const Psi& psi, double x, const PerlickIParams& p, const ShapeParam& shape,
                     double h = 1e-4)
{
    return apply_variant_jet(v, jet_at(psi, x, h), x, p, shape);
}

/// (H psi)(x) / psi(x).
template <class Psi>
double local_energy(VariantName v, const Psi& psi, double x, const PerlickIParams& p, const ShapeParam& shape,
                    double h = 1e-4)
{
    const Jet j = jet_at(psi, x, h);
    return apply_variant_jet(v, j, x, p, shape) / j.value;
}

/// Conjugated centrifugal parameter: q = a l + (a + 1)/2, exact.
inline Rational general_beta_reduce(int l, const Rational& a)
{
    if (l < 0) throw DomainError("angular momentum must be non-negative");
    if (!(a > 0)) throw DomainError("exponent a must be positive");
    return a * l + (a + 1) / 2;
}

/// q(q-1) == a^2 l(l+1) - (1 - a^2)/4 in exact arithmetic.
inline bool centrifugal_identity_holds(int l, const Rational& a)
{
    const Rational q = general_beta_reduce(l, a);
    return q * (q - 1) == a * a * l * (l + 1) - (1 - a * a) / 4;
}

/// Radial parts of the two kinetic operators for ds^2 = f (dx^2):
///   T_vm psi = -(1/2f) lap psi,  T_LB psi = -(1/2f)(lap psi + f' psi'/(2f)).
struct SimilarityTerms {
    double conjugated_vm = 0.0; ///< f^-1/4 T_vm (f^1/4 psi)
    double lb = 0.0;            ///< T_LB psi
    double curvature = 0.0;     ///< R from the conformal curvature formula
    double psi = 0.0;
    double residual() const { return std::abs(conjugated_vm - lb - curvature / 16.0 * psi); }
};

/// Evaluates both sides of f^-1/4 T_vm f^1/4 = T_LB + R/16 at radius rho for
/// a radial conformal factor f and radial test function psi, with every
/// derivative from second-order central differences of step h.
template <class F, class Psi>
SimilarityTerms similarity_terms(const F& f, const Psi& psi, double rho, double h)
{
    auto positive = [&](double x) {
        double v = f(x);
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("conformal factor must be positive");
        return v;
    };
    const double fv = positive(rho);
    positive(rho - h);
    positive(rho + h);
    auto phi = [&](double x) { return std::pow(f(x), 0.25) * psi(x); };
    const Jet pj = jet_central2(phi, rho, h);
    const Jet sj = jet_central2(psi, rho, h);
    const double f1 = fd::d1_central2(f, rho, h);

    SimilarityTerms out;
    out.psi = sj.value;
    out.conjugated_vm = -std::pow(fv, -0.25) / (2.0 * fv) * (pj.d2 + 2.0 / rho * pj.d1);
    out.lb = -1.0 / (2.0 * fv) * (sj.d2 + 2.0 / rho * sj.d1 + f1 * sj.d1 / (2.0 * fv));

    // Full 3-D curvature of the radial field, sampled off-axis.
    const double c = rho / std::sqrt(3.0);
    auto field = [&](const std::array<double, 3>& x) { return f(std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2])); };
    out.curvature = conformal_curvature(field, {c, c, c}, h);
    return out;
}

template <class F, class Psi>
double similarity_residual(const F& f, const Psi& psi, double rho, double h)
{
    return similarity_terms(f, psi, rho, h).residual();
}

} // namespace perlick
