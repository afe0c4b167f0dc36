#pragma once

#include <concepts>

namespace perlick {

/// Value and first two derivatives of a radial function at a point.
struct Jet {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

/// Callables that can report their own analytic derivatives.
template <class F>
concept HasJet = requires(const F& f, double x) {
    { f.jet(x) } -> std::convertible_to<Jet>;
};

namespace fd {

template <class F>
double d1_central2(const F& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

template <class F>
double d2_central2(const F& f, double x, double h)
{
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

template <class F>
double d1_central4(const F& f, double x, double h)
{
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
}

template <class F>
double d2_central4(const F& f, double x, double h)
{
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h))
           / (12.0 * h * h);
}

} // namespace fd

/// Analytic derivatives when the callable provides them, otherwise 4th-order
/// central differences with step h.
template <class F>
Jet jet_at(const F& f, double x, double h)
{
    if constexpr (HasJet<F>) {
        return f.jet(x);
    } else {
        return {f(x), fd::d1_central4(f, x, h), fd::d2_central4(f, x, h)};
    }
}

/// Second-order stencils; used where an O(h^2) error law is the thing measured.
template <class F>
Jet jet_central2(const F& f, double x, double h)
{
    return {f(x), fd::d1_central2(f, x, h), fd::d2_central2(f, x, h)};
}

} // namespace perlick
