#pragma once

#include <cmath>
#include <stdexcept>

namespace perlick {

/// Degree and parameters of P_n^{(alpha, beta)}, normalized so that
/// P_n(1) = C(n + alpha, n).
struct JacobiParams {
    int n = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

/// True when a denominator of the three-term recurrence vanishes for some
/// degree in 2..n (alpha + beta + m = 0 or alpha + beta + 2m - 2 = 0).
inline bool jacobi_recurrence_degenerate(const JacobiParams& jp)
{
    const double ab = jp.alpha + jp.beta;
    for (int m = 2; m <= jp.n; ++m) {
        if (m + ab == 0.0 || 2.0 * m + ab - 2.0 == 0.0) return true;
    }
    return false;
}

namespace detail {

// Generalized binomial C(z, j) for real z.
template <class T>
T binomial(T z, int j)
{
    T out = 1;
    for (int i = 0; i < j; ++i) out *= (z - i) / (i + 1);
    return out;
}

struct JacobiSum {
    long double value = 0;
    long double magnitude = 0; ///< sum of |terms|, bounds the rounding error
};

// P_n = sum_m C(n+a, n-m) C(n+b, m) ((x-1)/2)^m ((x+1)/2)^(n-m); valid for all a, b.
inline JacobiSum jacobi_sum(const JacobiParams& jp, long double x)
{
    const int n = jp.n;
    const long double lo = 0.5L * (x - 1.0L), hi = 0.5L * (x + 1.0L);
    JacobiSum out;
    for (int m = 0; m <= n; ++m) {
        long double term = binomial<long double>(n + static_cast<long double>(jp.alpha), n - m)
                           * binomial<long double>(n + static_cast<long double>(jp.beta), m);
        for (int i = 0; i < m; ++i) term *= lo;
        for (int i = m; i < n; ++i) term *= hi;
        out.value += term;
        out.magnitude += term < 0 ? -term : term;
    }
    return out;
}

inline double jacobi_explicit(const JacobiParams& jp, double x) { return static_cast<double>(jacobi_sum(jp, x).value); }

inline long double jacobi_recurrence(const JacobiParams& jp, long double x)
{
    const long double a = jp.alpha, b = jp.beta, ab = a + b;
    long double pm2 = 1.0L, pm1 = 0.5L * (a - b) + 0.5L * (ab + 2.0L) * x;
    for (int m = 2; m <= jp.n; ++m) {
        const long double c2m = 2.0L * m + ab;
        const long double lead = 2.0L * m * (m + ab) * (c2m - 2.0L);
        const long double mid = (c2m - 1.0L) * (c2m * (c2m - 2.0L) * x + a * a - b * b);
        const long double back = 2.0L * (m + a - 1.0L) * (m + b - 1.0L) * c2m;
        const long double pm = (mid * pm1 - back * pm2) / lead;
        pm2 = pm1;
        pm1 = pm;
    }
    return pm1;
}

} // namespace detail

/// P_n^{(alpha, beta)}(x) for any real x, in extended precision. The explicit
/// binomial sum is used when its cancellation is mild; otherwise the forward
/// three-term recurrence (or the sum again if the recurrence is degenerate).
inline double jacobi_eval(const JacobiParams& jp, double x)
{
    if (jp.n < 0) throw std::invalid_argument("Jacobi degree must be non-negative");
    if (jp.n == 0) return 1.0;
    if (jp.n == 1) return 0.5 * (jp.alpha - jp.beta) + 0.5 * (jp.alpha + jp.beta + 2.0) * x;
    const detail::JacobiSum sum = detail::jacobi_sum(jp, x);
    const long double value_abs = sum.value < 0 ? -sum.value : sum.value;
    if (sum.magnitude * 1e-5L <= value_abs || jacobi_recurrence_degenerate(jp))
        return static_cast<double>(sum.value);
    return static_cast<double>(detail::jacobi_recurrence(jp, x));
}

} // namespace perlick
