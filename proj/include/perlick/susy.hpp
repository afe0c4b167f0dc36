#pragma once

// Shape-invariant hyperbolic Kepler problem
//   H_q = -d^2/dr^2 + k^2 q(q-1)/sinh^2(kr) - 2 mu k coth(kr),
// factorized as A_q^dagger A_q + eps_q with A_q^dagger = d/dr + W_q'.
// Bound states are built exactly on the function family
//   psi(r) = exp(-c r) sinh(kr)^s Q(coth kr)
// which is closed under d/dr and under the raising operators.

#include "perlick/derivatives.hpp"
#include "perlick/model.hpp"
#include "perlick/rational.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace perlick {

inline double prepotential(double q, double r, double mu, double k)
{
    if (!(q > 0.0)) throw DomainError("shape parameter q must be positive");
    if (!(r > 0.0)) throw DomainError("radius must be positive");
    if (!(k > 0.0)) throw DomainError("k must be positive");
    return -mu / q * r + q * std::log(std::sinh(k * r));
}

/// W_q'(r) = -mu/q + q k coth(kr)
inline double prepotential_derivative(double q, double r, double mu, double k)
{
    if (!(q > 0.0)) throw DomainError("shape parameter q must be positive");
    if (!(r > 0.0)) throw DomainError("radius must be positive");
    if (!(k > 0.0)) throw DomainError("k must be positive");
    return -mu / q + q * k / std::tanh(k * r);
}

/// eps_s = -mu^2/s^2 - k^2 s^2
inline double factorization_energy(double s, double mu, double k)
{
    if (!(s > 0.0)) throw DomainError("shape parameter must be positive");
    return -mu * mu / (s * s) - k * k * s * s;
}

/// Potential of H_q (unit kinetic normalization).
inline double hyperbolic_potential(double q, double r, double mu, double k)
{
    double sh = std::sinh(k * r);
    return k * k * q * (q - 1.0) / (sh * sh) - 2.0 * mu * k / std::tanh(k * r);
}

/// Largest n with (q+n)^2 < mu/k, or nullopt when q^2 >= mu/k.
inline std::optional<int> bound_state_count(double q, double mu, double k)
{
    if (!(q > 0.0)) throw DomainError("shape parameter q must be positive");
    if (!(k > 0.0)) throw DomainError("k must be positive: the flat limit has infinitely many levels");
    if (!(mu > 0.0)) throw DomainError("mu must be positive");
    const double ratio = mu / k;
    if (q * q >= ratio) return std::nullopt;
    int n = static_cast<int>(std::floor(std::sqrt(ratio) - q));
    // floor of a rounded sqrt can land one off on either side of the boundary
    while (n > 0 && (q + n) * (q + n) >= ratio) --n;
    while ((q + n + 1) * (q + n + 1) < ratio) ++n;
    return n;
}

namespace detail {

inline double log_sinh(double x)
{
    if (x < 20.0) return std::log(std::sinh(x));
    return x - std::numbers::ln2 + std::log1p(-std::exp(-2.0 * x));
}

inline double log_cosh(double x)
{
    return x - std::numbers::ln2 + std::log1p(std::exp(-2.0 * x));
}

template <class Scalar>
bool is_zero(const Scalar& x)
{
    return x == Scalar(0);
}

template <class Scalar>
std::vector<Scalar> trimmed(std::vector<Scalar> p)
{
    while (!p.empty() && is_zero(p.back())) p.pop_back();
    return p;
}

} // namespace detail

/// psi(r) = exp(-c r) sinh(kr)^s Q(coth kr). Scalar is double or Rational;
/// with Rational inputs the ladder algebra is exact.
template <class Scalar = double>
class LadderWavefunction {
public:
    LadderWavefunction(Scalar decay_rate, Scalar sinh_power, std::vector<Scalar> poly, Scalar mu, Scalar k)
        : c_(std::move(decay_rate)), s_(std::move(sinh_power)), q_(detail::trimmed(std::move(poly))),
          mu_(std::move(mu)), k_(std::move(k))
    {
        if (!(k_ > Scalar(0))) throw DomainError("k must be positive");
        if (!(s_ > Scalar(0))) throw DomainError("sinh power must be positive");
        cd_ = to_double(c_);
        sd_ = to_double(s_);
        kd_ = to_double(k_);
        qd_.reserve(q_.size());
        for (const auto& a : q_) qd_.push_back(to_double(a));
    }

    const Scalar& decay_rate() const { return c_; }
    const Scalar& sinh_power() const { return s_; }
    const std::vector<Scalar>& poly() const { return q_; }
    const Scalar& mu() const { return mu_; }
    const Scalar& k() const { return k_; }

    /// -1 for the zero function.
    int degree() const { return static_cast<int>(q_.size()) - 1; }
    bool is_zero() const { return q_.empty(); }

    /// Asymptotic decay margin c - s k.
    Scalar decay_margin() const { return c_ - s_ * k_; }
    bool normalizable() const { return decay_margin() > Scalar(0); }

    /// Evaluated as sum_j q_j exp(-c r) sinh^(s-j) cosh^j; stays finite as
    /// r -> 0 where coth diverges.
    double operator()(double r) const
    {
        if (!(r > 0.0)) throw DomainError("radius must be positive");
        const double x = kd_ * r;
        const double ls = detail::log_sinh(x);
        const double lc = detail::log_cosh(x);
        double acc = 0.0;
        for (std::size_t j = 0; j < qd_.size(); ++j) {
            if (qd_[j] == 0.0) continue;
            double jd = static_cast<double>(j);
            acc += qd_[j] * std::exp(-cd_ * r + (sd_ - jd) * ls + jd * lc);
        }
        return acc;
    }

    /// d/dr stays in the family: Q -> (s k u - c) Q + k (1 - u^2) Q'.
    LadderWavefunction derivative() const
    {
        return {c_, s_, multiply_linear(s_ * k_, -c_), mu_, k_};
    }

    Jet jet(double r) const
    {
        auto d = derivative();
        return {(*this)(r), d(r), d.derivative()(r)};
    }

    /// alpha u Q + beta Q + k (1 - u^2) Q'
    std::vector<Scalar> multiply_linear(const Scalar& alpha, const Scalar& beta) const
    {
        if (q_.empty()) return {};
        std::vector<Scalar> out(q_.size() + 1, Scalar(0));
        for (std::size_t j = 0; j < q_.size(); ++j) {
            out[j + 1] += alpha * q_[j];
            out[j] += beta * q_[j];
        }
        // k (1 - u^2) Q'
        for (std::size_t j = 1; j < q_.size(); ++j) {
            Scalar dj = Scalar(static_cast<long>(j)) * q_[j];
            out[j - 1] += k_ * dj;
            out[j + 1] -= k_ * dj;
        }
        return out;
    }

private:
    Scalar c_, s_;
    std::vector<Scalar> q_;
    Scalar mu_, k_;
    double cd_ = 0, sd_ = 0, kd_ = 0;
    std::vector<double> qd_;
};

/// e^{W_s} = exp(-(mu/s) r) sinh(kr)^s; requires s^2 < mu/k.
template <class Scalar = double>
LadderWavefunction<Scalar> ground_state(const Scalar& s, const Scalar& mu, const Scalar& k)
{
    if (!(s > Scalar(0))) throw DomainError("shape parameter must be positive");
    if (!(k > Scalar(0))) throw DomainError("k must be positive");
    if (!(s * s * k < mu)) throw DomainError("level not bound: s^2 >= mu/k");
    return {mu / s, s, {Scalar(1)}, mu, k};
}

/// A_p^dagger = d/dr - mu/p + p k coth(kr) applied exactly.
template <class Scalar>
LadderWavefunction<Scalar> apply_raising(const Scalar& p, const LadderWavefunction<Scalar>& psi)
{
    if (!(p > Scalar(0))) throw DomainError("raising parameter must be positive");
    const Scalar& k = psi.k();
    auto poly = psi.multiply_linear((psi.sinh_power() + p) * k, -psi.decay_rate() - psi.mu() / p);
    LadderWavefunction<Scalar> out{psi.decay_rate(), psi.sinh_power(), std::move(poly), psi.mu(), k};
    if (!psi.is_zero() && out.degree() != psi.degree() + 1)
        throw std::logic_error("raising operator cancelled the leading coefficient");
    return out;
}

/// psi_{n,q} = A_q^dagger ... A_{q+n-1}^dagger e^{W_{q+n}}, innermost first.
/// Eigenfunction of H_q with eigenvalue eps_{q+n}.
template <class Scalar = double>
LadderWavefunction<Scalar> build_eigenfunction(int n, const Scalar& q, const Scalar& mu, const Scalar& k)
{
    if (n < 0) throw DomainError("excitation number must be non-negative");
    if (!(q > Scalar(0))) throw DomainError("shape parameter q must be positive");
    Scalar s = q + Scalar(n);
    auto psi = ground_state<Scalar>(s, mu, k);
    for (int i = n - 1; i >= 0; --i) psi = apply_raising<Scalar>(q + Scalar(i), psi);
    return psi;
}

/// Lowering and raising operators acting on arbitrary radial callables, with
/// derivatives from 4th-order central differences.
struct LadderOperators {
    double q = 1.0;
    double mu = 1.0;
    double k = 1.0;
    double h = 1e-3;

    /// (A_q psi)(r) = -psi'(r) + W_q'(r) psi(r)
    template <class F>
    auto lowered(F psi) const
    {
        return [psi = std::move(psi), *this](double r) {
            return -fd::d1_central4(psi, r, h) + prepotential_derivative(q, r, mu, k) * psi(r);
        };
    }

    /// (A_q^dagger psi)(r) = psi'(r) + W_q'(r) psi(r)
    template <class F>
    auto raised(F psi) const
    {
        return [psi = std::move(psi), *this](double r) {
            return fd::d1_central4(psi, r, h) + prepotential_derivative(q, r, mu, k) * psi(r);
        };
    }
};

} // namespace perlick
