#pragma once

// Exact spectrum bookkeeping for the general-beta family:
//   w = n + a l + (a + 1)/2,  E = -mu^2/(2 w^2) - k^2 w^2/2 + k^2/8,
// and the accidental degeneracies that appear when a = 1/beta is rational.

#include "perlick/model.hpp"
#include "perlick/rational.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string_view>
#include <vector>

namespace perlick {

/// a = m1/m2 in lowest terms.
class RationalExponent {
public:
    RationalExponent(long m1, long m2)
    {
        if (m1 <= 0 || m2 <= 0) throw DomainError("exponent a = m1/m2 needs positive m1, m2");
        const long g = std::gcd(m1, m2);
        m1_ = m1 / g;
        m2_ = m2 / g;
    }

    explicit RationalExponent(const Rational& a)
    {
        if (!(a > 0)) throw DomainError("exponent a must be positive");
        auto num = boost::multiprecision::numerator(a);
        auto den = boost::multiprecision::denominator(a);
        if (num > std::numeric_limits<long>::max() || den > std::numeric_limits<long>::max())
            throw DomainError("exponent a has too large numerator or denominator");
        m1_ = num.convert_to<long>();
        m2_ = den.convert_to<long>();
    }

    /// "m1/m2" or "m"; decimals are rejected.
    static RationalExponent parse(std::string_view text) { return RationalExponent(parse_rational(text)); }

    long m1() const { return m1_; }
    long m2() const { return m2_; }
    Rational value() const { return Rational(m1_, m2_); }

    friend bool operator==(const RationalExponent&, const RationalExponent&) = default;

private:
    long m1_ = 1;
    long m2_ = 1;
};

struct LevelLabel {
    int n = 0;
    int l = 0;
    Rational w;

    friend bool operator==(const LevelLabel& x, const LevelLabel& y) { return x.n == y.n && x.l == y.l && x.w == y.w; }
};

/// w = (2 n m2 + 2 m1 l + m1 + m2) / (2 m2)
inline LevelLabel make_label(int n, int l, const RationalExponent& a)
{
    if (n < 0 || l < 0) throw DomainError("quantum numbers must be non-negative");
    Rational w(2 * n * a.m2() + 2 * a.m1() * l + a.m1() + a.m2(), 2 * a.m2());
    return {n, l, w};
}

/// w^2 < mu/k, compared exactly (doubles convert to rationals without loss).
/// Every level is bound in the flat limit k = 0.
inline bool is_bound(const Rational& w, double mu, double k)
{
    if (!(mu > 0.0) || !std::isfinite(mu)) throw DomainError("mu must be positive");
    if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("k must be non-negative");
    if (k == 0.0) return true;
    return w * w * Rational(k) < Rational(mu);
}

inline bool is_bound(const LevelLabel& label, double mu, double k) { return is_bound(label.w, mu, k); }

inline double level_energy(const Rational& w, double mu, double k)
{
    if (!is_bound(w, mu, k)) throw DomainError("level not bound: w^2 >= mu/k");
    const double wd = to_double(w);
    return -mu * mu / (2.0 * wd * wd) - k * k * wd * wd / 2.0 + k * k / 8.0;
}

inline double energy(const LevelLabel& label, double mu, double k) { return level_energy(label.w, mu, k); }

/// All (n', l') != (n, l) in [0, n_max] x [0, l_max] reached by
/// n' = n - s m1, l' = l + s m2, ordered by increasing l'.
inline std::vector<LevelLabel> degenerate_partners(const LevelLabel& label, const RationalExponent& a, int n_max,
                                                   int l_max)
{
    std::vector<LevelLabel> out;
    if (n_max < 0 || l_max < 0) return out;
    // l' = l + s m2 in [0, l_max]
    const long s_lo = -static_cast<long>(label.l) / a.m2();
    const long s_hi = (static_cast<long>(l_max) - label.l) >= 0 ? (static_cast<long>(l_max) - label.l) / a.m2() : -1;
    for (long s = s_lo; s <= s_hi; ++s) {
        if (s == 0) continue;
        const long n2 = label.n - s * a.m1();
        const long l2 = label.l + s * a.m2();
        if (n2 < 0 || n2 > n_max || l2 < 0 || l2 > l_max) continue;
        out.push_back(make_label(static_cast<int>(n2), static_cast<int>(l2), a));
    }
    return out;
}

struct Multiplet {
    Rational w;
    double energy = 0.0;
    std::vector<LevelLabel> members; ///< increasing l
    int multiplicity = 0;            ///< sum of (2l + 1)
};

/// Bound levels of the box grouped by exact w, ordered by energy.
inline std::vector<Multiplet> multiplet_table(const RationalExponent& a, double mu, double k, int n_max, int l_max)
{
    std::map<Rational, Multiplet> groups;
    for (int l = 0; l <= l_max; ++l) {
        for (int n = 0; n <= n_max; ++n) {
            LevelLabel label = make_label(n, l, a);
            if (!is_bound(label, mu, k)) continue;
            auto& g = groups[label.w];
            g.w = label.w;
            g.members.push_back(label);
            g.multiplicity += 2 * l + 1;
        }
    }
    std::vector<Multiplet> out;
    out.reserve(groups.size());
    for (auto& [w, g] : groups) {
        g.energy = level_energy(w, mu, k);
        out.push_back(std::move(g));
    }
    std::stable_sort(out.begin(), out.end(), [](const Multiplet& x, const Multiplet& y) {
        if (x.energy != y.energy) return x.energy < y.energy;
        return x.w < y.w;
    });
    return out;
}

} // namespace perlick
