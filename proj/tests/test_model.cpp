#include "perlick/model.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>
#include <random>

using namespace perlick;
using Dec = boost::multiprecision::cpp_dec_float_50;

namespace {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;
using Gamma = std::array<Mat3, 3>; // Gamma[a][b][c] = Gamma^a_bc

Mat3 inverse(const Mat3& m)
{
    Mat3 inv{};
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                       - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                       + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int i1 = (j + 1) % 3, i2 = (j + 2) % 3, j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            inv[i][j] = (m[i1][j1] * m[i2][j2] - m[i1][j2] * m[i2][j1]) / det;
        }
    return inv;
}

// Scalar curvature of an arbitrary 3-metric from nested central differences:
// Christoffels from dg, Ricci from dGamma.
double numeric_ricci_scalar(const std::function<Mat3(const Vec3&)>& metric, const Vec3& x, double h)
{
    auto christoffel = [&](const Vec3& y) {
        std::array<Mat3, 3> dg{};
        for (int c = 0; c < 3; ++c) {
            Vec3 yp = y, ym = y;
            yp[c] += h;
            ym[c] -= h;
            const Mat3 gp = metric(yp), gm = metric(ym);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) dg[c][a][b] = (gp[a][b] - gm[a][b]) / (2 * h);
        }
        const Mat3 gi = inverse(metric(y));
        Gamma g{};
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) {
                    double acc = 0;
                    for (int d = 0; d < 3; ++d) acc += gi[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
                    g[a][b][c] = 0.5 * acc;
                }
        return g;
    };
    const Gamma G = christoffel(x);
    std::array<Gamma, 3> dG{};
    for (int e = 0; e < 3; ++e) {
        Vec3 xp = x, xm = x;
        xp[e] += h;
        xm[e] -= h;
        const Gamma gp = christoffel(xp), gm = christoffel(xm);
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                for (int c = 0; c < 3; ++c) dG[e][a][b][c] = (gp[a][b][c] - gm[a][b][c]) / (2 * h);
    }
    const Mat3 gi = inverse(metric(x));
    double R = 0;
    for (int b = 0; b < 3; ++b)
        for (int d = 0; d < 3; ++d) {
            double ric = 0;
            for (int a = 0; a < 3; ++a) {
                ric += dG[a][a][b][d] - dG[d][a][a][b];
                for (int e = 0; e < 3; ++e) ric += G[a][a][e] * G[e][b][d] - G[a][d][e] * G[e][a][b];
            }
            R += gi[b][d] * ric;
        }
    return R;
}

// dr^2/(beta^2 (1 + k^2 r^2)) + r^2 dOmega^2 in (r, theta, phi)
std::function<Mat3(const Vec3&)> areal_metric(double beta, double k)
{
    return [=](const Vec3& y) {
        Mat3 g{};
        g[0][0] = 1.0 / (beta * beta * (1.0 + k * k * y[0] * y[0]));
        g[1][1] = y[0] * y[0];
        g[2][2] = y[0] * y[0] * std::sin(y[1]) * std::sin(y[1]);
        return g;
    };
}

double areal_radius(double rho, double beta, double k)
{
    return 2.0 / (std::pow(rho, -beta) - k * k * std::pow(rho, beta));
}

} // namespace

TEST(Metric, SpecExamples)
{
    EXPECT_EQ(metric_coefficient(3.0, {1.0, 0.0, 1.0, 0.0}), 1.0);
    EXPECT_EQ(metric_coefficient(1.0, {1.0, 1.0, 1.0, 0.0}), 2.0);
    EXPECT_EQ(metric_coefficient(2.0, {2.0, 0.5, 1.0, 0.0}), 8.0);
    EXPECT_THROW(metric_coefficient(0.0, {}), DomainError);
    EXPECT_THROW(metric_coefficient(-1.0, {}), DomainError);
}

TEST(Metric, RejectsInvalidParameters)
{
    EXPECT_THROW(metric_coefficient(1.0, {0.0, 1.0, 1.0, 0.0}), DomainError);
    EXPECT_THROW(metric_coefficient(1.0, {1.0, -1.0, 1.0, 0.0}), DomainError);
    EXPECT_THROW(family1_potential(1.0, {1.0, 1.0, -2.0, 0.0}), DomainError);
    EXPECT_THROW(family1_potential(1.0, {1.0, NAN, 1.0, 0.0}), DomainError);
}

TEST(Potential, SpecExamples)
{
    EXPECT_EQ(family1_potential(1.0, {1.0, 0.0, 1.0, 0.0}), -1.0);
    EXPECT_NEAR(family1_potential(1e8, {1.0, 1.0, 1.0, 0.0}), -1.0, 1e-15);
    EXPECT_EQ(family1_potential(1.0, {1.0, 0.0, 1.0, 2.5}), 1.5);
}

TEST(Potential, MatchesHyperbolicCothForm)
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> r0(0.05, 6.0), kd(0.1, 3.0), md(0.1, 10.0);
    for (int i = 0; i < 10; ++i) {
        const double x = r0(rng), k = kd(rng), mu = md(rng);
        const PerlickIParams p{1.0, k, mu, 0.3};
        const double v = family1_potential(std::sinh(k * x) / k, p);
        EXPECT_NEAR(v, -mu * k / std::tanh(k * x) + 0.3, 1e-12 * std::abs(v));
    }
}

TEST(Curvature, BetaOneIsConstant)
{
    for (double k : {0.0, 0.25, 1.0, 3.0})
        for (double rho : {1e-3, 0.1, 0.7})
            EXPECT_EQ(perlick_curvature(rho, {1.0, k, 1.0, 0.0}), -6.0 * k * k);
}

TEST(Curvature, SpecExample)
{
    EXPECT_DOUBLE_EQ(perlick_curvature(1.0, {2.0, 1.0, 1.0, 0.0}), -24.0);
    EXPECT_THROW(perlick_curvature(0.0, {2.0, 1.0, 1.0, 0.0}), DomainError);
}

TEST(Curvature, MatchesRicciOfArealMetric)
{
    for (double beta : {1.0, 0.5, 1.5, 2.0}) {
        for (double k : {0.5, 1.0}) {
            const double edge = std::pow(k, -1.0 / beta);
            for (double frac : {0.2, 0.5, 0.8}) {
                const double rho = frac * edge;
                const double r = areal_radius(rho, beta, k);
                const double numeric = numeric_ricci_scalar(areal_metric(beta, k), {r, 1.0, 0.3}, 1e-4 * r);
                const double closed = perlick_curvature(rho, {beta, k, 1.0, 0.0});
                EXPECT_NEAR(closed, numeric, 1e-5 * std::max(1.0, std::abs(closed)))
                    << "beta=" << beta << " k=" << k << " rho=" << rho;
            }
        }
    }
}

TEST(Curvature, ConformalFactorReproducesArealMetric)
{
    // f (d rho^2 + rho^2 dOmega^2) has areal radius sqrt(f) rho and
    // g_rr / (dr/drho)^2 = 1/(beta^2 (1 + k^2 r^2)).
    const double beta = 1.5, k = 0.7;
    const PerlickIParams p{beta, k, 1.0, 0.0};
    const double edge = std::pow(k, -1.0 / beta);
    for (double frac : {0.1, 0.4, 0.9}) {
        const double rho = frac * edge;
        const double f = perlick_conformal_factor(rho, p);
        const double r = areal_radius(rho, beta, k);
        EXPECT_NEAR(std::sqrt(f) * rho, r, 1e-12 * r);
        const double h = 1e-5 * rho;
        const double drdrho = (areal_radius(rho + h, beta, k) - areal_radius(rho - h, beta, k)) / (2 * h);
        EXPECT_NEAR(f / (drdrho * drdrho), 1.0 / (beta * beta * (1.0 + k * k * r * r)), 1e-7);
    }
}

TEST(ConformalCurvature, ConstantFactorIsFlat)
{
    auto field = [](const Vec3&) { return 2.5; };
    EXPECT_EQ(conformal_curvature(field, {0.1, 0.2, 0.3}, 1e-3), 0.0);
}

TEST(ConformalCurvature, BetaOneFactor)
{
    const double k = 0.5, rho = 0.7;
    const double c = rho / std::sqrt(3.0);
    auto field = [k](const Vec3& x) {
        const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
        const double g = 1.0 - k * k * r2;
        return 4.0 / (g * g);
    };
    EXPECT_NEAR(conformal_curvature(field, {c, c, c}, 1e-4), -6.0 * k * k, 1e-6);
}

TEST(ConformalCurvature, MatchesRicciOfConformalMetric)
{
    const double beta = 2.0, k = 0.8;
    const PerlickIParams p{beta, k, 1.0, 0.0};
    auto radial = [&](const Vec3& x) { return perlick_conformal_factor(std::hypot(x[0], x[1], x[2]), p); };
    auto metric = [&](const Vec3& x) {
        Mat3 g{};
        for (int i = 0; i < 3; ++i) g[i][i] = radial(x);
        return g;
    };
    const Vec3 x{0.3, 0.4, 0.5};
    const double numeric = numeric_ricci_scalar(metric, x, 1e-4);
    EXPECT_NEAR(conformal_curvature(radial, x, 1e-4), numeric, 1e-5 * std::abs(numeric));
}

TEST(ConformalCurvature, SecondOrderInStep)
{
    // f = 1 + exp(g), g = 0.3 x + 0.2 y^2 - 0.1 z^3, with analytic partials
    auto field = [](const Vec3& x) { return 1.0 + std::exp(0.3 * x[0] + 0.2 * x[1] * x[1] - 0.1 * x[2] * x[2] * x[2]); };
    const Vec3 x{0.4, -0.3, 0.6};
    const double e = std::exp(0.3 * x[0] + 0.2 * x[1] * x[1] - 0.1 * x[2] * x[2] * x[2]);
    ConformalFieldSample s;
    s.value = 1.0 + e;
    s.gradient = {0.3 * e, 0.4 * x[1] * e, -0.3 * x[2] * x[2] * e};
    s.second = {0.09 * e, (0.4 + 0.16 * x[1] * x[1]) * e, (-0.6 * x[2] + 0.09 * std::pow(x[2], 4)) * e};
    const double exact = conformal_curvature(s);
    const double e1 = std::abs(conformal_curvature(field, x, 1e-2) - exact);
    const double e2 = std::abs(conformal_curvature(field, x, 5e-3) - exact);
    EXPECT_GT(e1 / e2, 3.5);
    EXPECT_LT(e1 / e2, 4.5);
}

TEST(ConformalCurvature, RejectsNonPositiveFactor)
{
    auto field = [](const Vec3& x) { return x[0]; };
    EXPECT_THROW(conformal_curvature(field, {1e-4, 0.0, 0.0}, 1e-3), DomainError);
}

TEST(Charts, SpecExamples)
{
    const PerlickIParams p{1.0, 1.0, 1.0, 0.0};
    const auto hyp = make_chart(ChartId::hyperbolic, p);
    const auto flat = make_chart(ChartId::flat_radius, p);
    const auto conf = make_chart(ChartId::conformal, p);
    // high-precision references
    const double sinh1 = static_cast<double>(sinh(Dec(1)));
    const double tanh_half = static_cast<double>(tanh(Dec(1) / 2));
    EXPECT_NEAR(sinh1, 1.17520119364380, 1e-14);
    EXPECT_NEAR(tanh_half, 0.462117157260010, 1e-14);
    EXPECT_NEAR(chart_map(hyp, flat, 1.0, p), sinh1, 1e-15);
    EXPECT_NEAR(chart_map(hyp, conf, 1.0, p), tanh_half, 1e-15);
    EXPECT_NEAR(chart_map(hyp, flat, 1e-8, p), 1e-8, 1e-22);
    const double far = chart_map(flat, conf, 1e12, p);
    EXPECT_LT(far, 1.0);
    EXPECT_GT(far, 1.0 - 1e-11);
}

TEST(Charts, RoundTripAndMonotone)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.001, 0.999);
    for (double beta : {1.0, 0.5, 2.0}) {
        const PerlickIParams p{beta, 0.7, 1.0, 0.0};
        const std::array<CoordinateChart, 3> charts{make_chart(ChartId::hyperbolic, p),
                                                    make_chart(ChartId::flat_radius, p),
                                                    make_chart(ChartId::conformal, p)};
        const double edge = std::pow(p.k, -1.0 / beta);
        for (int trial = 0; trial < 100; ++trial) {
            double a = u(rng) * edge, b = u(rng) * edge;
            if (a > b) std::swap(a, b);
            for (const auto& target : charts) {
                const double ya = chart_map(charts[2], target, a, p), yb = chart_map(charts[2], target, b, p);
                EXPECT_LE(ya, yb);
                const double back = chart_map(target, charts[2], ya, p);
                EXPECT_NEAR(back, a, 1e-12 * std::max(a, 1e-3) + 1e-13);
            }
        }
    }
}

TEST(Charts, OuterBranch)
{
    const PerlickIParams p{1.0, 0.5, 1.0, 0.0};
    const auto flat = make_chart(ChartId::flat_radius, p);
    const auto outer = make_chart(ChartId::conformal, p, ConformalBranch::outer);
    for (double rp : {0.1, 1.0, 50.0}) {
        const double t = chart_map(flat, outer, rp, p);
        EXPECT_GT(t, 1.0 / p.k);
        EXPECT_NEAR(chart_map(outer, flat, t, p), rp, 1e-12 * rp);
    }
}

TEST(Charts, DomainAndGuard)
{
    const PerlickIParams p{1.0, 1.0, 1.0, 0.0};
    const auto flat = make_chart(ChartId::flat_radius, p);
    const auto conf = make_chart(ChartId::conformal, p);
    EXPECT_THROW(chart_map(conf, flat, 1.0, p), DomainError);
    EXPECT_THROW(chart_map(conf, flat, 1.0 - 1e-12, p), DomainError);
    EXPECT_THROW(chart_map(conf, flat, 1.5, p), DomainError);
    EXPECT_THROW(chart_map(flat, conf, -1.0, p), DomainError);
    EXPECT_THROW(make_chart(ChartId::conformal, {1.0, 0.0, 1.0, 0.0}), DomainError);
}

TEST(Weights, ChartWeights)
{
    const PerlickIParams p{1.0, 1.0, 1.0, 0.0};
    EXPECT_EQ(weight_for(ChartId::hyperbolic, p)(3.0), 1.0);
    EXPECT_DOUBLE_EQ(weight_for(ChartId::flat_radius, p)(1.0), 1.0 / std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(weight_for(ChartId::conformal, p)(0.5), 8.0 * 0.25 / (0.75 * 0.75 * 0.75));
}
