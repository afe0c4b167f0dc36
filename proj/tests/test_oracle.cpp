#include "perlick/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace perlick;

namespace {

const PerlickIParams params{1.0, 0.5, 5.0, 0.0};

// Dense symmetric eigenvalues by cyclic Jacobi rotations: an oracle for the oracle.
std::vector<double> dense_eigenvalues(const TridiagonalOperator& t)
{
    const std::size_t n = t.size();
    Matrix a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = t.diagonal[i];
        if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = t.off_diagonal[i];
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-26) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double tt = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0), s = tt * c;
                for (std::size_t r = 0; r < n; ++r) {
                    const double arp = a[r][p], arq = a[r][q];
                    a[r][p] = c * arp - s * arq;
                    a[r][q] = s * arp + c * arq;
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double apr = a[p][r], aqr = a[q][r];
                    a[p][r] = c * apr - s * aqr;
                    a[q][r] = s * apr + c * aqr;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

} // namespace

TEST(Sturm, ThreeByThree)
{
    const TridiagonalOperator t{{2, 2, 2}, {-1, -1}};
    const auto ev = sturm_eigenvalues(t, 3);
    EXPECT_NEAR(ev[0], 2.0 - std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(ev[1], 2.0, 1e-12);
    EXPECT_NEAR(ev[2], 2.0 + std::sqrt(2.0), 1e-12);
    EXPECT_THROW(sturm_eigenvalues(t, 4), DomainError);
}

TEST(Sturm, DiscreteLaplacian)
{
    const int n = 50;
    const RadialGrid grid{1.0, 2.0, n, 1};
    const auto t = discretize_potential([](double) { return 0.0; }, grid);
    const double h = grid.spacing();
    const auto ev = sturm_eigenvalues(t, n);
    for (int j = 1; j <= n; ++j) {
        const double exact = (2.0 - 2.0 * std::cos(j * std::numbers::pi / (n + 1))) / (h * h);
        EXPECT_NEAR(ev[j - 1], exact, 1e-12 * exact);
    }
}

TEST(Sturm, CountMatchesDenseSolver)
{
    const auto t = discretize(1.0, params, RadialGrid{1e-3, 30.0, 120, 1});
    const auto dense = dense_eigenvalues(t);
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> x(dense.front() - 1.0, dense.back() + 1.0);
    for (int i = 0; i < 20; ++i) {
        const double thr = x(rng);
        const auto expected = std::count_if(dense.begin(), dense.end(), [thr](double e) { return e < thr; });
        EXPECT_EQ(sturm_count(t, thr), static_cast<std::size_t>(expected));
    }
    const auto ev = sturm_eigenvalues(t, 5);
    for (int j = 0; j < 5; ++j) EXPECT_NEAR(ev[j], dense[j], 1e-9 * std::abs(dense[j]));
}

TEST(Sturm, BracketHoldsExactlyOneIndex)
{
    const auto t = discretize(1.0, params, RadialGrid{1e-3, 30.0, 2000, 1});
    for (std::size_t j = 0; j < 4; ++j) {
        const double e = sturm_eigenvalue(t, j);
        const double tol = 1e-11 * std::max(1.0, std::abs(e));
        EXPECT_LE(sturm_count(t, e - tol), j);
        EXPECT_GE(sturm_count(t, e + tol), j + 1);
    }
}

TEST(Sturm, ParallelIsIdentical)
{
    const auto t = discretize(1.0, params, RadialGrid{1e-3, 30.0, 3000, 1});
    EXPECT_EQ(sturm_eigenvalues(t, 4, false), sturm_eigenvalues(t, 4, true));
}

TEST(Discretize, HyperbolicKeplerSpecExamples)
{
    const auto t = discretize(1.0, params, RadialGrid{1e-3, 30.0, 3000, 1});
    const auto ev = sturm_eigenvalues(t, 3);
    EXPECT_NEAR(ev[0], -25.25, 1e-3 * 25.25);
    EXPECT_NEAR(ev[1], -7.25, 1e-3 * 7.25);
    EXPECT_NEAR(ev[2], -5.0 - 1.0 / 36.0, 1e-3 * 5.03);
}

TEST(Discretize, RowStructure)
{
    const RadialGrid grid{1e-3, 30.0, 200, 1};
    const double h = grid.spacing();
    const auto t = discretize(0.0, params, grid);
    for (int i = 1; i < grid.n_points; ++i) {
        const double r = grid.node(i + 1);
        EXPECT_NEAR(t.diagonal[i], 2.0 / (h * h) - 2.0 * params.mu * params.k / std::tanh(params.k * r), 1e-9);
        if (i + 1 < grid.n_points) {
            EXPECT_NEAR(t.off_diagonal[i], -1.0 / (h * h), 1e-9);
        }
    }
}

TEST(Discretize, Preconditions)
{
    EXPECT_THROW(discretize(1.0, params, RadialGrid{1e-3, 30.0, 5, 1}), DomainError);
    EXPECT_THROW(discretize(-1.0, params, RadialGrid{}), DomainError);
    EXPECT_THROW(discretize(1.0, {1.0, 0.0, 5.0, 0.0}, RadialGrid{}), DomainError);
    EXPECT_THROW(discretize(1.0, params, RadialGrid{0.0, 30.0, 100, 1}), DomainError);
    EXPECT_THROW(discretize(1.0, params, RadialGrid{1.0, 0.5, 100, 1}), DomainError);
}

TEST(Discretize, SecondOrderConvergence)
{
    // r_max = 60 removes the truncation floor of the s = 3 level
    for (std::size_t j = 0; j < 3; ++j) {
        const double exact = factorization_energy(1.0 + j, params.mu, params.k);
        const double coarse = sturm_eigenvalue(discretize(1.0, params, RadialGrid{1e-3, 60.0, 8000, 1}), j);
        const double fine = sturm_eigenvalue(discretize(1.0, params, RadialGrid{1e-3, 60.0, 16001, 1}), j);
        const double ratio = std::abs(coarse - exact) / std::abs(fine - exact);
        EXPECT_GT(ratio, 3.5) << j;
        EXPECT_LT(ratio, 4.5) << j;
    }
}

TEST(Discretize, PowerMapForFractionalShape)
{
    const double q = 0.75;
    const double exact = factorization_energy(q, params.mu, params.k);
    const auto t = discretize(q, params, RadialGrid{1e-3, 30.0, 4000, 2});
    EXPECT_NEAR(sturm_eigenvalue(t, 0), exact, 1e-4 * std::abs(exact));
}

TEST(Discretize, FrobeniusClosureBeatsHardWall)
{
    const RadialGrid grid{1e-3, 30.0, 4000, 1};
    const double exact = factorization_energy(1.0, params.mu, params.k);
    const double frob = sturm_eigenvalue(discretize(1.0, params, grid, InnerBoundary::frobenius), 0);
    const double wall = sturm_eigenvalue(discretize(1.0, params, grid, InnerBoundary::dirichlet), 0);
    EXPECT_LT(std::abs(frob - exact), 0.1 * std::abs(wall - exact));
}

TEST(Discretize, TruncationFactor)
{
    const RadialGrid grid{1e-3, 30.0, 100, 1};
    EXPECT_NEAR(truncation_factor(grid, 3.0, 5.0, 0.5), std::exp(-2.0 * (5.0 / 3.0 - 1.5) * 30.0), 1e-18);
}

TEST(ObservedOrder, PowerLaw)
{
    const double c = 1.0, e = 0.3;
    EXPECT_NEAR(observed_order(c + e, c + e / 4, c + e / 16), 2.0, 1e-12);
}

TEST(Gram, SingleNormalizedState)
{
    const auto psi = ground_state<double>(1.0, params.mu, params.k);
    QuadratureSpec spec;
    spec.infinite_scale = 0.2;
    const double norm = integrate([&](double r) { return psi(r) * psi(r); }, 0.0, INFINITY, spec);
    const RadialFunction unit = [&](double r) { return psi(r) / std::sqrt(norm); };
    const auto g = gram_matrix({unit}, [](double) { return 1.0; }, {0.0, INFINITY}, spec);
    EXPECT_NEAR(g[0][0], 1.0, 1e-10);
}

TEST(Gram, DistinctLevelsOrthogonal)
{
    const auto a = build_eigenfunction<double>(0, 1.0, params.mu, params.k);
    const auto b = build_eigenfunction<double>(2, 1.0, params.mu, params.k);
    QuadratureSpec spec;
    spec.infinite_scale = 1.0 / (params.mu / 3.0 - 3.0 * params.k);
    const auto g = normalized(gram_matrix({a, b}, [](double) { return 1.0; }, {0.0, INFINITY}, spec));
    EXPECT_LT(std::abs(g[0][1]), 1e-8);
}

TEST(Gram, LegendrePair)
{
    const auto g = gram_matrix({[](double) { return 1.0; }, [](double x) { return 2.0 * x - 1.0; }},
                               [](double) { return 1.0; }, {0.0, 1.0});
    EXPECT_NEAR(g[0][0], 1.0, 1e-15);
    EXPECT_NEAR(g[0][1], 0.0, 1e-15);
    EXPECT_NEAR(g[1][1], 1.0 / 3.0, 1e-15);
}

TEST(Gram, SymmetricPositiveSemidefinite)
{
    std::vector<RadialFunction> fs;
    for (int i = 0; i < 5; ++i) fs.push_back([i](double x) { return std::cos(i * x) + 0.1 * x; });
    fs.push_back([](double x) { return 2.0 + 0.2 * x; }); // = 2 f0 (linearly dependent)
    const auto g = gram_matrix(fs, [](double x) { return 1.0 + x; }, {0.0, 2.0});
    const std::size_t n = g.size();
    Matrix l(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(g[i][j], g[j][i]);
    // Cholesky of G + 1e-10 I succeeds
    for (std::size_t j = 0; j < n; ++j) {
        double d = g[j][j] + 1e-10;
        for (std::size_t m = 0; m < j; ++m) d -= l[j][m] * l[j][m];
        ASSERT_GT(d, 0.0);
        l[j][j] = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = g[i][j];
            for (std::size_t m = 0; m < j; ++m) s -= l[i][m] * l[j][m];
            l[i][j] = s / l[j][j];
        }
    }
}

TEST(Gram, NonFiniteRejected)
{
    EXPECT_THROW(gram_matrix({[](double x) { return 1.0 / (x - 0.5); }}, [](double) { return 1.0; }, {0.0, 1.0},
                             QuadratureSpec{1, 1}),
                 std::domain_error);
}

TEST(Nodes, CountsMatchExcitation)
{
    const RadialGrid grid{1e-3, 30.0, 4000, 1};
    const auto top = bound_state_count(1.0, params.mu, params.k);
    ASSERT_TRUE(top);
    for (int n = 0; n <= *top; ++n) EXPECT_EQ(node_count(build_eigenfunction<double>(n, 1.0, params.mu, params.k), grid), n);
}

TEST(Nodes, LocatedNearArccoth)
{
    const auto psi = apply_raising(1.0, LadderWavefunction<double>(1.5, 2.0, {1.0}, 3.0, 1.0));
    const RadialGrid grid{1e-3, 5.0, 5000, 1};
    EXPECT_EQ(node_count(psi, grid), 1);
    int where = -1;
    for (int i = 1; i < grid.n_points; ++i)
        if ((psi(grid.node(i)) > 0) != (psi(grid.node(i + 1)) > 0)) where = i;
    ASSERT_GT(where, 0);
    EXPECT_LE(grid.node(where), 0.804718956217050);
    EXPECT_GE(grid.node(where + 1), 0.804718956217050);
}

TEST(Nodes, ZeroSamplesSkipped)
{
    const RadialGrid grid{0.5, 10.5, 9, 1}; // nodes 1.5 .. 9.5
    EXPECT_EQ(node_count([](double x) { return std::floor(x) == 5.0 ? 0.0 : x - 5.0; }, grid), 1);
}
