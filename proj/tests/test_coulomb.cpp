#include <vector>

#include "doctest.h"
#include "satake/coulomb.hpp"

using namespace satake;

namespace {

QuiverGaugeDatum make_quiver(std::vector<long long> v, std::vector<long long> w,
                             std::vector<std::pair<int, int>> edges = {}) {
    QuiverGaugeDatum d;
    for (size_t i = 0; i < v.size(); ++i) d.vertices.push_back(std::to_string(i));
    d.v = std::move(v);
    d.w = std::move(w);
    d.edges = std::move(edges);
    return d;
}

// integer power series inverse of a monic-constant polynomial
std::vector<long long> inverse_series(const std::vector<long long>& p, int trunc) {
    std::vector<long long> b(trunc + 1, 0);
    b[0] = 1;
    for (int n = 1; n <= trunc; ++n)
        for (int j = 1; j <= n && j < static_cast<int>(p.size()); ++j) b[n] -= p[j] * b[n - j];
    return b;
}

// det(I - t g) for a small integer matrix, by Leibniz expansion
std::vector<long long> char_series_poly(const std::vector<std::vector<long long>>& g) {
    int n = static_cast<int>(g.size());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<long long> det(n + 1, 0);
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        // product over i of (delta - t g)_{i, perm(i)}, each factor degree <= 1
        std::vector<long long> term{1};
        for (int i = 0; i < n; ++i) {
            long long c0 = i == perm[i] ? 1 : 0;
            long long c1 = -g[i][perm[i]];
            std::vector<long long> next(term.size() + 1, 0);
            for (size_t k = 0; k < term.size(); ++k) {
                next[k] += term[k] * c0;
                next[k + 1] += term[k] * c1;
            }
            term = std::move(next);
        }
        for (size_t k = 0; k < term.size() && k <= static_cast<size_t>(n); ++k)
            det[k] += sign * term[k];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Molien series of the wreath product (Z/ell)^k x| S_k on C^{2k} by direct
// group averaging (integer matrices only, so ell <= 2)
std::vector<Rational> wreath_molien(int ell, int k, int trunc) {
    REQUIRE(ell <= 2);
    REQUIRE(k <= 2);
    std::vector<std::vector<std::vector<long long>>> elements;
    std::vector<std::vector<int>> perms;
    if (k == 1)
        perms = {{0}};
    else
        perms = {{0, 1}, {1, 0}};
    int n = 2 * k;
    for (const auto& sigma : perms) {
        std::vector<int> scale(k, 0);
        while (true) {
            // element: x block of pair i comes from pair sigma(i), scaled
            std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
            for (int i = 0; i < k; ++i) {
                long long z = (ell == 2 && scale[i] == 1) ? -1 : 1;
                g[2 * i][2 * sigma[i]] = z;       // x coordinate, weight zeta
                g[2 * i + 1][2 * sigma[i] + 1] = z == 1 ? 1 : -1; // y, zeta^{-1}
            }
            elements.push_back(std::move(g));
            int i = 0;
            while (i < k && ++scale[i] == ell) scale[i++] = 0;
            if (i == k) break;
        }
    }
    std::vector<Rational> avg(trunc + 1, Rational(0));
    for (const auto& g : elements) {
        auto inv = inverse_series(char_series_poly(g), trunc);
        for (int d = 0; d <= trunc; ++d) avg[d] = avg[d] + Rational(inv[d]);
    }
    for (auto& x : avg) x = x / Rational(static_cast<long long>(elements.size()));
    return avg;
}

} // namespace

TEST_CASE("gauge rank and matter dimension") {
    QuiverGaugeDatum d = make_quiver({2, 3}, {1, 0}, {{0, 1}});
    CHECK(d.gauge_rank() == 5);
    CHECK(d.matter_dimension() == 2 * 3 + 1 * 2);
    QuiverGaugeDatum loopy = make_quiver({2}, {0}, {{0, 0}});
    CHECK(loopy.matter_dimension() == 4); // adjoint-valued edge loop
    CHECK_THROWS_AS(make_quiver({-1}, {0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(make_quiver({1}, {1}, {{0, 1}}).validate(), std::invalid_argument);
}

TEST_CASE("weights from dimension vectors") {
    // v = 0: mu = lambda
    QuiverGaugeDatum d0 = make_quiver({0, 0}, {2, 1}, {{0, 1}});
    QuiverWeights qw0 = weights_from_dims(d0);
    CHECK(qw0.mu == qw0.lambda);
    CHECK(qw0.has_cartan);
    CHECK(!qw0.affine);

    // rank-one quiver with two flavors: lambda = 2 Lambda_1, mu = 0
    QuiverWeights qw1 = weights_from_dims(make_quiver({1}, {2}));
    CHECK(qw1.lambda == std::vector<long long>{2});
    CHECK(qw1.mu == std::vector<long long>{0});
    CHECK(qw1.has_cartan);

    // cyclic two-vertex quiver: affine shape, mu = lambda - delta
    QuiverGaugeDatum cyc = make_quiver({1, 1}, {1, 0}, {{0, 1}, {1, 0}});
    QuiverWeights qwc = weights_from_dims(cyc);
    CHECK(qwc.has_cartan);
    CHECK(qwc.affine);
    CHECK(qwc.lambda == std::vector<long long>{1, 0});
    CHECK(qwc.mu == std::vector<long long>{1, 0}); // delta has zero finite coords
    CHECK(qwc.delta_drop == 1);

    // jordan quiver (one vertex, one loop) matches no Cartan datum
    QuiverWeights qwj = weights_from_dims(make_quiver({1}, {1}, {{0, 0}}));
    CHECK(!qwj.has_cartan);

    // round-trip: dims -> (lambda, mu) -> dims on a linear three-vertex quiver
    QuiverGaugeDatum a3 = make_quiver({1, 2, 1}, {0, 1, 1}, {{0, 1}, {1, 2}});
    QuiverWeights qw3 = weights_from_dims(a3);
    CHECK(qw3.lambda == a3.w);
    // C v = lambda - mu with C the A3 Cartan matrix
    std::vector<std::vector<long long>> c{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
    for (int i = 0; i < 3; ++i) {
        long long cv = 0;
        for (int j = 0; j < 3; ++j) cv += c[i][j] * a3.v[j];
        CHECK(cv == qw3.lambda[i] - qw3.mu[i]);
    }
}

TEST_CASE("monopole dimension formula") {
    QuiverGaugeDatum d = make_quiver({1}, {2});
    MagneticCharge zero{{{0}}};
    CHECK(monopole_delta(d, zero) == Rational(0));
    for (long long k = -3; k <= 3; ++k) {
        MagneticCharge m{{{k}}};
        CHECK(monopole_delta(d, m) == Rational(std::abs(k)));
    }
    // pure vector multiplet: negative dimension
    QuiverGaugeDatum pure = make_quiver({2}, {0});
    MagneticCharge m2{{{1, -1}}};
    CHECK(monopole_delta(pure, m2) == Rational(-2));
    MagneticCharge bad{{{-1, 1}}};
    CHECK_THROWS_AS(monopole_delta(pure, bad), std::invalid_argument); // not sorted

    // simultaneous negation symmetry for a symmetric theory
    QuiverGaugeDatum sym = make_quiver({1, 1}, {1, 1}, {{0, 1}});
    MagneticCharge p{{{2}, {1}}}, n{{{-2}, {-1}}};
    CHECK(monopole_delta_doubled(sym, p) == monopole_delta_doubled(sym, n));
}

TEST_CASE("monopole Hilbert series against closed forms") {
    // no gauge group: the series is 1
    CHECK(monopole_hilbert_series(make_quiver({0}, {3}), 6).coeffs()[0] == 1);
    for (int k = 1; k <= 12; ++k)
        CHECK(monopole_hilbert_series(make_quiver({0}, {3}), 6).coeff(k) == 0);

    // U(1) with two flavors: Molien series of the +-1 action on C^2
    QSeries two_flavors = monopole_hilbert_series(make_quiver({1}, {2}), 8);
    for (int j = 0; j <= 8; ++j) {
        CHECK(two_flavors.coeff(2 * j) == 2 * j + 1);
        if (2 * j + 1 <= two_flavors.trunc()) CHECK(two_flavors.coeff(2 * j + 1) == 0);
    }

    // U(1) with one flavor: free series on two half-degree generators
    QSeries one_flavor = monopole_hilbert_series(make_quiver({1}, {1}), 6);
    for (int k = 0; k <= one_flavor.trunc(); ++k) CHECK(one_flavor.coeff(k) == k + 1);

    // stability: truncations agree on the overlap
    QSeries longer = monopole_hilbert_series(make_quiver({1}, {2}), 12);
    CHECK(!longer.first_mismatch(two_flavors));
}

TEST_CASE("monopole series against independent truncated summation") {
    // two-vertex linear quiver, both ranks one
    QuiverGaugeDatum d = make_quiver({1, 1}, {1, 0}, {{0, 1}});
    int max_t = 6;
    QSeries hs = monopole_hilbert_series(d, max_t);
    int trunc = 2 * max_t;
    // direct double sum: 2 Delta = |m0 - m1| + |m0|, dressing (1-t)^{-2};
    // a window of 3 * trunc certainly covers every contributing charge
    std::vector<long long> acc(trunc + 1, 0);
    QSeries dress = QSeries::geometric_pow(1, trunc); // in q^2 below
    for (long long m0 = -3 * trunc; m0 <= 3 * trunc; ++m0)
        for (long long m1 = -3 * trunc; m1 <= 3 * trunc; ++m1) {
            long long dd = std::abs(m0 - m1) + std::abs(m0);
            if (dd > trunc) continue;
            for (long long k = dd; k <= trunc; k += 2) {
                // convolve q^dd with (1-q^2)^{-2}: coefficient (j+1) at q^{2j}
                long long j = (k - dd) / 2;
                acc[k] += j + 1;
            }
        }
    for (int k = 0; k <= trunc; ++k) CHECK(hs.coeff(k) == acc[k]);
}

TEST_CASE("bad theories refuse with the offending direction") {
    CHECK_THROWS_AS(monopole_hilbert_series(make_quiver({1}, {0}), 4), TruncationRefusal);
    try {
        monopole_hilbert_series(make_quiver({1}, {0}), 4);
    } catch (const TruncationRefusal& e) {
        REQUIRE(e.direction.size() == 1);
        CHECK(e.direction[0].size() == 1);
        CHECK(e.direction[0][0] != 0);
    }
    // pure SU-less vector multiplet is even worse
    CHECK_THROWS_AS(monopole_hilbert_series(make_quiver({2}, {0}), 4), TruncationRefusal);
}

TEST_CASE("symmetric-power orbifold series") {
    // k = 0: constant 1
    QSeries k0 = sym_power_orbifold_series(3, 0, 5);
    CHECK(k0.coeff(0) == 1);
    for (int k = 1; k <= k0.trunc(); ++k) CHECK(k0.coeff(k) == 0);

    // ell = 1, k = 1: functions on the plane
    QSeries plane = sym_power_orbifold_series(1, 1, 6);
    for (int j = 0; j <= 6; ++j) CHECK(plane.coeff(2 * j) == j + 1);

    // ell = 2, k = 1: Molien series of +-1 on C^2 in the polynomial grading
    QSeries half = sym_power_orbifold_series(2, 1, 8);
    for (int j = 0; j <= 8; ++j) CHECK(half.coeff(2 * j) == (j % 2 == 0 ? j + 1 : 0));

    // generating-function identity against direct wreath-product averaging
    for (int ell : {1, 2})
        for (int k : {1, 2}) {
            QSeries s = sym_power_orbifold_series(ell, k, 8);
            auto molien = wreath_molien(ell, k, 8);
            for (int dd = 0; dd <= 8; ++dd) {
                CHECK(molien[dd].is_integer());
                CHECK(s.coeff(2 * dd) == molien[dd].as_integer());
            }
        }
}
