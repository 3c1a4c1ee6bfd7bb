#include "satake/coulomb.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace satake {

long long QuiverGaugeDatum::gauge_rank() const {
    return std::accumulate(v.begin(), v.end(), 0LL);
}

long long QuiverGaugeDatum::matter_dimension() const {
    long long dim = 0;
    for (const auto& [out, in] : edges) dim += v[out] * v[in];
    for (int i = 0; i < size(); ++i) dim += w[i] * v[i];
    return dim;
}

void QuiverGaugeDatum::validate() const {
    int n = size();
    if (static_cast<int>(v.size()) != n || static_cast<int>(w.size()) != n)
        throw std::invalid_argument("quiver: v and w must have one entry per vertex");
    for (int i = 0; i < n; ++i)
        if (v[i] < 0 || w[i] < 0)
            throw std::invalid_argument("quiver: dimension vectors must be nonnegative");
    for (const auto& [out, in] : edges)
        if (out < 0 || out >= n || in < 0 || in >= n)
            throw std::invalid_argument("quiver: edge endpoint out of range");
}

void MagneticCharge::validate(const QuiverGaugeDatum& d) const {
    if (static_cast<int>(m.size()) != d.size())
        throw std::invalid_argument("magnetic charge: one tuple per vertex required");
    for (int i = 0; i < d.size(); ++i) {
        if (static_cast<long long>(m[i].size()) != d.v[i])
            throw std::invalid_argument("magnetic charge: tuple length must equal v_i");
        for (size_t a = 1; a < m[i].size(); ++a)
            if (m[i][a - 1] < m[i][a])
                throw std::invalid_argument("magnetic charge: tuples must be non-increasing");
    }
}

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

// one-dimensional integer kernel of a symmetric integer matrix of corank 1,
// scaled primitive with first nonzero entry positive; empty if corank != 1
std::vector<long long> integer_kernel(const std::vector<std::vector<long long>>& c) {
    int n = static_cast<int>(c.size());
    RatMatrix a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(c[i][j]);
    // row-reduce, tracking pivot columns
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (!(a[r][col] == Rational(0))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rational lead = a[rank][col];
        for (int cc = 0; cc < n; ++cc) a[rank][cc] = a[rank][cc] / lead;
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            Rational f = a[r][col];
            if (f == Rational(0)) continue;
            for (int cc = 0; cc < n; ++cc) a[r][cc] = a[r][cc] - f * a[rank][cc];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != n - 1) return {};
    int free_col = 0;
    while (free_col < n &&
           std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
        ++free_col;
    std::vector<Rational> ker(n, Rational(0));
    ker[free_col] = Rational(1);
    for (int r = 0; r < rank; ++r) ker[pivot_col[r]] = Rational(0) - a[r][free_col];
    long long lcm = 1;
    for (const auto& x : ker) lcm = std::lcm(lcm, x.den);
    std::vector<long long> out(n);
    for (int i = 0; i < n; ++i) out[i] = ker[i].num * (lcm / ker[i].den);
    long long g = 0;
    for (long long x : out) g = std::gcd(g, std::llabs(x));
    if (g > 1)
        for (auto& x : out) x /= g;
    int first = 0;
    while (first < n && out[first] == 0) ++first;
    if (first < n && out[first] < 0)
        for (auto& x : out) x = -x;
    return out;
}

bool leading_minors_positive(const std::vector<std::vector<long long>>& c) {
    int n = static_cast<int>(c.size());
    RatMatrix a(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(c[i][j]);
    // fraction-free enough: after eliminating below each pivot, the pivots
    // multiply to the leading minors, so positivity of every pivot suffices
    for (int k = 0; k < n; ++k) {
        if (!(Rational(0) < a[k][k])) return false;
        for (int r = k + 1; r < n; ++r) {
            Rational f = a[r][k] / a[k][k];
            for (int cc = k; cc < n; ++cc) a[r][cc] = a[r][cc] - f * a[k][cc];
        }
    }
    return true;
}

bool quiver_connected(const QuiverGaugeDatum& d) {
    int n = d.size();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& [out, in] : d.edges) {
            int y = -1;
            if (out == x && !seen[in]) y = in;
            if (in == x && !seen[out]) y = out;
            if (y >= 0) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

} // namespace

QuiverWeights weights_from_dims(const QuiverGaugeDatum& d) {
    d.validate();
    int n = d.size();
    QuiverWeights out;
    out.lambda = d.w;
    // candidate symmetric Cartan matrix C = 2I - adjacency
    std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    for (const auto& [e_out, e_in] : d.edges) {
        c[e_out][e_in] -= 1;
        c[e_in][e_out] -= 1;
    }
    out.mu.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        out.mu[i] = d.w[i];
        for (int j = 0; j < n; ++j) out.mu[i] -= c[i][j] * d.v[j];
    }

    bool gcm = true;
    for (int i = 0; i < n && gcm; ++i) gcm = c[i][i] == 2; // loops break the diagonal
    if (n > 0 && gcm && quiver_connected(d)) {
        if (leading_minors_positive(c)) {
            out.has_cartan = true;
        } else {
            auto marks = integer_kernel(c);
            if (!marks.empty() &&
                std::all_of(marks.begin(), marks.end(), [](long long x) { return x > 0; })) {
                out.has_cartan = true;
                out.affine = true;
                // vertex 0 plays the affine node; alpha_0 carries the delta unit
                out.delta_drop = marks[0] == 1 ? d.v[0] : 0;
            }
        }
    }
    return out;
}

long long monopole_delta_doubled(const QuiverGaugeDatum& d, const MagneticCharge& mc) {
    d.validate();
    mc.validate(d);
    long long dd = 0;
    for (const auto& [out, in] : d.edges)
        for (long long a : mc.m[out])
            for (long long b : mc.m[in]) dd += std::llabs(a - b);
    for (int i = 0; i < d.size(); ++i) {
        for (long long a : mc.m[i]) dd += d.w[i] * std::llabs(a);
        for (size_t a = 0; a < mc.m[i].size(); ++a)
            for (size_t b = a + 1; b < mc.m[i].size(); ++b)
                dd -= 2 * std::llabs(mc.m[i][a] - mc.m[i][b]);
    }
    return dd;
}

Rational monopole_delta(const QuiverGaugeDatum& d, const MagneticCharge& mc) {
    return Rational(monopole_delta_doubled(d, mc), 2);
}

namespace {

// (1 - q^e)^{-1} up to the truncation order
QSeries inv_one_minus_qpow(int e, int trunc) {
    std::vector<long long> c(trunc + 1, 0);
    for (int k = 0; k <= trunc; k += e) c[k] = 1;
    return QSeries(std::move(c), trunc);
}

// dressing factor of a charge: per vertex, blocks of equal consecutive
// entries give a residual GL(block); Casimir degrees 1..size in t = q^2
QSeries dressing_factor(const MagneticCharge& mc, int trunc) {
    QSeries f = QSeries::one(trunc);
    for (const auto& tup : mc.m) {
        size_t a = 0;
        while (a < tup.size()) {
            size_t b = a;
            while (b < tup.size() && tup[b] == tup[a]) ++b;
            for (size_t deg = 1; deg <= b - a; ++deg)
                f = f * inv_one_minus_qpow(2 * static_cast<int>(deg), trunc);
            a = b;
        }
    }
    return f;
}

// non-increasing integer tuples of the given length with |entries| summing
// to at most budget
void enumerate_tuples(int length, long long hi, long long budget, std::vector<long long>& cur,
                      const std::function<void(const std::vector<long long>&)>& emit) {
    if (length == 0) {
        emit(cur);
        return;
    }
    long long top = std::min(hi, budget);
    for (long long x = top; x >= -budget; --x) {
        cur.push_back(x);
        enumerate_tuples(length - 1, x, budget - std::llabs(x), cur, emit);
        cur.pop_back();
    }
}

} // namespace

QSeries monopole_hilbert_series(const QuiverGaugeDatum& d, int max_t) {
    d.validate();
    if (max_t < 0) throw std::invalid_argument("monopole_hilbert_series: negative truncation");
    int trunc = 2 * max_t;
    if (d.gauge_rank() == 0) return QSeries::one(trunc);
    int n = d.size();

    // Truncation certificate. Delta and the charge norm S(m) = sum |m_{i,a}|
    // are both linear on the cones cut out by the sign pattern of every
    // absolute value; the extreme rays of those cones are the 0/1 and 0/-1
    // charge vectors, and Delta only depends on the per-vertex count of
    // nonzero entries there. If c* = min Delta/S over the rays is positive,
    // Delta(m) >= c* S(m) for every charge, so charges with S beyond
    // max_t / c* cannot reach the window. A nonpositive ray means the window
    // can never be certified complete: refuse.
    Rational cstar(0);
    bool have = false;
    std::vector<long long> counts(n, 0);
    std::function<void(int)> scan = [&](int i) {
        if (i == n) {
            long long s = std::accumulate(counts.begin(), counts.end(), 0LL);
            if (s == 0) return;
            for (int sign : {+1, -1}) {
                MagneticCharge mc;
                mc.m.resize(n);
                for (int j = 0; j < n; ++j) {
                    mc.m[j].assign(d.v[j], 0);
                    for (long long a = 0; a < counts[j]; ++a) {
                        if (sign > 0)
                            mc.m[j][a] = 1;
                        else
                            mc.m[j][d.v[j] - 1 - a] = -1;
                    }
                }
                Rational ratio(monopole_delta_doubled(d, mc), s);
                if (!have || ratio < cstar) {
                    cstar = ratio;
                    have = true;
                }
                if (!(Rational(0) < cstar))
                    throw TruncationRefusal(
                        "monopole_hilbert_series: dimension does not grow along a charge "
                        "direction, truncation cannot be certified",
                        mc.m);
            }
            return;
        }
        for (counts[i] = 0; counts[i] <= d.v[i]; ++counts[i]) scan(i + 1);
        counts[i] = 0;
    };
    scan(0);

    // 2*Delta >= cstar * S, so S <= 2*max_t / cstar exhausts the window
    long long smax = (2LL * max_t * cstar.den) / cstar.num;

    QSeries total = QSeries::zero(trunc);
    std::function<void(int, long long, MagneticCharge&)> walk = [&](int i, long long budget,
                                                                    MagneticCharge& mc) {
        if (i == n) {
            long long dd = monopole_delta_doubled(d, mc);
            if (dd > trunc) return;
            QSeries f = dressing_factor(mc, trunc - static_cast<int>(dd));
            std::vector<long long> shifted(trunc + 1, 0);
            for (int j = 0; j <= f.trunc(); ++j) shifted[j + dd] = f.coeff(j);
            total = total + QSeries(std::move(shifted), trunc);
            return;
        }
        std::vector<long long> cur;
        enumerate_tuples(static_cast<int>(d.v[i]), budget, budget, cur,
                         [&](const std::vector<long long>& tup) {
                             long long used = 0;
                             for (long long x : tup) used += std::llabs(x);
                             mc.m.push_back(tup);
                             walk(i + 1, budget - used, mc);
                             mc.m.pop_back();
                         });
    };
    MagneticCharge mc;
    walk(0, smax, mc);

    if (total.coeff(0) != 1)
        throw std::logic_error("monopole_hilbert_series: constant term is not 1");
    return total;
}

QSeries sym_power_orbifold_series(long long ell, long long k, int max_t) {
    if (ell <= 0 || k < 0 || max_t < 0)
        throw std::invalid_argument("sym_power_orbifold_series: bad parameters");
    int trunc = 2 * max_t;
    // a_d = number of monomials x^p y^q of degree d invariant under
    // (x, y) -> (zeta x, zeta^{-1} y): p + q = d with p = q mod ell
    auto a_of = [&](long long deg) {
        long long count = 0;
        for (long long p = 0; p <= deg; ++p)
            if (((p - (deg - p)) % ell + ell) % ell == 0) ++count;
        return count;
    };
    // z-graded plethystic product prod_d (1 - z t^d)^{-a_d}; track the
    // coefficient of z^j as a q-series, folding one d at a time
    std::vector<QSeries> h(k + 1, QSeries::zero(trunc));
    h[0] = QSeries::one(trunc);
    for (long long deg = 0; deg <= max_t; ++deg) {
        long long a = a_of(deg);
        if (a == 0) continue;
        std::vector<QSeries> nh(k + 1, QSeries::zero(trunc));
        for (long long j = 0; j <= k; ++j) {
            // (1 - z t^d)^{-a} = sum_j binom(j + a - 1, j) z^j t^{d j}
            long long binom = 1;
            for (long long j2 = 0; j2 <= j; ++j2) {
                if (j2 > 0) binom = binom * (a - 1 + j2) / j2;
                int shift = static_cast<int>(2 * deg * j2);
                if (deg > 0 && shift > trunc) break;
                QPolynomial term = QPolynomial::monomial(shift, binom);
                nh[j] = nh[j] + h[j - j2] * term;
            }
        }
        h = std::move(nh);
    }
    return h[k];
}

} // namespace satake
