#include "satake/qchar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace satake {

namespace {

// Dominant weights mu <= lambda live in {c >= 0 : A c <= lambda coordinatewise},
// a finite box since A^{-1} has positive entries in finite type.
std::vector<long long> dominant_cone_bounds(const CartanDatum& d, const Weight& lambda) {
    RootCoords rc = weight_to_root_coords(d, lambda);
    std::vector<long long> b(d.rank());
    for (int i = 0; i < d.rank(); ++i) {
        const Rational& x = rc.coords[i];
        long long f = x.num >= 0 ? x.num / x.den : -((-x.num + x.den - 1) / x.den);
        b[i] = std::max<long long>(f, 0);
    }
    return b;
}

// norm gap |lambda+rho|^2 - |mu+rho|^2 = (lambda+mu+2rho, lambda-mu), exact integer.
long long norm_gap(const CartanDatum& d, const Weight& lambda, const Weight& mu,
                   const std::vector<long long>& c) {
    Weight s = add(add(lambda, mu), add(rho(d), rho(d)));
    return ip_weight_root(d, s, RootVector{c});
}

// Multiplicities of all dominant weights of V(lambda), Freudenthal recursion.
std::map<Weight, long long> dominant_multiplicity_table(const CartanDatum& d,
                                                        const Weight& lambda) {
    if (!is_dominant(lambda))
        throw std::invalid_argument("freudenthal: highest weight must be dominant");
    int n = d.rank();
    std::vector<long long> bounds = dominant_cone_bounds(d, lambda);

    // collect candidate root-coordinate drops c with lambda - A c dominant
    std::vector<std::vector<long long>> drops;
    std::vector<long long> c(n, 0);
    std::function<void(int)> gen = [&](int i) {
        if (i == n) {
            Weight mu = lambda;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) mu[j] -= d.cartan[j][k] * c[k];
            if (is_dominant(mu)) drops.push_back(c);
            return;
        }
        for (c[i] = 0; c[i] <= bounds[i]; ++c[i]) gen(i + 1);
        c[i] = 0;
    };
    gen(0);
    std::sort(drops.begin(), drops.end(), [](const auto& a, const auto& b) {
        long long ha = 0, hb = 0;
        for (auto x : a) ha += x;
        for (auto x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    });

    std::vector<RootVector> roots = positive_roots(d);
    std::map<Weight, long long> mult;
    for (const auto& drop : drops) {
        Weight mu = lambda;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) mu[j] -= d.cartan[j][k] * drop[k];
        bool is_lambda = std::all_of(drop.begin(), drop.end(), [](long long x) { return x == 0; });
        if (is_lambda) {
            mult[mu] = 1;
            continue;
        }
        long long gap = norm_gap(d, lambda, mu, drop);
        if (gap <= 0) { // equal norm at distinct dominant weights: not a weight
            mult[mu] = 0;
            continue;
        }
        long long rhs = 0;
        Weight mu_rho = add(mu, rho(d));
        for (const auto& alpha : roots) {
            Weight aw = root_to_weight(d, alpha);
            long long alpha2 = ip_root_root(d, alpha, alpha);
            long long slope = ip_weight_root(d, mu_rho, alpha); // (mu+rho, alpha)
            Weight nu = mu;
            for (long long k = 1;; ++k) {
                nu = add(nu, aw);
                // |nu+rho|^2 grows once the derivative 2(mu+rho,alpha)+2k|alpha|^2 > 0
                Weight gsum = add(add(lambda, nu), add(rho(d), rho(d)));
                std::vector<long long> cnu(drop);
                for (int j = 0; j < n; ++j) cnu[j] -= k * alpha.coords[j];
                bool in_cone = std::all_of(cnu.begin(), cnu.end(), [](long long x) { return x >= 0; });
                long long g = ip_weight_root(d, gsum, RootVector{cnu});
                if (g < 0 && slope + k * alpha2 > 0) break;
                if (in_cone && g >= 0) {
                    auto it = mult.find(to_dominant(d, nu));
                    if (it != mult.end() && it->second != 0)
                        rhs += ip_weight_root(d, nu, alpha) * it->second;
                }
            }
        }
        long long m2 = 2 * rhs;
        if (m2 % gap != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
        mult[mu] = m2 / gap;
    }
    return mult;
}

long long binom(long long n, long long k) {
    if (k < 0 || n < 0) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

long long freudenthal_multiplicity(const CartanDatum& d, const Weight& lambda, const Weight& mu) {
    if (!is_dominant(lambda))
        throw std::invalid_argument("freudenthal_multiplicity: lambda must be dominant");
    RootCoords rc = weight_to_root_coords(d, sub(lambda, mu));
    if (!rc.nonneg_integral) return 0;
    auto table = dominant_multiplicity_table(d, lambda);
    auto it = table.find(to_dominant(d, mu));
    return it == table.end() ? 0 : it->second;
}

CharacterTable weyl_character(const CartanDatum& d, const Weight& lambda, long long dim_cap) {
    long long dim = weyl_dimension(d, lambda);
    if (dim > dim_cap)
        throw std::invalid_argument("weyl_character: dimension " + std::to_string(dim) +
                                    " exceeds cap " + std::to_string(dim_cap));
    CharacterTable table;
    for (const auto& [mu, m] : dominant_multiplicity_table(d, lambda)) {
        if (m == 0) continue;
        for (const auto& w : weyl_orbit(d, mu)) table.entries[w] = m;
    }
    return table;
}

std::map<Weight, long long> tensor_decomposition(const CartanDatum& d, const Weight& lambda1,
                                                 const Weight& lambda2, long long dim_cap) {
    if (!is_dominant(lambda1) || !is_dominant(lambda2))
        throw std::invalid_argument("tensor_decomposition: weights must be dominant");
    if (weyl_dimension(d, lambda1) > dim_cap || weyl_dimension(d, lambda2) > dim_cap)
        throw std::invalid_argument("tensor_decomposition: dimension cap " +
                                    std::to_string(dim_cap) + " exceeded");
    CharacterTable ch = weyl_character(d, lambda1, dim_cap);
    std::map<Weight, long long> out;
    for (const auto& [mu, m] : ch.entries) {
        auto [dom, sign] = to_dominant_signed(d, add(lambda2, mu));
        if (sign != 0) out[dom] += sign * m;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

long long tensor_multiplicity(const CartanDatum& d, const Weight& lambda1, const Weight& lambda2,
                              const Weight& nu, long long dim_cap) {
    if (!is_dominant(nu))
        throw std::invalid_argument("tensor_multiplicity: nu must be dominant");
    auto dec = tensor_decomposition(d, lambda1, lambda2, dim_cap);
    auto it = dec.find(nu);
    return it == dec.end() ? 0 : it->second;
}

QPolynomial q_kostant_partition(const CartanDatum& d, const std::vector<long long>& c) {
    int n = d.rank();
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("q_kostant_partition: wrong coordinate length");
    for (long long x : c)
        if (x < 0) return QPolynomial::zero();

    // DP over the box 0..c, roots folded in height-then-lex order
    std::vector<long long> radix(n);
    long long cells = 1;
    for (int i = 0; i < n; ++i) {
        radix[i] = c[i] + 1;
        cells *= radix[i];
    }
    auto index_of = [&](const std::vector<long long>& x) {
        long long idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * radix[i] + x[i];
        return idx;
    };
    std::vector<QPolynomial> dp(cells);
    dp[0] = QPolynomial::one();
    for (const auto& r : positive_roots(d)) {
        std::vector<long long> x(n, 0);
        for (long long idx = 0; idx < cells; ++idx) {
            bool fits = true;
            for (int i = 0; i < n; ++i)
                if (x[i] < r.coords[i]) { fits = false; break; }
            if (fits) {
                std::vector<long long> y(n);
                for (int i = 0; i < n; ++i) y[i] = x[i] - r.coords[i];
                if (!dp[index_of(y)].is_zero()) dp[idx] += dp[index_of(y)].shifted(1);
            }
            // increment mixed-radix counter
            for (int i = n - 1; i >= 0; --i) {
                if (++x[i] < radix[i]) break;
                x[i] = 0;
            }
        }
    }
    return dp[cells - 1];
}

QPolynomial lusztig_q_analog(const CartanDatum& d, const Weight& lambda, const Weight& mu) {
    if (!is_dominant(lambda) || !is_dominant(mu))
        throw std::invalid_argument("lusztig_q_analog: weights must be dominant");
    Weight lr = add(lambda, rho(d));
    Weight mr = add(mu, rho(d));
    QPolynomial k;
    for (const auto& w : weyl_group_elements(d)) {
        Weight x = lr;
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            x = simple_reflection(d, *it, x);
        RootCoords rc = weight_to_root_coords(d, sub(x, mr));
        if (!rc.nonneg_integral) continue;
        QPolynomial p = q_kostant_partition(d, rc.int_coords);
        if (w.sign() > 0)
            k += p;
        else
            k = k - p;
    }
    return k;
}

std::map<std::vector<long long>, std::vector<long long>> sym_negative_root_character(
    const CartanDatum& d, int max_degree) {
    int n = d.rank();
    // map ordered by height then lex so in-place folding sees smaller keys first
    auto cmp = [](const std::vector<long long>& a, const std::vector<long long>& b) {
        long long ha = 0, hb = 0;
        for (auto x : a) ha += x;
        for (auto x : b) hb += x;
        if (ha != hb) return ha < hb;
        return a < b;
    };
    std::map<std::vector<long long>, std::vector<long long>, decltype(cmp)> dp(cmp);
    dp[std::vector<long long>(n, 0)] = [&] {
        std::vector<long long> v(max_degree + 1, 0);
        v[0] = 1;
        return v;
    }();
    for (const auto& r : positive_roots(d)) {
        for (auto it = dp.begin(); it != dp.end(); ++it) {
            const auto& counts = it->second;
            std::vector<long long> key2 = it->first;
            for (int i = 0; i < n; ++i) key2[i] += r.coords[i];
            std::vector<long long>* tgt = nullptr;
            for (int m = 1; m <= max_degree; ++m) {
                if (it->second[m - 1] == 0) continue;
                if (!tgt) {
                    auto [jt, inserted] = dp.try_emplace(key2, std::vector<long long>(max_degree + 1, 0));
                    tgt = &jt->second;
                }
                (*tgt)[m] += counts[m - 1];
            }
        }
    }
    return {dp.begin(), dp.end()};
}

namespace {

// Shared core of the two section-multiplicity series: push mu + nu through the
// signed dominance map and collect the terms landing on lambda. with_torus
// adds the rank weight-zero directions of g/u.
QSeries section_series(const CartanDatum& d, const Weight& lambda, const Weight& mu, int trunc,
                       bool with_torus, const char* opname) {
    if (!is_dominant(lambda) || !is_dominant(mu))
        throw std::invalid_argument(std::string(opname) + ": weights must be dominant");
    if (trunc < 0 || trunc > 64)
        throw std::invalid_argument(std::string(opname) + ": truncation order out of range (cap 64)");
    auto sym = sym_negative_root_character(d, trunc);
    std::vector<long long> acc(trunc + 1, 0);
    for (const auto& [nu, counts] : sym) {
        Weight x = add(mu, root_to_weight(d, RootVector{nu}));
        auto [dom, sign] = to_dominant_signed(d, x);
        if (sign == 0 || dom != lambda) continue;
        for (int m = 0; m <= trunc; ++m) acc[m] += sign * counts[m];
    }
    if (with_torus) {
        // Sym of the extra rank-dimensional weight-zero space: convolve with
        // the coefficients of (1-q)^(-rank)
        std::vector<long long> conv(trunc + 1, 0);
        for (int m = 0; m <= trunc; ++m)
            for (int k = 0; m + k <= trunc; ++k)
                conv[m + k] += acc[m] * binom(d.rank() - 1 + k, k);
        acc = std::move(conv);
    }
    for (int m = 0; m <= trunc; ++m)
        if (acc[m] < 0)
            throw std::logic_error(std::string(opname) + ": negative coefficient " +
                                   std::to_string(acc[m]) + " at degree " + std::to_string(m) +
                                   " (higher cohomology was expected to vanish)");
    return QSeries(std::move(acc), trunc);
}

} // namespace

QSeries graded_section_multiplicity(const CartanDatum& d, const Weight& lambda, const Weight& mu,
                                    int trunc) {
    return section_series(d, lambda, mu, trunc, false, "graded_section_multiplicity");
}

QSeries grothendieck_section_multiplicity(const CartanDatum& d, const Weight& lambda,
                                          const Weight& mu, int trunc) {
    return section_series(d, lambda, mu, trunc, true, "grothendieck_section_multiplicity");
}

GradedMultiplicityReport verify_eq1(const CartanDatum& d, const Weight& lambda, const Weight& mu,
                                    int trunc) {
    GradedMultiplicityReport rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.type = d.label;
    rep.lhs = graded_section_multiplicity(d, lambda, mu, trunc);
    rep.rhs = lusztig_q_analog(d, lambda, mu);
    RootCoords rc = weight_to_root_coords(d, mu);
    if (rc.integral) {
        rep.shift_defined = true;
        for (long long c : rc.int_coords) rep.shift += 2 * c;
    }
    rep.first_mismatch = rep.lhs.first_mismatch(rep.rhs);
    rep.match = !rep.first_mismatch.has_value();
    return rep;
}

Diagram7Report verify_diagram7_corners(const CartanDatum& d, const Weight& lambda,
                                       const Weight& mu, int trunc) {
    Diagram7Report rep;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.type = d.label;
    rep.top_left = grothendieck_section_multiplicity(d, lambda, mu, trunc);
    rep.weight_multiplicity = freudenthal_multiplicity(d, lambda, mu);
    rep.bottom_left =
        QSeries::geometric_pow(d.rank(), trunc) * QPolynomial::monomial(0, rep.weight_multiplicity);

    // (1-q)^rank with signs
    QPolynomial one_minus_q = QPolynomial(std::vector<long long>{1, -1});
    QPolynomial contraction = QPolynomial::one();
    for (int i = 0; i < d.rank(); ++i) contraction = contraction * one_minus_q;
    QSeries compressed = rep.top_left * contraction;

    // the costalk polynomial has degree at most the height of lambda - mu
    RootCoords rc = weight_to_root_coords(d, sub(lambda, mu));
    long long max_deg = -1;
    if (rc.nonneg_integral)
        for (long long c : rc.int_coords) max_deg += c;
    rep.top_left_free = true;
    rep.top_left_rank = 0;
    for (int k = 0; k <= trunc; ++k) {
        if (k > max_deg + 1 && compressed.coeff(k) != 0) rep.top_left_free = false;
        rep.top_left_rank += compressed.coeff(k);
    }
    rep.rank_match = rep.top_left_free && rep.top_left_rank == rep.weight_multiplicity;
    return rep;
}

} // namespace satake
