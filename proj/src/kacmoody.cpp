#include "satake/kacmoody.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

long long vec_height(const std::vector<long long>& c) {
    long long h = 0;
    for (long long x : c) h += x;
    return h;
}

struct HeightLex {
    bool operator()(const std::vector<long long>& a, const std::vector<long long>& b) const {
        long long ha = vec_height(a), hb = vec_height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    }
};

} // namespace

AffineCartanDatum AffineCartanDatum::untwisted(const CartanDatum& finite) {
    AffineCartanDatum d;
    d.finite = finite;
    int n = finite.rank();
    auto roots = positive_roots(finite);
    d.theta = roots.back(); // sorted by height: highest root last
    d.theta_len2_half = ip_root_root(finite, d.theta, d.theta) / 2;

    d.cartan.assign(n + 1, std::vector<long long>(n + 1, 0));
    d.cartan[0][0] = 2;
    Weight theta_w = root_to_weight(finite, d.theta);
    for (int j = 1; j <= n; ++j) {
        // <alpha_0, alpha_j^vee> = -<theta, alpha_j^vee>
        d.cartan[j][0] = -theta_w[j - 1];
        // <alpha_j, alpha_0^vee> = -(alpha_j, theta) / ((theta,theta)/2)
        RootVector ej{std::vector<long long>(n, 0)};
        ej.coords[j - 1] = 1;
        d.cartan[0][j] = -ip_root_root(finite, ej, d.theta) / d.theta_len2_half;
        for (int i = 1; i <= n; ++i) d.cartan[i][j] = finite.cartan[i - 1][j - 1];
    }

    d.marks.assign(n + 1, 1);
    d.comarks.assign(n + 1, 1);
    for (int i = 1; i <= n; ++i) {
        d.marks[i] = d.theta.coords[i - 1];
        d.comarks[i] = d.theta.coords[i - 1] * finite.sym[i - 1] / d.theta_len2_half;
    }

    // affine extension sanity: the marks span the kernel of the extended matrix
    for (int i = 0; i <= n; ++i) {
        long long s = 0;
        for (int j = 0; j <= n; ++j) s += d.cartan[i][j] * d.marks[j];
        if (s != 0) throw std::logic_error("affine extension: marks are not a null vector");
    }
    return d;
}

long long affine_level(const AffineCartanDatum& d, const AffineWeight& w) {
    long long s = 0;
    for (int i = 0; i < d.size(); ++i) s += d.comarks[i] * w.coords[i];
    return s;
}

bool affine_dominant(const AffineWeight& w) {
    return std::all_of(w.coords.begin(), w.coords.end(), [](long long x) { return x >= 0; });
}

AffineWeight affine_rho(const AffineCartanDatum& d) {
    return AffineWeight{std::vector<long long>(d.size(), 1), 0};
}

AffineWeight affine_weight_from_drop(const AffineCartanDatum& d, const AffineWeight& lambda,
                                     const std::vector<long long>& drop) {
    AffineWeight mu = lambda;
    int n1 = d.size();
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) mu.coords[i] -= d.cartan[i][j] * drop[j];
    mu.delta -= drop[0]; // alpha_0 = delta - theta carries the delta unit
    return mu;
}

std::vector<long long> affine_drop_of(const AffineCartanDatum& d, const AffineWeight& lambda,
                                      const AffineWeight& mu) {
    int n = d.finite_rank();
    std::vector<long long> drop(n + 1, 0);
    drop[0] = lambda.delta - mu.delta;
    // remaining finite part: (lambda - mu - drop0 * alpha_0) restricted to indices 1..n
    Weight fin(n, 0);
    for (int i = 1; i <= n; ++i)
        fin[i - 1] = lambda.coords[i] - mu.coords[i] - drop[0] * d.cartan[i][0];
    RootCoords rc = weight_to_root_coords(d.finite, fin);
    if (!rc.integral)
        throw std::invalid_argument("affine weights do not differ by a root-lattice vector");
    for (int i = 1; i <= n; ++i) drop[i] = rc.int_coords[i - 1];
    // consistency on the affine-node coordinate
    AffineWeight back = affine_weight_from_drop(d, lambda, drop);
    if (!(back == mu))
        throw std::invalid_argument("affine weights do not differ by a root-lattice vector");
    return drop;
}

std::vector<AffineRoot> affine_positive_roots(const AffineCartanDatum& d, int depth) {
    if (depth < 0) throw std::invalid_argument("affine_positive_roots: negative depth");
    int n = d.finite_rank();
    std::vector<AffineRoot> out;
    auto fin_roots = positive_roots(d.finite);
    for (int m = 0; m <= depth; ++m) {
        std::vector<AffineRoot> shell;
        if (m == 0) {
            for (const auto& r : fin_roots) {
                AffineRoot a;
                a.coords.assign(n + 1, 0);
                for (int i = 1; i <= n; ++i) a.coords[i] = r.coords[i - 1];
                shell.push_back(std::move(a));
            }
        } else {
            for (const auto& r : fin_roots) {
                for (int sgn : {+1, -1}) {
                    AffineRoot a;
                    a.coords.assign(n + 1, 0);
                    a.coords[0] = m;
                    for (int i = 1; i <= n; ++i)
                        a.coords[i] = m * d.marks[i] + sgn * r.coords[i - 1];
                    shell.push_back(std::move(a));
                }
            }
            AffineRoot im;
            im.coords.assign(n + 1, 0);
            im.coords[0] = m;
            for (int i = 1; i <= n; ++i) im.coords[i] = m * d.marks[i];
            im.multiplicity = n;
            im.imaginary = true;
            shell.push_back(std::move(im));
        }
        std::sort(shell.begin(), shell.end(), [](const AffineRoot& a, const AffineRoot& b) {
            long long ha = vec_height(a.coords), hb = vec_height(b.coords);
            if (ha != hb) return ha < hb;
            return a.coords < b.coords;
        });
        for (auto& a : shell) out.push_back(std::move(a));
    }
    return out;
}

namespace {

// (x, alpha) for an affine weight x and a root-lattice vector alpha given in
// simple-root coordinates: finite pairing of the finite parts plus
// delta-degree * level(x). Normalization: (delta, delta) = 0, (Lambda_0,
// delta) = 1, finite part as in the finite datum.
long long ip_affine(const AffineCartanDatum& d, const AffineWeight& x,
                    const std::vector<long long>& alpha) {
    int n = d.finite_rank();
    RootVector fin{std::vector<long long>(n, 0)};
    for (int i = 1; i <= n; ++i) fin.coords[i - 1] = alpha[i] - alpha[0] * d.theta.coords[i - 1];
    Weight xf(n, 0);
    for (int i = 1; i <= n; ++i) xf[i - 1] = x.coords[i];
    return ip_weight_root(d.finite, xf, fin) + alpha[0] * affine_level(d, x);
}

long long pairing_coroot(const AffineCartanDatum& d, const AffineWeight& lambda,
                         const std::vector<long long>& drop, int i) {
    long long p = lambda.coords[i];
    for (int j = 0; j < d.size(); ++j) p -= d.cartan[i][j] * drop[j];
    return p;
}

// Push mu = lambda - drop to its dominant chamber representative, working on
// the drop vector. Returns false when the push exits the cone lambda - Q+
// (then mu is not a weight of V(lambda)).
bool dominant_drop(const AffineCartanDatum& d, const AffineWeight& lambda,
                   std::vector<long long>& drop) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < d.size(); ++i) {
            long long p = pairing_coroot(d, lambda, drop, i);
            if (p < 0) {
                drop[i] += p; // s_i adds p * alpha_i to the drop
                moved = true;
            }
        }
    }
    return std::all_of(drop.begin(), drop.end(), [](long long x) { return x >= 0; });
}

void check_integrable(const AffineCartanDatum& d, const AffineWeight& lambda) {
    if (!affine_dominant(lambda))
        throw std::invalid_argument("affine highest weight must be dominant");
    if (affine_level(d, lambda) <= 0)
        throw std::invalid_argument("affine highest weight must have positive level");
}

// Multiplicities of the dominant weights of V(lambda) within the depth
// window, as a map drop -> mult. Weights are enumerated by saturation BFS
// from lambda (mu < lambda is a weight iff some mu + alpha_i is), dominant
// testing and lookups work entirely on drop vectors.
std::map<std::vector<long long>, long long, HeightLex> affine_dominant_table(
    const AffineCartanDatum& d, const AffineWeight& lambda, int depth,
    std::set<std::vector<long long>>* all_weights_out = nullptr) {
    check_integrable(d, lambda);
    int n1 = d.size();

    // BFS over the weight system: a candidate drop is a weight iff its
    // dominant representative stays inside the cone lambda - Q+.
    std::set<std::vector<long long>> weights;
    std::vector<std::vector<long long>> frontier;
    std::vector<long long> zero(n1, 0);
    weights.insert(zero);
    frontier.push_back(zero);
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& c : frontier) {
            for (int i = 0; i < n1; ++i) {
                std::vector<long long> c2 = c;
                c2[i] += 1;
                if (c2[0] > depth || weights.count(c2)) continue;
                std::vector<long long> dom = c2;
                if (!dominant_drop(d, lambda, dom)) continue;
                weights.insert(c2);
                next.push_back(std::move(c2));
            }
        }
        frontier = std::move(next);
    }
    if (all_weights_out) *all_weights_out = weights;

    // dominant weights, ascending by drop height
    std::vector<std::vector<long long>> dominants;
    for (const auto& c : weights) {
        bool dom = true;
        for (int i = 0; i < n1 && dom; ++i) dom = pairing_coroot(d, lambda, c, i) >= 0;
        if (dom) dominants.push_back(c);
    }
    std::sort(dominants.begin(), dominants.end(), HeightLex{});

    auto roots = affine_positive_roots(d, depth);
    AffineWeight rho = affine_rho(d);
    AffineWeight lam_rho{lambda.coords, lambda.delta};
    for (int i = 0; i < n1; ++i) lam_rho.coords[i] += 1;

    std::map<std::vector<long long>, long long, HeightLex> mult;
    for (const auto& c : dominants) {
        if (vec_height(c) == 0) {
            mult[c] = 1;
            continue;
        }
        AffineWeight mu = affine_weight_from_drop(d, lambda, c);
        // gap = |lambda+rho|^2 - |mu+rho|^2 = (lambda + mu + 2 rho, lambda - mu)
        AffineWeight s = mu;
        for (int i = 0; i < n1; ++i) s.coords[i] += lambda.coords[i] + 2;
        s.delta += lambda.delta;
        long long gap = ip_affine(d, s, c);
        if (gap <= 0) { // dominant non-weight inside the window box
            mult[c] = 0;
            continue;
        }
        long long rhs = 0;
        for (const auto& alpha : roots) {
            std::vector<long long> cnu = c;
            AffineWeight nu = mu;
            for (long long k = 1;; ++k) {
                bool inside = true;
                for (int i = 0; i < n1; ++i) {
                    cnu[i] -= alpha.coords[i];
                    if (cnu[i] < 0) inside = false;
                }
                if (!inside) break;
                nu = affine_weight_from_drop(d, lambda, cnu);
                std::vector<long long> dom = cnu;
                if (!dominant_drop(d, lambda, dom)) continue;
                auto it = mult.find(dom);
                if (it == mult.end() || it->second == 0) continue;
                rhs += alpha.multiplicity * ip_affine(d, nu, alpha.coords) * it->second;
            }
        }
        long long m2 = 2 * rhs;
        if (m2 % gap != 0) throw std::logic_error("affine freudenthal: non-integral multiplicity");
        mult[c] = m2 / gap;
    }
    return mult;
}

} // namespace

long long affine_freudenthal(const AffineCartanDatum& d, const AffineWeight& lambda,
                             const AffineWeight& mu, int depth) {
    check_integrable(d, lambda);
    std::vector<long long> drop = affine_drop_of(d, lambda, mu);
    if (drop[0] > depth)
        throw std::invalid_argument("affine_freudenthal: depth window " + std::to_string(depth) +
                                    " too small for delta-drop " + std::to_string(drop[0]));
    if (std::any_of(drop.begin(), drop.end(), [](long long x) { return x < 0; })) return 0;
    std::vector<long long> dom = drop;
    if (!dominant_drop(d, lambda, dom)) return 0;
    auto table = affine_dominant_table(d, lambda, static_cast<int>(drop[0]));
    auto it = table.find(dom);
    return it == table.end() ? 0 : it->second;
}

namespace {

// Character coefficients chi(b) for all drop vectors b in the box 0..box,
// via the Weyl-Kac formula truncated to the box: monomial products only move
// deeper into the cone, so the truncation is exact on the box.
std::vector<long long> weyl_kac_box(const AffineCartanDatum& d, const AffineWeight& lambda,
                                    const std::vector<long long>& box) {
    int n1 = d.size();
    std::vector<long long> radix(n1);
    long long cells = 1;
    for (int i = 0; i < n1; ++i) {
        radix[i] = box[i] + 1;
        cells *= radix[i];
    }
    auto index_of = [&](const std::vector<long long>& x) {
        long long idx = 0;
        for (int i = 0; i < n1; ++i) idx = idx * radix[i] + x[i];
        return idx;
    };

    // numerator: BFS over the affine Weyl group on lambda + rho, recorded as
    // drop vectors b with w(lambda+rho) = lambda+rho - sum b_i alpha_i;
    // pruned once b leaves the box (coordinates only grow with length).
    std::vector<long long> numer(cells, 0);
    AffineWeight lam_rho{lambda.coords, lambda.delta};
    for (int i = 0; i < n1; ++i) lam_rho.coords[i] += 1;
    std::set<std::vector<long long>> seen;
    std::vector<long long> zero(n1, 0);
    seen.insert(zero);
    numer[0] = 1;
    std::vector<std::pair<std::vector<long long>, int>> frontier{{zero, +1}};
    while (!frontier.empty()) {
        std::vector<std::pair<std::vector<long long>, int>> next;
        for (const auto& [b, sign] : frontier) {
            for (int i = 0; i < n1; ++i) {
                long long p = pairing_coroot(d, lam_rho, b, i);
                if (p <= 0) continue; // length would not increase
                std::vector<long long> b2 = b;
                b2[i] += p;
                bool inside = true;
                for (int j = 0; j < n1; ++j)
                    if (b2[j] > box[j]) inside = false;
                if (!inside || !seen.insert(b2).second) continue;
                numer[index_of(b2)] += -sign;
                next.emplace_back(std::move(b2), -sign);
            }
        }
        frontier = std::move(next);
    }

    // denominator product over the windowed positive roots
    std::vector<long long> denom(cells, 0);
    denom[0] = 1;
    for (const auto& alpha : affine_positive_roots(d, static_cast<int>(box[0]))) {
        bool fits_box = true;
        for (int i = 0; i < n1; ++i)
            if (alpha.coords[i] > box[i]) fits_box = false;
        if (!fits_box) continue;
        for (long long rep = 0; rep < alpha.multiplicity; ++rep) {
            // multiply by (1 - X^alpha), staging the shifted copy so each
            // cell reads the pre-update value
            std::vector<long long> x(n1, 0);
            std::vector<long long> upd(cells, 0);
            for (long long idx = 0; idx < cells; ++idx) {
                bool fits = true;
                for (int i = 0; i < n1; ++i)
                    if (x[i] < alpha.coords[i]) fits = false;
                if (fits) {
                    std::vector<long long> y(n1);
                    for (int i = 0; i < n1; ++i) y[i] = x[i] - alpha.coords[i];
                    upd[idx] = denom[index_of(y)];
                }
                for (int i = n1 - 1; i >= 0; --i) {
                    if (++x[i] < radix[i]) break;
                    x[i] = 0;
                }
            }
            for (long long idx = 0; idx < cells; ++idx) denom[idx] -= upd[idx];
        }
    }

    // sparse list of nonzero denominator terms (skipping the unit at 0);
    // for y <= x componentwise the mixed-radix index is additive, so
    // index(x - y) = index(x) - index(y)
    struct Term {
        std::vector<long long> coords;
        long long idx;
        long long value;
    };
    std::vector<Term> terms;
    {
        std::vector<long long> y(n1, 0);
        for (long long idx = 0; idx < cells; ++idx) {
            if (idx != 0 && denom[idx] != 0) terms.push_back({y, idx, denom[idx]});
            for (int i = n1 - 1; i >= 0; --i) {
                if (++y[i] < radix[i]) break;
                y[i] = 0;
            }
        }
    }

    // forward substitution: chi * denom = numer, denom(0) = 1
    std::vector<long long> chi(cells, 0);
    std::vector<long long> x(n1, 0);
    for (long long idx = 0; idx < cells; ++idx) {
        long long acc = numer[idx];
        for (const auto& t : terms) {
            if (t.idx > idx) break; // terms are index-ascending
            bool leq = true;
            for (int i = 0; i < n1; ++i)
                if (t.coords[i] > x[i]) leq = false;
            if (leq) acc -= t.value * chi[idx - t.idx];
        }
        chi[idx] = acc;
        for (int i = n1 - 1; i >= 0; --i) {
            if (++x[i] < radix[i]) break;
            x[i] = 0;
        }
    }
    return chi;
}

} // namespace

long long weyl_kac_multiplicity(const AffineCartanDatum& d, const AffineWeight& lambda,
                                const AffineWeight& mu, int depth) {
    check_integrable(d, lambda);
    std::vector<long long> target = affine_drop_of(d, lambda, mu);
    if (target[0] > depth)
        throw std::invalid_argument("weyl_kac_multiplicity: depth window " + std::to_string(depth) +
                                    " too small for delta-drop " + std::to_string(target[0]));
    if (std::any_of(target.begin(), target.end(), [](long long x) { return x < 0; })) return 0;
    auto chi = weyl_kac_box(d, lambda, target);
    return chi.back();
}

std::map<std::vector<long long>, long long> weyl_kac_window_table(const AffineCartanDatum& d,
                                                                  const AffineWeight& lambda,
                                                                  int depth) {
    check_integrable(d, lambda);
    int n1 = d.size();
    std::set<std::vector<long long>> weights;
    affine_dominant_table(d, lambda, depth, &weights);
    std::vector<long long> box(n1, 0);
    for (const auto& c : weights)
        for (int i = 0; i < n1; ++i) box[i] = std::max(box[i], c[i]);
    auto chi = weyl_kac_box(d, lambda, box);
    std::vector<long long> radix(n1);
    for (int i = 0; i < n1; ++i) radix[i] = box[i] + 1;
    std::map<std::vector<long long>, long long> out;
    for (const auto& c : weights) {
        long long idx = 0;
        for (int i = 0; i < n1; ++i) idx = idx * radix[i] + c[i];
        out[c] = chi[idx];
    }
    return out;
}

AffineWeightTable eq5_weight_table(const AffineCartanDatum& d, const AffineWeight& lambda,
                                   int depth) {
    check_integrable(d, lambda);
    std::set<std::vector<long long>> weights;
    auto table = affine_dominant_table(d, lambda, depth, &weights);

    // include hull points one step outside the weight set (multiplicity 0)
    std::set<std::vector<long long>> candidates = weights;
    AffineWeight rho2 = lambda;
    for (int i = 0; i < d.size(); ++i) rho2.coords[i] = 2 * lambda.coords[i] + 2;
    rho2.delta = 2 * lambda.delta;
    for (const auto& c : weights) {
        for (int i = 0; i < d.size(); ++i) {
            std::vector<long long> c2 = c;
            c2[i] += 1;
            if (c2[0] > depth || candidates.count(c2)) continue;
            AffineWeight s = affine_weight_from_drop(d, lambda, c2); // mu
            for (int j = 0; j < d.size(); ++j) s.coords[j] += rho2.coords[j] - lambda.coords[j];
            s.delta += rho2.delta - lambda.delta;
            if (ip_affine(d, s, c2) >= 0) candidates.insert(c2); // |mu+rho| <= |lambda+rho|
        }
    }

    AffineWeightTable out;
    out.type = d.finite.label;
    out.lambda = lambda.coords;
    out.depth = depth;
    std::vector<std::vector<long long>> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end(), HeightLex{});
    for (const auto& c : sorted) {
        AffineWeightRow row;
        row.drop = c;
        row.delta_drop = c[0];
        AffineWeight mu = affine_weight_from_drop(d, lambda, c);
        row.mu_coords = mu.coords;
        std::vector<long long> dom = c;
        if (dominant_drop(d, lambda, dom)) {
            auto it = table.find(dom);
            row.multiplicity = it == table.end() ? 0 : it->second;
        }
        row.nonzero = row.multiplicity != 0;
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace satake
