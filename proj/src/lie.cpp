#include "satake/lie.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace satake {

namespace {

void validate_gcm(const std::vector<std::vector<long long>>& a) {
    size_t n = a.size();
    if (n == 0) throw std::invalid_argument("cartan matrix: empty");
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("cartan matrix: not square");
        if (a[i][i] != 2) throw std::invalid_argument("cartan matrix: diagonal entry != 2");
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a[i][j] > 0) throw std::invalid_argument("cartan matrix: positive off-diagonal entry");
            if ((a[i][j] == 0) != (a[j][i] == 0))
                throw std::invalid_argument("cartan matrix: zero pattern not symmetric");
        }
    }
}

// Minimal positive integer symmetrizers for a symmetrizable matrix.
std::vector<long long> compute_symmetrizers(const std::vector<std::vector<long long>>& a) {
    int n = static_cast<int>(a.size());
    std::vector<Rational> d(n, Rational(0));
    // propagate ratios across the Dynkin graph, component by component
    for (int start = 0; start < n; ++start) {
        if (!d[start].is_zero()) continue;
        d[start] = Rational(1);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (i == j || a[i][j] == 0) continue;
                Rational dj = d[i] * Rational(a[i][j], a[j][i]);
                if (d[j].is_zero()) {
                    d[j] = dj;
                    stack.push_back(j);
                } else if (d[j] != dj) {
                    throw std::invalid_argument("cartan matrix: not symmetrizable");
                }
            }
        }
    }
    // clear denominators and divide by the global gcd
    long long lcm = 1;
    for (auto& x : d) lcm = std::lcm(lcm, x.den);
    std::vector<long long> out(n);
    long long g = 0;
    for (int i = 0; i < n; ++i) {
        out[i] = d[i].num * (lcm / d[i].den);
        g = std::gcd(g, out[i]);
    }
    for (auto& x : out) x /= g;
    return out;
}

// Leading principal minors of the symmetrized matrix, exact via fraction-free
// Gaussian elimination on rationals (ranks are tiny).
bool is_positive_definite(const std::vector<std::vector<long long>>& a,
                          const std::vector<long long>& sym) {
    int n = static_cast<int>(a.size());
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = Rational(sym[i] * a[i][j]);
        Rational det(1);
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (!m[r][col].is_zero()) { piv = r; break; }
            if (piv < 0) return false;
            if (piv != col) { std::swap(m[piv], m[col]); det = -det; }
            det = det * m[col][col];
            for (int r = col + 1; r < k; ++r) {
                Rational f = m[r][col] / m[col][col];
                for (int c = col; c < k; ++c) m[r][c] = m[r][c] - f * m[col][c];
            }
        }
        if (!(det > Rational(0))) return false;
    }
    return true;
}

} // namespace

CartanDatum CartanDatum::of_type(char series, int rank) {
    auto tridiag = [](int n) {
        std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) {
            a[i][i] = 2;
            if (i + 1 < n) { a[i][i + 1] = -1; a[i + 1][i] = -1; }
        }
        return a;
    };
    std::vector<std::vector<long long>> a;
    switch (series) {
        case 'A':
            if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
            a = tridiag(rank);
            break;
        case 'B': // alpha_rank short
            if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
            a = tridiag(rank);
            a[rank - 1][rank - 2] = -2;
            break;
        case 'C': // alpha_rank long
            if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
            a = tridiag(rank);
            a[rank - 2][rank - 1] = -2;
            break;
        case 'D':
            if (rank < 4) throw std::invalid_argument("type D needs rank >= 4");
            a = tridiag(rank);
            a[rank - 1][rank - 2] = 0;
            a[rank - 2][rank - 1] = 0;
            a[rank - 1][rank - 3] = -1;
            a[rank - 3][rank - 1] = -1;
            break;
        case 'G':
            if (rank != 2) throw std::invalid_argument("type G needs rank 2");
            a = {{2, -1}, {-3, 2}}; // alpha_1 long, alpha_2 short
            break;
        case 'F':
            if (rank != 4) throw std::invalid_argument("type F needs rank 4");
            a = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
            break;
        default:
            throw std::invalid_argument(std::string("unknown series '") + series + "'");
    }
    CartanDatum d = from_cartan(std::move(a));
    d.label = std::string(1, series) + std::to_string(rank);
    return d;
}

CartanDatum CartanDatum::of_label(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("bad type label: " + label);
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (...) {
        throw std::invalid_argument("bad type label: " + label);
    }
    return of_type(label[0], rank);
}

CartanDatum CartanDatum::from_cartan(std::vector<std::vector<long long>> a, std::string label) {
    validate_gcm(a);
    CartanDatum d;
    d.sym = compute_symmetrizers(a);
    if (!is_positive_definite(a, d.sym))
        throw std::invalid_argument("cartan matrix: not finite type (symmetrized form not positive definite)");
    d.cartan = std::move(a);
    d.label = std::move(label);
    return d;
}

Weight rho(const CartanDatum& d) { return Weight(d.rank(), 1); }

Weight root_to_weight(const CartanDatum& d, const RootVector& r) {
    int n = d.rank();
    Weight w(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) w[i] += d.cartan[i][j] * r.coords[j];
    return w;
}

Weight add(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Weight sub(const Weight& a, const Weight& b) {
    Weight r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

RootCoords weight_to_root_coords(const CartanDatum& d, const Weight& mu) {
    int n = d.rank();
    // Gaussian elimination on [A | mu] over the rationals
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = Rational(d.cartan[i][j]);
        m[i][n] = Rational(mu[i]);
    }
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular cartan matrix"); // finite type: unreachable
        std::swap(m[piv], m[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[col][col];
            for (int c = col; c <= n; ++c) m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    RootCoords out;
    out.coords.resize(n);
    out.integral = true;
    out.nonneg_integral = true;
    for (int i = 0; i < n; ++i) {
        out.coords[i] = m[i][n] / m[i][i];
        if (!out.coords[i].is_integer()) { out.integral = false; out.nonneg_integral = false; }
    }
    if (out.integral) {
        out.int_coords.resize(n);
        for (int i = 0; i < n; ++i) {
            out.int_coords[i] = out.coords[i].as_integer();
            if (out.int_coords[i] < 0) out.nonneg_integral = false;
        }
    }
    return out;
}

long long pairing_two_rho_check(const CartanDatum& d, const Weight& mu) {
    RootCoords rc = weight_to_root_coords(d, mu);
    if (!rc.integral)
        throw std::invalid_argument("pairing_two_rho_check: weight is not in the root lattice");
    long long h = 0;
    for (long long c : rc.int_coords) h += c;
    return 2 * h;
}

Weight simple_reflection(const CartanDatum& d, int i, const Weight& mu) {
    if (i < 0 || i >= d.rank()) throw std::out_of_range("simple_reflection: index out of range");
    Weight r = mu;
    long long m = mu[i];
    for (int j = 0; j < d.rank(); ++j) r[j] -= m * d.cartan[j][i]; // alpha_i in weight coords
    return r;
}

Weight dot_action(const CartanDatum& d, const WeylWord& w, const Weight& lambda) {
    Weight x = add(lambda, rho(d));
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        x = simple_reflection(d, *it, x);
    return sub(x, rho(d));
}

std::pair<Weight, int> to_dominant_signed(const CartanDatum& d, const Weight& mu) {
    Weight x = add(mu, rho(d));
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < d.rank(); ++i) {
            if (x[i] < 0) {
                x = simple_reflection(d, i, x);
                sign = -sign;
                moved = true;
            }
        }
    }
    for (int i = 0; i < d.rank(); ++i)
        if (x[i] == 0) return {sub(x, rho(d)), 0};
    return {sub(x, rho(d)), sign};
}

Weight to_dominant(const CartanDatum& d, const Weight& mu) {
    Weight x = mu;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < d.rank(); ++i) {
            if (x[i] < 0) {
                x = simple_reflection(d, i, x);
                moved = true;
            }
        }
    }
    return x;
}

std::vector<WeylWord> weyl_group_elements(const CartanDatum& d) {
    Weight r = rho(d);
    std::set<Weight> seen{r};
    std::vector<WeylWord> out;
    out.push_back(WeylWord{});
    std::vector<std::pair<Weight, WeylWord>> frontier{{r, WeylWord{}}};
    while (!frontier.empty()) {
        std::vector<std::pair<Weight, WeylWord>> next;
        for (const auto& [img, word] : frontier) {
            for (int i = 0; i < d.rank(); ++i) {
                Weight img2 = simple_reflection(d, i, img);
                if (seen.insert(img2).second) {
                    WeylWord w2;
                    w2.letters = word.letters;
                    w2.letters.insert(w2.letters.begin(), i); // new image is s_i * (old)
                    w2.length = word.length + 1;
                    out.push_back(w2);
                    next.emplace_back(std::move(img2), std::move(w2));
                }
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::vector<Weight> weyl_orbit(const CartanDatum& d, const Weight& mu) {
    std::set<Weight> seen{mu};
    std::vector<Weight> frontier{mu};
    while (!frontier.empty()) {
        std::vector<Weight> next;
        for (const auto& w : frontier)
            for (int i = 0; i < d.rank(); ++i) {
                Weight w2 = simple_reflection(d, i, w);
                if (seen.insert(w2).second) next.push_back(std::move(w2));
            }
        frontier = std::move(next);
    }
    return std::vector<Weight>(seen.begin(), seen.end());
}

std::vector<RootVector> positive_roots(const CartanDatum& d) {
    int n = d.rank();
    // closure of the simple roots under the reflections that keep positivity
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& c : frontier) {
            for (int i = 0; i < n; ++i) {
                // <beta, alpha_i^vee> = sum_j A_ij c_j
                long long p = 0;
                for (int j = 0; j < n; ++j) p += d.cartan[i][j] * c[j];
                std::vector<long long> c2 = c;
                c2[i] -= p;
                bool positive = std::all_of(c2.begin(), c2.end(), [](long long x) { return x >= 0; });
                if (positive && seen.insert(c2).second) next.push_back(std::move(c2));
            }
        }
        frontier = std::move(next);
    }
    std::vector<RootVector> out;
    out.reserve(seen.size());
    for (auto& c : seen) out.push_back(RootVector{c});
    std::sort(out.begin(), out.end(), [](const RootVector& a, const RootVector& b) {
        long long ha = a.height(), hb = b.height();
        if (ha != hb) return ha < hb;
        return a.coords < b.coords;
    });
    return out;
}

bool is_dominant(const Weight& mu) {
    return std::all_of(mu.begin(), mu.end(), [](long long x) { return x >= 0; });
}

long long ip_weight_root(const CartanDatum& d, const Weight& mu, const RootVector& alpha) {
    long long s = 0;
    for (int j = 0; j < d.rank(); ++j) s += d.sym[j] * alpha.coords[j] * mu[j];
    return s;
}

long long ip_root_root(const CartanDatum& d, const RootVector& a, const RootVector& b) {
    return ip_weight_root(d, root_to_weight(d, a), b);
}

long long weyl_dimension(const CartanDatum& d, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weyl_dimension: non-dominant weight");
    Weight lr = add(lambda, rho(d));
    Weight r = rho(d);
    Rational dim(1);
    for (const auto& alpha : positive_roots(d))
        dim = dim * Rational(ip_weight_root(d, lr, alpha), ip_weight_root(d, r, alpha));
    return dim.as_integer();
}

} // namespace satake
