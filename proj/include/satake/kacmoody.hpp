#pragma once

#include <map>
#include <string>
#include <vector>

#include "satake/lie.hpp"

namespace satake {

/// Untwisted affine extension of a finite-type Cartan datum. Index 0 is the
/// affine node; indices 1..rank are the finite simple roots. delta = sum of
/// marks[i] * alpha_i, level(Lambda_i) = comarks[i].
struct AffineCartanDatum {
    CartanDatum finite;
    std::vector<std::vector<long long>> cartan; // (rank+1) x (rank+1)
    std::vector<long long> marks;               // marks[0] = 1
    std::vector<long long> comarks;             // comarks[0] = 1
    RootVector theta;                           // highest root of the finite part
    long long theta_len2_half = 1;              // (theta, theta)/2

    int finite_rank() const { return finite.rank(); }
    int size() const { return finite.rank() + 1; }
    long long dual_coxeter() const {
        long long h = 0;
        for (long long a : comarks) h += a;
        return h;
    }

    static AffineCartanDatum untwisted(const CartanDatum& finite);
};

/// Weight of the affine algebra: coords in the affine fundamental-weight
/// basis (Lambda_0 first) plus an explicit delta coefficient. All operations
/// here stay on the integer delta sublattice.
struct AffineWeight {
    std::vector<long long> coords; // length rank+1
    long long delta = 0;
    bool operator==(const AffineWeight& o) const { return coords == o.coords && delta == o.delta; }
};

long long affine_level(const AffineCartanDatum& d, const AffineWeight& w);
bool affine_dominant(const AffineWeight& w);
AffineWeight affine_rho(const AffineCartanDatum& d);

/// mu = lambda - sum c_i alpha_i for a drop vector c (length rank+1, index 0
/// = affine simple root).
AffineWeight affine_weight_from_drop(const AffineCartanDatum& d, const AffineWeight& lambda,
                                     const std::vector<long long>& drop);

/// Drop vector of lambda - mu; entries may be negative or fractional-free
/// fail: throws when lambda - mu is not in the root lattice.
std::vector<long long> affine_drop_of(const AffineCartanDatum& d, const AffineWeight& lambda,
                                      const AffineWeight& mu);

/// Positive root within a depth window, in simple-root coordinates, with its
/// multiplicity (1 for real roots, finite rank for imaginary ones).
struct AffineRoot {
    std::vector<long long> coords; // length rank+1
    long long multiplicity = 1;
    bool imaginary = false;
};

/// All positive roots of delta-degree <= depth, sorted by (delta-degree,
/// height, lex).
std::vector<AffineRoot> affine_positive_roots(const AffineCartanDatum& d, int depth);

/// dim V(lambda)_mu by the affine Freudenthal recursion (imaginary root
/// multiplicities included). Requires dominant lambda of positive level;
/// rejects windows too small for lambda - mu.
long long affine_freudenthal(const AffineCartanDatum& d, const AffineWeight& lambda,
                             const AffineWeight& mu, int depth);

/// Independent oracle: windowed Weyl-Kac numerator over the affine Weyl
/// group divided by the windowed denominator product.
long long weyl_kac_multiplicity(const AffineCartanDatum& d, const AffineWeight& lambda,
                                const AffineWeight& mu, int depth);

/// Weyl-Kac multiplicities for every weight of V(lambda) in the depth
/// window, keyed by drop vector (one box expansion instead of one per mu).
std::map<std::vector<long long>, long long> weyl_kac_window_table(const AffineCartanDatum& d,
                                                                  const AffineWeight& lambda,
                                                                  int depth);

struct AffineWeightRow {
    std::vector<long long> drop;      // lambda - mu in simple-root coordinates
    std::vector<long long> mu_coords; // affine fundamental-weight coordinates
    long long delta_drop = 0;
    long long multiplicity = 0;
    bool nonzero = false;
};

struct AffineWeightTable {
    std::string type;
    std::vector<long long> lambda;
    int depth = 0;
    std::vector<AffineWeightRow> rows; // sorted by (height of drop, lex)
};

/// All mu = lambda - sum c_i alpha_i within the depth window that lie inside
/// the weight hull of V(lambda), with multiplicities (including non-dominant
/// mu, and hull points of multiplicity zero).
AffineWeightTable eq5_weight_table(const AffineCartanDatum& d, const AffineWeight& lambda,
                                   int depth);

} // namespace satake
