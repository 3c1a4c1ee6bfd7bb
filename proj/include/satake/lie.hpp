#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satake/rational.hpp"

namespace satake {

using Weight = std::vector<long long>; // fundamental-weight coordinates

/// Integer vector in the simple-root basis.
struct RootVector {
    std::vector<long long> coords;
    long long height() const {
        long long h = 0;
        for (long long c : coords) h += c;
        return h;
    }
    bool operator==(const RootVector& o) const { return coords == o.coords; }
};

/// Finite-type root datum: Cartan matrix A with A_ij = <alpha_j, alpha_i^vee>
/// together with the minimal positive symmetrizers d_i (d_i A_ij = d_j A_ji,
/// normalized so short simple roots have squared length 2).
struct CartanDatum {
    std::string label;
    std::vector<std::vector<long long>> cartan;
    std::vector<long long> sym;

    int rank() const { return static_cast<int>(cartan.size()); }

    /// Classical series datum, e.g. of_type('A', 2), of_type('G', 2).
    /// Covers A, B (rank >= 2), C (rank >= 2), D (rank >= 4), G2, F4.
    static CartanDatum of_type(char series, int rank);
    static CartanDatum of_label(const std::string& label); // "B2", "G2", ...

    /// Datum from an explicit Cartan matrix; validates the generalized Cartan
    /// conditions, computes symmetrizers, and rejects non-finite type.
    static CartanDatum from_cartan(std::vector<std::vector<long long>> a,
                                   std::string label = "custom");
};

/// Word in the simple reflections; sign() = (-1)^(reduced length).
struct WeylWord {
    std::vector<int> letters;
    int length = 0; // reduced length of the group element
    int sign() const { return length % 2 == 0 ? 1 : -1; }
};

// --- coordinate conversions -------------------------------------------------

Weight rho(const CartanDatum& d);
Weight root_to_weight(const CartanDatum& d, const RootVector& r); // nu = A c
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);

struct RootCoords {
    std::vector<Rational> coords;
    bool integral = false;            // all entries integers
    bool nonneg_integral = false;     // integral with all entries >= 0
    std::vector<long long> int_coords; // populated when integral
};

/// Exact rational solve of A c = mu; never fails for finite type.
RootCoords weight_to_root_coords(const CartanDatum& d, const Weight& mu);

/// mu(2 rho^vee) = 2 * (sum of root coordinates of mu). Rejects weights
/// outside the root lattice.
long long pairing_two_rho_check(const CartanDatum& d, const Weight& mu);

// --- Weyl group --------------------------------------------------------------

Weight simple_reflection(const CartanDatum& d, int i, const Weight& mu);

/// w(lambda + rho) - rho, letters applied right to left.
Weight dot_action(const CartanDatum& d, const WeylWord& w, const Weight& lambda);

/// Pushes mu + rho to the dominant chamber; sign is (-1)^(#reflections used),
/// 0 exactly when mu + rho lies on a wall.
std::pair<Weight, int> to_dominant_signed(const CartanDatum& d, const Weight& mu);

/// Plain (unshifted) dominant representative of the W-orbit of mu.
Weight to_dominant(const CartanDatum& d, const Weight& mu);

/// Every group element exactly once (BFS over reduced words, dedup by the
/// action on rho), identity first, by increasing length.
std::vector<WeylWord> weyl_group_elements(const CartanDatum& d);

/// Full W-orbit of a weight.
std::vector<Weight> weyl_orbit(const CartanDatum& d, const Weight& mu);

// --- roots -------------------------------------------------------------------

/// All positive roots, sorted by height then lexicographically.
std::vector<RootVector> positive_roots(const CartanDatum& d);

bool is_dominant(const Weight& mu);

/// (mu, alpha) for a root-lattice vector alpha given in root coordinates,
/// in the normalization where short roots have squared length 2.
long long ip_weight_root(const CartanDatum& d, const Weight& mu, const RootVector& alpha);

/// (alpha, beta) for two root-lattice vectors.
long long ip_root_root(const CartanDatum& d, const RootVector& a, const RootVector& b);

/// Weyl dimension formula, exact.
long long weyl_dimension(const CartanDatum& d, const Weight& lambda);

} // namespace satake
