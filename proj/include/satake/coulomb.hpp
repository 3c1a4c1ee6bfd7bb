#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satake/qpoly.hpp"
#include "satake/rational.hpp"

namespace satake {

/// Framed quiver gauge theory data: gauge group prod_i GL(v_i), matter
/// (+) Hom(V_out, V_in) over edges (+) Hom(W_i, V_i) over vertices.
struct QuiverGaugeDatum {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> edges; // (out, in) indices into vertices
    std::vector<long long> v;
    std::vector<long long> w;

    int size() const { return static_cast<int>(vertices.size()); }
    long long gauge_rank() const;
    long long matter_dimension() const;
    void validate() const;
};

/// Dominant coweight of the gauge group: one non-increasing integer tuple of
/// length v_i per vertex.
struct MagneticCharge {
    std::vector<std::vector<long long>> m;
    void validate(const QuiverGaugeDatum& d) const;
};

/// Highest weight / weight pair read off the dimension vectors, in
/// fundamental-weight coordinates indexed by the quiver vertices.
struct QuiverWeights {
    bool has_cartan = false; // quiver shape matched a finite or affine Cartan datum
    bool affine = false;
    std::vector<long long> lambda; // lambda_i = w_i
    std::vector<long long> mu;     // mu = lambda - C v, C = 2I - adjacency
    long long delta_drop = 0;      // affine shapes: delta-degree of lambda - mu
};

QuiverWeights weights_from_dims(const QuiverGaugeDatum& d);

/// Monopole dimension 2*Delta(m) (kept doubled so it stays integral):
/// sum over edges and framings of |pairings| minus twice the vector-multiplet
/// contribution within each vertex.
long long monopole_delta_doubled(const QuiverGaugeDatum& d, const MagneticCharge& m);
Rational monopole_delta(const QuiverGaugeDatum& d, const MagneticCharge& m);

/// Raised when the charge enumeration cannot certify that all omitted charges
/// sit above the requested truncation order. Carries the offending direction.
class TruncationRefusal : public std::runtime_error {
public:
    TruncationRefusal(const std::string& msg, std::vector<std::vector<long long>> dir)
        : std::runtime_error(msg), direction(std::move(dir)) {}
    std::vector<std::vector<long long>> direction;
};

/// Graded dimension of the Coulomb-branch coordinate ring up to t-order
/// max_t, returned as a series in q with t = q^2 (half-integer dimensions
/// land on odd q-powers). Certified truncation: every omitted charge provably
/// has Delta above max_t, otherwise TruncationRefusal is thrown.
QSeries monopole_hilbert_series(const QuiverGaugeDatum& d, int max_t);

/// Hilbert series of the invariants of (Z/ell)^k x| S_k acting on C^{2k}
/// (the k-th symmetric power of the C^2/(Z/ell) orbifold), up to t-order
/// max_t, as a series in q with t = q^2.
QSeries sym_power_orbifold_series(long long ell, long long k, int max_t);

} // namespace satake
