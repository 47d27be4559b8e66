#pragma once

#include <cstdint>
#include <vector>

#include "torusct/freq_box.hpp"

namespace torusct {

using IntVec = std::vector<std::int64_t>;
using IntMat = std::vector<IntVec>;

/// A rational d-plane A in Gr(d,n), stored as the unique Hermite normal
/// form basis of the saturated lattice span(A) ∩ Z^n. Uniqueness makes
/// equality of subspaces equality of matrices.
class Direction {
  public:
    int n() const { return n_; }
    int d() const { return d_; }
    const IntMat& basis() const { return basis_; }

    /// Largest |entry| of the basis; first component of the enumeration key.
    std::int64_t max_entry() const;

    bool operator==(const Direction& other) const {
        return n_ == other.n_ && d_ == other.d_ && basis_ == other.basis_;
    }
    bool operator!=(const Direction& other) const { return !(*this == other); }

    /// Enumeration order phi: (max |entry|, lexicographic flattened basis).
    bool operator<(const Direction& other) const;

  private:
    friend Direction canonicalize(const IntMat& vectors, int n);
    Direction(int n, int d, IntMat basis) : n_(n), d_(d), basis_(std::move(basis)) {}

    int n_;
    int d_;
    IntMat basis_;
};

/// Canonical representative of the rational subspace spanned by the given
/// independent integer vectors: HNF basis of the saturation of their
/// integer row span. Inputs spanning the same subspace give equal results.
/// Throws std::invalid_argument("not a d-plane") on rank-deficient input.
Direction canonicalize(const IntMat& vectors, int n);

/// k . v == 0 (exact) for every basis row v; k = 0 is orthogonal to all.
bool is_orthogonal(const FreqVec& k, const Direction& A);

/// Canonical Direction of the (n-1)-plane k^perp, k != 0.
Direction orthocomplement_basis(const FreqVec& k);

/// Height of a line P in Gr(1,n): l-infinity norm of the primitive
/// representative (the canonical basis row).
std::int64_t height(const Direction& P);

/// Completion of A's basis to a frame of R^n by standard basis vectors,
/// chosen greedily in increasing index order.
struct TransverseFrame {
    std::vector<int> axes;  ///< 0-based indices i with e_i in the frame, q = n-d of them
    std::int64_t det;       ///< |det| of the n x n matrix [basis rows; chosen axes], >= 1
};

TransverseFrame transverse_frame(const Direction& A);

} // namespace torusct
