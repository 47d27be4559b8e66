#pragma once

#include <optional>
#include <vector>

#include "torusct/direction.hpp"
#include "torusct/freq_box.hpp"

namespace torusct {

/// An ordered, duplicate-free set of d-planes sharing (n, d). The order is
/// the enumeration phi: sorted by (max |basis entry|, lexicographic
/// flattened basis). phi(A) is the 1-based position of A in the set.
class DirectionSet {
  public:
    DirectionSet(int n, int d, std::vector<Direction> directions);

    int n() const { return n_; }
    int d() const { return d_; }
    std::size_t size() const { return directions_.size(); }
    const Direction& operator[](std::size_t i) const { return directions_[i]; }
    const std::vector<Direction>& directions() const { return directions_; }

    auto begin() const { return directions_.begin(); }
    auto end() const { return directions_.end(); }

    /// 0-based index of A, or nullopt when A is not in the set.
    std::optional<std::size_t> index_of(const Direction& A) const;

    bool operator==(const DirectionSet& other) const {
        return n_ == other.n_ && d_ == other.d_ && directions_ == other.directions_;
    }

  private:
    int n_;
    int d_;
    std::vector<Direction> directions_;
};

/// All A in D with k orthogonal to A, in D's order. This order is the
/// enumeration phi_k restricted to D; possibly empty.
std::vector<Direction> omega_k(const FreqVec& k, const DirectionSet& D);

/// A direction set covering the box: every k with |k|_inf <= K has at
/// least one orthogonal member. For d = n-1 these are the
/// orthocomplements of the primitive box frequencies plus the plane of
/// the first n-1 axes; for d < n-1, the first d rows of each
/// orthocomplement, with `extra-1` further d-subsets of its rows when
/// requested.
DirectionSet covering_directions(int n, int d, const FreqBox& box, int extra = 1);

/// Precomputed orthogonality structure of box x D: per box index, the
/// 0-based indices of the directions in Omega_k (in D's order). Built
/// once, read-only afterwards.
class OrthoTable {
  public:
    OrthoTable(const FreqBox& box, const DirectionSet& D);

    const FreqBox& box() const { return box_; }
    const DirectionSet& dirs() const { return dirs_; }

    const std::vector<int>& omega_indices(std::size_t box_index) const {
        return omega_[box_index];
    }

    /// 1-based rank of direction index `dir_index` within Omega_k, i.e.
    /// phi_k(A) restricted to D; 0 when k is not orthogonal to A.
    int rank_in_omega(std::size_t box_index, int dir_index) const;

  private:
    FreqBox box_;
    DirectionSet dirs_;
    std::vector<std::vector<int>> omega_;
};

} // namespace torusct
