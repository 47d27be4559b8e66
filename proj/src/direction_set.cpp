#include "torusct/direction_set.hpp"

#include <algorithm>
#include <numeric>

namespace torusct {

DirectionSet::DirectionSet(int n, int d, std::vector<Direction> directions)
    : n_(n), d_(d), directions_(std::move(directions)) {
    if (d < 1 || d >= n) throw std::invalid_argument("DirectionSet: need 1 <= d <= n-1");
    for (const auto& dir : directions_)
        if (dir.n() != n || dir.d() != d)
            throw std::invalid_argument("DirectionSet: member with mismatched (n, d)");
    std::sort(directions_.begin(), directions_.end());
    directions_.erase(std::unique(directions_.begin(), directions_.end()), directions_.end());
}

std::optional<std::size_t> DirectionSet::index_of(const Direction& A) const {
    const auto it = std::lower_bound(directions_.begin(), directions_.end(), A);
    if (it != directions_.end() && *it == A)
        return static_cast<std::size_t>(it - directions_.begin());
    return std::nullopt;
}

std::vector<Direction> omega_k(const FreqVec& k, const DirectionSet& D) {
    std::vector<Direction> out;
    for (const auto& A : D)
        if (is_orthogonal(k, A)) out.push_back(A);
    return out;
}

namespace {

bool is_primitive(const FreqVec& k) {
    std::int64_t g = 0;
    for (int ki : k) g = std::gcd(g, static_cast<std::int64_t>(ki < 0 ? -ki : ki));
    return g == 1;
}

// lexicographically ordered d-subsets of {0..m-1}, at most `count` of them
std::vector<std::vector<int>> first_subsets(int m, int d, int count) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(d);
    std::iota(pick.begin(), pick.end(), 0);
    while (static_cast<int>(out.size()) < count) {
        out.push_back(pick);
        // advance to next combination
        int i = d - 1;
        while (i >= 0 && pick[i] == m - d + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

DirectionSet covering_directions(int n, int d, const FreqBox& box, int extra) {
    if (d < 1 || d >= n) throw std::invalid_argument("covering_directions: need 1 <= d <= n-1");
    if (box.n() != n) throw std::invalid_argument("covering_directions: box dimension mismatch");
    if (extra < 1) throw std::invalid_argument("covering_directions: extra must be >= 1");

    std::vector<Direction> dirs;
    for (std::size_t i = 0; i < box.size(); ++i) {
        const FreqVec k = box.freq_at(i);
        if (!is_primitive(k)) continue;
        const Direction comp = orthocomplement_basis(k);
        if (d == n - 1) {
            dirs.push_back(comp);
        } else {
            for (const auto& pick : first_subsets(n - 1, d, extra)) {
                IntMat rows;
                for (int r : pick) rows.push_back(comp.basis()[r]);
                dirs.push_back(canonicalize(rows, n));
            }
        }
    }
    // k = 0 is orthogonal to everything, but a K = 0 box yields no
    // primitive frequencies at all; fall back to the leading axes plane.
    {
        IntMat axes(d, IntVec(n, 0));
        for (int i = 0; i < d; ++i) axes[i][i] = 1;
        if (d == n - 1 || dirs.empty()) dirs.push_back(canonicalize(axes, n));
    }
    return DirectionSet(n, d, std::move(dirs));
}

OrthoTable::OrthoTable(const FreqBox& box, const DirectionSet& D)
    : box_(box), dirs_(D), omega_(box.size()) {
    if (box.n() != D.n()) throw std::invalid_argument("OrthoTable: dimension mismatch");
    for (std::size_t i = 0; i < box_.size(); ++i) {
        const FreqVec k = box_.freq_at(i);
        for (std::size_t j = 0; j < dirs_.size(); ++j)
            if (is_orthogonal(k, dirs_[j])) omega_[i].push_back(static_cast<int>(j));
    }
}

int OrthoTable::rank_in_omega(std::size_t box_index, int dir_index) const {
    const auto& idx = omega_[box_index];
    const auto it = std::lower_bound(idx.begin(), idx.end(), dir_index);
    if (it != idx.end() && *it == dir_index) return static_cast<int>(it - idx.begin()) + 1;
    return 0;
}

} // namespace torusct
