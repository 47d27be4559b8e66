#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "torusct/errors.hpp"

namespace torusct {

/// Integer frequency vector k in Z^n.
using FreqVec = std::vector<int>;

/// ⟨k⟩ = (1 + |k|^2)^{1/2}.
inline double bracket(const FreqVec& k) {
    double q = 0.0;
    for (int ki : k) q += static_cast<double>(ki) * ki;
    return std::sqrt(1.0 + q);
}

/// The truncation box { k in Z^n : |k|_inf <= K }, enumerated
/// lexicographically on (k_1, ..., k_n). This enumeration order is
/// shared by every dense coefficient array and file format.
class FreqBox {
  public:
    FreqBox(int n, int K) : n_(n), K_(K) {
        if (n < 1) throw std::invalid_argument("FreqBox: dimension must be >= 1");
        if (K < 0) throw std::invalid_argument("FreqBox: band limit must be >= 0");
        size_ = 1;
        const std::size_t side = 2 * static_cast<std::size_t>(K) + 1;
        constexpr std::size_t max_size = std::size_t{1} << 31;
        for (int i = 0; i < n; ++i) {
            if (size_ > max_size / side)
                throw std::invalid_argument("FreqBox: (2K+1)^n exceeds the supported size");
            size_ *= side;
        }
    }

    int n() const { return n_; }
    int K() const { return K_; }
    std::size_t size() const { return size_; }
    int side() const { return 2 * K_ + 1; }

    bool contains(const FreqVec& k) const {
        if (static_cast<int>(k.size()) != n_) return false;
        for (int ki : k)
            if (ki < -K_ || ki > K_) return false;
        return true;
    }

    std::size_t index_of(const FreqVec& k) const {
        if (!contains(k)) throw std::invalid_argument("FreqBox: frequency outside box");
        std::size_t idx = 0;
        for (int i = 0; i < n_; ++i) idx = idx * side() + static_cast<std::size_t>(k[i] + K_);
        return idx;
    }

    FreqVec freq_at(std::size_t index) const {
        if (index >= size_) throw std::invalid_argument("FreqBox: index out of range");
        FreqVec k(static_cast<std::size_t>(n_));
        for (int i = n_ - 1; i >= 0; --i) {
            k[static_cast<std::size_t>(i)] = static_cast<int>(index % side()) - K_;
            index /= side();
        }
        return k;
    }

    bool operator==(const FreqBox& other) const { return n_ == other.n_ && K_ == other.K_; }
    bool operator!=(const FreqBox& other) const { return !(*this == other); }

  private:
    int n_;
    int K_;
    std::size_t size_;
};

} // namespace torusct
