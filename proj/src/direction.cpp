#include "torusct/direction.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <limits>

namespace torusct {

namespace {

using bigint = boost::multiprecision::cpp_int;
using BigRow = std::vector<bigint>;
using BigMat = std::vector<BigRow>;

BigMat to_big(const IntMat& m) {
    BigMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        out[i].assign(m[i].begin(), m[i].end());
    return out;
}

IntMat from_big(const BigMat& m) {
    IntMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const bigint& v : m[i]) {
            if (v < std::numeric_limits<std::int64_t>::min() ||
                v > std::numeric_limits<std::int64_t>::max())
                throw std::overflow_error("direction basis entry exceeds 64 bits");
            out[i].push_back(static_cast<std::int64_t>(v));
        }
    }
    return out;
}

// floor division for bigint (truncates toward -inf)
bigint floor_div(const bigint& a, const bigint& b) {
    bigint q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// In-place row Hermite normal form: echelon, positive pivots, entries
// above each pivot reduced into [0, pivot). Zero rows collect at the
// bottom; the rank is returned. When `transform` is non-null it must
// start as the identity and receives the same row operations, so rows of
// *transform matching zero rows of the result span the left kernel lattice.
std::size_t row_hnf(BigMat& m, BigMat* transform) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    auto row_op = [&](auto&& f) { f(m); if (transform) f(*transform); };

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-eliminate column c below row r until one nonzero entry remains
        for (;;) {
            std::size_t nonzero = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (m[i][c] != 0 && (nonzero == rows || abs(m[i][c]) < abs(m[nonzero][c])))
                    nonzero = i;
            if (nonzero == rows) break; // column all zero below r
            bool reduced_any = false;
            for (std::size_t i = r; i < rows; ++i) {
                if (i == nonzero || m[i][c] == 0) continue;
                const bigint q = floor_div(m[i][c], m[nonzero][c]);
                row_op([&](BigMat& a) {
                    for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[nonzero][j];
                });
                reduced_any = true;
            }
            if (!reduced_any) {
                // single nonzero entry in the column: make it the pivot row
                if (nonzero != r)
                    row_op([&](BigMat& a) { std::swap(a[r], a[nonzero]); });
                if (m[r][c] < 0)
                    row_op([&](BigMat& a) {
                        for (auto& v : a[r]) v = -v;
                    });
                // reduce entries above the pivot into [0, pivot)
                for (std::size_t i = 0; i < r; ++i) {
                    const bigint q = floor_div(m[i][c], m[r][c]);
                    if (q == 0) continue;
                    row_op([&](BigMat& a) {
                        for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= q * a[r][j];
                    });
                }
                ++r;
                break;
            }
        }
    }
    return r;
}

// basis of the lattice { x in Z^rows(M) : x M = 0 } (left kernel), which
// is automatically saturated because the transform is unimodular
BigMat left_kernel(const BigMat& m) {
    const std::size_t rows = m.size();
    BigMat work = m;
    BigMat u(rows, BigRow(rows, 0));
    for (std::size_t i = 0; i < rows; ++i) u[i][i] = 1;
    const std::size_t rank = row_hnf(work, &u);
    BigMat kernel;
    for (std::size_t i = rank; i < rows; ++i) kernel.push_back(u[i]);
    return kernel;
}

BigMat transpose(const BigMat& m, std::size_t cols) {
    BigMat out(cols, BigRow(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) out[j][i] = m[i][j];
    return out;
}

// { x in Z^n : M x = 0 } for an m x n matrix acting on column vectors
BigMat integer_kernel(const BigMat& m, std::size_t n) {
    return left_kernel(transpose(m, n));
}

// |det| of a square matrix, fraction-free Bareiss elimination
bigint abs_det(BigMat m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    bigint prev = 1;
    bool negate = false;
    for (std::size_t c = 0; c < n - 1; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i)
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
        prev = m[c][c];
    }
    bigint det = m[n - 1][n - 1];
    if (negate) det = -det;
    return abs(det);
}

} // namespace

std::int64_t Direction::max_entry() const {
    std::int64_t m = 0;
    for (const auto& row : basis_)
        for (std::int64_t v : row) m = std::max(m, v < 0 ? -v : v);
    return m;
}

bool Direction::operator<(const Direction& other) const {
    const std::int64_t a = max_entry(), b = other.max_entry();
    if (a != b) return a < b;
    return basis_ < other.basis_;
}

Direction canonicalize(const IntMat& vectors, int n) {
    const int d = static_cast<int>(vectors.size());
    if (d < 1 || d >= n) throw std::invalid_argument("not a d-plane");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("canonicalize: vector length != n");

    BigMat m = to_big(vectors);
    {
        BigMat rank_probe = m;
        if (row_hnf(rank_probe, nullptr) != static_cast<std::size_t>(d))
            throw std::invalid_argument("not a d-plane");
    }
    // saturation = kernel of the kernel; the outer kernel of an integer
    // matrix is saturated, so its kernel is the saturated row span
    BigMat complement = integer_kernel(m, static_cast<std::size_t>(n));
    BigMat saturated = integer_kernel(complement, static_cast<std::size_t>(n));
    row_hnf(saturated, nullptr);
    return Direction(n, d, from_big(saturated));
}

bool is_orthogonal(const FreqVec& k, const Direction& A) {
    if (static_cast<int>(k.size()) != A.n())
        throw std::invalid_argument("is_orthogonal: dimension mismatch");
    for (const auto& row : A.basis()) {
        bigint dot = 0;
        for (int i = 0; i < A.n(); ++i) dot += bigint(row[i]) * k[i];
        if (dot != 0) return false;
    }
    return true;
}

Direction orthocomplement_basis(const FreqVec& k) {
    const int n = static_cast<int>(k.size());
    bool zero = true;
    for (int ki : k) zero = zero && ki == 0;
    if (zero)
        throw std::invalid_argument("orthocomplement_basis: k = 0 is orthogonal to every plane");
    BigMat m(1, BigRow(k.begin(), k.end()));
    BigMat kernel = integer_kernel(m, static_cast<std::size_t>(n));
    return canonicalize(from_big(kernel), n);
}

std::int64_t height(const Direction& P) {
    if (P.d() != 1) throw std::invalid_argument("height: defined for lines (d = 1) only");
    return P.max_entry();
}

TransverseFrame transverse_frame(const Direction& A) {
    const int n = A.n();
    const int q = n - A.d();
    BigMat rows = to_big(A.basis());
    TransverseFrame frame;
    for (int i = 0; i < n && static_cast<int>(frame.axes.size()) < q; ++i) {
        BigMat probe = rows;
        BigRow e(n, 0);
        e[i] = 1;
        probe.push_back(e);
        if (row_hnf(probe, nullptr) == rows.size() + 1) {
            rows.push_back(std::move(e));
            frame.axes.push_back(i);
        }
    }
    const bigint det = abs_det(rows);
    if (det > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("transverse_frame: determinant exceeds 64 bits");
    frame.det = static_cast<std::int64_t>(det);
    return frame;
}

} // namespace torusct
