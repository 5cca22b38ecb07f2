#include "edslrs/linalg.hpp"

#include "edslrs/error.hpp"

#include <utility>

namespace edslrs {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    require(a.cols == b.rows, "matrix product: shape mismatch");
    RatMatrix r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Rat& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
        }
    }
    return r;
}

Int det_bareiss(std::vector<std::vector<Int>> m) {
    const std::size_t n = m.size();
    if (n == 0) return Int(1);
    Int sign(1);
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

/// In-place RREF; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
        std::size_t sel = row;
        while (sel < a.rows && a(sel, col) == 0) ++sel;
        if (sel == a.rows) continue;
        if (sel != row) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a(sel, j), a(row, j));
        }
        Rat piv = a(row, col);
        for (std::size_t j = 0; j < a.cols; ++j) a(row, j) /= piv;
        for (std::size_t i = 0; i < a.rows; ++i) {
            if (i == row || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < a.cols; ++j) a(i, j) -= f * a(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a) {
    RatMatrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(m.cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RatMatrix& a) {
    RatMatrix m = a;
    return rref(m).size();
}

std::vector<Rat> charpoly(const RatMatrix& a) {
    require(a.rows == a.cols, "charpoly: matrix must be square");
    const std::size_t n = a.rows;
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    std::vector<Rat> c(n + 1);
    c[n] = 1;
    RatMatrix mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix next = a * mk;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        mk = std::move(next);
        RatMatrix am = a * mk;
        Rat tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<unsigned long>(k);
    }
    return c;
}

}  // namespace edslrs
