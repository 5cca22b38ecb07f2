#pragma once

#include "edslrs/bigint.hpp"

#include <cstddef>
#include <vector>

namespace edslrs {

/// Row-major dense matrix of exact rationals.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> data;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    Rat& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    static RatMatrix identity(std::size_t n);
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);

/// Determinant by fraction-free Bareiss elimination over Z.
Int det_bareiss(std::vector<std::vector<Int>> m);

/// Basis of the right kernel {v : A v = 0} via reduced row echelon form.
std::vector<std::vector<Rat>> kernel_basis(const RatMatrix& a);

/// Rank over Q.
std::size_t rank(const RatMatrix& a);

/// Characteristic polynomial det(X I - A), coefficients low-to-high (Faddeev-LeVerrier).
std::vector<Rat> charpoly(const RatMatrix& a);

}  // namespace edslrs
