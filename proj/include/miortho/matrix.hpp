#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "miortho/errors.hpp"
#include "miortho/poly.hpp"

namespace miortho {

/// Row-major matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

private:
    std::size_t rows_, cols_;
    std::vector<Poly> entries_;
};

/// Exact determinant over Q[eta] by fraction-free (Bareiss) elimination.
/// Every interior division is exact by the Sylvester identity, so no
/// rational-function pivots ever appear. det of the empty matrix is 1.
inline Poly poly_determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw validation_error("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly::one();

    PolyMatrix a = m;
    Poly prev = Poly::one();
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k).is_zero()) ++r;
            if (r == n) return Poly(); // whole column zero below the pivot
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Poly num = a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = exact_divide(num, prev);
            }
            a.at(i, k) = Poly();
        }
        prev = a.at(k, k);
    }
    Poly det = a.at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

} // namespace miortho
