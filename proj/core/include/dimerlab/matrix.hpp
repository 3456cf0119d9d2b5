#pragma once

#include <cstdint>
#include <vector>

#include "dimerlab/error.hpp"
#include "dimerlab/laurent.hpp"

namespace dimerlab {

template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    T& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    const T& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    bool square() const { return rows == cols; }
};

// Fraction-free Bareiss elimination over the Laurent ring: every division is
// an exact polynomial division by the previous pivot, so no rational-function
// intermediates appear. Pivot column: fewest total terms in the remaining
// block, ties by index; pivot row: first nonzero.
template <class K>
LaurentPolynomial<K> fraction_free_determinant(Mat<LaurentPolynomial<K>> m) {
    using Poly = LaurentPolynomial<K>;
    if (!m.square()) throw Error("NonSquare", "determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return Poly::constant(K(1));
    bool negate = false;
    Poly prev = Poly::constant(K(1));
    for (int k = 0; k + 1 < n; ++k) {
        int best_col = -1;
        std::size_t best_terms = 0;
        for (int j = k; j < n; ++j) {
            std::size_t t = 0;
            for (int i = k; i < n; ++i) t += m.at(i, j).term_count();
            if (best_col < 0 || t < best_terms) {
                best_col = j;
                best_terms = t;
            }
        }
        if (best_terms == 0) return Poly();  // zero column in the minor
        int pivot_row = -1;
        for (int i = k; i < n; ++i)
            if (!m.at(i, best_col).is_zero()) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) return Poly();
        if (best_col != k) {
            for (int i = 0; i < n; ++i) std::swap(m.at(i, best_col), m.at(i, k));
            negate = !negate;
        }
        if (pivot_row != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot_row, j), m.at(k, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = num.is_zero() ? Poly() : Poly::exact_div(std::move(num), prev);
            }
            m.at(i, k) = Poly();
        }
        prev = m.at(k, k);
        if (prev.is_zero()) return Poly();
    }
    Poly d = m.at(n - 1, n - 1);
    return negate ? -d : d;
}

// Division-free determinant by row expansion with memoized column subsets.
// Used where coefficients may not support exact division (jets whose values
// can vanish); agrees with fraction_free_determinant over the rationals.
template <class T>
T determinant_by_expansion(const Mat<T>& m) {
    if (!m.square()) throw Error("NonSquare", "determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return T(1);
    if (n > 20) throw Error("TooLarge", "expansion determinant limited to 20x20");
    std::vector<T> memo(std::size_t(1) << n);
    std::vector<bool> have(std::size_t(1) << n, false);
    // D(r, mask) over rows r..n-1 and the column set `mask`.
    auto rec = [&](auto&& self, int r, std::uint32_t mask) -> T {
        if (r == n) return T(1);
        if (have[mask]) return memo[mask];
        T acc;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            const T& entry = m.at(r, j);
            if (!entry.is_zero()) {
                T sub = entry * self(self, r + 1, mask & ~(1u << j));
                acc += (pos % 2 == 0) ? sub : -sub;
            }
            ++pos;
        }
        have[mask] = true;
        memo[mask] = acc;
        return acc;
    };
    return rec(rec, 0, (1u << n) - 1u);
}

// Rank of a rational matrix by exact Gaussian elimination.
int rational_rank(Mat<Rat> m);

}  // namespace dimerlab
