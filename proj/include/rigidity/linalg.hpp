#pragma once

#include <cstddef>
#include <vector>

#include "rigidity/matrix.hpp"

namespace rigidity {

// Exact rank over Q (fraction-free Bareiss elimination on an integer-scaled
// copy; no floating point anywhere).
std::size_t rank(const RationalMatrix& m);

// Exact determinant. Throws DimensionError if m is not square.
Rational determinant(const RationalMatrix& m);

// Basis of the right kernel { x : m x = 0 }. Vectors are scaled to coprime
// integers with positive leading entry, listed by ascending free column.
// Every returned vector is re-multiplied against m and checked to be zero.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

RationalMatrix submatrix(const RationalMatrix& m, const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx);

struct PivotSubmatrix {
    std::vector<std::size_t> rows;  // ascending
    std::vector<std::size_t> cols;  // ascending
};

// Index sets I, J with |I| = |J| = r and det(m[I,J]) != 0 (the pivot rows and
// columns of the elimination). Throws RankDeficiencyError when rank(m) < r.
PivotSubmatrix find_nonsingular_submatrix(const RationalMatrix& m, std::size_t r);

namespace detail {

// Integer rows plus per-row scale factors: int_rows[i] = scale_i * m_row_i
// with scale_i a positive rational. Row scaling preserves rank and kernel;
// determinant bookkeeping divides the factors back out.
struct ScaledRows {
    std::vector<std::vector<Int>> rows;
    std::vector<Rational> scales;  // positive
    std::size_t cols = 0;
};

ScaledRows scale_to_integers(const RationalMatrix& m);

// Fraction-free row echelon form of an integer matrix.
struct Echelon {
    std::vector<std::vector<Int>> rows;     // echelon rows, pivots first
    std::vector<std::size_t> pivot_cols;    // ascending
    std::vector<std::size_t> pivot_rows;    // original row index per pivot, in pivot order
    std::size_t rank = 0;
    int sign = 1;                           // row-swap parity
    Int last_pivot = 1;                     // det of the rank x rank pivot minor
};

// `max_rank` caps the elimination: stop once that many pivots are found
// (callers that only test "rank >= target" use this).
Echelon bareiss_echelon(std::vector<std::vector<Int>> rows, std::size_t cols,
                        std::size_t max_rank = SIZE_MAX);

// Kernel basis of the integer matrix given by its echelon form, as primitive
// integer vectors (coprime entries, positive leading entry).
std::vector<std::vector<Int>> kernel_from_echelon(const Echelon& e, std::size_t cols);

}  // namespace detail

}  // namespace rigidity
