#include "rigidity/linalg.hpp"

#include <algorithm>

#include "rigidity/errors.hpp"

namespace rigidity {

namespace detail {

ScaledRows scale_to_integers(const RationalMatrix& m) {
    ScaledRows out;
    out.cols = m.cols();
    out.rows.reserve(m.rows());
    out.scales.reserve(m.rows());
    Int lcm, g, tmp;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        std::vector<Int> row(m.cols());
        g = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m.at(i, j);
            // lcm is a multiple of every denominator, so this is exact.
            mpz_divexact(tmp.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
            row[j] = q.get_num() * tmp;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
        }
        if (g > 1) {
            for (auto& e : row) mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
        }
        if (g == 0) g = 1;  // all-zero row
        out.rows.push_back(std::move(row));
        out.scales.push_back(make_rational(lcm, g));
    }
    return out;
}

Echelon bareiss_echelon(std::vector<std::vector<Int>> rows, std::size_t cols,
                        std::size_t max_rank) {
    Echelon e;
    const std::size_t nrows = rows.size();
    std::vector<std::size_t> origin(nrows);
    for (std::size_t i = 0; i < nrows; ++i) origin[i] = i;

    Int prev = 1, t1, t2;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < nrows && e.rank < max_rank; ++col) {
        std::size_t piv = lead;
        while (piv < nrows && rows[piv][col] == 0) ++piv;
        if (piv == nrows) continue;
        if (piv != lead) {
            std::swap(rows[piv], rows[lead]);
            std::swap(origin[piv], origin[lead]);
            e.sign = -e.sign;
        }
        const Int& p = rows[lead][col];
        for (std::size_t i = lead + 1; i < nrows; ++i) {
            // Every row below gets the two-term update, including rows whose
            // leading entry is already zero: the division by the previous
            // pivot is only exact if the invariant is maintained everywhere.
            const Int mult = rows[i][col];
            for (std::size_t j = col + 1; j < cols; ++j) {
                // rows[i][j] = (p * rows[i][j] - mult * rows[lead][j]) / prev
                mpz_mul(t1.get_mpz_t(), p.get_mpz_t(), rows[i][j].get_mpz_t());
                if (mult != 0) {
                    mpz_mul(t2.get_mpz_t(), mult.get_mpz_t(), rows[lead][j].get_mpz_t());
                    mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
                }
                mpz_divexact(rows[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][col] = 0;
        }
        e.pivot_cols.push_back(col);
        e.pivot_rows.push_back(origin[lead]);
        prev = p;
        ++lead;
        ++e.rank;
    }
    e.last_pivot = prev;
    e.rows = std::move(rows);
    return e;
}

std::vector<std::vector<Int>> kernel_from_echelon(const Echelon& e, std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Int>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = 1;
        for (std::size_t k = e.rank; k-- > 0;) {
            const auto& row = e.rows[k];
            const std::size_t pc = e.pivot_cols[k];
            Rational acc(0);
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (j != f && !is_pivot[j]) continue;  // other free vars are zero
                if (row[j] != 0 && x[j] != 0) acc += Rational(row[j]) * x[j];
            }
            x[pc] = -acc / Rational(row[pc]);
        }
        // Scale to a primitive integer vector with positive leading entry.
        Int lcm = 1;
        for (const auto& q : x) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Int> v(cols);
        Int g = 0, tmp;
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_divexact(tmp.get_mpz_t(), lcm.get_mpz_t(), x[j].get_den().get_mpz_t());
            v[j] = x[j].get_num() * tmp;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
        }
        if (g > 1)
            for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (const auto& c : v) {
            if (c == 0) continue;
            if (c < 0)
                for (auto& w : v) w = -w;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    auto scaled = detail::scale_to_integers(m);
    return detail::bareiss_echelon(std::move(scaled.rows), scaled.cols).rank;
}

Rational determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);
    auto scaled = detail::scale_to_integers(m);
    auto ech = detail::bareiss_echelon(std::move(scaled.rows), scaled.cols);
    if (ech.rank < n) return Rational(0);
    Rational det(ech.last_pivot);
    if (ech.sign < 0) det = -det;
    for (const auto& s : scaled.scales) det /= s;
    return det;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<Int>> kernel;
    if (m.rows() == 0) {
        // Kernel of the empty map is everything.
        kernel.resize(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            kernel[j].assign(cols, Int(0));
            kernel[j][j] = 1;
        }
    } else {
        auto scaled = detail::scale_to_integers(m);
        auto ech = detail::bareiss_echelon(std::move(scaled.rows), scaled.cols);
        kernel = detail::kernel_from_echelon(ech, cols);
    }
    std::vector<std::vector<Rational>> out;
    out.reserve(kernel.size());
    for (auto& v : kernel) {
        std::vector<Rational> q(cols);
        for (std::size_t j = 0; j < cols; ++j) q[j] = Rational(v[j]);
        // Exact re-multiplication check.
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < cols; ++j)
                if (q[j] != 0) acc += m.at(i, j) * q[j];
            if (acc != 0) throw InternalError("nullspace vector fails m*v = 0");
        }
        out.push_back(std::move(q));
    }
    return out;
}

RationalMatrix submatrix(const RationalMatrix& m, const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) {
    for (std::size_t i : row_idx)
        if (i >= m.rows()) throw std::out_of_range("submatrix row index out of range");
    for (std::size_t j : col_idx)
        if (j >= m.cols()) throw std::out_of_range("submatrix column index out of range");
    RationalMatrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(i, j) = m.at(row_idx[i], col_idx[j]);
    return s;
}

PivotSubmatrix find_nonsingular_submatrix(const RationalMatrix& m, std::size_t r) {
    auto scaled = detail::scale_to_integers(m);
    auto ech = detail::bareiss_echelon(std::move(scaled.rows), scaled.cols, r);
    if (ech.rank < r)
        throw RankDeficiencyError("matrix rank " + std::to_string(ech.rank) +
                                  " below requested " + std::to_string(r));
    PivotSubmatrix p;
    p.rows.assign(ech.pivot_rows.begin(), ech.pivot_rows.begin() + r);
    p.cols.assign(ech.pivot_cols.begin(), ech.pivot_cols.begin() + r);
    std::sort(p.rows.begin(), p.rows.end());
    std::sort(p.cols.begin(), p.cols.end());
    if (determinant(submatrix(m, p.rows, p.cols)) == 0)
        throw InternalError("pivot submatrix unexpectedly singular");
    return p;
}

}  // namespace rigidity
