#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "rigidity/errors.hpp"
#include "rigidity/rational.hpp"

namespace rigidity {

// Dense exact-rational matrix, row major. Entries stay canonical because all
// mutation paths go through Rational arithmetic or make_rational.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    // Convenience for tests: rows of integers.
    RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw DimensionError("ragged initializer");
            for (long v : r) data_.emplace_back(v);
        }
    }

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) {
        check(i, j);
        return data_[i * cols_ + j];
    }
    const Rational& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return data_[i * cols_ + j];
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& e : data_)
            if (e != 0) return false;
        return true;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    RationalMatrix transposed() const {
        RationalMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    RationalMatrix operator+(const RationalMatrix& o) const {
        require_same_shape(o);
        RationalMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] + o.data_[k];
        return r;
    }

    RationalMatrix operator-(const RationalMatrix& o) const {
        require_same_shape(o);
        RationalMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] - o.data_[k];
        return r;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = at(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    RationalMatrix scaled(const Rational& s) const {
        RationalMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k] * s;
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += rigidity::to_string(at(i, j));
            }
            s += "]\n";
        }
        return s;
    }

private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    }
    void require_same_shape(const RationalMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace rigidity
