#pragma once

#include "effa/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace effa {

using RVec = std::vector<Rational>;

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<RVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RVec row(std::size_t r) const;
    RVec col(std::size_t c) const;
    Matrix transpose() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string str() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Row vector times matrix.
RVec operator*(const RVec& v, const Matrix& m);
/// Matrix times column vector.
RVec operator*(const Matrix& m, const RVec& v);
Rational dot(const RVec& a, const RVec& b);

std::size_t rank(Matrix m);

/// Incrementally built basis of a row space, kept in reduced echelon form for
/// membership tests, plus the original vectors that were accepted.
class RowBasis {
public:
    explicit RowBasis(std::size_t dim) : dim_(dim) {}

    /// Adds `v` if it is independent of the current span; returns whether it was added.
    bool add(const RVec& v);
    bool contains(const RVec& v) const;
    /// Coordinates of `v` with respect to the accepted originals, if in the span.
    std::optional<RVec> coordinates(const RVec& v) const;

    std::size_t size() const { return originals_.size(); }
    const std::vector<RVec>& originals() const { return originals_; }

private:
    RVec reduce(RVec v, RVec* coeffs) const;

    std::size_t dim_;
    std::vector<RVec> originals_;
    // echelon rows, their pivot columns, and each row as a combination of originals
    std::vector<RVec> echelon_;
    std::vector<std::size_t> pivots_;
    std::vector<RVec> combos_;
};

/// Some solution of A x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
std::optional<RVec> solve_linear(const Matrix& a, const RVec& b);

} // namespace effa
