#include "effa/matrix.hpp"

#include "effa/error.hpp"

#include <sstream>

namespace effa {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<RVec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw InterfaceError("ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

RVec Matrix::row(std::size_t r) const {
    return RVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RVec Matrix::col(std::size_t c) const {
    RVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
        throw InterfaceError("matrix dimension mismatch in product");
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (!b(k, j).is_zero()) {
                    out(i, j) += x * b(k, j);
                }
            }
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw InterfaceError("matrix dimension mismatch in sum");
    }
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out = a;
    for (auto& x : out.data_) {
        x *= s;
    }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) {
            os << (c ? ", " : "") << (*this)(r, c);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

RVec operator*(const RVec& v, const Matrix& m) {
    if (v.size() != m.rows()) {
        throw InterfaceError("vector/matrix dimension mismatch");
    }
    RVec out(m.cols());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_zero()) {
                out[j] += v[i] * m(i, j);
            }
        }
    }
    return out;
}

RVec operator*(const Matrix& m, const RVec& v) {
    if (v.size() != m.cols()) {
        throw InterfaceError("matrix/vector dimension mismatch");
    }
    RVec out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (!v[j].is_zero() && !m(i, j).is_zero()) {
                out[i] += m(i, j) * v[j];
            }
        }
    }
    return out;
}

Rational dot(const RVec& a, const RVec& b) {
    if (a.size() != b.size()) {
        throw InterfaceError("dot product dimension mismatch");
    }
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s += a[i] * b[i];
        }
    }
    return s;
}

std::size_t rank(Matrix m) {
    RowBasis basis(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        basis.add(m.row(r));
    }
    return basis.size();
}

RVec RowBasis::reduce(RVec v, RVec* coeffs) const {
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
        const std::size_t p = pivots_[i];
        if (v[p].is_zero()) {
            continue;
        }
        // echelon rows have a unit pivot
        const Rational f = v[p];
        for (std::size_t c = 0; c < dim_; ++c) {
            if (!echelon_[i][c].is_zero()) {
                v[c] -= f * echelon_[i][c];
            }
        }
        if (coeffs) {
            for (std::size_t k = 0; k < coeffs->size(); ++k) {
                if (!combos_[i][k].is_zero()) {
                    (*coeffs)[k] += f * combos_[i][k];
                }
            }
        }
    }
    return v;
}

bool RowBasis::add(const RVec& v) {
    if (v.size() != dim_) {
        throw InterfaceError("vector dimension does not match basis");
    }
    RVec coeffs(originals_.size());
    RVec r = reduce(v, &coeffs);
    std::size_t p = 0;
    while (p < dim_ && r[p].is_zero()) {
        ++p;
    }
    if (p == dim_) {
        return false;
    }
    // r = v - sum coeffs_k * orig_k, so the new row's combination is e_new - coeffs
    RVec combo(originals_.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        combo[k] = -coeffs[k];
    }
    combo.back() = Rational(1);
    const Rational inv = Rational(1) / r[p];
    for (auto& x : r) {
        x *= inv;
    }
    for (auto& x : combo) {
        x *= inv;
    }
    // eliminate the new pivot from existing rows to keep the echelon reduced
    for (std::size_t i = 0; i < echelon_.size(); ++i) {
        combos_[i].emplace_back();
        const Rational f = echelon_[i][p];
        if (f.is_zero()) {
            continue;
        }
        for (std::size_t c = 0; c < dim_; ++c) {
            if (!r[c].is_zero()) {
                echelon_[i][c] -= f * r[c];
            }
        }
        for (std::size_t k = 0; k < combo.size(); ++k) {
            if (!combo[k].is_zero()) {
                combos_[i][k] -= f * combo[k];
            }
        }
    }
    echelon_.push_back(std::move(r));
    pivots_.push_back(p);
    combos_.push_back(std::move(combo));
    originals_.push_back(v);
    return true;
}

bool RowBasis::contains(const RVec& v) const {
    const RVec r = reduce(v, nullptr);
    for (const auto& x : r) {
        if (!x.is_zero()) {
            return false;
        }
    }
    return true;
}

std::optional<RVec> RowBasis::coordinates(const RVec& v) const {
    RVec coeffs(originals_.size());
    const RVec r = reduce(v, &coeffs);
    for (const auto& x : r) {
        if (!x.is_zero()) {
            return std::nullopt;
        }
    }
    return coeffs;
}

std::optional<RVec> solve_linear(const Matrix& a, const RVec& b) {
    if (b.size() != a.rows()) {
        throw InterfaceError("right-hand side dimension mismatch");
    }
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    // augmented Gauss-Jordan
    Matrix aug(m, n + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            aug(r, c) = a(r, c);
        }
        aug(r, n) = b[r];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < m; ++c) {
        std::size_t p = row;
        while (p < m && aug(p, c).is_zero()) {
            ++p;
        }
        if (p == m) {
            continue;
        }
        if (p != row) {
            for (std::size_t k = 0; k <= n; ++k) {
                std::swap(aug(p, k), aug(row, k));
            }
        }
        const Rational inv = Rational(1) / aug(row, c);
        for (std::size_t k = 0; k <= n; ++k) {
            aug(row, k) *= inv;
        }
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || aug(r, c).is_zero()) {
                continue;
            }
            const Rational f = aug(r, c);
            for (std::size_t k = 0; k <= n; ++k) {
                if (!aug(row, k).is_zero()) {
                    aug(r, k) -= f * aug(row, k);
                }
            }
        }
        pivot_col.push_back(c);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r) {
        if (!aug(r, n).is_zero()) {
            return std::nullopt;
        }
    }
    RVec x(n);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
        x[pivot_col[r]] = aug(r, n);
    }
    return x;
}

} // namespace effa
