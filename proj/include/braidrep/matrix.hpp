#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidrep/laurent.hpp"

namespace braidrep {

inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }

/// Dense square-or-rectangular matrix over a commutative ring.
///
/// Elements carry their ring (a LaurentPoly knows its variables), so the
/// matrix keeps a zero element to build results from.
template <class T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero_matrix() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    std::size_t nonzeros_in_column(std::size_t c) const {
        std::size_t count = 0;
        for (std::size_t r = 0; r < rows_; ++r)
            if (!is_zero((*this)(r, c))) ++count;
        return count;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_, f(zero_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (auto& x : out.data_)
            if (!is_zero(x)) x = s * x;
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const T& s, const Matrix& m) { return m.scaled(s); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix out(a.rows_, b.cols_, a.zero_);
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(r, k);
                if (is_zero(x)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    const T& y = b(k, c);
                    if (!is_zero(y)) out(r, c) += x * y;
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    T zero_;
    std::vector<T> data_;
};

using RingMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<mpq_class>;

RingMatrix ring_identity(std::size_t n, const VarList& vars);
RationalMatrix rational_identity(std::size_t n);

/// Entrywise ring homomorphism var -> value.
RingMatrix substitute(const RingMatrix& m, std::string_view var, const LaurentPoly& value);
RationalMatrix evaluate(const RingMatrix& m, const RationalPoint& pt);

/// Gauss-Jordan elimination restricted to unit pivots, so every step stays
/// inside the Laurent ring. Empty if some column has no unit pivot left.
std::optional<RingMatrix> invert_by_unit_pivots(const RingMatrix& m);

/// Adjugate from the characteristic polynomial (Faddeev-LeVerrier). Needs
/// only exact integer division and a unit determinant.
RingMatrix invert_by_characteristic_polynomial(const RingMatrix& m);

/// Exact inverse over the Laurent ring: unit-pivot elimination first, the
/// characteristic-polynomial adjugate otherwise. The result is checked
/// against M*X = X*M = I before it is returned.
RingMatrix inverse(const RingMatrix& m);

/// First (row, col) where two matrices disagree.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const RingMatrix& a,
                                                                    const RingMatrix& b);

/// Row-major array of term arrays; the variable list is stored once by the caller.
nlohmann::json to_json(const RingMatrix& m);
/// Row-major array of "p/r" strings.
nlohmann::json to_json(const RationalMatrix& m);
/// A pmatrix environment.
std::string to_latex(const RingMatrix& m);
std::string to_latex(const RationalMatrix& m);

}  // namespace braidrep
