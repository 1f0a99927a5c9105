#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "sdpcert/bigfloat.hpp"
#include "sdpcert/errors.hpp"
#include "sdpcert/rational.hpp"

namespace sdpcert {

// Dense row-major matrix over BigFloat or Rational.  Symmetric matrices are
// kept symmetric through sym_set / symmetrize; nothing here exploits sparsity
// (problem sizes stay small, see the solver modules).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void sym_set(std::size_t i, std::size_t j, const T& v) {
        (*this)(i, j) = v;
        (*this)(j, i) = v;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

    // Average drifted off-diagonal pairs back to exact symmetry.
    void symmetrize() {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j) {
                T v = (*this)(i, j) + (*this)(j, i);
                v /= T(2);
                sym_set(i, j, v);
            }
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Matrix& operator+=(const Matrix& b) {
        require_same_shape(b);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& b) {
        require_same_shape(b);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }

    // this += s * b, fused per entry on the BigFloat path.
    void add_scaled(const T& s, const Matrix& b) {
        require_same_shape(b);
        for (std::size_t i = 0; i < a_.size(); ++i) {
            if constexpr (std::is_same_v<T, BigFloat>)
                a_[i].add_mul(s, b.a_[i]);
            else
                a_[i] += s * b.a_[i];
        }
    }

    T trace() const {
        T t(0);
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    T max_abs() const {
        T m(0);
        for (const auto& v : a_) {
            if constexpr (std::is_same_v<T, BigFloat>) {
                BigFloat av = abs(v);
                if (av > m) m = av;
            } else {
                Rational av = rat_abs(v);
                if (av > m) m = av;
            }
        }
        return m;
    }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw DimensionMismatch("matrix shapes differ");
    }

    std::size_t rows_, cols_;
    std::vector<T> a_;
};

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matmul");
    Matrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if constexpr (std::is_same_v<T, Rational>)
                if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if constexpr (std::is_same_v<T, BigFloat>)
                    r(i, j).add_mul(aik, b(k, j));
                else
                    r(i, j) += aik * b(k, j);
            }
        }
    return r;
}

// trace(A*B) for symmetric A, B without forming the product.
template <class T>
T trace_product(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square())
        throw DimensionMismatch("trace_product");
    T t(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if constexpr (std::is_same_v<T, BigFloat>)
                t.add_mul(a(i, j), b(j, i));
            else
                t += a(i, j) * b(j, i);
        }
    return t;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot");
    T t(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if constexpr (std::is_same_v<T, BigFloat>)
            t.add_mul(a[i], b[i]);
        else
            t += a[i] * b[i];
    }
    return t;
}

inline Matrix<BigFloat> to_float(const Matrix<Rational>& a, const PrecisionContext& ctx) {
    Matrix<BigFloat> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = BigFloat::from_rational(a(i, j), ctx);
    return r;
}

inline Matrix<Rational> to_rational(const Matrix<BigFloat>& a) {
    Matrix<Rational> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).to_rational();
    return r;
}

inline std::vector<BigFloat> to_float(const std::vector<Rational>& v, const PrecisionContext& ctx) {
    std::vector<BigFloat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = BigFloat::from_rational(v[i], ctx);
    return r;
}

// Re-round every entry at a (typically wider) context.
inline Matrix<BigFloat> round_to(const Matrix<BigFloat>& a, const PrecisionContext& ctx) {
    Matrix<BigFloat> r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).round_to(ctx);
    return r;
}

inline std::vector<BigFloat> round_to(const std::vector<BigFloat>& v, const PrecisionContext& ctx) {
    std::vector<BigFloat> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].round_to(ctx);
    return r;
}

}  // namespace sdpcert
