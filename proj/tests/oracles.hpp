// Test-only reference implementations, kept independent of the library
// algorithms they are used to check.
#pragma once

#include <random>
#include <vector>

#include "sdpcert/matrix.hpp"
#include "sdpcert/rational.hpp"

namespace oracles {

using sdpcert::Matrix;
using sdpcert::Rational;

inline Rational random_rational(std::mt19937_64& rng, long num_range = 10, long den_range = 6) {
    std::uniform_int_distribution<long> num(-num_range, num_range);
    std::uniform_int_distribution<long> den(1, den_range);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline Matrix<Rational> random_symmetric(std::mt19937_64& rng, std::size_t n) {
    Matrix<Rational> a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) a.sym_set(i, j, random_rational(rng));
    return a;
}

// B^T B + eps*I: symmetric positive definite by construction.
inline Matrix<Rational> random_spd(std::mt19937_64& rng, std::size_t n, const Rational& shift = Rational(1)) {
    Matrix<Rational> b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = random_rational(rng);
    Matrix<Rational> a = sdpcert::matmul(b.transposed(), b);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += shift;
    return a;
}

// Exact determinant by fraction-full Gaussian elimination.
inline Rational exact_det(Matrix<Rational> a) {
    const std::size_t n = a.rows();
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

// PSD decision by brute force: a symmetric matrix is PSD iff every principal
// minor (all index subsets, not only leading ones) is nonnegative.
inline bool psd_by_principal_minors(const Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        Matrix<Rational> sub(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = a(idx[i], idx[j]);
        if (exact_det(sub) < 0) return false;
    }
    return true;
}

// Coefficients of det(lambda*I - A) = lambda^n + c[0]*lambda^(n-1) + ... + c[n-1],
// computed exactly by the Faddeev-LeVerrier recurrence.  The k-th elementary
// symmetric function of the eigenvalues is (-1)^k c[k-1].
inline std::vector<Rational> charpoly(const Matrix<Rational>& a) {
    const std::size_t n = a.rows();
    Matrix<Rational> m = Matrix<Rational>::identity(n);
    std::vector<Rational> c;
    Rational ck;
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<Rational> am = sdpcert::matmul(a, m);
        ck = -am.trace() / Rational(static_cast<long>(k));
        c.push_back(ck);
        m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += ck;
    }
    return c;
}

}  // namespace oracles
