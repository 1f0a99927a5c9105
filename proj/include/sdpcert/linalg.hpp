#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sdpcert/bigfloat.hpp"
#include "sdpcert/errors.hpp"
#include "sdpcert/matrix.hpp"
#include "sdpcert/rational.hpp"

namespace sdpcert {

// ---------------------------------------------------------------------------
// Floating-point path (BigFloat at a PrecisionContext)
// ---------------------------------------------------------------------------

// Cholesky factorization A = L L^T of a symmetric positive definite matrix.
// Failure of a pivot signals an infeasible or boundary iterate upstream.
class Cholesky {
public:
    static Cholesky factor(const Matrix<BigFloat>& a, const PrecisionContext& ctx) {
        if (!a.is_square()) throw DimensionMismatch("cholesky needs a square matrix");
        const std::size_t n = a.rows();
        Cholesky ch;
        ch.L_ = Matrix<BigFloat>(n, n);
        Matrix<BigFloat>& L = ch.L_;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) L(i, j) = BigFloat::zero(ctx);
        for (std::size_t j = 0; j < n; ++j) {
            BigFloat d = a(j, j).round_to(ctx);
            for (std::size_t k = 0; k < j; ++k) d.sub_mul(L(j, k), L(j, k));
            if (d.sign() <= 0)
                throw NotPositiveDefinite("pivot " + std::to_string(j) + " is " + d.str(6));
            L(j, j) = sqrt(d);
            for (std::size_t i = j + 1; i < n; ++i) {
                BigFloat s = a(i, j).round_to(ctx);
                for (std::size_t k = 0; k < j; ++k) s.sub_mul(L(i, k), L(j, k));
                L(i, j) = s / L(j, j);
            }
        }
        return ch;
    }

    const Matrix<BigFloat>& lower() const { return L_; }
    std::size_t dim() const { return L_.rows(); }

    // log det A = 2 sum log L_ii
    BigFloat log_det() const {
        BigFloat s = L_(0, 0);
        s = log(s);
        for (std::size_t i = 1; i < dim(); ++i) s += log(L_(i, i));
        return s + s;
    }

    std::vector<BigFloat> solve(std::vector<BigFloat> b) const {
        const std::size_t n = dim();
        if (b.size() != n) throw DimensionMismatch("cholesky solve");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < i; ++k) b[i].sub_mul(L_(i, k), b[k]);
            b[i] /= L_(i, i);
        }
        for (std::size_t ii = n; ii-- > 0;) {
            for (std::size_t k = ii + 1; k < n; ++k) b[ii].sub_mul(L_(k, ii), b[k]);
            b[ii] /= L_(ii, ii);
        }
        return b;
    }

    // L^{-1} B (column-wise forward substitution).
    Matrix<BigFloat> forward_solve(const Matrix<BigFloat>& b) const {
        const std::size_t n = dim();
        if (b.rows() != n) throw DimensionMismatch("forward solve");
        Matrix<BigFloat> x = b;
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t k = 0; k < i; ++k) x(i, c).sub_mul(L_(i, k), x(k, c));
                x(i, c) /= L_(i, i);
            }
        return x;
    }

    // L^{-T} B (column-wise back substitution).
    Matrix<BigFloat> backward_solve(const Matrix<BigFloat>& b) const {
        const std::size_t n = dim();
        if (b.rows() != n) throw DimensionMismatch("backward solve");
        Matrix<BigFloat> x = b;
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t ii = n; ii-- > 0;) {
                for (std::size_t k = ii + 1; k < n; ++k) x(ii, c).sub_mul(L_(k, ii), x(k, c));
                x(ii, c) /= L_(ii, ii);
            }
        return x;
    }

    // L^{-1} S L^{-T}; shares the spectrum of A^{-1/2} S A^{-1/2} for symmetric S.
    Matrix<BigFloat> congruence(const Matrix<BigFloat>& s) const {
        Matrix<BigFloat> w = forward_solve(s);
        Matrix<BigFloat> x = forward_solve(w.transposed());
        x.symmetrize();
        return x;
    }

    // L^{-T} M L^{-1} for symmetric M.
    Matrix<BigFloat> congruence_inv(const Matrix<BigFloat>& m) const {
        Matrix<BigFloat> w = backward_solve(m);
        Matrix<BigFloat> x = backward_solve(w.transposed());
        x.symmetrize();
        return x;
    }

    Matrix<BigFloat> solve_matrix(const Matrix<BigFloat>& b) const {
        return backward_solve(forward_solve(b));
    }

    Matrix<BigFloat> inverse() const {
        Matrix<BigFloat> inv = solve_matrix(Matrix<BigFloat>::identity(dim()));
        inv.symmetrize();
        return inv;
    }

private:
    Matrix<BigFloat> L_;
};

inline Matrix<BigFloat> cholesky(const Matrix<BigFloat>& a, const PrecisionContext& ctx) {
    return Cholesky::factor(a, ctx).lower();
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi sweeps, ascending.
// Unconditionally convergent and well behaved at high precision, which is why
// it is used over faster tridiagonalization-based schemes.
inline std::vector<BigFloat> sym_eigenvalues(const Matrix<BigFloat>& a_in, const PrecisionContext& ctx,
                                             int max_sweeps = 64) {
    if (!a_in.is_square()) throw DimensionMismatch("sym_eigenvalues needs a square matrix");
    const std::size_t n = a_in.rows();
    Matrix<BigFloat> a = round_to(a_in, ctx);
    const BigFloat one = BigFloat::from_long(1, ctx);

    BigFloat scale = a.max_abs();
    if (scale.is_zero()) return std::vector<BigFloat>(n, BigFloat::zero(ctx));
    BigFloat thresh = max(one, scale) * BigFloat::pow10(-(ctx.working_digits() - 3), ctx);
    BigFloat skip = thresh / BigFloat::from_long(static_cast<long>(4 * n * n), ctx);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        BigFloat off = BigFloat::zero(ctx);
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                BigFloat apq = a(p, q);
                BigFloat aabs = abs(apq);
                if (aabs > off) off = aabs;
                if (aabs <= skip) continue;
                BigFloat theta = (a(q, q) - a(p, p)) / (apq + apq);
                BigFloat t;
                if (theta.is_zero()) {
                    t = one;
                } else {
                    t = one / (abs(theta) + sqrt(theta * theta + one));
                    if (theta.sign() < 0) t = -t;
                }
                BigFloat c = one / sqrt(t * t + one);
                BigFloat s = t * c;
                BigFloat tapq = t * apq;
                a(p, p) -= tapq;
                a(q, q) += tapq;
                a.sym_set(p, q, BigFloat::zero(ctx));
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    BigFloat akp = a(k, p), akq = a(k, q);
                    a.sym_set(k, p, c * akp - s * akq);
                    a.sym_set(k, q, s * akp + c * akq);
                }
            }
        if (off <= thresh) {
            std::vector<BigFloat> ev(n);
            for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
            std::sort(ev.begin(), ev.end());
            return ev;
        }
    }
    throw NoConvergence("jacobi sweep cap reached; raise the working precision");
}

inline std::vector<BigFloat> solve_spd(const Matrix<BigFloat>& a, const std::vector<BigFloat>& b,
                                       const PrecisionContext& ctx) {
    return Cholesky::factor(a, ctx).solve(b);
}

// ---------------------------------------------------------------------------
// Exact rational path
// ---------------------------------------------------------------------------

// Gaussian elimination with partial pivoting over the rationals; exact.
inline std::vector<Rational> exact_solve(Matrix<Rational> a, std::vector<Rational> b) {
    if (!a.is_square() || a.rows() != b.size()) throw DimensionMismatch("exact_solve");
    const std::size_t n = a.rows();
    std::vector<std::size_t> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = i;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        Rational best = rat_abs(a(row[k], k));
        for (std::size_t i = k + 1; i < n; ++i) {
            Rational cand = rat_abs(a(row[i], k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best == 0) throw SingularMatrix("exact_solve pivot " + std::to_string(k));
        std::swap(row[k], row[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(row[i], k) == 0) continue;
            Rational f = a(row[i], k) / a(row[k], k);
            for (std::size_t j = k; j < n; ++j) a(row[i], j) -= f * a(row[k], j);
            b[row[i]] -= f * b[row[k]];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t kk = n; kk-- > 0;) {
        Rational s = b[row[kk]];
        for (std::size_t j = kk + 1; j < n; ++j) s -= a(row[kk], j) * x[j];
        x[kk] = s / a(row[kk], kk);
    }
    return x;
}

inline std::size_t exact_rank(Matrix<Rational> a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t piv = rank;
        while (piv < m && a(piv, col) == 0) ++piv;
        if (piv == m) continue;
        for (std::size_t j = 0; j < n; ++j) std::swap(a(rank, j), a(piv, j));
        for (std::size_t i = rank + 1; i < m; ++i) {
            if (a(i, col) == 0) continue;
            Rational f = a(i, col) / a(rank, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

// solve_spd, exact flavor: nonsingular symmetric system, residual exactly zero.
inline std::vector<Rational> solve_spd(const Matrix<Rational>& a, const std::vector<Rational>& b) {
    return exact_solve(a, b);
}

// Exact LDL^T of a symmetric positive definite rational matrix, factored once
// and reused for many right-hand sides (the projection normal equations).
class RationalSpdSolver {
public:
    explicit RationalSpdSolver(const Matrix<Rational>& a) {
        if (!a.is_square()) throw DimensionMismatch("spd solver");
        const std::size_t n = a.rows();
        L_ = Matrix<Rational>(n, n);
        d_.resize(n);
        for (std::size_t j = 0; j < n; ++j) {
            Rational dj = a(j, j);
            for (std::size_t k = 0; k < j; ++k) dj -= L_(j, k) * L_(j, k) * d_[k];
            if (dj <= 0) throw SingularMatrix("matrix is not positive definite at pivot " + std::to_string(j));
            d_[j] = dj;
            L_(j, j) = 1;
            for (std::size_t i = j + 1; i < n; ++i) {
                Rational s = a(i, j);
                for (std::size_t k = 0; k < j; ++k) s -= L_(i, k) * L_(j, k) * d_[k];
                L_(i, j) = s / dj;
            }
        }
    }

    std::vector<Rational> solve(std::vector<Rational> b) const {
        const std::size_t n = d_.size();
        if (b.size() != n) throw DimensionMismatch("spd solve");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < i; ++k) b[i] -= L_(i, k) * b[k];
        for (std::size_t i = 0; i < n; ++i) b[i] /= d_[i];
        for (std::size_t ii = n; ii-- > 0;)
            for (std::size_t k = ii + 1; k < n; ++k) b[ii] -= L_(k, ii) * b[k];
        return b;
    }

private:
    Matrix<Rational> L_;
    std::vector<Rational> d_;
};

struct PsdResult {
    bool is_psd = false;
    std::vector<Rational> pivots;   // D entries in elimination order when PSD (zeros included)
    std::vector<Rational> witness;  // v with v^T A v < 0 when not PSD
    Rational witness_value;         // the certified negative value v^T A v
};

// Exact positive-semidefiniteness decision: LDL^T with symmetric (diagonal)
// pivoting.  A zero pivot is admissible only when its whole remaining row and
// column vanish; otherwise a vector with negative quadratic form exists and is
// returned.  Total on symmetric rational matrices, never approximate.
inline PsdResult ldlt_exact(const Matrix<Rational>& a_in) {
    if (!a_in.is_square()) throw DimensionMismatch("ldlt_exact needs a square matrix");
    const std::size_t n = a_in.rows();
    PsdResult res;
    if (n == 0) {
        res.is_psd = true;
        return res;
    }

    Matrix<Rational> s = a_in;
    Matrix<Rational> unit_l = Matrix<Rational>::identity(n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;

    auto swap_slot = [&](std::size_t k, std::size_t j) {
        if (k == j) return;
        for (std::size_t t = 0; t < n; ++t) std::swap(s(k, t), s(j, t));
        for (std::size_t t = 0; t < n; ++t) std::swap(s(t, k), s(t, j));
        for (std::size_t t = 0; t < k; ++t) std::swap(unit_l(k, t), unit_l(j, t));
        std::swap(perm[k], perm[j]);
    };

    // Lift a Schur-complement direction u (slots k..n-1) to the original
    // coordinates through the unit-lower congruence accumulated so far.
    auto emit_witness = [&](std::size_t k, const std::vector<Rational>& u) {
        std::vector<Rational> v(n, Rational(0));
        for (std::size_t i = k; i < n; ++i) v[i] = u[i - k];
        for (std::size_t ii = k; ii-- > 0;) {
            Rational acc = 0;
            for (std::size_t j = ii + 1; j < n; ++j) acc += unit_l(j, ii) * v[j];
            v[ii] = -acc;
        }
        std::vector<Rational> w(n, Rational(0));
        for (std::size_t i = 0; i < n; ++i) w[perm[i]] = v[i];
        Rational val = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) val += w[i] * a_in(i, j) * w[j];
        res.is_psd = false;
        res.witness = std::move(w);
        res.witness_value = val;
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t best = k;
        for (std::size_t j = k; j < n; ++j) {
            if (s(j, j) < 0) {
                std::vector<Rational> u(n - k, Rational(0));
                u[j - k] = 1;
                emit_witness(k, u);
                return res;
            }
            if (s(j, j) > s(best, best)) best = j;
        }
        if (s(best, best) == 0) {
            // Whole remaining diagonal is zero: PSD iff the block vanishes.
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (s(i, j) != 0) {
                        std::vector<Rational> u(n - k, Rational(0));
                        u[i - k] = 1;
                        u[j - k] = s(i, j) > 0 ? Rational(-1) : Rational(1);
                        emit_witness(k, u);
                        return res;
                    }
            for (std::size_t j = k; j < n; ++j) res.pivots.emplace_back(0);
            break;
        }
        swap_slot(k, best);
        Rational d = s(k, k);
        res.pivots.push_back(d);
        for (std::size_t i = k + 1; i < n; ++i) unit_l(i, k) = s(i, k) / d;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (s(i, k) == 0) continue;
            for (std::size_t j = i; j < n; ++j) {
                Rational upd = s(i, j) - s(i, k) * s(j, k) / d;
                s(i, j) = upd;
                s(j, i) = upd;
            }
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            s(i, k) = 0;
            s(k, i) = 0;
        }
    }
    res.is_psd = true;
    return res;
}

}  // namespace sdpcert
