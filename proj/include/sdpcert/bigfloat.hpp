#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <cmath>
#include <string>
#include <utility>

#include "sdpcert/errors.hpp"

namespace sdpcert {

// Working precision is specified in decimal digits; every context carries a
// fixed number of internal guard digits so that quantities proven to the
// requested accuracy survive the roundoff of the algorithms above them.
class PrecisionContext {
public:
    static constexpr long kGuardDigits = 10;

    explicit PrecisionContext(long digits) : digits_(digits) {
        if (digits < 15) throw Error("precision context requires at least 15 digits");
    }

    long digits() const { return digits_; }
    long working_digits() const { return digits_ + kGuardDigits; }

    // Binary precision of all values created under this context (rounded up).
    mpfr_prec_t bits() const {
        return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(working_digits()) * 3.321928094887363)) + 1;
    }

private:
    long digits_;
};

// Arbitrary-precision real number backed by an mpfr_t.  Each value carries its
// own precision; binary operations round at the wider of the two operand
// precisions, so computations seeded from one PrecisionContext stay at that
// context's precision throughout.
class BigFloat {
public:
    BigFloat() {
        mpfr_init2(v_, kMinPrec);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(long x) {  // NOLINT: implicit by design, mirrors double/int literals
        mpfr_init2(v_, kMinPrec);
        mpfr_set_si(v_, x, MPFR_RNDN);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, kMinPrec);
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat zero(const PrecisionContext& ctx) {
        BigFloat r;
        mpfr_set_prec(r.v_, ctx.bits());
        mpfr_set_zero(r.v_, 1);
        return r;
    }

    static BigFloat from_long(long x, const PrecisionContext& ctx) {
        BigFloat r = zero(ctx);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigFloat from_rational(const mpq_class& q, const PrecisionContext& ctx) {
        BigFloat r = zero(ctx);
        mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
        return r;
    }

    static BigFloat from_double(double x, const PrecisionContext& ctx) {
        BigFloat r = zero(ctx);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }

    static BigFloat parse(const std::string& s, const PrecisionContext& ctx) {
        BigFloat r = zero(ctx);
        if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw ParseError("bad number '" + s + "'");
        return r;
    }

    // 10^e at context precision (exact whenever representable).
    static BigFloat pow10(long e, const PrecisionContext& ctx) {
        BigFloat r = zero(ctx);
        mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(e >= 0 ? e : -e), MPFR_RNDN);
        if (e < 0) mpfr_ui_div(r.v_, 1u, r.v_, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    // Re-round to a context's precision (exact when precision increases).
    BigFloat round_to(const PrecisionContext& ctx) const {
        BigFloat r = zero(ctx);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Exact value as a rational (every finite float is rational).
    mpq_class to_rational() const {
        if (!is_finite()) throw Error("cannot convert non-finite value to rational");
        if (is_zero()) return mpq_class(0);
        mpz_class m;
        mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
        mpq_class q(m);
        if (e >= 0) {
            mpz_class p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2u, static_cast<unsigned long>(e));
            q *= p2;
        } else {
            mpz_class p2;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2u, static_cast<unsigned long>(-e));
            q /= p2;
        }
        return q;
    }

    std::string str(long digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r = result_for(a, b);
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        if (!r.is_finite()) throw Error("division produced a non-finite value");
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(*this);
        mpfr_neg(r.v_, r.v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& b) {
        widen_for(b);
        mpfr_add(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& b) {
        widen_for(b);
        mpfr_sub(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& b) {
        widen_for(b);
        mpfr_mul(v_, v_, b.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator/=(const BigFloat& b) {
        widen_for(b);
        mpfr_div(v_, v_, b.v_, MPFR_RNDN);
        if (!is_finite()) throw Error("division produced a non-finite value");
        return *this;
    }

    // this += a*b with a single rounding; the workhorse of dot products.
    BigFloat& add_mul(const BigFloat& a, const BigFloat& b) {
        mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
        return *this;
    }
    // this -= a*b with a single rounding.
    BigFloat& sub_mul(const BigFloat& a, const BigFloat& b) {
        mpfr_fms(v_, a.v_, b.v_, v_, MPFR_RNDN);
        mpfr_neg(v_, v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a);
        mpfr_abs(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        if (a.sign() < 0) throw Error("sqrt of negative value");
        BigFloat r(a);
        mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        if (a.sign() <= 0) throw Error("log of non-positive value");
        BigFloat r(a);
        mpfr_log(r.v_, r.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }
    friend BigFloat min(const BigFloat& a, const BigFloat& b) { return a < b ? a : b; }

    mpfr_srcptr raw() const { return v_; }

private:
    static constexpr mpfr_prec_t kMinPrec = 64;

    static BigFloat result_for(const BigFloat& a, const BigFloat& b) {
        BigFloat r;
        mpfr_set_prec(r.v_, std::max(mpfr_get_prec(a.v_), mpfr_get_prec(b.v_)));
        return r;
    }

    void widen_for(const BigFloat& b) {
        if (mpfr_get_prec(b.v_) > mpfr_get_prec(v_)) {
            BigFloat tmp;
            mpfr_set_prec(tmp.v_, mpfr_get_prec(b.v_));
            mpfr_set(tmp.v_, v_, MPFR_RNDN);
            mpfr_swap(v_, tmp.v_);
        }
    }

    mpfr_t v_;
};

}  // namespace sdpcert
