#pragma once

#include <mpfr.h>

#include <string>

#include "museq/types.hpp"

namespace museq {

// Rounding request for an operation. Down/Up are the directed modes used
// when a value must be a certified lower/upper bound of the exact quantity.
enum class Rnd { Nearest, Down, Up };

inline Rnd flip(Rnd r) {
    if (r == Rnd::Down) return Rnd::Up;
    if (r == Rnd::Up) return Rnd::Down;
    return Rnd::Nearest;
}

inline mpfr_rnd_t to_mpfr(Rnd r) {
    switch (r) {
        case Rnd::Down: return MPFR_RNDD;
        case Rnd::Up: return MPFR_RNDU;
        default: return MPFR_RNDN;
    }
}

// Fixed-precision real (128-bit mantissa) with a rounding tag.
// A value tagged Down (Up) is a certified lower (upper) bound of the
// exact quantity it was computed from.
class Real {
  public:
    static constexpr mpfr_prec_t precision = 128;

    Real() : tag_(Rnd::Nearest) { mpfr_init2(v_, precision); mpfr_set_zero(v_, 1); }
    explicit Real(double d, Rnd r = Rnd::Nearest) : tag_(r) {
        mpfr_init2(v_, precision);
        mpfr_set_d(v_, d, to_mpfr(r));
    }
    explicit Real(const Integer& z, Rnd r = Rnd::Nearest) : tag_(r) {
        mpfr_init2(v_, precision);
        mpfr_set_z(v_, z.get_mpz_t(), to_mpfr(r));
    }
    explicit Real(const Rational& q, Rnd r = Rnd::Nearest) : tag_(r) {
        mpfr_init2(v_, precision);
        mpfr_set_q(v_, q.get_mpq_t(), to_mpfr(r));
    }
    Real(const Real& o) : tag_(o.tag_) {
        mpfr_init2(v_, precision);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept : tag_(o.tag_) {
        mpfr_init2(v_, precision);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real o) noexcept {
        mpfr_swap(v_, o.v_);
        tag_ = o.tag_;
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    Rnd tag() const { return tag_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    int sign() const { return mpfr_sgn(v_); }

    std::string str(int digits = 12) const;

    Integer ceil_to_integer() const {
        mpfr_t t;
        mpfr_init2(t, precision);
        mpfr_ceil(t, v_);
        Integer z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    }

    // Nearest integer, halves toward +infinity.
    Integer round_half_up() const {
        mpfr_t t;
        mpfr_init2(t, precision);
        mpfr_add_d(t, v_, 0.5, MPFR_RNDN);
        mpfr_floor(t, t);
        Integer z;
        mpfr_get_z(z.get_mpz_t(), t, MPFR_RNDN);
        mpfr_clear(t);
        return z;
    }

    static Real pi(Rnd r = Rnd::Nearest) {
        Real x;
        x.tag_ = r;
        mpfr_const_pi(x.v_, to_mpfr(r));
        return x;
    }

    friend Real add(const Real& a, const Real& b, Rnd r) {
        Real x; x.tag_ = r;
        mpfr_add(x.v_, a.v_, b.v_, to_mpfr(r));
        return x;
    }
    friend Real sub(const Real& a, const Real& b, Rnd r) {
        Real x; x.tag_ = r;
        mpfr_sub(x.v_, a.v_, b.v_, to_mpfr(r));
        return x;
    }
    friend Real mul(const Real& a, const Real& b, Rnd r) {
        Real x; x.tag_ = r;
        mpfr_mul(x.v_, a.v_, b.v_, to_mpfr(r));
        return x;
    }
    // For a directed quotient of positive values the denominator must be
    // rounded the opposite way by the caller.
    friend Real div(const Real& a, const Real& b, Rnd r) {
        Real x; x.tag_ = r;
        mpfr_div(x.v_, a.v_, b.v_, to_mpfr(r));
        return x;
    }
    friend Real sqrt(const Real& a, Rnd r) {
        Real x; x.tag_ = r;
        mpfr_sqrt(x.v_, a.v_, to_mpfr(r));
        return x;
    }
    friend Real exp(const Real& a, Rnd r) {
        Real x; x.tag_ = r;
        mpfr_exp(x.v_, a.v_, to_mpfr(r));
        return x;
    }
    friend Real pow_ui(const Real& a, unsigned long e, Rnd r) {
        Real x; x.tag_ = r;
        mpfr_pow_ui(x.v_, a.v_, e, to_mpfr(r));
        return x;
    }
    friend Real neg(const Real& a) {
        Real x; x.tag_ = a.tag_;
        mpfr_neg(x.v_, a.v_, MPFR_RNDN);
        return x;
    }
    friend Real abs(const Real& a) {
        Real x; x.tag_ = a.tag_;
        mpfr_abs(x.v_, a.v_, MPFR_RNDN);
        return x;
    }

    // Round-to-nearest convenience operators.
    friend Real operator+(const Real& a, const Real& b) { return add(a, b, Rnd::Nearest); }
    friend Real operator-(const Real& a, const Real& b) { return sub(a, b, Rnd::Nearest); }
    friend Real operator*(const Real& a, const Real& b) { return mul(a, b, Rnd::Nearest); }
    friend Real operator/(const Real& a, const Real& b) { return div(a, b, Rnd::Nearest); }

    friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_); }
    friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

  private:
    mpfr_t v_;
    Rnd tag_;
};

// base^(n/2) for rational base > 0: exact integer power, one directed
// square root when n is odd.
Real half_pow(const Rational& base, long n, Rnd r);

// pi^k, directed.
Real pi_pow(long k, Rnd r);

}  // namespace museq
