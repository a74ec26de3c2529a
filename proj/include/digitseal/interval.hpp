#ifndef DIGITSEAL_INTERVAL_HPP
#define DIGITSEAL_INTERVAL_HPP

#include "digitseal/intpoly.hpp"

#include <mpfr.h>

namespace digitseal {

/// RAII wrapper around a single mpfr number.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(v_, rnd); }

private:
    mpfr_t v_;
};

/// Closed interval [lo, hi] with outward-rounded endpoint arithmetic. Every
/// operation returns an interval guaranteed to contain the exact result of
/// the operation applied to any points of the operands.
class Interval {
public:
    /// [0, 0] at the given working precision.
    explicit Interval(mpfr_prec_t prec = 64);

    static Interval from_long(long v, mpfr_prec_t prec);
    static Interval from_mpz(const mpz_class& v, mpfr_prec_t prec);
    static Interval from_mpq(const mpq_class& v, mpfr_prec_t prec);
    /// Point interval with both endpoints equal to v.
    static Interval point(const Real& v);
    /// [lo, hi]; requires lo <= hi.
    static Interval hull(const Real& lo, const Real& hi);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }
    /// Mutable endpoint access for arithmetic kernels; callers must keep
    /// lo <= hi.
    Real& lo_ref() { return lo_; }
    Real& hi_ref() { return hi_; }
    mpfr_prec_t prec() const;

    bool contains_zero() const;
    bool is_finite() const;
    /// -1 if hi < 0, +1 if lo > 0, else 0.
    int sign() const;
    double lo_double() const { return lo_.to_double(MPFR_RNDD); }
    double hi_double() const { return hi_.to_double(MPFR_RNDU); }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);

private:
    Real lo_, hi_;
};

/// a/b; b must not contain zero.
Interval div(const Interval& a, const Interval& b);
Interval abs(const Interval& a);
/// Square with the sharp lower bound 0 when a straddles zero.
Interval square(const Interval& a);
/// Square root; requires a.lo >= 0.
Interval sqrt(const Interval& a);
Interval mul(const Interval& a, const mpz_class& s);

/// a.hi < b.lo
bool certainly_less(const Interval& a, const Interval& b);

/// Rectangle re + i*im.
struct ComplexBox {
    Interval re, im;

    explicit ComplexBox(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ComplexBox(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    Interval modulus() const { return sqrt(square(re) + square(im)); }
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);

/// Horner evaluation of p over a real interval.
Interval eval_interval(const IntPoly& p, const Interval& x);
/// Horner evaluation of p over a complex box.
ComplexBox eval_box(const IntPoly& p, const ComplexBox& z);

} // namespace digitseal

#endif
