#include "digitseal/interval.hpp"

#include <stdexcept>

namespace digitseal {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval Interval::from_long(long v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_.raw(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.raw(), v, MPFR_RNDU);
    return r;
}

Interval Interval::from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_.raw(), v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.raw(), v.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.raw(), v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.raw(), v.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::point(const Real& v) {
    Interval r(v.prec());
    r.lo_ = v;
    r.hi_ = v;
    return r;
}

Interval Interval::hull(const Real& lo, const Real& hi) {
    if (mpfr_greater_p(lo.raw(), hi.raw()))
        throw std::invalid_argument("Interval::hull: lo > hi");
    Interval r(std::max(lo.prec(), hi.prec()));
    r.lo_ = lo;
    r.hi_ = hi;
    return r;
}

mpfr_prec_t Interval::prec() const { return std::max(lo_.prec(), hi_.prec()); }

bool Interval::contains_zero() const {
    return mpfr_sgn(lo_.raw()) <= 0 && mpfr_sgn(hi_.raw()) >= 0;
}

bool Interval::is_finite() const {
    return mpfr_number_p(lo_.raw()) && mpfr_number_p(hi_.raw());
}

int Interval::sign() const {
    if (mpfr_sgn(hi_.raw()) < 0) return -1;
    if (mpfr_sgn(lo_.raw()) > 0) return 1;
    return 0;
}

namespace {

mpfr_prec_t join_prec(const Interval& a, const Interval& b) {
    return std::max(a.prec(), b.prec());
}

} // namespace

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b));
    mpfr_add(r.lo_ref().raw(), a.lo().raw(), b.lo().raw(), MPFR_RNDD);
    mpfr_add(r.hi_ref().raw(), a.hi().raw(), b.hi().raw(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(join_prec(a, b));
    mpfr_sub(r.lo_ref().raw(), a.lo().raw(), b.hi().raw(), MPFR_RNDD);
    mpfr_sub(r.hi_ref().raw(), a.hi().raw(), b.lo().raw(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.prec());
    mpfr_neg(r.lo_ref().raw(), a.hi().raw(), MPFR_RNDD);
    mpfr_neg(r.hi_ref().raw(), a.lo().raw(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    mpfr_prec_t prec = join_prec(a, b);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr ea[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr eb[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, ea[i], eb[j], MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo().raw()))
                mpfr_set(r.lo_ref().raw(), t, MPFR_RNDD);
            mpfr_mul(t, ea[i], eb[j], MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi().raw()))
                mpfr_set(r.hi_ref().raw(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval div(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("Interval div: denominator contains zero");
    mpfr_prec_t prec = join_prec(a, b);
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    mpfr_srcptr ea[2] = {a.lo().raw(), a.hi().raw()};
    mpfr_srcptr eb[2] = {b.lo().raw(), b.hi().raw()};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t, ea[i], eb[j], MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo().raw()))
                mpfr_set(r.lo_ref().raw(), t, MPFR_RNDD);
            mpfr_div(t, ea[i], eb[j], MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi().raw()))
                mpfr_set(r.hi_ref().raw(), t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval abs(const Interval& a) {
    int lo_sign = mpfr_sgn(a.lo().raw());
    int hi_sign = mpfr_sgn(a.hi().raw());
    if (lo_sign >= 0) return a;
    if (hi_sign <= 0) return -a;
    Interval r(a.prec());
    mpfr_neg(r.hi_ref().raw(), a.lo().raw(), MPFR_RNDU);
    if (mpfr_less_p(r.hi().raw(), a.hi().raw()))
        mpfr_set(r.hi_ref().raw(), a.hi().raw(), MPFR_RNDU);
    return r;
}

Interval square(const Interval& a) {
    Interval m = abs(a);
    Interval r(a.prec());
    mpfr_mul(r.lo_ref().raw(), m.lo().raw(), m.lo().raw(), MPFR_RNDD);
    mpfr_mul(r.hi_ref().raw(), m.hi().raw(), m.hi().raw(), MPFR_RNDU);
    return r;
}

Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo().raw()) < 0) throw std::domain_error("Interval sqrt: negative lower bound");
    Interval r(a.prec());
    mpfr_sqrt(r.lo_ref().raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_sqrt(r.hi_ref().raw(), a.hi().raw(), MPFR_RNDU);
    return r;
}

Interval mul(const Interval& a, const mpz_class& s) {
    Interval r(a.prec());
    if (s >= 0) {
        mpfr_mul_z(r.lo_ref().raw(), a.lo().raw(), s.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_ref().raw(), a.hi().raw(), s.get_mpz_t(), MPFR_RNDU);
    } else {
        mpfr_mul_z(r.lo_ref().raw(), a.hi().raw(), s.get_mpz_t(), MPFR_RNDD);
        mpfr_mul_z(r.hi_ref().raw(), a.lo().raw(), s.get_mpz_t(), MPFR_RNDU);
    }
    return r;
}

bool certainly_less(const Interval& a, const Interval& b) {
    return mpfr_less_p(a.hi().raw(), b.lo().raw());
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return {a.re + b.re, a.im + b.im};
}

ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return {a.re - b.re, a.im - b.im};
}

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Interval eval_interval(const IntPoly& p, const Interval& x) {
    mpfr_prec_t prec = x.prec();
    Interval acc(prec);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + Interval::from_mpz(p.coeffs()[i], prec);
    return acc;
}

ComplexBox eval_box(const IntPoly& p, const ComplexBox& z) {
    mpfr_prec_t prec = std::max(z.re.prec(), z.im.prec());
    ComplexBox acc(prec);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + Interval::from_mpz(p.coeffs()[i], prec);
    }
    return acc;
}

} // namespace digitseal
