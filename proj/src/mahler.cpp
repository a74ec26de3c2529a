#include "digitseal/mahler.hpp"

#include "digitseal/errors.hpp"
#include "digitseal/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace digitseal {

namespace {

Interval clamp_below_one(Interval x) {
    if (mpfr_cmp_ui(x.lo_ref().raw(), 1) < 0) mpfr_set_ui(x.lo_ref().raw(), 1, MPFR_RNDD);
    if (mpfr_cmp_ui(x.hi_ref().raw(), 1) < 0) mpfr_set_ui(x.hi_ref().raw(), 1, MPFR_RNDU);
    return x;
}

} // namespace

double mahler_measure(const IntPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("mahler_measure: zero polynomial");
    if (!(tol > 0)) throw std::invalid_argument("mahler_measure: tol must be positive");
    mpz_class lead = abs(p.leading());
    if (p.degree() == 0) return mpz_get_d(lead.get_mpz_t());

    RootProfile prof = isolate_roots(p);
    for (;;) {
        Interval m = Interval::from_mpz(lead, prof.precision);
        for (const RootDisk& disk : prof.disks) {
            Interval f = clamp_below_one(disk.modulus_interval());
            for (unsigned k = 0; k < disk.multiplicity; ++k) m = m * f;
        }
        if (m.is_finite() && m.hi_double() - m.lo_double() <= tol)
            return std::max(1.0, 0.5 * (m.lo_double() + m.hi_double()));
        if (!refine_step(prof))
            throw PrecisionExhausted("mahler_measure: precision cap reached before tolerance");
    }
}

} // namespace digitseal
