#include "digitseal/roots.hpp"

#include "digitseal/errors.hpp"
#include "digitseal/realroots.hpp"
#include "digitseal/squarefree.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace digitseal {

namespace {

Real lift(const Real& v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set(r.raw(), v.raw(), MPFR_RNDN);
    return r;
}

// ---- plain (round-to-nearest) complex arithmetic for the iteration ----

struct CP {
    Real re, im;
    explicit CP(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
};

CP cp_from(const std::complex<double>& z, mpfr_prec_t prec) {
    CP r(prec);
    mpfr_set_d(r.re.raw(), z.real(), MPFR_RNDN);
    mpfr_set_d(r.im.raw(), z.imag(), MPFR_RNDN);
    return r;
}

CP lift(const CP& z, mpfr_prec_t prec) {
    CP r(prec);
    mpfr_set(r.re.raw(), z.re.raw(), MPFR_RNDN);
    mpfr_set(r.im.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

CP csub(const CP& a, const CP& b, mpfr_prec_t prec) {
    CP r(prec);
    mpfr_sub(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_sub(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    return r;
}

CP cadd(const CP& a, const CP& b, mpfr_prec_t prec) {
    CP r(prec);
    mpfr_add(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
    return r;
}

CP cmul(const CP& a, const CP& b, mpfr_prec_t prec) {
    CP r(prec);
    mpfr_t t1, t2;
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    mpfr_mul(t1, a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sub(r.re.raw(), t1, t2, MPFR_RNDN);
    mpfr_mul(t1, a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_add(r.im.raw(), t1, t2, MPFR_RNDN);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
}

CP cdiv(const CP& a, const CP& b, mpfr_prec_t prec) {
    CP r(prec);
    mpfr_t d, t1, t2;
    mpfr_init2(d, prec);
    mpfr_init2(t1, prec);
    mpfr_init2(t2, prec);
    mpfr_mul(t1, b.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2, b.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_add(d, t1, t2, MPFR_RNDN);
    mpfr_mul(t1, a.re.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.im.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_add(t1, t1, t2, MPFR_RNDN);
    mpfr_div(r.re.raw(), t1, d, MPFR_RNDN);
    mpfr_mul(t1, a.im.raw(), b.re.raw(), MPFR_RNDN);
    mpfr_mul(t2, a.re.raw(), b.im.raw(), MPFR_RNDN);
    mpfr_sub(t1, t1, t2, MPFR_RNDN);
    mpfr_div(r.im.raw(), t1, d, MPFR_RNDN);
    mpfr_clear(d);
    mpfr_clear(t1);
    mpfr_clear(t2);
    return r;
}

// |z| rounded to nearest
Real cabs(const CP& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

bool cp_is_zero(const CP& z) { return mpfr_zero_p(z.re.raw()) && mpfr_zero_p(z.im.raw()); }

// value and derivative by one complex Horner pass
void horner2(const IntPoly& p, const CP& z, CP& val, CP& der, mpfr_prec_t prec) {
    val = CP(prec);
    der = CP(prec);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        der = cadd(cmul(der, z, prec), val, prec);
        val = cmul(val, z, prec);
        CP c(prec);
        mpfr_set_z(c.re.raw(), p.coeffs()[i].get_mpz_t(), MPFR_RNDN);
        val = cadd(val, c, prec);
    }
}

// ---- approximation stages ----

std::optional<std::vector<std::complex<double>>> aberth_double(const IntPoly& f) {
    int n = f.degree();
    if (height(f) > mpz_class("1000000000000000")) return std::nullopt;
    std::vector<double> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = f.coeff(i).get_d();

    double lead = std::fabs(c[n]);
    double big = 0;
    for (int i = 0; i < n; ++i) big = std::max(big, std::fabs(c[i]));
    double bound = 1.0 + big / lead;
    double r0 = std::min(bound, 1.5);

    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        double ang = 2.0 * M_PI * k / n + 0.45;
        double rk = r0 * (1.0 + 0.05 * ((k % 7) - 3) / 7.0);
        z[k] = std::polar(rk, ang);
    }

    auto horner = [&](std::complex<double> x, std::complex<double>& v, std::complex<double>& d) {
        v = 0;
        d = 0;
        for (int i = n; i >= 0; --i) {
            d = d * x + v;
            v = v * x + c[i];
        }
    };

    for (int iter = 0; iter < 1000; ++iter) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> v, d;
            horner(z[k], v, d);
            if (!std::isfinite(std::abs(v))) return std::nullopt;
            if (v == 0.0) continue;
            if (d == 0.0) {
                z[k] += 1e-6 * (1.0 + std::abs(z[k]));
                worst = 1;
                continue;
            }
            std::complex<double> newton = v / d;
            std::complex<double> s = 0;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                std::complex<double> diff = z[k] - z[j];
                if (diff == 0.0) {
                    diff = 1e-12;
                }
                s += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - newton * s;
            std::complex<double> w = denom == 0.0 ? newton : newton / denom;
            z[k] -= w;
            if (!std::isfinite(std::abs(z[k]))) return std::nullopt;
            worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[k])));
        }
        if (worst < 1e-14) return z;
    }
    return std::nullopt;
}

std::vector<CP> aberth_mp(const IntPoly& f, mpfr_prec_t prec, const std::vector<CP>* warm) {
    int n = f.degree();
    std::vector<CP> z;
    z.reserve(n);
    if (warm && static_cast<int>(warm->size()) == n) {
        for (const CP& w : *warm) z.push_back(lift(w, prec));
        // nudge exact duplicates apart so the correction terms stay finite
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < i; ++j)
                if (mpfr_equal_p(z[i].re.raw(), z[j].re.raw()) &&
                    mpfr_equal_p(z[i].im.raw(), z[j].im.raw()))
                    mpfr_add_d(z[i].re.raw(), z[i].re.raw(), 1e-3 * (i + 1), MPFR_RNDN);
    } else {
        for (int k = 0; k < n; ++k) {
            double ang = 2.0 * M_PI * k / n + 0.45;
            double rk = 1.2 * (1.0 + 0.05 * ((k % 7) - 3) / 7.0);
            z.push_back(cp_from(std::polar(rk, ang), prec));
        }
    }

    mpfr_t tol, step, t;
    mpfr_init2(tol, prec);
    mpfr_init2(step, prec);
    mpfr_init2(t, prec);
    mpfr_set_ui(tol, 1, MPFR_RNDN);
    mpfr_mul_2si(tol, tol, -(prec - 12), MPFR_RNDN);

    long maxit = 200 + 20L * n;
    for (long iter = 0; iter < maxit; ++iter) {
        bool all_small = true;
        for (int k = 0; k < n; ++k) {
            CP v(prec), d(prec);
            horner2(f, z[k], v, d, prec);
            if (cp_is_zero(v)) continue;
            if (cp_is_zero(d)) {
                mpfr_add_d(z[k].re.raw(), z[k].re.raw(), 1e-3 * (k + 1), MPFR_RNDN);
                all_small = false;
                continue;
            }
            CP newton = cdiv(v, d, prec);
            CP s(prec);
            bool bad = false;
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                CP diff = csub(z[k], z[j], prec);
                if (cp_is_zero(diff)) {
                    bad = true;
                    break;
                }
                CP one(prec);
                mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
                s = cadd(s, cdiv(one, diff, prec), prec);
            }
            if (bad) {
                mpfr_add_d(z[k].re.raw(), z[k].re.raw(), 1e-3 * (k + 1), MPFR_RNDN);
                all_small = false;
                continue;
            }
            CP one(prec);
            mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
            CP denom = csub(one, cmul(newton, s, prec), prec);
            CP w = cp_is_zero(denom) ? newton : cdiv(newton, denom, prec);
            z[k] = csub(z[k], w, prec);
            // relative step size vs tolerance
            Real aw = cabs(w, prec);
            Real az = cabs(z[k], prec);
            mpfr_add_ui(t, az.raw(), 1, MPFR_RNDN);
            mpfr_mul(step, tol, t, MPFR_RNDN);
            if (mpfr_greater_p(aw.raw(), step)) all_small = false;
        }
        if (all_small) break;
    }
    mpfr_clears(tol, step, t, nullptr);
    return z;
}

// ---- polishing ----

void polish_real(const IntPoly& f, const IntPoly& fd, Real& x, mpfr_prec_t prec) {
    Real xx = lift(x, prec);
    mpfr_t v, d, step, bound;
    mpfr_inits2(prec, v, d, step, bound, nullptr);
    for (int iter = 0; iter < 80; ++iter) {
        // real Horner for f and f'
        mpfr_set_zero(v, 1);
        for (std::size_t i = f.coeffs().size(); i-- > 0;) {
            mpfr_mul(v, v, xx.raw(), MPFR_RNDN);
            mpfr_add_z(v, v, f.coeffs()[i].get_mpz_t(), MPFR_RNDN);
        }
        if (mpfr_zero_p(v)) break;
        mpfr_set_zero(d, 1);
        for (std::size_t i = fd.coeffs().size(); i-- > 0;) {
            mpfr_mul(d, d, xx.raw(), MPFR_RNDN);
            mpfr_add_z(d, d, fd.coeffs()[i].get_mpz_t(), MPFR_RNDN);
        }
        if (mpfr_zero_p(d)) break;
        mpfr_div(step, v, d, MPFR_RNDN);
        mpfr_sub(xx.raw(), xx.raw(), step, MPFR_RNDN);
        mpfr_abs(step, step, MPFR_RNDN);
        mpfr_abs(bound, xx.raw(), MPFR_RNDN);
        mpfr_add_ui(bound, bound, 1, MPFR_RNDN);
        mpfr_mul_2si(bound, bound, -(prec - 8), MPFR_RNDN);
        if (mpfr_less_p(step, bound)) break;
    }
    mpfr_clears(v, d, step, bound, nullptr);
    x = std::move(xx);
}

void polish_complex(const IntPoly& f, Real& re, Real& im, mpfr_prec_t prec) {
    CP z(prec);
    mpfr_set(z.re.raw(), re.raw(), MPFR_RNDN);
    mpfr_set(z.im.raw(), im.raw(), MPFR_RNDN);
    mpfr_t bound, t;
    mpfr_inits2(prec, bound, t, nullptr);
    for (int iter = 0; iter < 80; ++iter) {
        CP v(prec), d(prec);
        horner2(f, z, v, d, prec);
        if (cp_is_zero(v) || cp_is_zero(d)) break;
        CP w = cdiv(v, d, prec);
        z = csub(z, w, prec);
        Real aw = cabs(w, prec);
        Real az = cabs(z, prec);
        mpfr_add_ui(t, az.raw(), 1, MPFR_RNDN);
        mpfr_mul_2si(bound, t, -(prec - 8), MPFR_RNDN);
        if (mpfr_less_p(aw.raw(), bound)) break;
    }
    mpfr_clears(bound, t, nullptr);
    re = lift(z.re, prec);
    im = lift(z.im, prec);
}

// ---- certification ----

// upper bound for deg(f) * |f(z)| / |f'(z)|, or nullopt if the derivative
// enclosure touches zero
std::optional<Real> certified_radius(const IntPoly& f, const IntPoly& fd, const RootDisk& disk,
                                     mpfr_prec_t prec) {
    Interval re = Interval::point(lift(disk.center_re, prec));
    Interval im = Interval::point(lift(disk.center_im, prec));
    ComplexBox zbox(re, im);
    Interval av = eval_box(f, zbox).modulus();
    Interval ad = eval_box(fd, zbox).modulus();
    if (mpfr_sgn(ad.lo().raw()) <= 0) return std::nullopt;
    Interval rad = div(mul(av, mpz_class(f.degree())), ad);
    if (!rad.is_finite()) return std::nullopt;
    return lift(rad.hi(), prec);
}

bool disks_disjoint(const std::vector<RootDisk>& disks, mpfr_prec_t prec) {
    mpfr_t rsum;
    mpfr_init2(rsum, prec);
    bool ok = true;
    for (std::size_t i = 0; i < disks.size() && ok; ++i)
        for (std::size_t j = 0; j < i && ok; ++j) {
            Interval dx = Interval::point(disks[i].center_re) - Interval::point(disks[j].center_re);
            Interval dy = Interval::point(disks[i].center_im) - Interval::point(disks[j].center_im);
            Interval dist = sqrt(square(dx) + square(dy));
            mpfr_add(rsum, disks[i].radius.raw(), disks[j].radius.raw(), MPFR_RNDU);
            if (!mpfr_greater_p(dist.lo().raw(), rsum)) ok = false;
        }
    mpfr_clear(rsum);
    return ok;
}

void update_statuses(RootProfile& prof) {
    for (RootDisk& disk : prof.disks) {
        if (disk.status != CircleStatus::on_or_undecided) continue;
        Interval m = disk.modulus_interval();
        Interval one = Interval::from_long(1, m.prec());
        if (certainly_less(m, one))
            disk.status = CircleStatus::inside;
        else if (certainly_less(one, m))
            disk.status = CircleStatus::outside;
    }
}

struct BuildFailure {};

// One certification round at fixed precision; throws BuildFailure when the
// approximations are not good enough yet.
std::vector<RootDisk> build_disks(const RootProfile& prof, const std::vector<int>& real_counts,
                                  std::vector<std::vector<CP>>& approx, mpfr_prec_t prec) {
    std::vector<RootDisk> disks;
    for (std::size_t fi = 0; fi < prof.factors.size(); ++fi) {
        const IntPoly& f = prof.factors[fi].first;
        unsigned mult = prof.factors[fi].second;
        IntPoly fd = derivative(f);
        int n = f.degree();
        std::vector<CP>& pts = approx[fi];
        if (static_cast<int>(pts.size()) != n) {
            pts = aberth_mp(f, prec, nullptr);
        }

        // split into real and conjugate-paired complex roots; the number of
        // real roots is known exactly
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return mpfr_cmpabs(pts[a].im.raw(), pts[b].im.raw()) < 0;
        });
        int nreal = real_counts[fi];
        if ((n - nreal) % 2 != 0) throw BuildFailure{};

        std::vector<CP> polished;
        polished.reserve(n);
        std::vector<char> real_flag;
        int upper = 0;
        for (int idx = 0; idx < n; ++idx) {
            CP z = lift(pts[order[idx]], prec);
            if (idx < nreal) {
                mpfr_set_zero(z.im.raw(), 1);
                Real x = z.re;
                polish_real(f, fd, x, prec);
                z.re = std::move(x);
                polished.push_back(std::move(z));
                real_flag.push_back(1);
            } else {
                if (mpfr_sgn(z.im.raw()) <= 0) continue;
                polish_complex(f, z.re, z.im, prec);
                if (mpfr_sgn(z.im.raw()) <= 0) throw BuildFailure{};
                polished.push_back(std::move(z));
                real_flag.push_back(0);
                ++upper;
            }
        }
        if (upper != (n - nreal) / 2) throw BuildFailure{};

        pts.clear();
        for (std::size_t i = 0; i < polished.size(); ++i) {
            RootDisk disk(prec);
            disk.center_re = polished[i].re;
            disk.center_im = polished[i].im;
            disk.multiplicity = mult;
            disk.factor_index = static_cast<int>(fi);
            disk.is_real = real_flag[i] != 0;
            auto rad = certified_radius(f, fd, disk, prec);
            if (!rad) throw BuildFailure{};
            disk.radius = std::move(*rad);
            pts.push_back(lift(polished[i], prec));
            int self = static_cast<int>(disks.size());
            if (!disk.is_real) {
                RootDisk mirror = disk;
                mpfr_neg(mirror.center_im.raw(), mirror.center_im.raw(), MPFR_RNDN);
                disk.conjugate_index = self + 1;
                mirror.conjugate_index = self;
                disks.push_back(std::move(disk));
                disks.push_back(std::move(mirror));
                CP m = lift(pts.back(), prec);
                mpfr_neg(m.im.raw(), m.im.raw(), MPFR_RNDN);
                pts.push_back(std::move(m));
            } else {
                disks.push_back(std::move(disk));
            }
        }
        if (static_cast<int>(pts.size()) != n) throw BuildFailure{};
    }
    if (!disks_disjoint(disks, prec)) throw BuildFailure{};
    return disks;
}

} // namespace

ComplexBox RootDisk::box() const {
    mpfr_prec_t prec = center_re.prec();
    Interval re(prec), im(prec);
    mpfr_sub(re.lo_ref().raw(), center_re.raw(), radius.raw(), MPFR_RNDD);
    mpfr_add(re.hi_ref().raw(), center_re.raw(), radius.raw(), MPFR_RNDU);
    mpfr_sub(im.lo_ref().raw(), center_im.raw(), radius.raw(), MPFR_RNDD);
    mpfr_add(im.hi_ref().raw(), center_im.raw(), radius.raw(), MPFR_RNDU);
    return {std::move(re), std::move(im)};
}

Interval RootDisk::modulus_interval() const {
    mpfr_prec_t prec = center_re.prec();
    Interval center_mod =
        ComplexBox(Interval::point(center_re), Interval::point(center_im)).modulus();
    Interval span(prec);
    mpfr_neg(span.lo_ref().raw(), radius.raw(), MPFR_RNDD);
    mpfr_set(span.hi_ref().raw(), radius.raw(), MPFR_RNDU);
    Interval enc = center_mod + span;
    if (mpfr_sgn(enc.lo().raw()) < 0) mpfr_set_zero(enc.lo_ref().raw(), 1);
    return enc;
}

RootProfile isolate_roots(const IntPoly& p, const IsolateOptions& opts) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    RootProfile prof;
    prof.poly = p;
    prof.precision = opts.initial_precision;
    prof.precision_cap = opts.precision_cap;
    if (p.degree() == 0) return prof;

    SquarefreeDecomposition sf = squarefree_decomposition(p);
    for (auto& [f, m] : sf.parts)
        if (f.degree() >= 1) prof.factors.emplace_back(f, m);
    if (prof.factors.empty()) return prof;

    std::vector<int> real_counts;
    for (auto& [f, m] : prof.factors) real_counts.push_back(count_real_roots(f));

    mpfr_prec_t prec = opts.initial_precision;
    std::vector<std::vector<CP>> approx(prof.factors.size());
    for (std::size_t i = 0; i < prof.factors.size(); ++i) {
        if (auto zs = aberth_double(prof.factors[i].first)) {
            for (auto& z : *zs) approx[i].push_back(cp_from(z, prec));
        }
    }

    while (true) {
        try {
            prof.disks = build_disks(prof, real_counts, approx, prec);
            prof.precision = prec;
            update_statuses(prof);
            return prof;
        } catch (const BuildFailure&) {
            if (prec >= opts.precision_cap)
                throw IsolationFailure("root isolation failed at the precision cap");
            prec = std::min<mpfr_prec_t>(prec * 2, opts.precision_cap);
            for (std::size_t i = 0; i < prof.factors.size(); ++i)
                approx[i] = aberth_mp(prof.factors[i].first, prec,
                                      approx[i].empty() ? nullptr : &approx[i]);
        }
    }
}

bool refine_step(RootProfile& prof) {
    if (prof.precision >= prof.precision_cap) return false;
    mpfr_prec_t prec = std::min<mpfr_prec_t>(prof.precision * 2, prof.precision_cap);

    std::vector<RootDisk> next = prof.disks;
    for (RootDisk& disk : next) {
        const IntPoly& f = prof.factors[disk.factor_index].first;
        IntPoly fd = derivative(f);
        if (disk.is_real) {
            Real x = lift(disk.center_re, prec);
            polish_real(f, fd, x, prec);
            disk.center_re = std::move(x);
            disk.center_im = Real(prec);
        } else if (mpfr_sgn(disk.center_im.raw()) > 0) {
            Real re = lift(disk.center_re, prec);
            Real im = lift(disk.center_im, prec);
            polish_complex(f, re, im, prec);
            disk.center_re = std::move(re);
            disk.center_im = std::move(im);
        } else {
            continue; // mirrored below
        }
        auto rad = certified_radius(f, fd, disk, prec);
        if (!rad) throw IsolationFailure("refinement lost certification");
        disk.radius = std::move(*rad);
    }
    for (std::size_t i = 0; i < next.size(); ++i) {
        if (next[i].is_real || next[i].conjugate_index < 0) continue;
        if (mpfr_sgn(next[i].center_im.raw()) > 0) continue;
        const RootDisk& up = next[next[i].conjugate_index];
        next[i].center_re = up.center_re;
        next[i].center_im = up.center_im;
        mpfr_neg(next[i].center_im.raw(), next[i].center_im.raw(), MPFR_RNDN);
        next[i].radius = up.radius;
    }
    if (!disks_disjoint(next, prec)) throw IsolationFailure("refinement lost disjointness");

    // keep previously decided statuses
    for (std::size_t i = 0; i < next.size(); ++i) next[i].status = prof.disks[i].status;
    prof.disks = std::move(next);
    prof.precision = prec;
    update_statuses(prof);
    return true;
}

RootProfile refine(RootProfile prof, double max_radius) {
    if (max_radius <= 0) throw std::invalid_argument("refine: max_radius must be positive");
    while (true) {
        bool done = true;
        for (const RootDisk& disk : prof.disks)
            if (disk.radius.to_double(MPFR_RNDU) > max_radius) done = false;
        if (done) return prof;
        if (!refine_step(prof))
            throw PrecisionExhausted("refine: precision cap reached before radius target");
    }
}

static void classify_in_place(RootProfile& prof) {
    update_statuses(prof);
    if (prof.disks.empty()) return;

    // roots on the unit circle are common roots of q and its reciprocal,
    // where q is the input with any power of X removed
    std::size_t shift = 0;
    const IntPoly& p = prof.poly;
    while (p.coeff(shift) == 0) ++shift;
    std::vector<mpz_class> qc(p.coeffs().begin() + shift, p.coeffs().end());
    IntPoly q(std::move(qc));
    IntPoly g = gcd(primitive_part(q), reciprocal(primitive_part(q)));

    while (true) {
        bool need = false;
        for (const RootDisk& disk : prof.disks) {
            if (disk.status != CircleStatus::on_or_undecided) continue;
            if (g.degree() == 0) {
                need = true;
                break;
            }
            if (!eval_box(g, disk.box()).contains_zero()) {
                need = true;
                break;
            }
        }
        if (!need) return;
        if (!refine_step(prof)) return;
    }
}

RootProfile classify_circle_status(const IntPoly& p, RootProfile prof) {
    if (!(p == prof.poly))
        throw std::invalid_argument("classify_circle_status: profile does not belong to p");
    classify_in_place(prof);
    return prof;
}

} // namespace digitseal
