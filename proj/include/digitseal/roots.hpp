#ifndef DIGITSEAL_ROOTS_HPP
#define DIGITSEAL_ROOTS_HPP

#include "digitseal/interval.hpp"
#include "digitseal/intpoly.hpp"

#include <vector>

namespace digitseal {

enum class CircleStatus { inside, outside, on_or_undecided };

/// A certified disk D(center, radius) containing exactly one root of one
/// squarefree factor of the profiled polynomial.
struct RootDisk {
    Real center_re, center_im;
    /// Upper bound on the distance from the center to the root.
    Real radius;
    unsigned multiplicity = 1;
    CircleStatus status = CircleStatus::on_or_undecided;
    /// Index into RootProfile::factors of the squarefree factor this root
    /// belongs to.
    int factor_index = 0;
    /// True when the root is known (exactly, via real-root counting) to be
    /// real; the center then has a zero imaginary part.
    bool is_real = false;
    /// Index of the complex-conjugate partner disk, -1 for real roots.
    int conjugate_index = -1;

    explicit RootDisk(mpfr_prec_t prec = 64)
        : center_re(prec), center_im(prec), radius(prec) {}

    /// Axis-aligned bounding box of the disk.
    ComplexBox box() const;
    /// Enclosure of |root|: [|center| - radius, |center| + radius], clamped
    /// below at zero.
    Interval modulus_interval() const;
};

struct RootProfile {
    IntPoly poly;
    /// Squarefree factors of positive degree with their multiplicities.
    std::vector<std::pair<IntPoly, unsigned>> factors;
    /// One disk per root of each squarefree factor (so distinct roots), with
    /// multiplicity tags; pairwise disjoint.
    std::vector<RootDisk> disks;
    mpfr_prec_t precision = 64;
    mpfr_prec_t precision_cap = 4096;
};

struct IsolateOptions {
    mpfr_prec_t initial_precision = 64;
    mpfr_prec_t precision_cap = 4096;
};

/// Approximate all roots, then certify: each disk contains exactly one root
/// of its squarefree factor and the disks are pairwise disjoint. Real roots
/// are recognized exactly (Sturm counts) and complex ones come in mirrored
/// conjugate pairs. Throws IsolationFailure if certification keeps failing
/// up to the precision cap.
RootProfile isolate_roots(const IntPoly& p, const IsolateOptions& opts = {});

/// Double the working precision, re-polish all centers and re-certify.
/// Returns false (leaving the profile valid but unchanged in precision) when
/// the cap has been reached.
bool refine_step(RootProfile& prof);

/// Profile with every disk radius at most max_radius. Throws
/// PrecisionExhausted at the cap.
RootProfile refine(RootProfile prof, double max_radius);

/// Profile with sharpened circle statuses: any disk that provably avoids the
/// unit circle becomes inside/outside. Roots that cannot lie on the circle
/// (they are not roots of gcd(q, reciprocal(q))) are refined until they
/// decide; genuinely unimodular roots stay on_or_undecided. p must be the
/// profiled polynomial.
RootProfile classify_circle_status(const IntPoly& p, RootProfile prof);

} // namespace digitseal

#endif
