#ifndef DIGITSEAL_INTPOLY_HPP
#define DIGITSEAL_INTPOLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace digitseal {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients.
///
/// Coefficients are stored lowest degree first: coeff(i) is the coefficient
/// of X^i. The representation is kept normalized, i.e. the zero polynomial
/// stores nothing and otherwise the top coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(mpz_class c);
    /// c * X^k
    static IntPoly monomial(mpz_class c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Coefficient of X^i (zero beyond the degree).
    const mpz_class& coeff(std::size_t i) const;
    /// Leading coefficient; requires a nonzero polynomial.
    const mpz_class& leading() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const mpz_class& s, const IntPoly& p);

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    /// Total order (degree, then coefficients from the top down); used for
    /// canonical representatives, no arithmetic meaning.
    friend bool operator<(const IntPoly& a, const IntPoly& b);

private:
    void normalize();
    std::vector<mpz_class> c_;
};

struct DivModResult {
    IntPoly quotient;
    IntPoly remainder;
};

/// Euclidean division by a monic divisor: a = q*b + r with deg r < deg b.
/// Throws std::invalid_argument unless b is monic of degree >= 1.
DivModResult divmod_monic(const IntPoly& a, const IntPoly& b);

/// Quotient a/b when b divides a exactly over Z[X]; nullopt otherwise.
std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b);

/// Does p divide q over Z[X]? (zero divides only zero)
bool divides(const IntPoly& p, const IntPoly& q);

/// X^deg(p) * p(1/X). Requires p(0) != 0 so the operation is an involution.
IntPoly reciprocal(const IntPoly& p);

/// Max |coefficient|; 0 for the zero polynomial.
mpz_class height(const IntPoly& p);

/// k-th derivative.
IntPoly derivative(const IntPoly& p, unsigned k = 1);

/// p(-X)
IntPoly substitute_neg_x(const IntPoly& p);

mpz_class evaluate(const IntPoly& p, const mpz_class& x);

/// Number of nonzero coefficients.
std::size_t term_count(const IntPoly& p);

/// gcd of the coefficients, >= 0 (0 only for the zero polynomial).
mpz_class content(const IntPoly& p);

/// p divided by its content, sign-normalized to a positive leading
/// coefficient. Zero maps to zero.
IntPoly primitive_part(const IntPoly& p);

/// Polynomial gcd over Z[X] (content gcd times primitive gcd via a primitive
/// remainder sequence); result has a positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Compact, injective byte encoding of the coefficient vector, suitable as a
/// hash map key.
std::string encode_key(const IntPoly& p);

} // namespace digitseal

#endif
