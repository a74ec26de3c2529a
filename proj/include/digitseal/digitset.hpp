#ifndef DIGITSEAL_DIGITSET_HPP
#define DIGITSEAL_DIGITSET_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace digitseal {

/// Finite digit alphabet for the coefficient constraint. Digits are kept
/// distinct and sorted ascending; at least one digit must be nonzero and at
/// most 16 digits are supported.
class DigitSet {
public:
    static DigitSet littlewood(); // {-1, 1}
    static DigitSet newman();     // {0, 1}
    static DigitSet custom(std::vector<mpz_class> digits);

    const std::vector<mpz_class>& digits() const { return digits_; }
    /// B = max |d|.
    const mpz_class& bound() const { return bound_; }
    /// D == -D
    bool is_symmetric() const { return symmetric_; }
    bool contains_zero() const { return has_zero_; }
    bool contains(const mpz_class& d) const;
    std::size_t size() const { return digits_.size(); }
    std::string describe() const;

private:
    explicit DigitSet(std::vector<mpz_class> digits);

    std::vector<mpz_class> digits_;
    mpz_class bound_;
    bool symmetric_ = false;
    bool has_zero_ = false;
};

} // namespace digitseal

#endif
