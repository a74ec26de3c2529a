#include "digitseal/digitset.hpp"

#include <algorithm>
#include <stdexcept>

namespace digitseal {

DigitSet::DigitSet(std::vector<mpz_class> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) throw std::invalid_argument("digit set must be nonempty");
    std::sort(digits_.begin(), digits_.end());
    digits_.erase(std::unique(digits_.begin(), digits_.end()), digits_.end());
    if (digits_.size() > 16) throw std::invalid_argument("digit sets above 16 digits are unsupported");

    for (const mpz_class& d : digits_) {
        if (d == 0) has_zero_ = true;
        bound_ = std::max(bound_, mpz_class(abs(d)));
    }
    if (bound_ == 0) throw std::invalid_argument("digit set must contain a nonzero digit");

    symmetric_ = std::all_of(digits_.begin(), digits_.end(), [&](const mpz_class& d) {
        return contains(-d);
    });
}

DigitSet DigitSet::littlewood() { return DigitSet({mpz_class(-1), mpz_class(1)}); }

DigitSet DigitSet::newman() { return DigitSet({mpz_class(0), mpz_class(1)}); }

DigitSet DigitSet::custom(std::vector<mpz_class> digits) { return DigitSet(std::move(digits)); }

bool DigitSet::contains(const mpz_class& d) const {
    return std::binary_search(digits_.begin(), digits_.end(), d);
}

std::string DigitSet::describe() const {
    std::string s = "{";
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (i) s += ",";
        s += digits_[i].get_str();
    }
    s += "}";
    return s;
}

} // namespace digitseal
