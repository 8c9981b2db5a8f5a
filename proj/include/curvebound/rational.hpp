#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace curvebound {

// Exact arbitrary-precision integers and rationals. Rationals are kept
// canonical (positive denominator, reduced) by GMP.
using Int = mpz_class;
using Rat = mpq_class;

inline int sign_of(const Rat& v) { return sgn(v); }
inline int sign_of(const Int& v) { return sgn(v); }

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// base^e for integer e of either sign; base must be nonzero when e < 0.
inline Rat rat_pow(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    if (base == 0 && e < 0) throw std::domain_error("rat_pow: 0 to a negative power");
    unsigned long ue = static_cast<unsigned long>(e < 0 ? -e : e);
    Int num = int_pow(base.get_num(), ue);
    Int den = int_pow(base.get_den(), ue);
    Rat r;
    if (e > 0) {
        r = Rat(num, den);
    } else {
        r = Rat(den, num);
    }
    r.canonicalize();
    return r;
}

// Serialized form used everywhere rationals cross an interface: always
// "numerator/denominator", never a float.
inline std::string rat_to_string(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

// Accepts "123", "-7", "3/4", "0.25", "-1.5/2" and the dyadic shorthand
// "2^-32". Decimal digits are converted exactly.
Rat rat_from_string(const std::string& text);

}  // namespace curvebound
