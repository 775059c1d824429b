#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace berge {

// All arithmetic in this library is exact. Coefficient families get large
// enough (iterated conjugation, modular knot families) that fixed-width
// integers are not an option.
using Int = mpz_class;

inline int sign_of(const Int& a) { return sgn(a); }

inline Int abs_of(const Int& a) { return abs(a); }

inline Int gcd_of(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Exact quotient; throws if b does not divide a.
inline Int div_exact(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0)
        throw std::domain_error("div_exact: not divisible");
    return a / b;
}

inline bool fits_size(const Int& a) { return a >= 0 && a.fits_ulong_p(); }

inline std::size_t to_size(const Int& a) {
    if (!fits_size(a))
        throw std::overflow_error("coefficient too large for an index/count");
    return static_cast<std::size_t>(a.get_ui());
}

inline std::string to_string(const Int& a) { return a.get_str(); }

}  // namespace berge
