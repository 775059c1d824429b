#pragma once

#include <iosfwd>
#include <string>

#include "berge/integer.hpp"

namespace berge {

// A reduced fraction in Q union {infinity}. The denominator is never
// negative; the sign lives in the numerator. Infinity is the single value
// 1/0, zero is 0/1.
class ExtendedRational {
public:
    ExtendedRational() : num_(0), den_(1) {}
    ExtendedRational(Int numerator, Int denominator);

    static ExtendedRational infinity() { return ExtendedRational(1, 0); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0 && den_ != 0; }
    bool is_integer() const { return den_ == 1; }

    int sign() const { return sign_of(num_); }

    // |value| compared with 1; infinity counts as greater.
    bool abs_less_than_one() const;
    bool abs_greater_than_one() const;
    bool is_unit() const { return den_ == 1 && abs_of(num_) == 1; }

    ExtendedRational negated() const;
    // 1/x, with 1/0 <-> 0/1.
    ExtendedRational reciprocal() const;

    bool operator==(const ExtendedRational& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const ExtendedRational& o) const { return !(*this == o); }
    // Total order: finite values numerically, infinity last.
    bool operator<(const ExtendedRational& o) const;

    std::string str() const;  // "p/q", infinity as "1/0"

private:
    Int num_, den_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

// Parses "p/q" or a bare integer "p". A negative denominator is folded into
// the numerator. Throws std::invalid_argument on malformed or non-reduced
// input ("2/4"), std::domain_error on "0/0".
ExtendedRational parse_rational(const std::string& text);

}  // namespace berge
