#include "berge/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace berge {

ExtendedRational::ExtendedRational(Int numerator, Int denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (num_ == 0 && den_ == 0)
        throw std::domain_error("0/0 is not an extended rational");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_ == 0) {
        num_ = 1;
    } else if (num_ == 0) {
        den_ = 1;
    } else {
        Int g = gcd_of(abs_of(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }
}

bool ExtendedRational::abs_less_than_one() const {
    if (is_infinite()) return false;
    return abs_of(num_) < den_;
}

bool ExtendedRational::abs_greater_than_one() const {
    if (is_infinite()) return true;
    return abs_of(num_) > den_;
}

ExtendedRational ExtendedRational::negated() const {
    if (is_infinite()) return *this;
    return ExtendedRational(-num_, den_);
}

ExtendedRational ExtendedRational::reciprocal() const {
    return ExtendedRational(den_, num_);
}

bool ExtendedRational::operator<(const ExtendedRational& o) const {
    if (is_infinite()) return false;
    if (o.is_infinite()) return true;
    return num_ * o.den_ < o.num_ * den_;
}

std::string ExtendedRational::str() const {
    return to_string(num_) + "/" + to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
    return os << r.str();
}

ExtendedRational parse_rational(const std::string& text) {
    auto bad = [&](const std::string& why) {
        return std::invalid_argument("bad rational '" + text + "': " + why);
    };
    if (text.empty()) throw bad("empty");
    std::string nums, dens;
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        nums = text;
        dens = "1";
    } else {
        nums = text.substr(0, slash);
        dens = text.substr(slash + 1);
    }
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!is_int(nums)) throw bad("numerator token '" + nums + "'");
    if (!is_int(dens)) throw bad("denominator token '" + dens + "'");
    Int n(nums), d(dens);
    if (n == 0 && d == 0) throw std::domain_error("bad rational '0/0'");
    if (d != 0 && n != 0 && gcd_of(abs_of(n), abs_of(d)) != 1)
        throw bad("not in lowest terms");
    return ExtendedRational(n, d);
}

}  // namespace berge
