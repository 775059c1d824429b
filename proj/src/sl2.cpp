#include "berge/sl2.hpp"

#include <ostream>
#include <stdexcept>

namespace berge {

SL2Matrix::SL2Matrix(Int x, Int y, Int t, Int u)
    : x_(std::move(x)), y_(std::move(y)), t_(std::move(t)), u_(std::move(u)) {
    if (x_ * u_ - y_ * t_ != 1)
        throw std::domain_error("matrix determinant is not 1: " + str());
}

std::string SL2Matrix::str() const {
    return "(" + to_string(x_) + " " + to_string(y_) + "; " + to_string(t_) +
           " " + to_string(u_) + ")";
}

SL2Matrix operator*(const SL2Matrix& a, const SL2Matrix& b) {
    return SL2Matrix(a.x() * b.x() + a.y() * b.t(), a.x() * b.y() + a.y() * b.u(),
                     a.t() * b.x() + a.u() * b.t(), a.t() * b.y() + a.u() * b.u());
}

std::ostream& operator<<(std::ostream& os, const SL2Matrix& m) {
    return os << m.str();
}

SL2Matrix mat_mul(const SL2Matrix& a, const SL2Matrix& b) { return a * b; }

SL2Matrix gen_A() { return SL2Matrix(1, -1, 0, 1); }
SL2Matrix gen_B() { return SL2Matrix(1, 0, 1, 1); }
SL2Matrix gen_P() { return SL2Matrix(0, -1, 1, 0); }
SL2Matrix gen_Q() { return SL2Matrix(1, 1, -1, 0); }

SL2Matrix power_A(const Int& n) { return SL2Matrix(1, -n, 0, 1); }
SL2Matrix power_B(const Int& n) { return SL2Matrix(1, 0, n, 1); }

SL2Matrix power_P(const Int& n) {
    Int r = n % 4;
    if (r < 0) r += 4;
    switch (r.get_ui()) {
        case 0: return SL2Matrix::identity();
        case 1: return gen_P();
        case 2: return SL2Matrix(-1, 0, 0, -1);
        default: return gen_P().negated();  // P^3 = -P
    }
}

SL2Matrix power_Q(const Int& n) {
    Int r = n % 6;
    if (r < 0) r += 6;
    SL2Matrix q2(0, 1, -1, -1);
    switch (r.get_ui()) {
        case 0: return SL2Matrix::identity();
        case 1: return gen_Q();
        case 2: return q2;
        case 3: return SL2Matrix(-1, 0, 0, -1);
        case 4: return gen_Q().negated();
        default: return q2.negated();
    }
}

}  // namespace berge
