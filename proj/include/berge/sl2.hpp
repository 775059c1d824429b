#pragma once

#include <iosfwd>
#include <string>

#include "berge/integer.hpp"
#include "berge/rational.hpp"

namespace berge {

// Determinant-one integer 2x2 matrix, rows (x y; t u).
class SL2Matrix {
public:
    SL2Matrix() : x_(1), y_(0), t_(0), u_(1) {}
    SL2Matrix(Int x, Int y, Int t, Int u);

    static SL2Matrix identity() { return SL2Matrix(); }

    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    const Int& t() const { return t_; }
    const Int& u() const { return u_; }

    Int trace() const { return x_ + u_; }

    // Ratio of the first column (top over bottom).
    ExtendedRational first_column_ratio() const { return ExtendedRational(x_, t_); }
    // Ratio of the second column.
    ExtendedRational second_column_ratio() const { return ExtendedRational(y_, u_); }

    SL2Matrix inverse() const { return SL2Matrix(u_, -y_, -t_, x_); }
    SL2Matrix negated() const { return SL2Matrix(-x_, -y_, -t_, -u_); }

    bool operator==(const SL2Matrix& o) const {
        return x_ == o.x_ && y_ == o.y_ && t_ == o.t_ && u_ == o.u_;
    }
    bool operator!=(const SL2Matrix& o) const { return !(*this == o); }

    std::string str() const;  // "(x y; t u)"

private:
    Int x_, y_, t_, u_;
};

SL2Matrix operator*(const SL2Matrix& a, const SL2Matrix& b);
std::ostream& operator<<(std::ostream& os, const SL2Matrix& m);

SL2Matrix mat_mul(const SL2Matrix& a, const SL2Matrix& b);

// The standard generators.
SL2Matrix gen_A();  // (1 -1; 0 1)
SL2Matrix gen_B();  // (1 0; 1 1)
SL2Matrix gen_P();  // (0 -1; 1 0) = BAB
SL2Matrix gen_Q();  // (1 1; -1 0) = B^-1 A^-1

// Closed-form powers. A and B are shears, P has order 4, Q has order 6.
SL2Matrix power_A(const Int& n);
SL2Matrix power_B(const Int& n);
SL2Matrix power_P(const Int& n);
SL2Matrix power_Q(const Int& n);

}  // namespace berge
