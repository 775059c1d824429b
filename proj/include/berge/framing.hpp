#pragma once

#include "berge/surface.hpp"
#include "berge/word.hpp"

namespace berge {

// Solves (e_phi, e_psi) = (4j, 0) mod (2,3) for the transition index j,
// i.e. finds the unique integers m, j with e_psi = 3m and e_phi - 2m = 4j.
// Throws std::domain_error when no solution exists (the two framings do not
// frame conjugate classes).
Int transition_index(const Int& e_phi, const Int& e_psi);

// Coordinates <p, q> of a boundary curve with respect to a chosen framing:
// p times the framing curve plus q times the fiber boundary.
struct BoundaryCoordinates {
    Int wraps;      // intersections with the fiber
    Int longitude;  // wrapping along the fiber boundary

    bool operator==(const BoundaryCoordinates& o) const {
        return wraps == o.wraps && longitude == o.longitude;
    }
    std::string str() const {
        return "<" + to_string(wraps) + ", " + to_string(longitude) + ">";
    }
};

// Boundary coordinates of the twisted surface of a special form, relative
// to the framing word zeta (alpha/beta or phi/psi letters) of the
// monodromy: reads the letter exponent sums of zeta^-1 xi, resolves the
// transition index and applies the per-J coordinate table
//   J = 0: <1, -j>, J = 2: <2, 1-j>, J = +1: <4, 1-j>, J = -1: <4, -1-j>.
BoundaryCoordinates boundary_coordinates(const SpecialForm& form,
                                         const GeneratorWord& monodromy_framing);

// A boundary curve is the meridian exactly when it crosses each fiber once
// with no longitudinal wrapping.
bool is_meridional(const BoundaryCoordinates& bc);

}  // namespace berge
