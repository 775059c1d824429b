#include "berge/framing.hpp"

#include <stdexcept>

namespace berge {

Int transition_index(const Int& e_phi, const Int& e_psi) {
    if (e_psi % 3 != 0)
        throw std::domain_error("no transition index: e_psi not divisible by 3");
    Int m = e_psi / 3;
    Int four_j = e_phi - 2 * m;
    if (four_j % 4 != 0)
        throw std::domain_error("no transition index: residue not divisible by 4");
    return four_j / 4;
}

BoundaryCoordinates boundary_coordinates(const SpecialForm& form,
                                         const GeneratorWord& monodromy_framing) {
    GeneratorWord omega = monodromy_framing.inverse() * form.standard_framing();
    PhiPsiSums sums = letter_exponent_sums(omega);
    Int j = transition_index(sums.e_phi, sums.e_psi);
    switch (form.J) {
        case 0: return {1, -j};
        case 2: return {2, 1 - j};
        case 1: return {4, 1 - j};
        case -1: return {4, -1 - j};
        default: throw std::invalid_argument("special form J must be -1..2");
    }
}

bool is_meridional(const BoundaryCoordinates& bc) {
    return bc.wraps == 1 && bc.longitude == 0;
}

}  // namespace berge
