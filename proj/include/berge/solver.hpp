#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "berge/algorithm.hpp"
#include "berge/contfrac.hpp"
#include "berge/surface.hpp"

namespace berge {

// Fast enumeration of the closed essential surfaces for a knot on the fiber
// of the left-handed trefoil, driven by the index-set equation on the SCFE
// [b1..bk] of its slope. Each surviving pair of index sets (I, J)
// reconstructs one surface without running the general listing; the two
// routes are cross-checked in the test suites.
//
// The doubled expansion of the conjugate slope splits into a negated half,
// a merged coefficient and an original half; chain moves indexed by I act
// on the negated half (plus the merged coefficient when it carries the
// negated flavour), moves indexed by J act on the original half. The case
// is picked by the leading coefficients:
//   case 1: b1 != 0, 1      case 2: b1 = 0, b2 != -1
//   case 3: b1 = 0, b2 = -1 case 4: b1 = 1
struct IndexSetSolution {
    int case_tag = 0;                // 1..4
    std::vector<std::size_t> I, J;   // ascending 1-based b-indices
    Int N;                           // 0 or sgn(bk); sgn(bk) iff k in I
    Int N_prime;                     // appended final coefficient
    ContFrac x_s;                    // SCFE of p(N)/q(N)
    ContFrac x_m;                    // reconstructed odd-length MCFE
    SurfaceDescriptor surface;       // C(0; x_m, N')

    std::string str() const;
};

// The SCFE of p(N)/q(N) for the conjugate of the left trefoil monodromy
// along the slope of scfe_b; N must be 0 or sgn(bk). Built from the
// doubled expansion and verified against the conjugated matrix. Rejects
// the unknot slopes 0, +-1, 1/0 and 1/2.
ContFrac conjugate_scfe(const ContFrac& scfe_b, const Int& N);

// All index-set solutions for the slope of scfe_b, sorted by
// (|I|+|J|, I, J). Every solution is reconstructed and re-verified:
// x_m is an odd-length MCFE of p(N)/q(N), [x_m, N'] evaluates to
// r(N)/s(N), and sigma(x_m) + N' equals E(H) = -2. Unknot slopes have no
// solutions. Throws on a malformed (non-SCFE) input.
std::vector<IndexSetSolution> solve_index_equation(const ContFrac& scfe_b);

// Surfaces of the solutions, deduplicated and sorted like the general
// listing.
std::vector<SurfaceDescriptor> solver_surfaces(const ContFrac& scfe_b);

// True when the modular smallness test applies: every b_i with i >= 2 is
// divisible by phi0 while b1 is neither 0 nor 1 mod phi0. A passing
// expansion admits no index-set solutions at all, so the knot complement
// contains no closed essential surface. Requires phi0 >= 5 and an SCFE.
bool small_knot_certificate(const ContFrac& scfe_b, const Int& phi0);

}  // namespace berge
