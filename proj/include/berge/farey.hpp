#pragma once

#include <vector>

#include "berge/contfrac.hpp"
#include "berge/rational.hpp"

namespace berge {

// An oriented edge-path in the Farey diagram: vertices 1/0, 0/1, then the
// partial fractions of a continued fraction. Consecutive vertices a/b, c/d
// always satisfy |ad - bc| = 1.
struct EdgePath {
    std::vector<ExtendedRational> vertices;
};

EdgePath cf_to_edgepath(const ContFrac& cf);

bool farey_adjacent(const ExtendedRational& a, const ExtendedRational& b);

// Brute-force enumeration of all MCFEs of x by depth-first search over
// Farey edges confined to the strip of triangles spanned by the edge-path
// of scfe(x). Deliberately independent of the chain-move enumerator in
// contfrac; the two are cross-checked wholesale in the test suites.
// Values with |x| >= 1 have none.
std::vector<ContFrac> oracle_enumerate_mcfe(const ExtendedRational& x);

// Exhaustively searches alternating-sign expansions of x (the denominators
// of their partials grow strictly, so the search is finite) and reports
// whether exactly one satisfies is_scfe. Throws if den(x) exceeds the
// bound.
bool oracle_scfe_unique(const ExtendedRational& x, unsigned den_bound = 200);

}  // namespace berge
