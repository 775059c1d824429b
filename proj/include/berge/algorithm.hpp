#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berge/contfrac.hpp"
#include "berge/framing.hpp"
#include "berge/monodromy.hpp"
#include "berge/rational.hpp"
#include "berge/sl2.hpp"
#include "berge/surface.hpp"

namespace berge {

// A slope given as an ordered coprime pair (x, y); y normalized >= 0.
struct SlopePair {
    Int x, y;
};
SlopePair slope_pair(const ExtendedRational& slope);

// Deterministic change-of-basis matrix with first column (x, y): the second
// column is the extended-Euclid cofactor pair reduced so the top-right
// entry e satisfies -|x|/2 < e <= |x|/2 (reduced against the bottom pair
// when x = 0). Requires gcd(x, y) = 1.
SL2Matrix choose_W(const SlopePair& slope);

// X(N) = (W A^N)^-1 H (W A^N).
SL2Matrix build_X(const SL2Matrix& H, const SL2Matrix& W, const Int& N);

// All N with |p(N)| < |q| where (p(N), q) is the first column of X(N);
// q is independent of N and p(N) = p(0) + N q, so there are at most two.
// Throws when q = 0 (the conjugating curve is fixed by H).
std::vector<Int> list_valid_N(const SL2Matrix& H, const SL2Matrix& W);

// Given an expansion m of the first-column ratio p/q of X, the unique
// integer a with eval([m, a]) equal to the second-column ratio r/s,
// obtained by solving the linear pair relation and re-verified by
// evaluation. Throws if no integer works (X is then not a conjugate the
// expansion came from).
Int find_final_coefficient(const ContFrac& mcfe, const SL2Matrix& X);

// Every special form of every conjugate X(N) of H by W A^N: one form per
// valid N and per MCFE of p(N)/q(N) of any length, with the final
// coefficient appended and J resolved by comparing the word matrix against
// +-X(N) (P^2 = -I). Sorted.
std::vector<SpecialForm> special_forms_of(const SL2Matrix& H, const SL2Matrix& W);

// One examined candidate in the closed-surface listing.
struct TraceCandidate {
    ContFrac coefficients;  // odd-length MCFE plus the appended coefficient
    Int sigma;              // coefficient sum of the full list
    int J;
    bool accepted;          // sigma == E(H)
};

struct TraceEntry {
    Int N;
    SL2Matrix X;
    ExtendedRational pq;  // first-column ratio
    ExtendedRational rs;  // second-column ratio
    std::size_t odd_mcfe_count = 0;
    std::vector<TraceCandidate> candidates;
};

// Full record of a closed-surface enumeration run.
struct AlgorithmTrace {
    ExtendedRational slope;
    std::string monodromy;
    SL2Matrix W;
    std::vector<Int> valid_N;
    std::vector<TraceEntry> entries;
    std::vector<std::string> annotations;  // e.g. "unknot slope"
};

// Lists all closed connected essential surfaces in the complement of the
// level knot of the given slope on the fiber of a built-in monodromy:
// for each valid N, each odd-length MCFE of p(N)/q(N) extended by its
// final coefficient is kept exactly when its coefficient sum equals E(H).
// Surfaces come back sorted by (size, coefficients); the trace records
// every candidate. Requires a built-in monodromy and a coprime slope.
std::vector<SurfaceDescriptor> algorithm_streamlined(const Monodromy& monodromy,
                                                     const ExtendedRational& slope,
                                                     AlgorithmTrace* trace = nullptr);

}  // namespace berge
