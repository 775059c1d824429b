#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "berge/rational.hpp"

namespace berge {

// A continued fraction [b1, ..., bk] in the minus convention
//
//     [b1, ..., bk] = 1/(b1 - 1/(b2 - ... - 1/bk)),   [] = 0.
//
// Any integer list is a legal continued fraction; SCFE/MCFE are predicates.
// Positions are 1-based throughout, matching the b_i indexing.
using ContFrac = std::vector<Int>;

std::string cf_str(const ContFrac& cf);       // "[2,-1,2,-2]"
ContFrac parse_cf(const std::string& text);   // inverse of cf_str

// Total evaluation via projective Moebius composition; intermediate
// infinities (e.g. prefixes starting with 0) are fine.
ExtendedRational eval_cf(const ContFrac& cf);

inline std::size_t cf_length(const ContFrac& cf) { return cf.size(); }
Int coefficient_sum(const ContFrac& cf);

// Value of the prefix [b1..bi]; i = 0 gives 0.
ExtendedRational partial_fraction(const ContFrac& cf, std::size_t i);

// The numerator/denominator pairs of all partial fractions, as exact column
// vectors satisfying C_i = b_i C_{i-1} - C_{i-2} with C_{-1} = (-1,0),
// C_0 = (0,1). Unlike ExtendedRational these carry a sign.
struct CfVertex {
    Int p, q;
    bool operator==(const CfVertex& o) const { return p == o.p && q == o.q; }
};
std::vector<CfVertex> partial_vertices(const ContFrac& cf);  // C_0..C_k

// Simple continued fraction expansion: signs alternate, b_i != 0 for i >= 2,
// |bk| >= 2. The values +-1, which admit no such tail, take the
// conventional expansions [0,-1] and [0,1].
bool is_scfe(const ContFrac& cf);
// Minimal continued fraction expansion: every |b_i| >= 2.
bool is_mcfe(const ContFrac& cf);

// The unique SCFE of a finite rational. Throws on infinity.
ContFrac scfe(const ExtendedRational& x);

// --- Elementary moves. Each preserves eval_cf. ---

// [..., r, s, ...] -> [..., r+e, e, s+e, ...], e = +-1; pos indexes r.
ContFrac insert_unit(const ContFrac& cf, std::size_t pos, int sign);
// [..., r] -> [..., r+e, e]
ContFrac append_unit(const ContFrac& cf, int sign);
// Inverse of insert_unit; pos indexes the +-1 being removed.
ContFrac remove_unit(const ContFrac& cf, std::size_t pos);
// Inverse of append_unit.
ContFrac pop_unit(const ContFrac& cf);
// [..., c, ...] -> [..., left, 0, c-left, ...]
ContFrac split_coefficient(const ContFrac& cf, std::size_t pos, const Int& left);
// Inverse of split_coefficient; pos indexes the 0.
ContFrac fuse_zero(const ContFrac& cf, std::size_t pos);
// [..., r] -> [..., r, s, 0]
ContFrac append_zero_pair(const ContFrac& cf, const Int& s);
// Inverse of append_zero_pair.
ContFrac pop_zero_pair(const ContFrac& cf);

// The chain move: rewrites coefficient a_i as a run of same-sign twos,
// nudging the neighbours. With e = +1 when a_i < 0 and e = -1 when a_i > 0,
//
//   interior i:  [..., a_{i-1}, a_i, a_{i+1}, ...]
//                  -> [..., a_{i-1}+e, e2, ..., e2, a_{i+1}+e, ...]
//   last i = k:  [..., a_{k-1}, a_k] -> [..., a_{k-1}+e, e2, ..., e2]
//
// with |a_i| - 1 copies of e2 = 2e. At |a_i| = 1 the run is empty and the
// coefficient collapses. Never applicable at the first coefficient.
ContFrac apply_chain_move(const ContFrac& cf, std::size_t index);

// Applies chain moves jointly at a set of pairwise non-adjacent positions
// (all >= 2, coefficients nonzero).
ContFrac apply_chain_moves(const ContFrac& cf, const std::vector<std::size_t>& indices);

// All MCFEs of x, sorted lexicographically, or only those of odd length.
// Values with |x| >= 1 (including infinity) have none.
std::vector<ContFrac> enumerate_mcfe(const ExtendedRational& x, bool odd_only = false);

// The non-adjacent chain-move index sets on scfe(x) that realize each MCFE,
// paired with the results; used as the constructive witness of
// reachability.
struct McfeWitness {
    std::vector<std::size_t> indices;
    ContFrac mcfe;
};
std::vector<McfeWitness> enumerate_mcfe_witnessed(const ExtendedRational& x);

}  // namespace berge
