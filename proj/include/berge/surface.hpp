#pragma once

#include <string>
#include <vector>

#include "berge/contfrac.hpp"
#include "berge/rational.hpp"
#include "berge/word.hpp"

namespace berge {

// A special form P^J C^{n(k)} ... B^{n(2)} A^{n(1)} of an SL2(Z) element:
// letters alternate A, B from the right, |n(i)| >= 2 for i >= 2, and J has
// the parity of k (k even: J in {0,2}, C = B; k odd: J in {-1,+1}, C = A).
// Coefficients are stored outermost-first, (n(k), ..., n(1)); n(1) is the
// innermost exponent and the last entry.
struct SpecialForm {
    int J = 0;
    ContFrac coefficients;  // n(k) first ... n(1) last

    std::size_t k() const { return coefficients.size(); }
    const Int& n(std::size_t i) const;  // 1-based, n(1) innermost

    // The word P^J ... B^{n(2)} A^{n(1)} over the matrix letters.
    GeneratorWord word() const;
    // The standard framing phi^J ... beta^{n(2)} alpha^{n(1)}.
    GeneratorWord standard_framing() const;

    Int coefficient_total() const { return coefficient_sum(coefficients); }
    bool well_formed() const;  // parity and |n(i)| >= 2 for i >= 2

    bool operator==(const SpecialForm& o) const {
        return J == o.J && coefficients == o.coefficients;
    }
    bool operator<(const SpecialForm& o) const;
    std::string str() const;
};

enum class SideClass { BoundsHandlebody, NotHandlebody, IncompressibleBothSides };

std::string side_class_name(SideClass s);

// A capped-off closed surface built from a J = 0 special form.
struct SurfaceDescriptor {
    SpecialForm form;                // J = 0
    Int genus;                       // k/2 - 1
    Int n1;                          // innermost coefficient
    ExtendedRational annulus_slope;  // -1/n(1); 1/0 when n(1) = 0
    SideClass side_class;
    // Genus-one tori may be isotopic to the boundary of the knot
    // neighbourhood; they are reported but never asserted essential.
    bool possibly_boundary_parallel = false;

    bool operator==(const SurfaceDescriptor& o) const {
        return form == o.form;
    }
    bool operator<(const SurfaceDescriptor& o) const { return form < o.form; }
    std::string str() const;
};

// Populates the descriptor of a closed J = 0 surface. Requires k even and
// positive, |n(i)| >= 2 for i >= 2.
SurfaceDescriptor classify(const SpecialForm& form);

// Genus of the closed surface whose coefficient list extends an odd-length
// expansion by one: (len+1)/2 - 1. Throws on even lengths.
Int genus_from_solution_length(std::size_t len);

std::vector<SurfaceDescriptor> sorted_by_size(std::vector<SurfaceDescriptor> surfaces);

}  // namespace berge
