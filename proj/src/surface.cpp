#include "berge/surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

const Int& SpecialForm::n(std::size_t i) const {
    if (i < 1 || i > coefficients.size())
        throw std::out_of_range("special form coefficient index");
    return coefficients[coefficients.size() - i];
}

namespace {

// Letters alternate and the innermost exponent always sits on A, so entry i
// of the outermost-first list carries A when i and k have the same parity.
Letter letter_at(std::size_t i, std::size_t k) {
    return (i % 2 == k % 2) ? Letter::A : Letter::B;
}

}  // namespace

GeneratorWord SpecialForm::word() const {
    std::vector<Syllable> sylls;
    if (J != 0) sylls.push_back({Letter::P, J});
    const std::size_t m = coefficients.size();
    for (std::size_t i = 1; i <= m; ++i)
        sylls.push_back({letter_at(i, m), coefficients[i - 1]});
    return GeneratorWord(std::move(sylls));
}

GeneratorWord SpecialForm::standard_framing() const {
    std::vector<Syllable> sylls;
    if (J != 0) sylls.push_back({Letter::Phi, J});
    const std::size_t m = coefficients.size();
    for (std::size_t i = 1; i <= m; ++i)
        sylls.push_back({letter_at(i, m) == Letter::A ? Letter::Alpha : Letter::Beta,
                         coefficients[i - 1]});
    return GeneratorWord(std::move(sylls));
}

bool SpecialForm::well_formed() const {
    const std::size_t m = coefficients.size();
    if (m % 2 == 0 && J != 0 && J != 2) return false;
    if (m % 2 == 1 && J != -1 && J != 1) return false;
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (abs_of(coefficients[i]) < 2) return false;
    return true;
}

bool SpecialForm::operator<(const SpecialForm& o) const {
    if (coefficients.size() != o.coefficients.size())
        return coefficients.size() < o.coefficients.size();
    if (coefficients != o.coefficients) return coefficients < o.coefficients;
    return J < o.J;
}

std::string SpecialForm::str() const {
    std::string s = "C(" + std::to_string(J) + "; ";
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (i) s += ",";
        s += to_string(coefficients[i]);
    }
    return s + ")";
}

std::string side_class_name(SideClass s) {
    switch (s) {
        case SideClass::BoundsHandlebody: return "bounds-handlebody";
        case SideClass::NotHandlebody: return "not-handlebody";
        default: return "incompressible-both-sides";
    }
}

std::string SurfaceDescriptor::str() const {
    return form.str() + " genus " + to_string(genus) + " " +
           side_class_name(side_class);
}

SurfaceDescriptor classify(const SpecialForm& form) {
    const std::size_t k = form.k();
    if (form.J != 0 || k == 0 || k % 2 != 0 || !form.well_formed())
        throw std::invalid_argument("not a closed-surface form: " + form.str());
    SurfaceDescriptor d;
    d.form = form;
    d.genus = Int(k) / 2 - 1;
    d.n1 = form.n(1);
    d.annulus_slope = ExtendedRational(-1, d.n1);
    if (d.n1 == 0)
        d.side_class = SideClass::NotHandlebody;
    else if (abs_of(d.n1) == 1)
        d.side_class = SideClass::BoundsHandlebody;
    else
        d.side_class = SideClass::IncompressibleBothSides;
    d.possibly_boundary_parallel = (d.genus == 1);
    return d;
}

Int genus_from_solution_length(std::size_t len) {
    if (len % 2 == 0)
        throw std::invalid_argument("solution length must be odd");
    return Int(len + 1) / 2 - 1;
}

std::vector<SurfaceDescriptor> sorted_by_size(std::vector<SurfaceDescriptor> surfaces) {
    std::sort(surfaces.begin(), surfaces.end());
    surfaces.erase(std::unique(surfaces.begin(), surfaces.end()), surfaces.end());
    return surfaces;
}

}  // namespace berge
