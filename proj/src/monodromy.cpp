#include "berge/monodromy.hpp"

#include <stdexcept>

namespace berge {

std::string monodromy_name(MonodromyKind k) {
    switch (k) {
        case MonodromyKind::LeftTrefoil: return "left-trefoil";
        case MonodromyKind::RightTrefoil: return "right-trefoil";
        case MonodromyKind::FigureEight: return "figure-eight";
        default: return "custom";
    }
}

Monodromy::Monodromy(MonodromyKind kind, GeneratorWord word)
    : kind_(kind),
      word_(std::move(word)),
      has_word_(true),
      matrix_(word_to_matrix(word_)),
      exponent_sum_(berge::exponent_sum(word_)) {
    if (matrix_.trace() == 2)
        throw std::domain_error("monodromy trace 2 fixes a curve class");
}

Monodromy::Monodromy(MonodromyKind kind, SL2Matrix matrix)
    : kind_(kind),
      has_word_(false),
      matrix_(std::move(matrix)),
      exponent_sum_(0) {
    if (matrix_.trace() == 2)
        throw std::domain_error("monodromy trace 2 fixes a curve class");
}

Monodromy Monodromy::left_trefoil() {
    return Monodromy(MonodromyKind::LeftTrefoil,
                     GeneratorWord{{Letter::A, -1}, {Letter::B, -1}});
}

Monodromy Monodromy::right_trefoil() {
    return Monodromy(MonodromyKind::RightTrefoil,
                     GeneratorWord{{Letter::B, 1}, {Letter::A, 1}});
}

Monodromy Monodromy::figure_eight() {
    return Monodromy(MonodromyKind::FigureEight,
                     GeneratorWord{{Letter::A, 1}, {Letter::B, -1}});
}

Monodromy Monodromy::from_name(const std::string& name) {
    if (name == "left-trefoil") return left_trefoil();
    if (name == "right-trefoil") return right_trefoil();
    if (name == "figure-eight") return figure_eight();
    throw std::invalid_argument("unknown monodromy '" + name +
                                "' (expected left-trefoil, right-trefoil or "
                                "figure-eight)");
}

Monodromy Monodromy::custom(const GeneratorWord& word) {
    return Monodromy(MonodromyKind::Custom, word);
}

Monodromy Monodromy::custom(const SL2Matrix& matrix) {
    return Monodromy(MonodromyKind::Custom, matrix);
}

GeneratorWord Monodromy::framing() const {
    if (!has_word_)
        throw std::logic_error("monodromy has no defining word");
    return framing_word_of(word_);
}

}  // namespace berge
