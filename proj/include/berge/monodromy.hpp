#pragma once

#include <string>

#include "berge/sl2.hpp"
#include "berge/word.hpp"

namespace berge {

enum class MonodromyKind { LeftTrefoil, RightTrefoil, FigureEight, Custom };

std::string monodromy_name(MonodromyKind k);

// A once-punctured torus bundle monodromy. The three built-ins are the
// fibered knots in S^3; their exponent sum gates the meridional-boundary
// filter. Custom monodromies expose the general machinery only.
class Monodromy {
public:
    static Monodromy left_trefoil();   // H = A^-1 B^-1, E = -2
    static Monodromy right_trefoil();  // H = B A,       E =  2
    static Monodromy figure_eight();   // H = A B^-1,    E =  0
    static Monodromy from_name(const std::string& name);

    // Word-backed custom monodromy; requires trace != 2.
    static Monodromy custom(const GeneratorWord& word);
    // Matrix-only custom monodromy; no framing word available.
    static Monodromy custom(const SL2Matrix& matrix);

    MonodromyKind kind() const { return kind_; }
    bool is_builtin() const { return kind_ != MonodromyKind::Custom; }
    const SL2Matrix& matrix() const { return matrix_; }
    // Word in A/B letters; empty for matrix-only custom monodromies.
    const GeneratorWord& word() const { return word_; }
    bool has_word() const { return has_word_; }
    const Int& exponent_sum() const { return exponent_sum_; }
    // Standard framing word (alpha/beta letters) of the defining word.
    GeneratorWord framing() const;
    std::string name() const { return monodromy_name(kind_); }

private:
    Monodromy(MonodromyKind kind, GeneratorWord word);
    Monodromy(MonodromyKind kind, SL2Matrix matrix);

    MonodromyKind kind_;
    GeneratorWord word_;
    bool has_word_;
    SL2Matrix matrix_;
    Int exponent_sum_;
};

}  // namespace berge
