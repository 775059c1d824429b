#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "berge/integer.hpp"
#include "berge/sl2.hpp"

namespace berge {

// Letters of the two alphabets this library works with: the SL2(Z)
// generators A, B, P, Q and the framing generators alpha, beta, phi, psi.
// A word never mixes the two alphabets; alpha = psi.phi and beta = phi.psi
// provide the bridge when exponent sums are needed.
enum class Letter { A, B, P, Q, Alpha, Beta, Phi, Psi };

bool is_matrix_letter(Letter l);
std::string letter_name(Letter l);

struct Syllable {
    Letter letter;
    Int exponent;

    bool operator==(const Syllable& o) const {
        return letter == o.letter && exponent == o.exponent;
    }
};

class GeneratorWord {
public:
    GeneratorWord() = default;
    GeneratorWord(std::initializer_list<Syllable> sylls);
    explicit GeneratorWord(std::vector<Syllable> sylls);

    const std::vector<Syllable>& syllables() const { return syllables_; }
    bool empty() const { return syllables_.empty(); }

    // An empty word belongs to both alphabets.
    bool is_matrix_word() const;
    bool is_framing_word() const;

    GeneratorWord inverse() const;
    GeneratorWord operator*(const GeneratorWord& o) const;  // concatenation

    bool operator==(const GeneratorWord& o) const {
        return syllables_ == o.syllables_;
    }

    std::string str() const;  // e.g. "A^-1 B^-1"

private:
    void normalize();

    std::vector<Syllable> syllables_;
};

std::ostream& operator<<(std::ostream& os, const GeneratorWord& w);

// Product of the generator matrices in word order. Matrix alphabet only.
SL2Matrix word_to_matrix(const GeneratorWord& w);

// Sum of all exponents.
Int exponent_sum(const GeneratorWord& w);

// Per-letter exponent sums over phi and psi after rewriting alpha -> psi.phi
// and beta -> phi.psi. Framing alphabet only.
struct PhiPsiSums {
    Int e_phi;
    Int e_psi;
};
PhiPsiSums letter_exponent_sums(const GeneratorWord& w);

// Rewrites a matrix word literally over the framing alphabet
// (A->alpha, B->beta, P->phi, Q->psi).
GeneratorWord framing_word_of(const GeneratorWord& matrix_word);

// Parses words like "A^-1 B^-1", "P^2 B^3 A", "alpha^-1 beta^-1".
// Single-character framing aliases: a, b, f (phi), s (psi).
GeneratorWord parse_word(const std::string& text);

}  // namespace berge
