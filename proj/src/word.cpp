#include "berge/word.hpp"

#include <cctype>
#include <map>
#include <ostream>
#include <stdexcept>

namespace berge {

bool is_matrix_letter(Letter l) {
    return l == Letter::A || l == Letter::B || l == Letter::P || l == Letter::Q;
}

std::string letter_name(Letter l) {
    switch (l) {
        case Letter::A: return "A";
        case Letter::B: return "B";
        case Letter::P: return "P";
        case Letter::Q: return "Q";
        case Letter::Alpha: return "alpha";
        case Letter::Beta: return "beta";
        case Letter::Phi: return "phi";
        default: return "psi";
    }
}

GeneratorWord::GeneratorWord(std::initializer_list<Syllable> sylls)
    : syllables_(sylls) {
    normalize();
}

GeneratorWord::GeneratorWord(std::vector<Syllable> sylls)
    : syllables_(std::move(sylls)) {
    normalize();
}

void GeneratorWord::normalize() {
    std::vector<Syllable> out;
    bool has_matrix = false, has_framing = false;
    for (const auto& s : syllables_) {
        if (s.exponent == 0) continue;
        if (is_matrix_letter(s.letter))
            has_matrix = true;
        else
            has_framing = true;
        if (!out.empty() && out.back().letter == s.letter) {
            out.back().exponent += s.exponent;
            if (out.back().exponent == 0) out.pop_back();
        } else {
            out.push_back(s);
        }
    }
    if (has_matrix && has_framing)
        throw std::invalid_argument(
            "a word may not mix matrix letters with framing letters");
    syllables_ = std::move(out);
}

bool GeneratorWord::is_matrix_word() const {
    for (const auto& s : syllables_)
        if (!is_matrix_letter(s.letter)) return false;
    return true;
}

bool GeneratorWord::is_framing_word() const {
    for (const auto& s : syllables_)
        if (is_matrix_letter(s.letter)) return false;
    return true;
}

GeneratorWord GeneratorWord::inverse() const {
    std::vector<Syllable> rev;
    rev.reserve(syllables_.size());
    for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
        rev.push_back({it->letter, -it->exponent});
    return GeneratorWord(std::move(rev));
}

GeneratorWord GeneratorWord::operator*(const GeneratorWord& o) const {
    std::vector<Syllable> cat = syllables_;
    cat.insert(cat.end(), o.syllables_.begin(), o.syllables_.end());
    return GeneratorWord(std::move(cat));
}

std::string GeneratorWord::str() const {
    if (syllables_.empty()) return "1";
    std::string out;
    for (const auto& s : syllables_) {
        if (!out.empty()) out += ' ';
        out += letter_name(s.letter);
        if (s.exponent != 1) out += "^" + to_string(s.exponent);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const GeneratorWord& w) {
    return os << w.str();
}

SL2Matrix word_to_matrix(const GeneratorWord& w) {
    if (!w.is_matrix_word())
        throw std::invalid_argument("word_to_matrix needs a matrix word");
    SL2Matrix m;
    for (const auto& s : w.syllables()) {
        switch (s.letter) {
            case Letter::A: m = m * power_A(s.exponent); break;
            case Letter::B: m = m * power_B(s.exponent); break;
            case Letter::P: m = m * power_P(s.exponent); break;
            default: m = m * power_Q(s.exponent); break;
        }
    }
    return m;
}

Int exponent_sum(const GeneratorWord& w) {
    Int e = 0;
    for (const auto& s : w.syllables()) e += s.exponent;
    return e;
}

PhiPsiSums letter_exponent_sums(const GeneratorWord& w) {
    if (!w.is_framing_word())
        throw std::invalid_argument("letter_exponent_sums needs a framing word");
    PhiPsiSums sums{0, 0};
    for (const auto& s : w.syllables()) {
        switch (s.letter) {
            case Letter::Alpha:  // psi.phi
            case Letter::Beta:   // phi.psi
                sums.e_phi += s.exponent;
                sums.e_psi += s.exponent;
                break;
            case Letter::Phi: sums.e_phi += s.exponent; break;
            default: sums.e_psi += s.exponent; break;
        }
    }
    return sums;
}

GeneratorWord framing_word_of(const GeneratorWord& matrix_word) {
    if (!matrix_word.is_matrix_word())
        throw std::invalid_argument("framing_word_of needs a matrix word");
    std::vector<Syllable> out;
    for (const auto& s : matrix_word.syllables()) {
        Letter l;
        switch (s.letter) {
            case Letter::A: l = Letter::Alpha; break;
            case Letter::B: l = Letter::Beta; break;
            case Letter::P: l = Letter::Phi; break;
            default: l = Letter::Psi; break;
        }
        out.push_back({l, s.exponent});
    }
    return GeneratorWord(std::move(out));
}

GeneratorWord parse_word(const std::string& text) {
    static const std::map<std::string, Letter> names = {
        {"A", Letter::A},         {"B", Letter::B},
        {"P", Letter::P},         {"Q", Letter::Q},
        {"alpha", Letter::Alpha}, {"beta", Letter::Beta},
        {"phi", Letter::Phi},     {"psi", Letter::Psi},
        {"a", Letter::Alpha},     {"b", Letter::Beta},
        {"f", Letter::Phi},       {"s", Letter::Psi},
    };
    std::vector<Syllable> sylls;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        return std::invalid_argument("bad word '" + text + "' at offset " +
                                     std::to_string(i) + ": " + why);
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.') {
            ++i;
            continue;
        }
        std::string name;
        if (std::isupper(static_cast<unsigned char>(c))) {
            name = std::string(1, c);
            ++i;
        } else if (std::islower(static_cast<unsigned char>(c))) {
            while (i < text.size() &&
                   std::islower(static_cast<unsigned char>(text[i])))
                name += text[i++];
        } else {
            throw fail("expected a generator letter");
        }
        auto it = names.find(name);
        if (it == names.end()) throw fail("unknown letter '" + name + "'");
        Int exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::string digits;
            if (i < text.size() && (text[i] == '-' || text[i] == '+'))
                digits += text[i++];
            while (i < text.size() &&
                   std::isdigit(static_cast<unsigned char>(text[i])))
                digits += text[i++];
            if (digits.empty() || digits == "-" || digits == "+")
                throw fail("missing exponent");
            exp = Int(digits);
        }
        sylls.push_back({it->second, exp});
    }
    return GeneratorWord(std::move(sylls));
}

}  // namespace berge
