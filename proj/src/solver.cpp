#include "berge/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace berge {

namespace {

struct CaseSpec {
    int tag;            // 1..4
    std::size_t lo;     // smallest usable b-index
    std::size_t merged; // b-index owning the merged coefficient
    bool merged_in_I;   // negated-flavour merged coefficient
};

CaseSpec case_of(const ContFrac& b) {
    if (b[0] == 1) return {4, 2, 2, true};
    if (b[0] == 0) {
        if (b[1] == -1) return {3, 3, 3, false};
        return {2, 2, 2, false};
    }
    return {1, 1, 1, true};
}

struct Layout {
    CaseSpec spec;
    std::size_t k;
    std::size_t neg_lo;      // negated half covers indices k..neg_lo
    std::size_t orig_lo;     // original half covers indices orig_lo..k
    std::size_t merged_pos;  // position of the merged coefficient at N = 0

    explicit Layout(const ContFrac& b) : spec(case_of(b)), k(b.size()) {
        switch (spec.tag) {
            case 1: neg_lo = 2; orig_lo = 1; break;
            case 2: neg_lo = 2; orig_lo = 3; break;
            case 3: neg_lo = 3; orig_lo = 4; break;
            default: neg_lo = 3; orig_lo = 2; break;
        }
        merged_pos = (k >= neg_lo ? k - neg_lo + 1 : 0) + 1;
    }

    Int merged_value(const ContFrac& b) const {
        switch (spec.tag) {
            case 1: return -b[0] + 1;
            case 2: return b[1] + 1;
            case 3: return b[2] + 1;
            default: return -b[1] + 1;
        }
    }

    std::size_t pos_I(std::size_t i, std::size_t shift) const {
        if (spec.merged_in_I && i == spec.merged) return merged_pos + shift;
        return k - i + 1 + shift;
    }
    std::size_t pos_J(std::size_t j, std::size_t shift) const {
        if (!spec.merged_in_I && j == spec.merged) return merged_pos + shift;
        return merged_pos + (j - orig_lo + 1) + shift;
    }
};

SL2Matrix left_trefoil_matrix() {
    return SL2Matrix(0, 1, -1, 1);  // A^-1 B^-1
}

// The change-of-basis matrix whose first column realizes eval(b), taken as
// the alternating generator word of the expansion (the sign ambiguity is
// irrelevant under conjugation).
SL2Matrix word_matrix_of_scfe(const ContFrac& b) {
    const std::size_t k = b.size();
    std::vector<Syllable> sylls;
    if (k % 2 == 0) sylls.push_back({Letter::P, 1});
    for (std::size_t i = 1; i <= k; ++i) {
        Letter l = (i % 2 == k % 2) ? Letter::B : Letter::A;
        sylls.push_back({l, b[i - 1]});
    }
    return word_to_matrix(GeneratorWord(std::move(sylls)));
}

bool is_unknot_value(const ExtendedRational& v) {
    return v.is_infinite() || v.is_zero() || v.is_unit();
}

}  // namespace

ContFrac conjugate_scfe(const ContFrac& scfe_b, const Int& N) {
    if (!is_scfe(scfe_b) || scfe_b.empty())
        throw std::invalid_argument("not a simple expansion: " + cf_str(scfe_b));
    if (is_unknot_value(eval_cf(scfe_b)))
        throw std::domain_error("unknot slope has no conjugate expansion");
    const Int sk = sign_of(scfe_b.back());
    if (N != 0 && N != sk)
        throw std::invalid_argument("N must be 0 or sgn(bk)");

    Layout lay(scfe_b);
    const ContFrac& b = scfe_b;
    ContFrac out;
    for (std::size_t i = lay.k; i >= lay.neg_lo; --i) out.push_back(-b[i - 1]);
    out.push_back(lay.merged_value(b));
    for (std::size_t j = lay.orig_lo; j <= lay.k; ++j) out.push_back(b[j - 1]);
    if (N != 0) {
        ContFrac pref;
        pref.push_back(N);
        pref.push_back(out[0] + N);
        pref.insert(pref.end(), out.begin() + 1, out.end());
        out = std::move(pref);
    }

    if (!is_scfe(out))
        throw std::domain_error("degenerate doubled expansion for " +
                                cf_str(scfe_b) + " (unknot slope 1/2)");
    SL2Matrix X = build_X(left_trefoil_matrix(), word_matrix_of_scfe(b), N);
    if (eval_cf(out) != X.first_column_ratio())
        throw std::logic_error("doubled expansion mismatch for " + cf_str(scfe_b));
    return out;
}

namespace {

struct Subset {
    std::uint64_t mask = 0;
    Int sum;  // sum of b_i over the subset
};

void collect_subsets(const ContFrac& b, std::size_t lo, std::size_t next,
                     std::uint64_t mask, const Int& sum,
                     std::vector<Subset>& out) {
    if (next > b.size()) {
        out.push_back({mask, sum});
        return;
    }
    collect_subsets(b, lo, next + 1, mask, sum, out);
    bool prev_taken = next > lo && (mask >> (next - 2)) & 1;
    if (!prev_taken)
        collect_subsets(b, lo, next + 2, mask | (1ull << (next - 1)),
                        sum + b[next - 1], out);
}

bool bit(std::uint64_t mask, std::size_t i) { return (mask >> (i - 1)) & 1; }

std::uint64_t window_mask(std::size_t a, std::size_t b, std::size_t lo,
                          std::size_t hi) {
    std::uint64_t m = 0;
    for (std::size_t i = std::max(a, lo); i <= std::min(b, hi); ++i)
        m |= 1ull << (i - 1);
    return m;
}

std::vector<std::size_t> mask_to_indices(std::uint64_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; mask; ++i, mask >>= 1)
        if (mask & 1) out.push_back(i);
    return out;
}

}  // namespace

std::vector<IndexSetSolution> solve_index_equation(const ContFrac& scfe_b) {
    if (!is_scfe(scfe_b))
        throw std::invalid_argument("not a simple expansion: " + cf_str(scfe_b));
    if (scfe_b.empty() || is_unknot_value(eval_cf(scfe_b))) return {};
    const std::size_t k = scfe_b.size();
    if (k > 62)
        throw std::length_error("expansion too long for the index-set solver");

    const ContFrac& b = scfe_b;
    Layout lay(b);
    const CaseSpec& spec = lay.spec;
    const Int sk = sign_of(b.back());

    std::vector<Subset> subsets;
    collect_subsets(b, spec.lo, spec.lo, 0, 0, subsets);

    // Pair the subsets through the equation. The merged-owner side carries
    // the case tag: 0 when the merged index is chosen, otherwise -1.
    std::map<Int, std::vector<std::size_t>> j_by_key;
    for (std::size_t idx = 0; idx < subsets.size(); ++idx) {
        Int key = subsets[idx].sum;
        if (!spec.merged_in_I && !bit(subsets[idx].mask, spec.merged)) key -= 1;
        j_by_key[key].push_back(idx);
    }

    // Side conditions: every +-1 coefficient away from the merged block
    // needs a move in its closed neighbourhood on both halves.
    std::vector<std::uint64_t> windows;
    for (std::size_t l = spec.lo + 1; l <= k; ++l)
        if (abs_of(b[l - 1]) == 1)
            windows.push_back(window_mask(l - 1, l + 1, spec.lo, k));
    // The merged-adjacent units get their own one-sided rules.
    struct ExtraRule {
        std::uint64_t in_i, in_j;  // pass when (I & in_i) or (J & in_j)
    };
    std::vector<ExtraRule> extras;
    auto one = [&](std::size_t i) { return window_mask(i, i, spec.lo, k); };
    auto two = [&](std::size_t i) { return window_mask(i, i + 1, spec.lo, k); };
    switch (spec.tag) {
        case 1:
            if (b[0] == -1) extras.push_back({one(1), two(1)});
            if (b[0] == 2) extras.push_back({two(1), one(1)});
            break;
        case 2:
            if (b[1] == -2) extras.push_back({one(2), two(2)});
            if (b[1] == 1) extras.push_back({two(2), one(2)});
            break;
        case 3:
            if (b[2] == 1) extras.push_back({two(3), one(3)});
            break;
        default:
            if (b[1] == -1) extras.push_back({one(2), two(2)});
            break;
    }

    SL2Matrix W = word_matrix_of_scfe(b);
    SL2Matrix H = left_trefoil_matrix();

    std::vector<IndexSetSolution> solutions;
    for (const Subset& I : subsets) {
        Int key = I.sum;
        if (spec.merged_in_I && !bit(I.mask, spec.merged)) key += 1;
        auto hit = j_by_key.find(key);
        if (hit == j_by_key.end()) continue;
        for (std::size_t jidx : hit->second) {
            const Subset& J = subsets[jidx];
            if (bit(I.mask, spec.merged) && bit(J.mask, spec.merged)) continue;
            bool ok = true;
            for (std::uint64_t win : windows)
                if (!(I.mask & win) || !(J.mask & win)) { ok = false; break; }
            for (const ExtraRule& rule : extras)
                if (ok && !(I.mask & rule.in_i) && !(J.mask & rule.in_j))
                    ok = false;
            if (!ok) continue;

            IndexSetSolution sol;
            sol.case_tag = spec.tag;
            sol.I = mask_to_indices(I.mask);
            sol.J = mask_to_indices(J.mask);
            bool k_in_I = bit(I.mask, k);
            bool k_in_J = bit(J.mask, k);
            sol.N = k_in_I ? Int(sk) : Int(0);
            sol.N_prime = k_in_I == k_in_J ? Int(0) : (k_in_I ? Int(sk) : Int(-sk));
            sol.x_s = conjugate_scfe(b, sol.N);

            const std::size_t shift = sol.N != 0 ? 1 : 0;
            std::vector<std::size_t> positions;
            for (std::size_t i : sol.I) positions.push_back(lay.pos_I(i, shift));
            for (std::size_t j : sol.J) positions.push_back(lay.pos_J(j, shift));
            sol.x_m = apply_chain_moves(sol.x_s, positions);

            // The membership rules are the necessary side of the theorem;
            // reconstruction is the arbiter of minimality.
            if (!is_mcfe(sol.x_m) || sol.x_m.size() % 2 == 0) continue;

            SL2Matrix X = build_X(H, W, sol.N);
            if (eval_cf(sol.x_m) != X.first_column_ratio())
                throw std::logic_error("reconstruction changed the expansion value");
            if (coefficient_sum(sol.x_m) + sol.N_prime != -2)
                throw std::logic_error("reconstruction broke the meridian filter");
            ContFrac full = sol.x_m;
            full.push_back(sol.N_prime);
            if (eval_cf(full) != X.second_column_ratio())
                throw std::logic_error("appended coefficient misses the second column");
            SpecialForm form;
            form.J = 0;
            form.coefficients = full;
            if (word_to_matrix(form.word()) != X)
                throw std::logic_error("reconstructed form does not равество match X");
            sol.surface = classify(form);
            solutions.push_back(std::move(sol));
        }
    }

    std::sort(solutions.begin(), solutions.end(),
              [](const IndexSetSolution& a, const IndexSetSolution& b) {
                  auto ka = a.I.size() + a.J.size();
                  auto kb = b.I.size() + b.J.size();
                  if (ka != kb) return ka < kb;
                  if (a.I != b.I) return a.I < b.I;
                  return a.J < b.J;
              });
    return solutions;
}

std::string IndexSetSolution::str() const {
    auto set_str = [](const std::vector<std::size_t>& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s[i]);
        }
        return out + "}";
    };
    return "case " + std::to_string(case_tag) + " I=" + set_str(I) +
           " J=" + set_str(J) + " N=" + to_string(N) +
           " N'=" + to_string(N_prime) + " x_m=" + cf_str(x_m);
}

std::vector<SurfaceDescriptor> solver_surfaces(const ContFrac& scfe_b) {
    std::vector<SurfaceDescriptor> out;
    for (const IndexSetSolution& sol : solve_index_equation(scfe_b))
        out.push_back(sol.surface);
    return sorted_by_size(std::move(out));
}

bool small_knot_certificate(const ContFrac& scfe_b, const Int& phi0) {
    if (phi0 < 5)
        throw std::invalid_argument("modulus must be at least 5");
    if (!is_scfe(scfe_b) || scfe_b.empty())
        throw std::invalid_argument("not a simple expansion: " + cf_str(scfe_b));
    Int r1;
    mpz_fdiv_r(r1.get_mpz_t(), scfe_b[0].get_mpz_t(), phi0.get_mpz_t());
    if (r1 == 0 || r1 == 1) return false;
    for (std::size_t i = 1; i < scfe_b.size(); ++i)
        if (scfe_b[i] % phi0 != 0) return false;
    return true;
}

}  // namespace berge
