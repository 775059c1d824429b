#include "berge/algorithm.hpp"

#include <stdexcept>

namespace berge {

SlopePair slope_pair(const ExtendedRational& slope) {
    return SlopePair{slope.num(), slope.den()};
}

SL2Matrix choose_W(const SlopePair& slope) {
    const Int& x = slope.x;
    const Int& y = slope.y;
    if (gcd_of(abs_of(x), abs_of(y)) != 1)
        throw std::invalid_argument("slope pair is not coprime");
    if (x == 0) {
        // Second column reduces to (-y, 0).
        return SL2Matrix(0, -y, y, 0);
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(),
               y.get_mpz_t());
    if (g != 1) throw std::invalid_argument("slope pair is not coprime");
    // det = x*f - e*y with f = s, e = -t; slide the second column by
    // multiples of the first until -|x|/2 < e <= |x|/2.
    Int e = -t, f = s;
    Int ax = abs_of(x);
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), e.get_mpz_t(), ax.get_mpz_t());
    if (2 * r > ax) r -= ax;
    Int m = div_exact(e - r, x);
    e = r;
    f -= m * y;
    return SL2Matrix(x, e, y, f);
}

SL2Matrix build_X(const SL2Matrix& H, const SL2Matrix& W, const Int& N) {
    SL2Matrix WA = W * power_A(N);
    return WA.inverse() * H * WA;
}

std::vector<Int> list_valid_N(const SL2Matrix& H, const SL2Matrix& W) {
    SL2Matrix X0 = build_X(H, W, 0);
    const Int q = X0.t();
    if (q == 0)
        throw std::domain_error("conjugated monodromy fixes the curve (q = 0)");
    const Int p0 = X0.x();
    const Int d = abs_of(q);
    // p(N) = p0 + N q must land in (-d, d); scan the tight integer range.
    Int lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), Int(-d - p0).get_mpz_t(), q.get_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), Int(d - p0).get_mpz_t(), q.get_mpz_t());
    if (lo > hi) std::swap(lo, hi);
    std::vector<Int> out;
    for (Int N = lo - 1; N <= hi + 1; ++N)
        if (abs_of(p0 + N * q) < d) out.push_back(N);
    return out;
}

Int find_final_coefficient(const ContFrac& mcfe, const SL2Matrix& X) {
    const Int &p = X.x(), &q = X.t(), &r = X.y(), &s = X.u();
    std::vector<CfVertex> verts = partial_vertices(mcfe);
    CfVertex last = verts.back();
    CfVertex prev = verts.size() >= 2 ? verts[verts.size() - 2] : CfVertex{-1, 0};
    int eps;
    if (last.p == p && last.q == q)
        eps = 1;
    else if (last.p == -p && last.q == -q)
        eps = -1;
    else
        throw std::domain_error("expansion does not evaluate to the first column of " +
                                X.str());
    // Appending a gives the pair a*last - prev, which must be -eps*(r, s).
    Int a;
    if (q != 0) {
        Int num = prev.q - eps * s;
        Int den = eps * q;
        if (num % den != 0)
            throw std::domain_error("no integer final coefficient for " + X.str());
        a = num / den;
    } else {
        Int num = prev.p - eps * r;
        Int den = eps * p;
        if (num % den != 0)
            throw std::domain_error("no integer final coefficient for " + X.str());
        a = num / den;
    }
    if (a * last.p - prev.p != -eps * r || a * last.q - prev.q != -eps * s)
        throw std::domain_error("final coefficient does not solve the pair relation");
    ContFrac full = mcfe;
    full.push_back(a);
    if (eval_cf(full) != ExtendedRational(r, s))
        throw std::logic_error("final coefficient failed re-evaluation");
    return a;
}

namespace {

// J such that P^J * (word matrix) = X, using P^2 = -I.
int resolve_J(const SL2Matrix& V, const SL2Matrix& X, bool even_length) {
    if (even_length) {
        if (V == X) return 0;
        if (V == X.negated()) return 2;
    } else {
        SL2Matrix PX = gen_P() * X;
        if (V == PX) return -1;
        if (V == PX.negated()) return 1;
    }
    throw std::logic_error("word matrix matches neither +-X: " + V.str() +
                           " vs " + X.str());
}

SpecialForm make_form(const ContFrac& full, const SL2Matrix& X) {
    SpecialForm form;
    form.coefficients = full;
    form.J = 0;
    SL2Matrix V = word_to_matrix(form.word());
    form.J = resolve_J(V, X, full.size() % 2 == 0);
    return form;
}

}  // namespace

std::vector<SpecialForm> special_forms_of(const SL2Matrix& H, const SL2Matrix& W) {
    std::vector<SpecialForm> forms;
    for (const Int& N : list_valid_N(H, W)) {
        SL2Matrix X = build_X(H, W, N);
        ExtendedRational pq = X.first_column_ratio();
        for (const ContFrac& m : enumerate_mcfe(pq)) {
            ContFrac full = m;
            full.push_back(find_final_coefficient(m, X));
            forms.push_back(make_form(full, X));
        }
    }
    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

std::vector<SurfaceDescriptor> algorithm_streamlined(const Monodromy& monodromy,
                                                     const ExtendedRational& slope,
                                                     AlgorithmTrace* trace) {
    if (!monodromy.is_builtin())
        throw std::invalid_argument(
            "closed-surface listing requires a built-in monodromy");
    SlopePair pair = slope_pair(slope);
    SL2Matrix W = choose_W(pair);
    const SL2Matrix& H = monodromy.matrix();
    const Int& EH = monodromy.exponent_sum();

    if (trace) {
        trace->slope = slope;
        trace->monodromy = monodromy.name();
        trace->W = W;
        trace->entries.clear();
        trace->annotations.clear();
        bool unknot = slope.is_infinite() || slope.is_zero() || slope.is_unit() ||
                      (monodromy.kind() == MonodromyKind::LeftTrefoil &&
                       slope == ExtendedRational(1, 2));
        if (unknot) trace->annotations.push_back("unknot slope");
    }

    std::vector<SurfaceDescriptor> surfaces;
    std::vector<Int> valid = list_valid_N(H, W);
    if (trace) trace->valid_N = valid;
    for (const Int& N : valid) {
        SL2Matrix X = build_X(H, W, N);
        TraceEntry entry;
        entry.N = N;
        entry.X = X;
        entry.pq = X.first_column_ratio();
        entry.rs = X.second_column_ratio();
        for (const ContFrac& m : enumerate_mcfe(entry.pq, /*odd_only=*/true)) {
            ++entry.odd_mcfe_count;
            ContFrac full = m;
            full.push_back(find_final_coefficient(m, X));
            SpecialForm form = make_form(full, X);
            TraceCandidate cand;
            cand.coefficients = full;
            cand.sigma = coefficient_sum(full);
            cand.J = form.J;
            cand.accepted = (cand.sigma == EH);
            if (cand.accepted) {
                // A candidate passing the meridian filter always matches X
                // exactly, never -X.
                if (form.J != 0)
                    throw std::logic_error("meridian filter accepted a J != 0 form");
                surfaces.push_back(classify(form));
            }
            if (trace) entry.candidates.push_back(std::move(cand));
        }
        if (trace) trace->entries.push_back(std::move(entry));
    }
    return sorted_by_size(std::move(surfaces));
}

}  // namespace berge
