#include "berge/farey.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace berge {

EdgePath cf_to_edgepath(const ContFrac& cf) {
    EdgePath path;
    path.vertices.push_back(ExtendedRational::infinity());
    for (const CfVertex& v : partial_vertices(cf))
        path.vertices.push_back(ExtendedRational(v.p, v.q));
    return path;
}

bool farey_adjacent(const ExtendedRational& a, const ExtendedRational& b) {
    Int d = a.num() * b.den() - a.den() * b.num();
    return abs_of(d) == 1;
}

namespace {

using Key = std::pair<Int, Int>;

// Canonical representative of a projective vertex: q > 0, or p > 0 when
// q = 0.
Key key_of(const CfVertex& v) {
    if (v.q < 0 || (v.q == 0 && v.p < 0)) return {-v.p, -v.q};
    return {v.p, v.q};
}

struct Strip {
    std::set<Key> vertices;
    Int max_p{0}, max_q{0};
    Key target;
    std::size_t depth_bound{0};

    void add(const CfVertex& v) {
        vertices.insert(key_of(v));
        max_p = std::max(max_p, abs_of(v.p));
        max_q = std::max(max_q, abs_of(v.q));
    }
    bool contains(const CfVertex& v) const {
        return vertices.count(key_of(v)) != 0;
    }
};

// The strip spanned by the edge-path of the SCFE: its vertices plus the
// fan vertices of the triangles between consecutive edges.
Strip build_strip(const ContFrac& base, const ExtendedRational& x) {
    Strip strip;
    strip.target = {x.num(), x.den()};
    CfVertex prev{-1, 0};
    CfVertex cur{0, 1};
    strip.add(prev);
    strip.add(cur);
    Int total = 0;
    for (const Int& b : base) {
        Int lo = std::min(Int(0), b), hi = std::max(Int(0), b);
        for (Int m = lo; m <= hi; ++m)
            strip.add({m * cur.p - prev.p, m * cur.q - prev.q});
        CfVertex next{b * cur.p - prev.p, b * cur.q - prev.q};
        prev = cur;
        cur = next;
        total += abs_of(b);
    }
    strip.depth_bound = base.size() + to_size(total);
    return strip;
}

void strip_dfs(const Strip& strip, const CfVertex& u, const CfVertex& v,
               ContFrac& coeffs, std::vector<ContFrac>& out) {
    if (key_of(v) == strip.target) out.push_back(coeffs);
    if (coeffs.size() >= strip.depth_bound) return;
    // Next vertices are b*v - u; only finitely many coordinates fit the
    // strip, so walk |b| upward until both overshoot.
    for (int dir : {1, -1}) {
        for (Int b = 2 * dir;; b += dir) {
            CfVertex w{b * v.p - u.p, b * v.q - u.q};
            bool p_out = v.p != 0 && abs_of(w.p) > strip.max_p;
            bool q_out = v.q != 0 && abs_of(w.q) > strip.max_q;
            if (p_out || q_out) {
                // Past the turning point of |b*v - u| the coordinates only
                // grow; before it, keep scanning.
                bool p_grow = v.p == 0 || abs_of((b + dir) * v.p - u.p) >= abs_of(w.p);
                bool q_grow = v.q == 0 || abs_of((b + dir) * v.q - u.q) >= abs_of(w.q);
                if (p_grow && q_grow) break;
                continue;
            }
            if (strip.contains(w)) {
                coeffs.push_back(b);
                strip_dfs(strip, v, w, coeffs, out);
                coeffs.pop_back();
            }
        }
    }
}

}  // namespace

std::vector<ContFrac> oracle_enumerate_mcfe(const ExtendedRational& x) {
    if (x.is_infinite() || !x.abs_less_than_one()) return {};
    Strip strip = build_strip(scfe(x), x);
    std::vector<ContFrac> out;
    ContFrac coeffs;
    strip_dfs(strip, CfVertex{-1, 0}, CfVertex{0, 1}, coeffs, out);
    for (const ContFrac& cf : out)
        if (!is_mcfe(cf) || eval_cf(cf) != x)
            throw std::logic_error("strip search produced a bad expansion for " +
                                   x.str());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// DFS over alternating-sign expansions of a fixed value. The partial
// numerators and denominators of such an expansion reinforce
// (|c_{i+1}| = |b||c_i| + |c_{i-1}|), so both coordinate sequences are
// monotone and the search below the target size is finite.
struct AltSearch {
    Key target;
    Int bound_p, bound_q;
    std::vector<ContFrac> found;
    ContFrac coeffs;

    void run(const CfVertex& u, const CfVertex& v, int last_sign, bool first) {
        if (!first && key_of(v) == target) {
            if (is_scfe(coeffs)) found.push_back(coeffs);
            return;  // coordinates only grow from here on
        }
        auto try_b = [&](const Int& b) {
            CfVertex w{b * v.p - u.p, b * v.q - u.q};
            if (abs_of(w.p) > bound_p || abs_of(w.q) > bound_q) return;
            coeffs.push_back(b);
            run(v, w, sign_of(b) != 0 ? sign_of(b) : last_sign, false);
            coeffs.pop_back();
        };
        if (first) try_b(0);  // a leading zero is the only legal zero
        for (int dir : {1, -1}) {
            if (!first && last_sign == dir) continue;  // signs must alternate
            for (Int b = dir;; b += dir) {
                CfVertex w{b * v.p - u.p, b * v.q - u.q};
                bool p_out = v.p != 0 && abs_of(w.p) > bound_p;
                bool q_out = v.q != 0 && abs_of(w.q) > bound_q;
                if (p_out || q_out) {
                    bool p_grow =
                        v.p == 0 || abs_of((b + dir) * v.p - u.p) >= abs_of(w.p);
                    bool q_grow =
                        v.q == 0 || abs_of((b + dir) * v.q - u.q) >= abs_of(w.q);
                    if (p_grow && q_grow) break;
                    continue;
                }
                try_b(b);
            }
        }
    }
};

}  // namespace

bool oracle_scfe_unique(const ExtendedRational& x, unsigned den_bound) {
    if (x.is_infinite())
        throw std::domain_error("infinity has no simple expansion");
    if (x.den() > den_bound)
        throw std::out_of_range("denominator exceeds the oracle bound");
    if (x.is_zero()) return true;  // only the empty expansion
    AltSearch search;
    search.target = key_of(CfVertex{x.num(), x.den()});
    search.bound_p = abs_of(x.num());
    search.bound_q = x.den();
    search.run(CfVertex{-1, 0}, CfVertex{0, 1}, 0, true);
    for (const ContFrac& cf : search.found)
        if (eval_cf(cf) != x)
            throw std::logic_error("alternating search produced a bad expansion");
    return search.found.size() == 1;
}

}  // namespace berge
