#include "berge/contfrac.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace berge {

std::string cf_str(const ContFrac& cf) {
    std::string out = "[";
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (i) out += ",";
        out += to_string(cf[i]);
    }
    return out + "]";
}

ContFrac parse_cf(const std::string& text) {
    ContFrac out;
    std::string token;
    auto flush = [&]() {
        if (token.empty()) return;
        for (std::size_t i = 0; i < token.size(); ++i) {
            char c = token[i];
            bool ok = std::isdigit(static_cast<unsigned char>(c)) ||
                      (i == 0 && (c == '-' || c == '+'));
            if (!ok || token == "-" || token == "+")
                throw std::invalid_argument("bad continued fraction token '" +
                                            token + "'");
        }
        out.emplace_back(token);
        token.clear();
    };
    for (char c : text) {
        if (c == '[' || c == ']' || c == ',' || c == ';' ||
            std::isspace(static_cast<unsigned char>(c))) {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    return out;
}

std::vector<CfVertex> partial_vertices(const ContFrac& cf) {
    std::vector<CfVertex> verts;
    verts.reserve(cf.size() + 1);
    CfVertex prev{-1, 0};  // C_{-1} represents 1/0
    CfVertex cur{0, 1};
    verts.push_back(cur);
    for (const Int& b : cf) {
        CfVertex next{b * cur.p - prev.p, b * cur.q - prev.q};
        prev = cur;
        cur = next;
        verts.push_back(cur);
    }
    return verts;
}

ExtendedRational eval_cf(const ContFrac& cf) {
    CfVertex prev{-1, 0};
    CfVertex cur{0, 1};
    for (const Int& b : cf) {
        CfVertex next{b * cur.p - prev.p, b * cur.q - prev.q};
        prev = cur;
        cur = next;
    }
    return ExtendedRational(cur.p, cur.q);
}

Int coefficient_sum(const ContFrac& cf) {
    Int s = 0;
    for (const Int& b : cf) s += b;
    return s;
}

ExtendedRational partial_fraction(const ContFrac& cf, std::size_t i) {
    if (i > cf.size())
        throw std::out_of_range("partial_fraction index out of range");
    return eval_cf(ContFrac(cf.begin(), cf.begin() + i));
}

bool is_scfe(const ContFrac& cf) {
    const std::size_t k = cf.size();
    if (k == 0) return true;
    for (std::size_t i = 1; i < k; ++i)
        if (cf[i] == 0) return false;
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (cf[i] != 0 && sign_of(cf[i]) == sign_of(cf[i + 1])) return false;
    if (abs_of(cf.back()) >= 2) return true;
    // +-1 admit no expansion with |bk| >= 2; they take [0,-1] and [0,1].
    return k == 2 && cf[0] == 0;
}

bool is_mcfe(const ContFrac& cf) {
    for (const Int& b : cf)
        if (abs_of(b) < 2) return false;
    return true;
}

ContFrac scfe(const ExtendedRational& x) {
    if (x.is_infinite())
        throw std::domain_error("infinity has no simple expansion");
    ContFrac out;
    Int p = x.num(), q = x.den();
    if (abs_of(p) >= q) {
        if (abs_of(p) == q)  // x = +-1
            return {Int(0), Int(-sign_of(p))};
        out.push_back(0);
        // [0, rest] = -1/rest, so rest expands -q/p.
        Int np = -q, nq = p;
        if (nq < 0) {
            np = -np;
            nq = -nq;
        }
        p = np;
        q = nq;
    }
    while (p != 0) {
        // 1/x = q/p; pick b so the remainder b - q/p lands strictly between
        // -1 and 1 with sign opposite to b.
        Int b;
        if (p > 0)
            mpz_fdiv_q(b.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        else
            mpz_cdiv_q(b.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        out.push_back(b);
        Int np = b * p - q, nq = p;
        if (nq < 0) {
            np = -np;
            nq = -nq;
        }
        p = np;
        q = nq;
    }
    return out;
}

namespace {

void check_pos(const ContFrac& cf, std::size_t pos, std::size_t lo,
               std::size_t hi, const char* what) {
    if (pos < lo || pos > hi || hi > cf.size())
        throw std::out_of_range(std::string(what) + ": position " +
                                std::to_string(pos) + " invalid for " +
                                cf_str(cf));
}

int check_sign(int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("sign must be +1 or -1");
    return sign;
}

}  // namespace

ContFrac insert_unit(const ContFrac& cf, std::size_t pos, int sign) {
    check_pos(cf, pos, 1, cf.empty() ? 0 : cf.size() - 1, "insert_unit");
    Int e = check_sign(sign);
    ContFrac out(cf.begin(), cf.begin() + pos - 1);
    out.push_back(cf[pos - 1] + e);
    out.push_back(e);
    out.push_back(cf[pos] + e);
    out.insert(out.end(), cf.begin() + pos + 1, cf.end());
    return out;
}

ContFrac append_unit(const ContFrac& cf, int sign) {
    if (cf.empty()) throw std::out_of_range("append_unit: empty expansion");
    Int e = check_sign(sign);
    ContFrac out = cf;
    out.back() += e;
    out.push_back(e);
    return out;
}

ContFrac remove_unit(const ContFrac& cf, std::size_t pos) {
    check_pos(cf, pos, 2, cf.size() >= 1 ? cf.size() - 1 : 0, "remove_unit");
    const Int& e = cf[pos - 1];
    if (abs_of(e) != 1)
        throw std::invalid_argument("remove_unit: coefficient is not +-1");
    ContFrac out(cf.begin(), cf.begin() + pos - 2);
    out.push_back(cf[pos - 2] - e);
    out.push_back(cf[pos] - e);
    out.insert(out.end(), cf.begin() + pos + 1, cf.end());
    return out;
}

ContFrac pop_unit(const ContFrac& cf) {
    if (cf.size() < 2 || abs_of(cf.back()) != 1)
        throw std::invalid_argument("pop_unit: expansion does not end in +-1");
    ContFrac out(cf.begin(), cf.end() - 1);
    out.back() -= cf.back();
    return out;
}

ContFrac split_coefficient(const ContFrac& cf, std::size_t pos, const Int& left) {
    check_pos(cf, pos, 1, cf.size(), "split_coefficient");
    ContFrac out(cf.begin(), cf.begin() + pos - 1);
    out.push_back(left);
    out.push_back(0);
    out.push_back(cf[pos - 1] - left);
    out.insert(out.end(), cf.begin() + pos, cf.end());
    return out;
}

ContFrac fuse_zero(const ContFrac& cf, std::size_t pos) {
    check_pos(cf, pos, 2, cf.size() >= 1 ? cf.size() - 1 : 0, "fuse_zero");
    if (cf[pos - 1] != 0)
        throw std::invalid_argument("fuse_zero: coefficient is not 0");
    ContFrac out(cf.begin(), cf.begin() + pos - 2);
    out.push_back(cf[pos - 2] + cf[pos]);
    out.insert(out.end(), cf.begin() + pos + 1, cf.end());
    return out;
}

ContFrac append_zero_pair(const ContFrac& cf, const Int& s) {
    ContFrac out = cf;
    out.push_back(s);
    out.push_back(0);
    return out;
}

ContFrac pop_zero_pair(const ContFrac& cf) {
    if (cf.size() < 2 || cf.back() != 0)
        throw std::invalid_argument("pop_zero_pair: expansion does not end in 0");
    return ContFrac(cf.begin(), cf.end() - 2);
}

ContFrac apply_chain_move(const ContFrac& cf, std::size_t index) {
    const std::size_t k = cf.size();
    if (index < 2 || index > k)
        throw std::out_of_range("chain move: position " + std::to_string(index) +
                                " invalid for " + cf_str(cf));
    const Int& a = cf[index - 1];
    if (a == 0)
        throw std::invalid_argument("chain move: coefficient is 0");
    const Int e = a < 0 ? 1 : -1;
    const std::size_t run = to_size(abs_of(a) - 1);
    ContFrac out(cf.begin(), cf.begin() + index - 2);
    out.push_back(cf[index - 2] + e);
    for (std::size_t i = 0; i < run; ++i) out.push_back(2 * e);
    if (index < k) {
        out.push_back(cf[index] + e);
        out.insert(out.end(), cf.begin() + index + 1, cf.end());
    }
    return out;
}

ContFrac apply_chain_moves(const ContFrac& cf,
                           const std::vector<std::size_t>& indices) {
    std::vector<std::size_t> order = indices;
    std::sort(order.begin(), order.end(), std::greater<>());
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (order[i] - order[i + 1] < 2)
            throw std::invalid_argument("chain moves must be non-adjacent");
    ContFrac out = cf;
    for (std::size_t idx : order) out = apply_chain_move(out, idx);
    return out;
}

namespace {

// Shared enumeration core. Subsets of non-adjacent positions in 2..k such
// that every +-1 coefficient of the expansion has a chosen position in its
// closed neighbourhood; for an alternating base those are exactly the
// subsets whose joint chain move lands on an MCFE.
void mcfe_dfs(const ContFrac& base, std::size_t next, std::size_t last_chosen,
              std::vector<std::size_t>& chosen,
              std::vector<McfeWitness>& out) {
    const std::size_t k = base.size();
    // A unit coefficient at p with the whole window {p-1,p,p+1} already
    // passed over is beyond repair.
    for (std::size_t p = (next >= 3 ? next - 2 : 1); p + 1 < next; ++p) {
        if (abs_of(base[p - 1]) == 1) {
            bool covered = false;
            for (std::size_t c : chosen)
                if (c + 1 >= p && c <= p + 1) covered = true;
            if (!covered) return;
        }
    }
    if (next > k) {
        for (std::size_t p = k >= 1 ? k : 1; p <= k; ++p) {
            if (abs_of(base[p - 1]) == 1) {
                bool covered = false;
                for (std::size_t c : chosen)
                    if (c + 1 >= p && c <= p + 1) covered = true;
                if (!covered) return;
            }
        }
        out.push_back({chosen, apply_chain_moves(base, chosen)});
        return;
    }
    // skip position `next`
    mcfe_dfs(base, next + 1, last_chosen, chosen, out);
    // or choose it
    if (next >= 2 && (last_chosen == 0 || next - last_chosen >= 2) &&
        base[next - 1] != 0) {
        chosen.push_back(next);
        mcfe_dfs(base, next + 1, next, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<McfeWitness> enumerate_mcfe_witnessed(const ExtendedRational& x) {
    if (x.is_infinite() || !x.abs_less_than_one()) return {};
    ContFrac base = scfe(x);
    std::vector<McfeWitness> raw;
    std::vector<std::size_t> chosen;
    mcfe_dfs(base, 1, 0, chosen, raw);
    std::vector<McfeWitness> out;
    std::set<ContFrac> seen;
    for (auto& w : raw) {
        if (!is_mcfe(w.mcfe) || eval_cf(w.mcfe) != x)
            throw std::logic_error("mcfe enumeration produced a bad expansion for " +
                                   x.str());
        if (seen.insert(w.mcfe).second) out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(),
              [](const McfeWitness& a, const McfeWitness& b) {
                  return a.mcfe < b.mcfe;
              });
    return out;
}

std::vector<ContFrac> enumerate_mcfe(const ExtendedRational& x, bool odd_only) {
    std::vector<ContFrac> out;
    for (auto& w : enumerate_mcfe_witnessed(x)) {
        if (odd_only && w.mcfe.size() % 2 == 0) continue;
        out.push_back(std::move(w.mcfe));
    }
    return out;
}

}  // namespace berge
