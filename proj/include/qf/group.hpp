#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qf/perm.hpp"

namespace qf {

/// Finite group as a validated Cayley table on indices 0..n-1.
/// Constructed groups always have the identity at index 0.
struct FiniteGroup {
    int n = 0;
    std::vector<std::vector<int>> table; // table[a][b] = a*b
    int identity = 0;
    std::vector<int> inv;

    int mul(int a, int b) const { return table[a][b]; }
    int inverse(int a) const { return inv[a]; }

    int pow(int a, long long k) const {
        int base = k < 0 ? inverse(a) : a;
        if (k < 0) k = -k;
        int acc = identity;
        for (long long i = 0; i < k; ++i) acc = mul(acc, base);
        return acc;
    }

    /// h^{-1} g h
    int conj(int g, int h) const { return mul(mul(inverse(h), g), h); }

    int element_order(int a) const {
        int x = a, ord = 1;
        while (x != identity) {
            x = mul(x, a);
            ++ord;
        }
        return ord;
    }

    bool is_abelian() const {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }
};

struct GroupCheck {
    bool ok = true;
    std::string code;           // NotAssociative | NoIdentity | NoInverse | IdentityNotZero | ShapeMismatch
    std::array<int, 3> witness{-1, -1, -1};
    std::string message;
};

inline GroupCheck check_group_table(const std::vector<std::vector<int>>& t) {
    GroupCheck r;
    const int n = static_cast<int>(t.size());
    if (n == 0) return {false, "ShapeMismatch", {}, "empty table"};
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(t[i].size()) != n)
            return {false, "ShapeMismatch", {i, -1, -1}, "table is not square"};
        for (int j = 0; j < n; ++j)
            if (t[i][j] < 0 || t[i][j] >= n)
                return {false, "ShapeMismatch", {i, j, -1}, "entry out of range"};
    }
    int e = -1;
    for (int cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = t[cand][a] == a && t[a][cand] == a;
        if (ok) e = cand;
    }
    if (e < 0) return {false, "NoIdentity", {}, "no two-sided identity"};
    if (e != 0)
        return {false, "IdentityNotZero", {e, -1, -1},
                "identity is index " + std::to_string(e) + ", expected 0"};
    for (int a = 0; a < n; ++a) {
        bool has = false;
        for (int b = 0; b < n && !has; ++b) has = t[a][b] == e && t[b][a] == e;
        if (!has)
            return {false, "NoInverse", {a, -1, -1},
                    "element " + std::to_string(a) + " has no inverse"};
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (t[t[a][b]][c] != t[a][t[b][c]])
                    return {false, "NotAssociative", {a, b, c},
                            "(a*b)*c != a*(b*c) at (" + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c) + ")"};
    return r;
}

inline FiniteGroup make_group(const std::vector<std::vector<int>>& t) {
    GroupCheck c = check_group_table(t);
    if (!c.ok) throw Error(c.code, c.message);
    FiniteGroup g;
    g.n = static_cast<int>(t.size());
    g.table = t;
    g.identity = 0;
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (t[a][b] == 0) g.inv[a] = b;
    return g;
}

inline FiniteGroup cyclic_group(int m, const Caps& caps = {}) {
    require(m >= 1, "ShapeMismatch", "cyclic_group needs m >= 1");
    if (m > caps.max_group_order) throw CapExceeded("group order above cap");
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
    return make_group(t);
}

/// Product on pairs (a,b) -> a*|H|+b.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, const Caps& caps = {}) {
    int n = g.n * h.n;
    if (n > caps.max_group_order) throw CapExceeded("group order above cap");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < h.n; ++b)
            for (int c = 0; c < g.n; ++c)
                for (int d = 0; d < h.n; ++d)
                    t[a * h.n + b][c * h.n + d] = g.mul(a, c) * h.n + h.mul(b, d);
    return make_group(t);
}

/// Dihedral group of order 2m: indices a < m are rotations r^a, indices
/// m+a are reflections s*r^a; relations r^m = s^2 = 1, s*r*s = r^{-1}.
inline FiniteGroup dihedral_group(int m, const Caps& caps = {}) {
    require(m >= 1, "ShapeMismatch", "dihedral_group needs m >= 1");
    int n = 2 * m;
    if (n > caps.max_group_order) throw CapExceeded("group order above cap");
    auto rot = [m](int a) { return ((a % m) + m) % m; };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            t[a][b] = rot(a + b);              // r^a r^b
            t[a][m + b] = m + rot(b - a);      // r^a (s r^b) = s r^{b-a}
            t[m + a][b] = m + rot(a + b);      // (s r^a) r^b
            t[m + a][m + b] = rot(b - a);      // (s r^a)(s r^b) = r^{b-a}
        }
    return make_group(t);
}

inline FiniteGroup klein_four_group(const Caps& caps = {}) {
    return direct_product(cyclic_group(2, caps), cyclic_group(2, caps), caps);
}

/// Symmetric group on k points via the lexicographic permutation list;
/// product is function composition with the right factor applied first.
inline FiniteGroup symmetric_group(int k, const Caps& caps = {}) {
    require(k >= 1 && k <= 5, "ShapeMismatch", "symmetric_group supports 1 <= k <= 5");
    std::vector<Perm> perms = all_permutations(k);
    int n = static_cast<int>(perms.size());
    if (n > caps.max_group_order) throw CapExceeded("group order above cap");
    std::map<Perm, int> idx;
    for (int i = 0; i < n; ++i) idx[perms[i]] = i;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = idx[compose(perms[a], perms[b])];
    return make_group(t);
}

inline bool is_group_hom(const FiniteGroup& g, const FiniteGroup& h, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != g.n) return false;
    for (int v : f)
        if (v < 0 || v >= h.n) return false;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (f[g.mul(a, b)] != h.mul(f[a], f[b])) return false;
    return true;
}

/// All automorphisms, found by assigning images of a generating sequence with
/// element-order pruning and validating the induced map on the full table.
inline std::vector<Perm> group_automorphisms(const FiniteGroup& g, const Caps& caps = {}) {
    if (g.n > caps.max_group_aut_order)
        throw CapExceeded("group automorphism search above cap");

    // Greedy generating sequence; expr[e] = (previous element, generator slot).
    std::vector<int> gens;
    std::vector<std::pair<int, int>> expr(g.n, {-1, -1});
    std::vector<char> reached(g.n, 0);
    reached[g.identity] = 1;
    std::vector<int> order{g.identity};
    for (int cand = 0; cand < g.n; ++cand) {
        if (reached[cand]) continue;
        int slot = static_cast<int>(gens.size());
        gens.push_back(cand);
        for (size_t k = 0; k < order.size(); ++k) {
            int e = order[k];
            for (int gi = 0; gi <= slot; ++gi) {
                int f = g.mul(e, gens[gi]);
                if (!reached[f]) {
                    reached[f] = 1;
                    expr[f] = {e, gi};
                    order.push_back(f);
                }
            }
        }
    }

    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        int ord = g.element_order(gens[i]);
        for (int e = 0; e < g.n; ++e)
            if (g.element_order(e) == ord) candidates[i].push_back(e);
    }

    std::vector<Perm> result;
    std::vector<int> img_gen(gens.size(), -1);
    auto try_leaf = [&]() {
        std::vector<int> f(g.n, -1);
        f[g.identity] = g.identity;
        for (int e : order) {
            if (e == g.identity) continue;
            auto [prev, slot] = expr[e];
            f[e] = g.mul(f[prev], img_gen[slot]);
        }
        if (!is_permutation(f)) return;
        if (!is_group_hom(g, g, f)) return;
        result.emplace_back(f);
    };
    auto dfs = [&](auto&& self, size_t i) -> void {
        if (i == gens.size()) {
            try_leaf();
            return;
        }
        for (int c : candidates[i]) {
            img_gen[i] = c;
            self(self, i + 1);
        }
    };
    dfs(dfs, 0);
    std::sort(result.begin(), result.end());
    return result;
}

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::set<int> s(elems.begin(), elems.end());
    if (!s.count(g.identity)) return false;
    for (int a : s) {
        if (!s.count(g.inverse(a))) return false;
        for (int b : s)
            if (!s.count(g.mul(a, b))) return false;
    }
    return true;
}

inline bool is_normal_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    if (!is_subgroup(g, elems)) return false;
    std::set<int> s(elems.begin(), elems.end());
    for (int a : s)
        for (int h = 0; h < g.n; ++h)
            if (!s.count(g.conj(a, h))) return false;
    return true;
}

/// Reindexed Cayley table of a subgroup; elems must be sorted.
inline FiniteGroup subgroup_as_group(const FiniteGroup& g, const std::vector<int>& elems) {
    require(is_subgroup(g, elems), "NotASubgroup", "subset is not a subgroup");
    require(std::is_sorted(elems.begin(), elems.end()), "ShapeMismatch",
            "subgroup elements must be sorted");
    int m = static_cast<int>(elems.size());
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < m; ++i) pos[elems[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = pos[g.mul(elems[i], elems[j])];
    return make_group(t);
}

/// Quotient of a group by a normal subgroup. Cosets are indexed in order of
/// their minimal element, so the coset of the identity is index 0 and the
/// minimal-element transversal satisfies kappa(0) = 0.
struct QuotientGroup {
    FiniteGroup group;
    std::vector<int> pi;       // element -> coset index
    std::vector<int> min_rep;  // coset index -> minimal representative
};

inline QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<int>& normal) {
    require(is_normal_subgroup(g, normal), "NotNormal", "subset is not a normal subgroup");
    QuotientGroup q;
    q.pi.assign(g.n, -1);
    for (int e = 0; e < g.n; ++e) {
        if (q.pi[e] >= 0) continue;
        int idx = static_cast<int>(q.min_rep.size());
        q.min_rep.push_back(e);
        for (int a : normal) q.pi[g.mul(e, a)] = idx;
    }
    int m = static_cast<int>(q.min_rep.size());
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = q.pi[g.mul(q.min_rep[i], q.min_rep[j])];
    q.group = make_group(t);
    return q;
}

} // namespace qf
