#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qf/group.hpp"
#include "qf/perm.hpp"

namespace qf {

/// Finite quandle as a validated operation table, table[x][y] = x*y.
/// Axioms: (Q1) x*x = x; (Q2) every column y is a permutation of the index
/// set; (Q3) (x*y)*z = (x*z)*(y*z).
struct Quandle {
    int n = 0;
    std::vector<std::vector<int>> table;

    int op(int x, int y) const { return table[x][y]; }

    /// Inner automorphism S_x : y -> y*x (column x of the table).
    Perm inner(int x) const {
        std::vector<int> img(n);
        for (int y = 0; y < n; ++y) img[y] = table[y][x];
        return Perm(img);
    }

    bool operator==(const Quandle& o) const { return n == o.n && table == o.table; }
};

struct QuandleCheck {
    bool ok = true;
    std::string code; // Q1Violation | Q2Violation | Q3Violation | ShapeMismatch
    std::array<int, 3> witness{-1, -1, -1};
    std::string message;
};

inline QuandleCheck check_quandle_table(const std::vector<std::vector<int>>& t) {
    const int n = static_cast<int>(t.size());
    if (n == 0) return {false, "ShapeMismatch", {}, "empty table"};
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(t[i].size()) != n)
            return {false, "ShapeMismatch", {i, -1, -1}, "table is not square"};
        for (int j = 0; j < n; ++j)
            if (t[i][j] < 0 || t[i][j] >= n)
                return {false, "ShapeMismatch", {i, j, -1}, "entry out of range"};
    }
    for (int x = 0; x < n; ++x)
        if (t[x][x] != x)
            return {false, "Q1Violation", {x, -1, -1},
                    "x*x != x at x=" + std::to_string(x)};
    for (int y = 0; y < n; ++y) {
        std::vector<char> seen(n, 0);
        for (int x = 0; x < n; ++x) {
            if (seen[t[x][y]])
                return {false, "Q2Violation", {y, x, -1},
                        "column " + std::to_string(y) + " is not a bijection"};
            seen[t[x][y]] = 1;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (t[t[x][y]][z] != t[t[x][z]][t[y][z]])
                    return {false, "Q3Violation", {x, y, z},
                            "(x*y)*z != (x*z)*(y*z) at (" + std::to_string(x) + "," +
                                std::to_string(y) + "," + std::to_string(z) + ")"};
    return {};
}

inline Quandle make_quandle(const std::vector<std::vector<int>>& t) {
    QuandleCheck c = check_quandle_table(t);
    if (!c.ok) throw Error(c.code, c.message);
    return Quandle{static_cast<int>(t.size()), t};
}

inline Quandle trivial_quandle(int n) {
    require(n >= 1, "ShapeMismatch", "trivial_quandle needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return Quandle{n, std::move(t)};
}

/// Dihedral quandle R_n on Z_n: i*j = 2j - i mod n.
inline Quandle dihedral_quandle(int n) {
    require(n >= 1, "ShapeMismatch", "dihedral_quandle needs n >= 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = ((2 * j - i) % n + n) % n;
    return Quandle{n, std::move(t)};
}

/// Conj_m(G): a*b = b^{-m} a b^m.
inline Quandle conj_quandle(const FiniteGroup& g, int m = 1) {
    std::vector<std::vector<int>> t(g.n, std::vector<int>(g.n));
    for (int b = 0; b < g.n; ++b) {
        int bm = g.pow(b, m), bmi = g.inverse(bm);
        for (int a = 0; a < g.n; ++a) t[a][b] = g.mul(g.mul(bmi, a), bm);
    }
    return Quandle{g.n, std::move(t)};
}

/// Core(G): a*b = b a^{-1} b.
inline Quandle core_quandle(const FiniteGroup& g) {
    std::vector<std::vector<int>> t(g.n, std::vector<int>(g.n));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) t[a][b] = g.mul(g.mul(b, g.inverse(a)), b);
    return Quandle{g.n, std::move(t)};
}

/// Alex_f(G): x*y = f(x y^{-1}) y for f an automorphism of G.
inline Quandle alexander_quandle(const FiniteGroup& g, const Perm& f) {
    require(f.degree() == g.n && is_group_hom(g, g, f.img), "FNotAutomorphism",
            "f is not a group automorphism");
    std::vector<std::vector<int>> t(g.n, std::vector<int>(g.n));
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) t[x][y] = g.mul(f(g.mul(x, g.inverse(y))), y);
    return Quandle{g.n, std::move(t)};
}

/// Full closure of the inner automorphisms {S_x} under composition,
/// sorted; the group Inn(X) as an explicit permutation list.
inline std::vector<Perm> inner_group(const Quandle& x, const Caps& caps = {}) {
    std::vector<Perm> gens;
    for (int i = 0; i < x.n; ++i) {
        Perm s = x.inner(i);
        if (std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
    }
    return permutation_closure(gens, x.n, caps.search_budget);
}

struct Connectivity {
    bool connected = false;
    std::vector<std::vector<int>> orbits;
};

/// Orbit decomposition under Inn(X); connected when there is one orbit.
inline Connectivity is_connected(const Quandle& x) {
    std::vector<Perm> gens;
    for (int i = 0; i < x.n; ++i) gens.push_back(x.inner(i));
    Connectivity c;
    c.orbits = orbit_partition(gens, x.n);
    c.connected = c.orbits.size() == 1;
    return c;
}

namespace detail {

/// Isomorphism-invariant fingerprint of an element: inner-orbit size and the
/// cycle type of S_x. Used to prune automorphism / isomorphism search.
inline std::vector<std::vector<int>> fingerprints(const Quandle& x) {
    Connectivity c = is_connected(x);
    std::vector<int> orbit_size(x.n);
    for (const auto& orb : c.orbits)
        for (int e : orb) orbit_size[e] = static_cast<int>(orb.size());
    std::vector<std::vector<int>> fp(x.n);
    for (int e = 0; e < x.n; ++e) {
        fp[e] = cycle_type(x.inner(e));
        fp[e].push_back(orbit_size[e]);
    }
    return fp;
}

/// Backtracking over images 0..n-1 of X into Y. Candidates are filtered per
/// element; partial maps are rejected as soon as a defined product disagrees.
template <typename Emit>
inline void map_search(const Quandle& x, const Quandle& y,
                       const std::vector<std::vector<int>>& candidates, bool injective,
                       long long budget, Emit&& emit) {
    std::vector<int> img(x.n, -1);
    std::vector<char> used(y.n, 0);
    long long nodes = 0;
    auto consistent = [&](int k) {
        for (int i = 0; i <= k; ++i)
            for (int j = 0; j <= k; ++j) {
                int p = x.op(i, j);
                if (p > k) continue;
                if (i != k && j != k && p != k) continue;
                if (y.op(img[i], img[j]) != img[p]) return false;
            }
        return true;
    };
    auto dfs = [&](auto&& self, int k) -> void {
        if (k == x.n) {
            emit(img);
            return;
        }
        for (int c : candidates[k]) {
            if (injective && used[c]) continue;
            if (++nodes > budget) throw CapExceeded("quandle map search exceeded budget");
            img[k] = c;
            if (consistent(k)) {
                used[c] = 1;
                self(self, k + 1);
                used[c] = 0;
            }
            img[k] = -1;
        }
    };
    dfs(dfs, 0);
}

} // namespace detail

inline std::vector<Perm> automorphism_group(const Quandle& x, const Caps& caps = {}) {
    if (x.n > caps.max_quandle_size)
        throw CapExceeded("automorphism search above size cap");
    auto fp = detail::fingerprints(x);
    std::vector<std::vector<int>> candidates(x.n);
    for (int e = 0; e < x.n; ++e)
        for (int c = 0; c < x.n; ++c)
            if (fp[e] == fp[c]) candidates[e].push_back(c);
    std::vector<Perm> out;
    detail::map_search(x, x, candidates, true, caps.search_budget,
                       [&](const std::vector<int>& img) { out.emplace_back(img); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Subgroup of Aut(X) fixing the base point x0.
inline std::vector<Perm> stabilizer_aut(const Quandle& x, int x0, const Caps& caps = {}) {
    require(x0 >= 0 && x0 < x.n, "ShapeMismatch", "base point out of range");
    std::vector<Perm> out;
    for (const Perm& p : automorphism_group(x, caps))
        if (p(x0) == x0) out.push_back(p);
    return out;
}

struct QuandleMorphism {
    std::vector<int> images;
};

inline bool is_quandle_hom(const Quandle& x, const Quandle& y, const std::vector<int>& f) {
    if (static_cast<int>(f.size()) != x.n) return false;
    for (int v : f)
        if (v < 0 || v >= y.n) return false;
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b)
            if (f[x.op(a, b)] != y.op(f[a], f[b])) return false;
    return true;
}

/// All quandle homomorphisms X -> Y.
inline std::vector<QuandleMorphism> quandle_homs(const Quandle& x, const Quandle& y,
                                                 const Caps& caps = {}) {
    std::vector<std::vector<int>> candidates(x.n);
    for (int e = 0; e < x.n; ++e) {
        candidates[e].resize(y.n);
        std::iota(candidates[e].begin(), candidates[e].end(), 0);
    }
    std::vector<QuandleMorphism> out;
    detail::map_search(x, y, candidates, false, caps.search_budget,
                       [&](const std::vector<int>& img) { out.push_back({img}); });
    return out;
}

/// Witness isomorphism, or nullopt when provably none exists.
inline std::optional<Perm> are_isomorphic(const Quandle& x, const Quandle& y,
                                          const Caps& caps = {}) {
    if (x.n != y.n) return std::nullopt;
    if (x.n > caps.max_quandle_size)
        throw CapExceeded("isomorphism search above size cap");
    auto fx = detail::fingerprints(x), fy = detail::fingerprints(y);
    {
        auto sx = fx, sy = fy;
        std::sort(sx.begin(), sx.end());
        std::sort(sy.begin(), sy.end());
        if (sx != sy) return std::nullopt;
    }
    std::vector<std::vector<int>> candidates(x.n);
    for (int e = 0; e < x.n; ++e)
        for (int c = 0; c < y.n; ++c)
            if (fx[e] == fy[c]) candidates[e].push_back(c);
    struct Found {
        Perm p;
    };
    try {
        detail::map_search(x, y, candidates, true, caps.search_budget,
                           [&](const std::vector<int>& img) { throw Found{Perm(img)}; });
    } catch (const Found& f) {
        return f.p;
    }
    return std::nullopt;
}

/// Coordinatewise quandle on X x Y, pair (x,y) -> x*|Y| + y.
inline Quandle product_quandle(const Quandle& x, const Quandle& y) {
    int n = x.n * y.n;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < y.n; ++b)
            for (int c = 0; c < x.n; ++c)
                for (int d = 0; d < y.n; ++d)
                    t[a * y.n + b][c * y.n + d] = x.op(a, c) * y.n + y.op(b, d);
    return Quandle{n, std::move(t)};
}

} // namespace qf
