#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qf/common.hpp"

namespace qf {

/// Permutation of {0,...,n-1}, stored as its image sequence.
struct Perm {
    std::vector<int> img;

    Perm() = default;
    explicit Perm(std::vector<int> images) : img(std::move(images)) {}

    static Perm identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return Perm(v);
    }

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> v(img.size());
        for (int i = 0; i < degree(); ++i) v[img[i]] = i;
        return Perm(v);
    }

    auto operator<=>(const Perm&) const = default;
};

inline bool is_permutation(const std::vector<int>& img) {
    const int n = static_cast<int>(img.size());
    std::vector<char> seen(n, 0);
    for (int v : img) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

/// Function composition: (a*b)(x) = a(b(x)), b applied first.
inline Perm compose(const Perm& a, const Perm& b) {
    std::vector<int> v(b.img.size());
    for (int i = 0; i < b.degree(); ++i) v[i] = a(b(i));
    return Perm(v);
}

/// Sorted cycle lengths, fixed points included.
inline std::vector<int> cycle_type(const Perm& p) {
    std::vector<char> seen(p.degree(), 0);
    std::vector<int> type;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = p(j);
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

/// Closure of a generating set under composition (the generated subgroup of
/// the symmetric group), returned sorted. Degree taken from the generators;
/// an empty generator list yields {identity(degree_hint)}.
inline std::vector<Perm> permutation_closure(const std::vector<Perm>& gens, int degree_hint,
                                             long long budget = 1'000'000) {
    int n = gens.empty() ? degree_hint : gens.front().degree();
    std::set<Perm> elems;
    elems.insert(Perm::identity(n));
    std::vector<Perm> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& p : frontier) {
            for (const Perm& g : gens) {
                Perm q = compose(g, p);
                if (elems.insert(q).second) next.push_back(std::move(q));
                if (static_cast<long long>(elems.size()) > budget)
                    throw CapExceeded("permutation closure exceeded budget");
            }
        }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

/// Orbit partition of {0,...,n-1} under a set of permutations. Each orbit is
/// sorted, and orbits are ordered by their minimum.
inline std::vector<std::vector<int>> orbit_partition(const std::vector<Perm>& gens, int n) {
    std::vector<int> root(n, -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n; ++i) {
        if (root[i] >= 0) continue;
        std::vector<int> orbit{i};
        root[i] = i;
        for (size_t k = 0; k < orbit.size(); ++k) {
            for (const Perm& g : gens) {
                int y = g(orbit[k]);
                if (root[y] < 0) {
                    root[y] = i;
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

/// All n! permutations of degree n in lexicographic order. Intended for
/// small n only (oracles and Sigma_S sweeps).
inline std::vector<Perm> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace qf
