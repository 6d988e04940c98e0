#pragma once

#include <vector>

#include "qf/group.hpp"

namespace qf {

/// Finite abelian coefficient group Z_{m_1} x ... x Z_{m_k}, written
/// additively. Elements are indexed 0..|A|-1 in mixed-radix order; the
/// zero element is index 0.
struct CoeffGroup {
    std::vector<long long> moduli; // each >= 2

    CoeffGroup() = default;
    explicit CoeffGroup(std::vector<long long> m) : moduli(std::move(m)) {
        for (long long v : moduli)
            require(v >= 2, "ShapeMismatch", "coefficient moduli must be >= 2");
    }

    int k() const { return static_cast<int>(moduli.size()); }

    long long size() const {
        long long s = 1;
        for (long long v : moduli) s *= v;
        return s;
    }

    std::vector<long long> tuple_of(long long idx) const {
        std::vector<long long> t(moduli.size());
        for (int j = k() - 1; j >= 0; --j) {
            t[j] = idx % moduli[j];
            idx /= moduli[j];
        }
        return t;
    }

    long long index_of(const std::vector<long long>& t) const {
        require(static_cast<int>(t.size()) == k(), "ShapeMismatch", "tuple arity mismatch");
        long long idx = 0;
        for (int j = 0; j < k(); ++j) {
            long long v = ((t[j] % moduli[j]) + moduli[j]) % moduli[j];
            idx = idx * moduli[j] + v;
        }
        return idx;
    }

    long long component(long long idx, int j) const {
        for (int i = k() - 1; i > j; --i) idx /= moduli[i];
        return idx % moduli[j];
    }

    long long add(long long a, long long b) const {
        auto ta = tuple_of(a), tb = tuple_of(b);
        for (int j = 0; j < k(); ++j) ta[j] = (ta[j] + tb[j]) % moduli[j];
        return index_of(ta);
    }

    long long neg(long long a) const {
        auto t = tuple_of(a);
        for (int j = 0; j < k(); ++j) t[j] = (moduli[j] - t[j]) % moduli[j];
        return index_of(t);
    }

    long long sub(long long a, long long b) const { return add(a, neg(b)); }

    long long smul(long long c, long long a) const {
        auto t = tuple_of(a);
        for (int j = 0; j < k(); ++j) t[j] = (((t[j] * c) % moduli[j]) + moduli[j]) % moduli[j];
        return index_of(t);
    }

    FiniteGroup as_group(const Caps& caps = {}) const {
        long long n = size();
        if (n > caps.max_group_order) throw CapExceeded("coefficient group above order cap");
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b) t[a][b] = static_cast<int>(add(a, b));
        return make_group(t);
    }
};

/// Group automorphisms of A as permutations of element indices.
inline std::vector<Perm> coeff_automorphisms(const CoeffGroup& a, const Caps& caps = {}) {
    return group_automorphisms(a.as_group(caps), caps);
}

inline bool is_coeff_automorphism(const CoeffGroup& a, const Perm& theta) {
    const long long n = a.size();
    if (theta.degree() != n) return false;
    for (long long u = 0; u < n; ++u)
        for (long long v = 0; v < n; ++v)
            if (theta(static_cast<int>(a.add(u, v))) !=
                a.add(theta(static_cast<int>(u)), theta(static_cast<int>(v))))
                return false;
    return true;
}

} // namespace qf
