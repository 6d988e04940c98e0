#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qf/int_matrix.hpp"

namespace qf {

/// Invariant-factor description of a finitely generated abelian group:
/// factors d_1 | d_2 | ... with 0 denoting an infinite cyclic factor
/// (zeros sorted last) and trivial factors (1) dropped.
struct AbelianGroupStructure {
    std::vector<Int> factors;

    AbelianGroupStructure() = default;
    explicit AbelianGroupStructure(std::vector<Int> f) : factors(std::move(f)) {}

    bool is_trivial() const { return factors.empty(); }

    int free_rank() const {
        return static_cast<int>(std::count(factors.begin(), factors.end(), Int(0)));
    }

    /// Group order; 0 when a free factor makes it infinite.
    Int order() const {
        Int o = 1;
        for (const Int& d : factors) {
            if (d == 0) return 0;
            o *= d;
        }
        return o;
    }

    bool operator==(const AbelianGroupStructure&) const = default;

    std::string str() const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        int rank = free_rank();
        bool first = true;
        if (rank == 1) { os << "Z"; first = false; }
        else if (rank > 1) { os << "Z^" << rank; first = false; }
        for (const Int& d : factors) {
            if (d == 0) continue;
            if (!first) os << " x ";
            os << "Z_" << d;
            first = false;
        }
        return os.str();
    }

    /// Canonical structure of a direct sum of cyclic groups of the given
    /// orders (0 = Z). Prime-power decomposition, then the k-th invariant
    /// factor (from the largest) collects the k-th largest power of each prime.
    static AbelianGroupStructure from_cyclic_orders(const std::vector<Int>& orders) {
        int rank = 0;
        std::map<Int, std::vector<int>> exps; // prime -> exponents, one per cyclic factor
        for (Int d : orders) {
            if (d < 0) d = -d;
            if (d == 0) { ++rank; continue; }
            if (d == 1) continue;
            for (Int p = 2; p * p <= d; ++p) {
                if (d % p != 0) continue;
                int e = 0;
                while (d % p == 0) { d /= p; ++e; }
                exps[p].push_back(e);
            }
            if (d > 1) exps[d].push_back(1);
        }
        size_t slots = 0;
        for (auto& [p, es] : exps) {
            std::sort(es.begin(), es.end(), std::greater<int>());
            slots = std::max(slots, es.size());
        }
        std::vector<Int> inv(slots, 1);
        for (const auto& [p, es] : exps)
            for (size_t k = 0; k < es.size(); ++k) {
                Int q = 1;
                for (int e = 0; e < es[k]; ++e) q *= p;
                inv[k] *= q; // inv[0] is the largest invariant factor
            }
        std::reverse(inv.begin(), inv.end());
        for (int i = 0; i < rank; ++i) inv.push_back(0);
        return AbelianGroupStructure(std::move(inv));
    }
};

} // namespace qf
