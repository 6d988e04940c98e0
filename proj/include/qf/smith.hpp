#pragma once

#include <numeric>
#include <optional>

#include "qf/abelian.hpp"
#include "qf/int_matrix.hpp"

namespace qf {

/// Smith normal form D = U*M*V with unimodular transforms and their inverses
/// tracked through the elimination. Diagonal entries are non-negative and
/// satisfy the divisibility chain d_i | d_{i+1}.
struct SmithForm {
    IntMatrix D, U, V, Uinv, Vinv;

    int rank() const {
        int r = 0, n = std::min(D.rows(), D.cols());
        while (r < n && D.at(r, r) != 0) ++r;
        return r;
    }

    std::vector<Int> diag() const {
        std::vector<Int> d;
        int n = std::min(D.rows(), D.cols());
        for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
        return d;
    }
};

inline SmithForm smith_normal_form(const IntMatrix& M) {
    const int r = M.rows(), c = M.cols();
    SmithForm f{M, IntMatrix::identity(r), IntMatrix::identity(c),
                IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix& A = f.D;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < c; ++k) std::swap(A.at(i, k), A.at(j, k));
        for (int k = 0; k < r; ++k) std::swap(f.U.at(i, k), f.U.at(j, k));
        for (int k = 0; k < r; ++k) std::swap(f.Uinv.at(k, i), f.Uinv.at(k, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int k = 0; k < r; ++k) std::swap(A.at(k, i), A.at(k, j));
        for (int k = 0; k < c; ++k) std::swap(f.V.at(k, i), f.V.at(k, j));
        for (int k = 0; k < c; ++k) std::swap(f.Vinv.at(i, k), f.Vinv.at(j, k));
    };
    auto negate_row = [&](int i) {
        for (int k = 0; k < c; ++k) A.at(i, k) = -A.at(i, k);
        for (int k = 0; k < r; ++k) f.U.at(i, k) = -f.U.at(i, k);
        for (int k = 0; k < r; ++k) f.Uinv.at(k, i) = -f.Uinv.at(k, i);
    };
    // row_i += q * row_j
    auto add_row = [&](int i, int j, const Int& q) {
        if (q == 0) return;
        for (int k = 0; k < c; ++k) A.at(i, k) += q * A.at(j, k);
        for (int k = 0; k < r; ++k) f.U.at(i, k) += q * f.U.at(j, k);
        for (int k = 0; k < r; ++k) f.Uinv.at(k, j) -= q * f.Uinv.at(k, i);
    };
    // col_i += q * col_j
    auto add_col = [&](int i, int j, const Int& q) {
        if (q == 0) return;
        for (int k = 0; k < r; ++k) A.at(k, i) += q * A.at(k, j);
        for (int k = 0; k < c; ++k) f.V.at(k, i) += q * f.V.at(k, j);
        for (int k = 0; k < c; ++k) f.Vinv.at(j, k) -= q * f.Vinv.at(i, k);
    };

    const int steps = std::min(r, c);
    for (int t = 0; t < steps; ++t) {
        // Move a minimal-magnitude nonzero entry of the trailing block to (t,t).
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (A.at(i, j) != 0 &&
                    (pi < 0 || abs(A.at(i, j)) < abs(A.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < r && clean; ++i) {
                if (A.at(i, t) == 0) continue;
                Int q = A.at(i, t) / A.at(t, t);
                add_row(i, t, -q);
                if (A.at(i, t) != 0) { // remainder became the smaller pivot
                    swap_rows(t, i);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < c && clean; ++j) {
                if (A.at(t, j) == 0) continue;
                Int q = A.at(t, j) / A.at(t, t);
                add_col(j, t, -q);
                if (A.at(t, j) != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;
            // Enforce the divisibility chain before moving on.
            for (int i = t + 1; i < r && clean; ++i)
                for (int j = t + 1; j < c && clean; ++j)
                    if (A.at(i, j) % A.at(t, t) != 0) {
                        add_row(t, i, 1);
                        clean = false;
                    }
        }
        if (A.at(t, t) < 0) negate_row(t);
    }
    return f;
}

/// Invariant factors of (Z_{v_1} x ... x Z_{v_k}) / colspan(M), where the
/// moduli vector gives the ambient group (entry 0 = Z). An empty moduli
/// vector means the free ambient Z^rows.
inline AbelianGroupStructure cokernel_structure(const IntMatrix& M,
                                                const std::vector<Int>& moduli = {}) {
    const int rows = M.rows();
    if (!moduli.empty())
        require(static_cast<int>(moduli.size()) == rows, "ShapeMismatch",
                "moduli vector does not match matrix rows");
    int extra = 0;
    for (const Int& v : moduli)
        if (v != 0) ++extra;
    IntMatrix aug(rows, M.cols() + extra);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < M.cols(); ++j) aug.at(i, j) = M.at(i, j);
    int col = M.cols();
    for (int i = 0; i < rows; ++i)
        if (!moduli.empty() && moduli[i] != 0) aug.at(i, col++) = moduli[i];

    SmithForm f = smith_normal_form(aug);
    std::vector<Int> factors;
    int rank = f.rank();
    for (int i = 0; i < rank; ++i)
        if (f.D.at(i, i) != 1) factors.push_back(f.D.at(i, i));
    for (int i = rank; i < rows; ++i) factors.push_back(0);
    return AbelianGroupStructure(std::move(factors));
}

namespace detail {

inline long long emod(const Int& v, long long m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r.convert_to<long long>();
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

/// Modular inverse of a mod m for gcd(a,m)=1.
inline long long modinv(long long a, long long m) {
    long long t = 0, nt = 1, r = m, nr = a % m;
    if (nr < 0) nr += m;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    require(r == 1, "ShapeMismatch", "modular inverse of non-unit");
    if (t < 0) t += m;
    return t;
}

} // namespace detail

/// Solve M z = b over Z_m; returns entries in [0, m) or nullopt when
/// inconsistent. Uses the Smith form of M.
inline std::optional<std::vector<long long>> solve_mod(const IntMatrix& M,
                                                       const std::vector<long long>& b,
                                                       long long m) {
    require(static_cast<int>(b.size()) == M.rows(), "ShapeMismatch", "solve_mod rhs size");
    SmithForm f = smith_normal_form(M);
    const int rank = f.rank();
    std::vector<Int> bb(b.begin(), b.end());
    std::vector<Int> c = f.U.apply(bb);

    std::vector<Int> w(M.cols(), 0);
    for (int i = 0; i < M.rows(); ++i) {
        long long ci = detail::emod(c[i], m);
        if (i >= rank || i >= M.cols()) {
            if (ci != 0) return std::nullopt;
            continue;
        }
        long long s = detail::emod(f.D.at(i, i), m);
        if (s == 0) {
            if (ci != 0) return std::nullopt;
            continue;
        }
        long long g = detail::gcd_ll(s, m);
        if (ci % g != 0) return std::nullopt;
        long long mg = m / g;
        w[i] = (ci / g) % mg * detail::modinv(s / g, mg) % mg;
    }
    std::vector<Int> z = f.V.apply(w);
    std::vector<long long> out(z.size());
    for (size_t i = 0; i < z.size(); ++i) out[i] = detail::emod(z[i], m);
    return out;
}

/// Basis (as matrix columns) of the lattice {v in Z^cols : M v = 0 mod m}.
inline IntMatrix kernel_mod_basis(const IntMatrix& M, long long m) {
    SmithForm f = smith_normal_form(M);
    const int n = M.cols(), rank = f.rank();
    IntMatrix B(n, n);
    for (int j = 0; j < n; ++j) {
        Int cj = 1;
        if (j < rank) {
            long long g = detail::gcd_ll(detail::emod(f.D.at(j, j), m), m);
            cj = m / g;
        }
        for (int i = 0; i < n; ++i) B.at(i, j) = f.V.at(i, j) * cj;
    }
    return B;
}

/// Structure and representatives of ker(Dn mod m) / (im(Dprev mod m)),
/// the degree-n cohomology of ... <- Z_m^{b} <-Dprev- ... with Dn out of
/// degree n. Dn may have zero rows (no constraint).
struct ModSubquotient {
    std::vector<long long> factors;            // invariant factors > 1, divisibility chain
    std::vector<std::vector<long long>> reps;  // one representative vector per class
    bool reps_complete = true;                 // false when rep count exceeded the cap
};

inline ModSubquotient subquotient_mod(const IntMatrix& Dprev, const IntMatrix& Dn,
                                      long long m, long long rep_cap) {
    const int b = Dn.cols();
    require(Dprev.rows() == b, "ShapeMismatch", "chain matrices do not compose");

    SmithForm fn = smith_normal_form(Dn);
    std::vector<Int> scale(b, 1);
    for (int i = 0; i < std::min(b, fn.rank()); ++i) {
        long long g = detail::gcd_ll(detail::emod(fn.D.at(i, i), m), m);
        scale[i] = m / g;
    }

    // Relations inside the kernel lattice, written in the kernel basis
    // B = V * diag(scale): Y = diag(1/scale) * Vinv * [Dprev | m*I].
    IntMatrix R(b, Dprev.cols() + b);
    for (int i = 0; i < b; ++i) {
        for (int j = 0; j < Dprev.cols(); ++j) R.at(i, j) = Dprev.at(i, j);
        R.at(i, Dprev.cols() + i) = m;
    }
    IntMatrix Y = fn.Vinv * R;
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < Y.cols(); ++j) {
            require(Y.at(i, j) % scale[i] == 0, "ShapeMismatch",
                    "relation does not lie in the kernel lattice");
            Y.at(i, j) /= scale[i];
        }

    SmithForm fy = smith_normal_form(Y);
    ModSubquotient out;
    std::vector<int> gen_idx;
    Int total = 1;
    for (int i = 0; i < b; ++i) {
        Int d = i < std::min(Y.rows(), Y.cols()) ? fy.D.at(i, i) : Int(0);
        require(d != 0, "ShapeMismatch", "subquotient is not finite");
        if (d != 1) {
            out.factors.push_back(d.convert_to<long long>());
            gen_idx.push_back(i);
            total *= d;
        }
    }

    // Class generators in cochain coordinates: B * (Uinv of Y) columns.
    std::vector<std::vector<long long>> gens;
    for (int gi : gen_idx) {
        std::vector<long long> g(b);
        for (int i = 0; i < b; ++i) {
            Int acc = 0;
            for (int k = 0; k < b; ++k)
                acc += fn.V.at(i, k) * scale[k] * fy.Uinv.at(k, gi);
            g[i] = detail::emod(acc, m);
        }
        gens.push_back(std::move(g));
    }

    if (total > rep_cap) {
        out.reps_complete = false;
        return out;
    }
    std::vector<long long> counter(gen_idx.size(), 0);
    while (true) {
        std::vector<long long> rep(b, 0);
        for (size_t i = 0; i < gens.size(); ++i)
            for (int k = 0; k < b; ++k)
                rep[k] = (rep[k] + counter[i] * gens[i][k]) % m;
        out.reps.push_back(std::move(rep));
        size_t pos = 0;
        while (pos < counter.size()) {
            if (++counter[pos] < out.factors[pos]) break;
            counter[pos++] = 0;
        }
        if (pos == counter.size()) break;
    }
    return out;
}

} // namespace qf
