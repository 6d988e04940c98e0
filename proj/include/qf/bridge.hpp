#pragma once

#include <optional>
#include <set>

#include "qf/cohomology.hpp"

namespace qf {

/// Homogeneous quandle module over a base quandle: an abelian group A with
/// endomorphisms a_{x,y} (invertible) and b_{y,x} per ordered pair,
/// satisfying the trunk identities. Written additively.
struct QuandleModule {
    Quandle base;
    CoeffGroup coeff;
    // Endomorphism tables on element indices, addressed by the paper-order
    // subscripts: amap(x,y) and bmap(y,x).
    std::vector<std::vector<long long>> a_maps, b_maps;

    const std::vector<long long>& amap(int x, int y) const {
        return a_maps[static_cast<size_t>(x) * base.n + y];
    }
    const std::vector<long long>& bmap(int first, int second) const {
        return b_maps[static_cast<size_t>(first) * base.n + second];
    }
};

inline QuandleModule trivial_module(const Quandle& x, const CoeffGroup& a) {
    QuandleModule m{x, a, {}, {}};
    std::vector<long long> id(a.size()), zero(a.size(), 0);
    for (long long i = 0; i < a.size(); ++i) id[i] = i;
    m.a_maps.assign(static_cast<size_t>(x.n) * x.n, id);
    m.b_maps.assign(static_cast<size_t>(x.n) * x.n, zero);
    return m;
}

/// The module with a(s) = -s and b(s) = 2s for every pair; the receiving
/// module of the bridge from symmetric group cohomology over Core(G).
inline QuandleModule core_receiving_module(const Quandle& x, const CoeffGroup& a) {
    QuandleModule m{x, a, {}, {}};
    std::vector<long long> negt(a.size()), dbl(a.size());
    for (long long i = 0; i < a.size(); ++i) {
        negt[i] = a.neg(i);
        dbl[i] = a.add(i, i);
    }
    m.a_maps.assign(static_cast<size_t>(x.n) * x.n, negt);
    m.b_maps.assign(static_cast<size_t>(x.n) * x.n, dbl);
    return m;
}

struct ModuleCheck {
    bool ok = true;
    int identity = 0; // 1..4 for the trunk identities, 0 for shape/additivity
    std::vector<int> witness;
    std::string message;
};

inline ModuleCheck validate_module(const QuandleModule& m) {
    const int n = m.base.n;
    const long long asz = m.coeff.size();
    if (m.a_maps.size() != static_cast<size_t>(n) * n ||
        m.b_maps.size() != static_cast<size_t>(n) * n)
        return {false, 0, {}, "map tables have wrong shape"};
    for (const auto& tabs : {m.a_maps, m.b_maps})
        for (const auto& f : tabs) {
            if (f.size() != static_cast<size_t>(asz))
                return {false, 0, {}, "endomorphism table has wrong size"};
            for (long long u = 0; u < asz; ++u)
                for (long long v = 0; v < asz; ++v)
                    if (f[m.coeff.add(u, v)] != m.coeff.add(f[u], f[v]))
                        return {false, 0, {static_cast<int>(u), static_cast<int>(v)},
                                "map is not additive"};
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<char> seen(asz, 0);
            for (long long u = 0; u < asz; ++u) {
                long long v = m.amap(x, y)[u];
                if (seen[v]) return {false, 0, {x, y}, "a map is not invertible"};
                seen[v] = 1;
            }
        }
    auto op = [&](int p, int q) { return m.base.op(p, q); };
    for (int z = 0; z < n; ++z)
        for (long long s = 0; s < asz; ++s)
            if (m.coeff.add(m.amap(z, z)[s], m.bmap(z, z)[s]) != s)
                return {false, 4, {z, static_cast<int>(s)}, "identity (4) fails"};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (long long s = 0; s < asz; ++s) {
                    if (m.amap(op(x, y), z)[m.amap(x, y)[s]] !=
                        m.amap(op(x, z), op(y, z))[m.amap(x, z)[s]])
                        return {false, 1, {x, y, z, static_cast<int>(s)}, "identity (1) fails"};
                    if (m.amap(op(x, y), z)[m.bmap(y, x)[s]] !=
                        m.bmap(op(y, z), op(x, z))[m.amap(y, z)[s]])
                        return {false, 2, {x, y, z, static_cast<int>(s)}, "identity (2) fails"};
                    long long lhs = m.bmap(z, op(x, y))[s];
                    long long rhs = m.coeff.add(m.amap(op(x, z), op(y, z))[m.bmap(z, x)[s]],
                                                m.bmap(op(y, z), op(x, z))[m.bmap(z, y)[s]]);
                    if (lhs != rhs)
                        return {false, 3, {x, y, z, static_cast<int>(s)}, "identity (3) fails"};
                }
    return {};
}

/// Factor set over a homogeneous quandle module.
struct FactorSet {
    QuandleModule module;
    std::vector<long long> mu; // indexed x*n + y

    long long at(int x, int y) const { return mu[static_cast<size_t>(x) * module.base.n + y]; }
};

struct FactorSetCheck {
    bool ok = true;
    std::vector<int> witness;
    std::string message;
};

inline FactorSetCheck validate_factor_set(const FactorSet& fs) {
    const QuandleModule& m = fs.module;
    const int n = m.base.n;
    if (fs.mu.size() != static_cast<size_t>(n) * n)
        return {false, {}, "mu table has wrong shape"};
    for (int x = 0; x < n; ++x)
        if (fs.at(x, x) != 0) return {false, {x}, "mu(x,x) != 0"};
    auto op = [&](int p, int q) { return m.base.op(p, q); };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                long long lhs = m.coeff.add(fs.at(op(x, y), z),
                                            m.amap(op(x, y), z)[fs.at(x, y)]);
                long long rhs = m.coeff.add(
                    m.coeff.add(m.amap(op(x, z), op(y, z))[fs.at(x, z)], fs.at(op(x, z), op(y, z))),
                    m.bmap(op(y, z), op(x, z))[fs.at(y, z)]);
                if (lhs != rhs) return {false, {x, y, z}, "factor-set identity fails"};
            }
    return {};
}

/// Extension quandle of a factor set:
/// (x,s)*(y,t) = (x*y, a_{x,y}(s) + mu(x,y) + b_{y,x}(t)).
inline Quandle build_module_extension(const FactorSet& fs) {
    ModuleCheck mc = validate_module(fs.module);
    require(mc.ok, "InvalidModule", mc.message);
    FactorSetCheck fc = validate_factor_set(fs);
    require(fc.ok, "InvalidFactorSet", fc.message);
    const QuandleModule& m = fs.module;
    const int n = m.base.n;
    const long long asz = m.coeff.size();
    std::vector<std::vector<int>> t(n * asz, std::vector<int>(n * asz));
    for (int x = 0; x < n; ++x)
        for (long long s = 0; s < asz; ++s)
            for (int y = 0; y < n; ++y)
                for (long long u = 0; u < asz; ++u) {
                    long long val = m.coeff.add(m.coeff.add(m.amap(x, y)[s], fs.at(x, y)),
                                                m.bmap(y, x)[u]);
                    t[x * asz + s][y * asz + u] = static_cast<int>(m.base.op(x, y) * asz + val);
                }
    return make_quandle(t);
}

/// Witness lambda with mu2 = mu1 + a(lambda_x) + b(lambda_y) - lambda_{x*y},
/// or nullopt. Exhaustive over |A|^n with per-pair early rejection.
inline std::optional<std::vector<long long>> cohomologous_factor_sets(const FactorSet& f1,
                                                                      const FactorSet& f2,
                                                                      const Caps& caps = {}) {
    require(f1.module.base == f2.module.base && f1.module.coeff.moduli == f2.module.coeff.moduli &&
                f1.module.a_maps == f2.module.a_maps && f1.module.b_maps == f2.module.b_maps,
            "ShapeMismatch", "factor sets live over different modules");
    const QuandleModule& m = f1.module;
    const int n = m.base.n;
    const long long asz = m.coeff.size();
    double nominal = 1;
    for (int i = 0; i < n; ++i) {
        nominal *= static_cast<double>(asz);
        if (nominal > static_cast<double>(caps.search_budget))
            throw CapExceeded("factor-set cohomology search above budget");
    }
    std::vector<long long> lam(n, 0);
    auto pair_ok = [&](int x, int y) {
        long long rhs = m.coeff.add(
            m.coeff.add(f1.at(x, y), m.amap(x, y)[lam[x]]),
            m.coeff.sub(m.bmap(y, x)[lam[y]], lam[m.base.op(x, y)]));
        return f2.at(x, y) == rhs;
    };
    auto dfs = [&](auto&& self, int k) -> bool {
        if (k == n) return true;
        for (lam[k] = 0; lam[k] < asz; ++lam[k]) {
            bool ok = true;
            for (int x = 0; x <= k && ok; ++x)
                for (int y = 0; y <= k && ok; ++y) {
                    if (m.base.op(x, y) > k) continue;
                    if (x != k && y != k && m.base.op(x, y) != k) continue;
                    ok = pair_ok(x, y);
                }
            if (ok && self(self, k + 1)) return true;
        }
        return false;
    };
    if (dfs(dfs, 0)) return lam;
    return std::nullopt;
}

/// Group 2-cocycle with trivial action, values indexed by (x,y) -> x*|G|+y.
struct GroupCocycle2 {
    std::vector<long long> nu;

    long long at(int x, int y, int n) const { return nu[static_cast<size_t>(x) * n + y]; }
};

/// Degree-2 group cohomology of G with coefficients in A (trivial action),
/// unnormalized inhomogeneous cochains: Z2 = ker d2, B2 = im d1, resolved by
/// the same per-factor Smith reduction as the quandle side.
class GroupH2Space {
public:
    GroupH2Space(FiniteGroup g, CoeffGroup a, const Caps& caps = {})
        : g_(std::move(g)), a_(std::move(a)), caps_(caps) {
        const int n = g_.n, p = n * n;
        d1_ = IntMatrix(p, n);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int row = x * n + y;
                d1_.at(row, y) += 1;
                d1_.at(row, g_.mul(x, y)) -= 1;
                d1_.at(row, x) += 1;
            }
        d2_ = IntMatrix(p * n, p);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    int row = (x * n + y) * n + z;
                    d2_.at(row, y * n + z) += 1;
                    d2_.at(row, x * n + g_.mul(y, z)) += 1;
                    d2_.at(row, g_.mul(x, y) * n + z) -= 1;
                    d2_.at(row, x * n + y) -= 1;
                }
        d1_smith_ = smith_normal_form(d1_);

        std::vector<Int> orders;
        bool complete = true;
        long long total = 1;
        for (long long m : a_.moduli) {
            ModSubquotient sub = subquotient_mod(d1_, d2_, m, caps.max_class_reps);
            for (long long d : sub.factors) orders.push_back(d);
            complete = complete && sub.reps_complete;
            if (complete) {
                long long cnt = std::max<size_t>(sub.reps.size(), 1);
                if (total > caps.max_class_reps / cnt) complete = false;
                else total *= cnt;
            }
            factor_reps_.push_back(std::move(sub.reps));
        }
        structure_ = AbelianGroupStructure::from_cyclic_orders(orders);
        reps_complete_ = complete;
        if (complete) build_reps();
    }

    const FiniteGroup& group() const { return g_; }
    const CoeffGroup& coeff() const { return a_; }
    const AbelianGroupStructure& structure() const { return structure_; }
    bool reps_complete() const { return reps_complete_; }

    const std::vector<GroupCocycle2>& class_reps() const {
        if (!reps_complete_) throw CapExceeded("group H^2 representatives above cap");
        return reps_;
    }

    GroupCocycle2 zero() const {
        return {std::vector<long long>(static_cast<size_t>(g_.n) * g_.n, 0)};
    }

    GroupCocycle2 add(const GroupCocycle2& c, const GroupCocycle2& d) const {
        GroupCocycle2 r = c;
        for (size_t i = 0; i < r.nu.size(); ++i) r.nu[i] = a_.add(r.nu[i], d.nu[i]);
        return r;
    }

    GroupCocycle2 neg(const GroupCocycle2& c) const {
        GroupCocycle2 r = c;
        for (auto& v : r.nu) v = a_.neg(v);
        return r;
    }

    GroupCocycle2 sub(const GroupCocycle2& c, const GroupCocycle2& d) const {
        return add(c, neg(d));
    }

    bool is_cocycle(const GroupCocycle2& c) const {
        const int n = g_.n;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z)
                    if (a_.add(c.at(y, z, n), c.at(x, g_.mul(y, z), n)) !=
                        a_.add(c.at(g_.mul(x, y), z, n), c.at(x, y, n)))
                        return false;
        return true;
    }

    bool is_symmetric(const GroupCocycle2& c) const {
        for (int x = 0; x < g_.n; ++x)
            for (int y = 0; y < g_.n; ++y)
                if (c.at(x, y, g_.n) != c.at(y, x, g_.n)) return false;
        return true;
    }

    /// delta of a 1-cochain lambda: (x,y) -> lambda(y) - lambda(xy) + lambda(x).
    GroupCocycle2 coboundary_of(const std::vector<long long>& lam) const {
        require(static_cast<int>(lam.size()) == g_.n, "ShapeMismatch", "lambda size mismatch");
        GroupCocycle2 r = zero();
        for (int x = 0; x < g_.n; ++x)
            for (int y = 0; y < g_.n; ++y)
                r.nu[static_cast<size_t>(x) * g_.n + y] =
                    a_.add(a_.sub(lam[y], lam[g_.mul(x, y)]), lam[x]);
        return r;
    }

    bool is_coboundary(const GroupCocycle2& c) const {
        for (size_t j = 0; j < a_.moduli.size(); ++j) {
            std::vector<long long> rhs(c.nu.size());
            for (size_t i = 0; i < c.nu.size(); ++i)
                rhs[i] = a_.component(c.nu[i], static_cast<int>(j));
            if (!solve_mod(d1_, rhs, a_.moduli[j])) return false;
        }
        return true;
    }

    bool cohomologous(const GroupCocycle2& c, const GroupCocycle2& d) const {
        return is_coboundary(sub(c, d));
    }

    /// All 2-cocycles, enumerated per factor from the kernel lattice.
    std::vector<GroupCocycle2> all_cocycles() const {
        std::vector<std::vector<std::vector<long long>>> factor_sets;
        for (long long m : a_.moduli) {
            IntMatrix basis = kernel_mod_basis(d2_, m);
            std::set<std::vector<long long>> elems;
            std::vector<std::vector<long long>> frontier;
            std::vector<long long> zero(basis.rows(), 0);
            elems.insert(zero);
            frontier.push_back(zero);
            std::vector<std::vector<long long>> gens;
            for (int j = 0; j < basis.cols(); ++j) {
                std::vector<long long> gcol(basis.rows());
                bool nonzero = false;
                for (int i = 0; i < basis.rows(); ++i) {
                    gcol[i] = detail::emod(basis.at(i, j), m);
                    nonzero = nonzero || gcol[i] != 0;
                }
                if (nonzero) gens.push_back(std::move(gcol));
            }
            while (!frontier.empty()) {
                std::vector<std::vector<long long>> next;
                for (const auto& e : frontier)
                    for (const auto& gcol : gens) {
                        std::vector<long long> v(e.size());
                        for (size_t i = 0; i < e.size(); ++i) v[i] = (e[i] + gcol[i]) % m;
                        if (elems.insert(v).second) next.push_back(std::move(v));
                        if (static_cast<long long>(elems.size()) > caps_.max_enumeration)
                            throw CapExceeded("Z^2 enumeration above cap");
                    }
                frontier = std::move(next);
            }
            factor_sets.emplace_back(elems.begin(), elems.end());
        }
        // Combine factors.
        std::vector<GroupCocycle2> out;
        std::vector<size_t> counter(a_.moduli.size(), 0);
        while (true) {
            GroupCocycle2 c = zero();
            for (size_t i = 0; i < c.nu.size(); ++i) {
                std::vector<long long> t(a_.k());
                for (int j = 0; j < a_.k(); ++j) t[j] = factor_sets[j][counter[j]][i];
                c.nu[i] = a_.index_of(t);
            }
            out.push_back(std::move(c));
            if (static_cast<long long>(out.size()) > caps_.max_enumeration)
                throw CapExceeded("Z^2 enumeration above cap");
            size_t pos = 0;
            while (pos < counter.size()) {
                if (++counter[pos] < factor_sets[pos].size()) break;
                counter[pos++] = 0;
            }
            if (pos == counter.size()) break;
        }
        return out;
    }

private:
    void build_reps() {
        std::vector<size_t> counter(a_.moduli.size(), 0);
        while (true) {
            GroupCocycle2 c = zero();
            for (size_t i = 0; i < c.nu.size(); ++i) {
                std::vector<long long> t(a_.k());
                for (int j = 0; j < a_.k(); ++j) {
                    const auto& reps = factor_reps_[j];
                    t[j] = reps.empty() ? 0 : reps[counter[j]][i];
                }
                c.nu[i] = a_.index_of(t);
            }
            reps_.push_back(std::move(c));
            size_t pos = 0;
            while (pos < counter.size()) {
                size_t lim = std::max<size_t>(factor_reps_[pos].size(), 1);
                if (++counter[pos] < lim) break;
                counter[pos++] = 0;
            }
            if (pos == counter.size()) break;
        }
    }

    FiniteGroup g_;
    CoeffGroup a_;
    Caps caps_;
    IntMatrix d1_, d2_;
    SmithForm d1_smith_;
    std::vector<std::vector<std::vector<long long>>> factor_reps_;
    std::vector<GroupCocycle2> reps_;
    bool reps_complete_ = true;
    AbelianGroupStructure structure_;
};

/// Classes of H^2(G;A) with a symmetric representative (G abelian: exactly
/// the classes whose every representative is symmetric).
struct SymmetricClasses {
    std::vector<GroupCocycle2> reps;
    bool subgroup_verified = false;
};

inline SymmetricClasses symmetric_classes(const GroupH2Space& h) {
    require(h.group().is_abelian(), "GNotAbelian", "symmetric classes need an abelian group");
    SymmetricClasses out;
    for (const GroupCocycle2& c : h.class_reps())
        if (h.is_symmetric(c)) out.reps.push_back(c);
    // Subgroup check: closed under addition and negation at class level.
    auto in_set = [&](const GroupCocycle2& c) {
        for (const auto& r : out.reps)
            if (h.cohomologous(c, r)) return true;
        return false;
    };
    out.subgroup_verified = true;
    for (const auto& c : out.reps) {
        if (!in_set(h.neg(c))) out.subgroup_verified = false;
        for (const auto& d : out.reps)
            if (!in_set(h.add(c, d))) out.subgroup_verified = false;
    }
    return out;
}

/// Shift nu by a coboundary so that nu(1,y) = nu(y,1) = 0. For any cocycle
/// nu(1,y) = nu(y,1) = nu(1,1), so the single shift lambda(1) = -nu(1,1)
/// normalizes.
inline GroupCocycle2 normalize_group_cocycle(const GroupH2Space& h, const GroupCocycle2& nu) {
    std::vector<long long> lam(h.group().n, 0);
    lam[h.group().identity] = h.coeff().neg(nu.at(h.group().identity, h.group().identity,
                                                  h.group().n));
    return h.add(nu, h.coboundary_of(lam));
}

/// Bridge from symmetric group 2-cocycles of an abelian G to factor sets of
/// the receiving module over Core(G):
/// mu(x,y) = -nu(y x^{-1}, x) + nu(y x^{-1}, y), after normalization.
inline FactorSet lambda_map(const GroupH2Space& h, const GroupCocycle2& nu) {
    const FiniteGroup& g = h.group();
    require(g.is_abelian(), "GNotAbelian", "the bridge to Core needs an abelian group");
    require(h.is_cocycle(nu), "NotACocycle", "nu is not a group 2-cocycle");
    require(h.is_symmetric(nu), "NotSymmetric", "nu is not symmetric");
    GroupCocycle2 nn = normalize_group_cocycle(h, nu);

    FactorSet fs{core_receiving_module(core_quandle(g), h.coeff()), {}};
    fs.mu.assign(static_cast<size_t>(g.n) * g.n, 0);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y) {
            int yx = g.mul(y, g.inverse(x));
            fs.mu[static_cast<size_t>(x) * g.n + y] =
                h.coeff().add(h.coeff().neg(nn.at(yx, x, g.n)), nn.at(yx, y, g.n));
        }
    FactorSetCheck c = validate_factor_set(fs);
    require(c.ok, "BridgeFailure", "bridged factor set failed validation: " + c.message);
    return fs;
}

/// Bridge from group 2-cocycles to quandle 2-cocycles on Conj(G):
/// result(x,y) = nu(x,y) - nu(y, y^{-1} x y).
inline Cochain gamma_map(const GroupH2Space& h, const GroupCocycle2& nu) {
    const FiniteGroup& g = h.group();
    require(h.is_cocycle(nu), "NotACocycle", "nu is not a group 2-cocycle");
    Quandle conj = conj_quandle(g, 1);
    TupleBasis pairs = nondegenerate_tuples(conj, 2);
    Cochain out{2, std::vector<long long>(pairs.size(), 0)};
    for (int i = 0; i < pairs.size(); ++i) {
        int x = pairs.tuples[i][0], y = pairs.tuples[i][1];
        out.vals[i] = h.coeff().sub(nu.at(x, y, g.n), nu.at(y, g.conj(x, y), g.n));
    }
    // Diagonal values vanish identically; the off-diagonal table must be a
    // quandle 2-cocycle.
    for (int x = 0; x < g.n; ++x)
        require(h.coeff().sub(nu.at(x, x, g.n), nu.at(x, g.conj(x, x), g.n)) == 0,
                "BridgeFailure", "bridged cochain is nonzero on the diagonal");
    require(!two_cocycle_violation(conj, h.coeff(), pairs, out), "BridgeFailure",
            "bridged cochain is not a quandle 2-cocycle");
    return out;
}

/// Naturality squares for the two bridges along f: G2 -> G1 (group hom) and
/// h: A1 -> A2 (coefficient hom): pull back then bridge equals bridge then
/// pull back, on every class representative.
struct NaturalityReport {
    bool commutes = true;
    size_t classes = 0;
};

inline bool is_coeff_hom(const CoeffGroup& a1, const CoeffGroup& a2,
                         const std::vector<long long>& h) {
    if (static_cast<long long>(h.size()) != a1.size()) return false;
    for (long long v : h)
        if (v < 0 || v >= a2.size()) return false;
    for (long long u = 0; u < a1.size(); ++u)
        for (long long v = 0; v < a1.size(); ++v)
            if (h[a1.add(u, v)] != a2.add(h[u], h[v])) return false;
    return true;
}

inline NaturalityReport lambda_naturality(const GroupH2Space& h1, const GroupH2Space& h2,
                                          const std::vector<int>& f,
                                          const std::vector<long long>& hmap,
                                          const Caps& caps = {}) {
    const FiniteGroup &g1 = h1.group(), &g2 = h2.group();
    require(static_cast<int>(f.size()) == g2.n && is_group_hom(g2, g1, f), "InvalidHom",
            "f is not a group homomorphism G2 -> G1");
    require(is_coeff_hom(h1.coeff(), h2.coeff(), hmap), "InvalidHom",
            "h is not a coefficient homomorphism");

    NaturalityReport rep;
    for (const GroupCocycle2& nu : symmetric_classes(h1).reps) {
        ++rep.classes;
        // Pull back, then bridge.
        GroupCocycle2 pulled = h2.zero();
        for (int x = 0; x < g2.n; ++x)
            for (int y = 0; y < g2.n; ++y)
                pulled.nu[static_cast<size_t>(x) * g2.n + y] = hmap[nu.at(f[x], f[y], g1.n)];
        FactorSet bridged_after = lambda_map(h2, pulled);

        // Bridge, then pull back the factor set along Core(f) and h.
        FactorSet fs1 = lambda_map(h1, nu);
        FactorSet pushed{core_receiving_module(core_quandle(g2), h2.coeff()), {}};
        pushed.mu.assign(static_cast<size_t>(g2.n) * g2.n, 0);
        for (int x = 0; x < g2.n; ++x)
            for (int y = 0; y < g2.n; ++y)
                pushed.mu[static_cast<size_t>(x) * g2.n + y] = hmap[fs1.at(f[x], f[y])];
        FactorSetCheck c = validate_factor_set(pushed);
        require(c.ok, "BridgeFailure", "pulled-back factor set failed validation");

        if (!cohomologous_factor_sets(bridged_after, pushed, caps)) rep.commutes = false;
    }
    return rep;
}

inline NaturalityReport gamma_naturality(const GroupH2Space& h1, const GroupH2Space& h2,
                                         const std::vector<int>& f,
                                         const std::vector<long long>& hmap,
                                         const Caps& caps = {}) {
    const FiniteGroup &g1 = h1.group(), &g2 = h2.group();
    require(static_cast<int>(f.size()) == g2.n && is_group_hom(g2, g1, f), "InvalidHom",
            "f is not a group homomorphism G2 -> G1");
    require(is_coeff_hom(h1.coeff(), h2.coeff(), hmap), "InvalidHom",
            "h is not a coefficient homomorphism");

    Quandle conj1 = conj_quandle(g1, 1), conj2 = conj_quandle(g2, 1);
    TupleBasis pairs1 = nondegenerate_tuples(conj1, 2), pairs2 = nondegenerate_tuples(conj2, 2);
    CohomologySpace target(conj2, h2.coeff(), 2, caps);

    NaturalityReport rep;
    for (const GroupCocycle2& nu : h1.class_reps()) {
        ++rep.classes;
        GroupCocycle2 pulled = h2.zero();
        for (int x = 0; x < g2.n; ++x)
            for (int y = 0; y < g2.n; ++y)
                pulled.nu[static_cast<size_t>(x) * g2.n + y] = hmap[nu.at(f[x], f[y], g1.n)];
        Cochain bridged_after = gamma_map(h2, pulled);

        Cochain br1 = gamma_map(h1, nu);
        Cochain pushed{2, std::vector<long long>(pairs2.size(), 0)};
        for (int i = 0; i < pairs2.size(); ++i) {
            int x = f[pairs2.tuples[i][0]], y = f[pairs2.tuples[i][1]];
            pushed.vals[i] = x == y ? hmap[0] : hmap[br1.vals[pairs1.find({x, y})]];
        }
        require(target.is_cocycle(pushed), "BridgeFailure",
                "pulled-back quandle cochain is not a cocycle");
        if (!target.cohomologous(bridged_after, pushed)) rep.commutes = false;
    }
    return rep;
}

} // namespace qf
