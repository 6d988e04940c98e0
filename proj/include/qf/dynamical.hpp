#pragma once

#include <optional>
#include <set>

#include "qf/cohomology.hpp"
#include "qf/quandle.hpp"

namespace qf {

/// Dynamical 2-cocycle on a base quandle X with fiber {0..m-1}:
/// a table alpha_{x,y}(s,t) subject to
///   (C1) alpha_{x,x}(s,s) = s,
///   (C2) s -> alpha_{x,y}(s,t) bijective for fixed x,y,t,
///   (C3) alpha_{x*y,z}(alpha_{x,y}(s,t), u)
///          = alpha_{x*z,y*z}(alpha_{x,z}(s,u), alpha_{y,z}(t,u)).
struct DynamicalCocycle {
    Quandle base;
    int fiber = 0;
    std::vector<int> alpha; // [((x*n + y)*m + s)*m + t]

    int a(int x, int y, int s, int t) const {
        return alpha[((static_cast<size_t>(x) * base.n + y) * fiber + s) * fiber + t];
    }
    int& a(int x, int y, int s, int t) {
        return alpha[((static_cast<size_t>(x) * base.n + y) * fiber + s) * fiber + t];
    }
};

struct DynCheck {
    bool ok = true;
    std::string code; // Cocycle1 | Cocycle2 | Cocycle3 | ShapeMismatch
    std::vector<int> witness;
    std::string message;
};

inline DynCheck validate_dynamical(const DynamicalCocycle& dc) {
    const int n = dc.base.n, m = dc.fiber;
    if (m < 1 || dc.alpha.size() != static_cast<size_t>(n) * n * m * m)
        return {false, "ShapeMismatch", {}, "alpha table has wrong shape"};
    for (int v : dc.alpha)
        if (v < 0 || v >= m) return {false, "ShapeMismatch", {}, "alpha value out of range"};
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < m; ++s)
            if (dc.a(x, x, s, s) != s)
                return {false, "Cocycle1", {x, s}, "alpha_{x,x}(s,s) != s"};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int t = 0; t < m; ++t) {
                std::vector<char> seen(m, 0);
                for (int s = 0; s < m; ++s) {
                    int v = dc.a(x, y, s, t);
                    if (seen[v])
                        return {false, "Cocycle2", {x, y, t},
                                "alpha_{x,y}(-,t) is not a bijection"};
                    seen[v] = 1;
                }
            }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int s = 0; s < m; ++s)
                    for (int t = 0; t < m; ++t)
                        for (int u = 0; u < m; ++u) {
                            int lhs = dc.a(dc.base.op(x, y), z, dc.a(x, y, s, t), u);
                            int rhs = dc.a(dc.base.op(x, z), dc.base.op(y, z),
                                           dc.a(x, z, s, u), dc.a(y, z, t, u));
                            if (lhs != rhs)
                                return {false, "Cocycle3", {x, y, z, s, t, u},
                                        "cocycle condition fails"};
                        }
    return {};
}

inline DynamicalCocycle make_dynamical(Quandle base, int fiber, std::vector<int> alpha) {
    DynamicalCocycle dc{std::move(base), fiber, std::move(alpha)};
    DynCheck c = validate_dynamical(dc);
    if (!c.ok) throw Error(c.code, c.message);
    return dc;
}

/// alpha_{x,y}(s,t) = s: extension is the product with a trivial fiber.
inline DynamicalCocycle trivial_dynamical(const Quandle& x, int m) {
    DynamicalCocycle dc{x, m, std::vector<int>(static_cast<size_t>(x.n) * x.n * m * m)};
    for (int p = 0; p < x.n; ++p)
        for (int q = 0; q < x.n; ++q)
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) dc.a(p, q, s, t) = s;
    return dc;
}

/// alpha_{x,y}(s,t) = s *_S t for a quandle structure on the fiber.
inline DynamicalCocycle product_dynamical(const Quandle& x, const Quandle& s_quandle) {
    const int m = s_quandle.n;
    DynamicalCocycle dc{x, m, std::vector<int>(static_cast<size_t>(x.n) * x.n * m * m)};
    for (int p = 0; p < x.n; ++p)
        for (int q = 0; q < x.n; ++q)
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) dc.a(p, q, s, t) = s_quandle.op(s, t);
    return dc;
}

/// alpha_{x,y}(s,t) = s + alpha2(x,y) for an abelian 2-cocycle.
inline DynamicalCocycle abelian_dynamical(const Quandle& x, const CoeffGroup& a,
                                          const Cochain& alpha2) {
    TupleBasis pairs = nondegenerate_tuples(x, 2);
    require(alpha2.degree == 2 && static_cast<int>(alpha2.vals.size()) == pairs.size(),
            "ShapeMismatch", "alpha2 has wrong shape");
    const int m = static_cast<int>(a.size());
    DynamicalCocycle dc{x, m, std::vector<int>(static_cast<size_t>(x.n) * x.n * m * m)};
    for (int p = 0; p < x.n; ++p)
        for (int q = 0; q < x.n; ++q) {
            long long v = p == q ? 0 : alpha2.vals[pairs.find({p, q})];
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) dc.a(p, q, s, t) = static_cast<int>(a.add(s, v));
        }
    return dc;
}

/// Index of the pair (x,s) in the extension X x_alpha S.
inline int ext_index(const DynamicalCocycle& dc, int x, int s) { return x * dc.fiber + s; }

/// Extension quandle on X x S: (x,s)*(y,t) = (x*y, alpha_{x,y}(s,t)).
/// The axioms are re-verified on the built table.
inline Quandle build_extension(const DynamicalCocycle& dc) {
    DynCheck c = validate_dynamical(dc);
    if (!c.ok) throw Error(c.code, c.message);
    const int n = dc.base.n, m = dc.fiber, nm = n * m;
    std::vector<std::vector<int>> t(nm, std::vector<int>(nm));
    for (int x = 0; x < n; ++x)
        for (int s = 0; s < m; ++s)
            for (int y = 0; y < n; ++y)
                for (int u = 0; u < m; ++u)
                    t[x * m + s][y * m + u] = dc.base.op(x, y) * m + dc.a(x, y, s, u);
    return make_quandle(t);
}

/// Fiber quandle (S, *_x) with s *_x t = alpha_{x,x}(s,t).
inline Quandle fiber_quandle(const DynamicalCocycle& dc, int x) {
    require(x >= 0 && x < dc.base.n, "ShapeMismatch", "fiber base point out of range");
    std::vector<std::vector<int>> t(dc.fiber, std::vector<int>(dc.fiber));
    for (int s = 0; s < dc.fiber; ++s)
        for (int u = 0; u < dc.fiber; ++u) t[s][u] = dc.a(x, x, s, u);
    return make_quandle(t);
}

/// Fiber isomorphism report: along each inner orbit of the base the fibers
/// are pairwise isomorphic, with witnesses composed from the one-step maps
/// s -> alpha_{x,z}(s,u).
struct FiberReport {
    bool all_pairwise_isomorphic = true; // within each orbit
    std::vector<std::vector<int>> orbits;
    std::vector<Perm> witness_to_root; // per base point, fiber(root) -> fiber(x)
};

inline FiberReport fibers_isomorphic_report(const DynamicalCocycle& dc) {
    const int n = dc.base.n, m = dc.fiber;
    FiberReport rep;
    rep.orbits = is_connected(dc.base).orbits;
    rep.witness_to_root.assign(n, Perm());

    std::vector<Quandle> fibers;
    for (int x = 0; x < n; ++x) fibers.push_back(fiber_quandle(dc, x));

    for (const auto& orbit : rep.orbits) {
        int root = orbit.front();
        std::vector<char> seen(n, 0);
        seen[root] = 1;
        rep.witness_to_root[root] = Perm::identity(m);
        std::vector<int> queue{root};
        for (size_t k = 0; k < queue.size(); ++k) {
            int x = queue[k];
            for (int z = 0; z < n; ++z) {
                int y = dc.base.op(x, z);
                if (seen[y]) continue;
                std::vector<int> step(m);
                for (int s = 0; s < m; ++s) step[s] = dc.a(x, z, s, 0);
                rep.witness_to_root[y] = compose(Perm(step), rep.witness_to_root[x]);
                seen[y] = 1;
                queue.push_back(y);
            }
        }
        for (int x : orbit) {
            const Perm& w = rep.witness_to_root[x];
            if (w.degree() != m || !is_quandle_hom(fibers[root], fibers[x], w.img))
                rep.all_pairwise_isomorphic = false;
        }
        // Pairwise witnesses by composing through the root.
        for (int x : orbit)
            for (int y : orbit) {
                Perm w = compose(rep.witness_to_root[y], rep.witness_to_root[x].inverse());
                if (!is_quandle_hom(fibers[x], fibers[y], w.img))
                    rep.all_pairwise_isomorphic = false;
            }
    }
    return rep;
}

/// Action of (phi, theta) in Aut(X) x Sigma_S on dynamical cocycles:
/// result_{x,y}(s,t) = theta(alpha_{phi^{-1}x, phi^{-1}y}(theta^{-1}s, theta^{-1}t)).
inline DynamicalCocycle act_on_dynamical(const Perm& phi, const Perm& theta,
                                         const DynamicalCocycle& dc) {
    require(phi.degree() == dc.base.n && is_quandle_hom(dc.base, dc.base, phi.img),
            "PhiNotAutomorphism", "phi is not a quandle automorphism of the base");
    require(theta.degree() == dc.fiber, "ShapeMismatch", "theta degree mismatch");
    Perm pi = phi.inverse(), ti = theta.inverse();
    DynamicalCocycle out = dc;
    for (int x = 0; x < dc.base.n; ++x)
        for (int y = 0; y < dc.base.n; ++y)
            for (int s = 0; s < dc.fiber; ++s)
                for (int t = 0; t < dc.fiber; ++t)
                    out.a(x, y, s, t) = theta(dc.a(pi(x), pi(y), ti(s), ti(t)));
    DynCheck c = validate_dynamical(out);
    require(c.ok, c.code, "acted cocycle failed validation");
    return out;
}

/// Twist of alpha by lambda: X -> Sigma_S, the right side of the
/// cohomology relation for dynamical cocycles.
inline DynamicalCocycle twist_dynamical(const DynamicalCocycle& dc,
                                        const std::vector<Perm>& lambda) {
    require(static_cast<int>(lambda.size()) == dc.base.n, "ShapeMismatch",
            "lambda must assign a fiber permutation to every base point");
    DynamicalCocycle out = dc;
    for (int x = 0; x < dc.base.n; ++x)
        for (int y = 0; y < dc.base.n; ++y) {
            Perm lx = lambda[x].inverse(), ly = lambda[y].inverse();
            const Perm& lxy = lambda[dc.base.op(x, y)];
            for (int s = 0; s < dc.fiber; ++s)
                for (int t = 0; t < dc.fiber; ++t)
                    out.a(x, y, s, t) = lxy(dc.a(x, y, lx(s), ly(t)));
        }
    return out;
}

/// Search for lambda with twist_dynamical(alpha, lambda) = beta; exhaustive
/// backtracking over base points with early rejection.
inline std::optional<std::vector<Perm>> cohomologous_dynamical(const DynamicalCocycle& alpha,
                                                               const DynamicalCocycle& beta,
                                                               const Caps& caps = {}) {
    require(alpha.base == beta.base && alpha.fiber == beta.fiber, "ShapeMismatch",
            "cocycles live on different bases or fibers");
    const int n = alpha.base.n, m = alpha.fiber;
    std::vector<Perm> sigma = all_permutations(m);
    long long nodes = 0;

    auto pair_ok = [&](int x, int y, const std::vector<Perm>& lam) {
        Perm lx = lam[x].inverse(), ly = lam[y].inverse();
        const Perm& lxy = lam[alpha.base.op(x, y)];
        for (int s = 0; s < m; ++s)
            for (int t = 0; t < m; ++t)
                if (lxy(alpha.a(x, y, lx(s), ly(t))) != beta.a(x, y, s, t)) return false;
        return true;
    };

    std::vector<Perm> lam(n);
    auto dfs = [&](auto&& self, int k) -> std::optional<std::vector<Perm>> {
        if (k == n) return lam;
        for (const Perm& p : sigma) {
            if (++nodes > caps.search_budget)
                throw CapExceeded("dynamical cohomology search exceeded budget");
            lam[k] = p;
            bool ok = true;
            for (int x = 0; x <= k && ok; ++x)
                for (int y = 0; y <= k && ok; ++y) {
                    if (alpha.base.op(x, y) > k) continue;
                    if (x != k && y != k && alpha.base.op(x, y) != k) continue;
                    ok = pair_ok(x, y, lam);
                }
            if (ok) {
                auto r = self(self, k + 1);
                if (r) return r;
            }
        }
        return std::nullopt;
    };
    return dfs(dfs, 0);
}

/// Automorphism of an extension of the fibered shape
/// psi(x,s) = (phi(x), tau_x(s)) with phi fixing the base point.
struct ExtensionAutomorphism {
    Perm phi;
    std::vector<Perm> tau;

    Perm as_perm(int fiber) const {
        std::vector<int> img(phi.degree() * fiber);
        for (int x = 0; x < phi.degree(); ++x)
            for (int s = 0; s < fiber; ++s) img[x * fiber + s] = phi(x) * fiber + tau[x](s);
        return Perm(img);
    }
};

inline ExtensionAutomorphism compose(const ExtensionAutomorphism& a,
                                     const ExtensionAutomorphism& b) {
    ExtensionAutomorphism r;
    r.phi = compose(a.phi, b.phi);
    r.tau.resize(b.tau.size());
    for (size_t x = 0; x < b.tau.size(); ++x) r.tau[x] = compose(a.tau[b.phi(static_cast<int>(x))], b.tau[x]);
    return r;
}

/// The subgroup of Aut(E) of fibered automorphisms fixing x0, computed by
/// filtering the full automorphism group of the extension.
inline std::vector<ExtensionAutomorphism> aut_x0_S(const DynamicalCocycle& dc, int x0,
                                                   const Caps& caps = {}) {
    require(x0 >= 0 && x0 < dc.base.n, "ShapeMismatch", "base point out of range");
    Quandle e = build_extension(dc);
    const int n = dc.base.n, m = dc.fiber;
    std::vector<ExtensionAutomorphism> out;
    for (const Perm& psi : automorphism_group(e, caps)) {
        std::vector<int> phi(n, -1);
        std::vector<Perm> tau(n, Perm(std::vector<int>(m)));
        bool fibered = true;
        for (int x = 0; x < n && fibered; ++x) {
            for (int s = 0; s < m && fibered; ++s) {
                int y = psi(x * m + s) / m, t = psi(x * m + s) % m;
                if (phi[x] < 0) phi[x] = y;
                fibered = phi[x] == y;
                tau[x].img[s] = t;
            }
        }
        if (fibered && phi[x0] == x0) out.push_back({Perm(phi), std::move(tau)});
    }
    return out;
}

/// Restriction map: psi -> (phi, theta) with theta = tau_{x0}.
inline std::pair<Perm, Perm> phi_restrict(const ExtensionAutomorphism& psi, int x0) {
    return {psi.phi, psi.tau[x0]};
}

/// Verification of the four-term exact sequence on a dynamical extension:
/// (a) the kernel of the restriction is exactly the lambda set fixing
/// alpha with lambda_{x0} = id; (b) its image is exactly the stabilizer of
/// the cohomology class of alpha; (c) the order identity.
struct WellsDynReport {
    bool kernel_ok = false, image_ok = false, order_ok = false;
    bool kernel_skipped = false, image_skipped = false;
    size_t aut_count = 0, kernel_count = 0, stab_count = 0;

    bool all_ok() const {
        return kernel_ok && image_ok && order_ok && !kernel_skipped && !image_skipped;
    }
};

inline WellsDynReport verify_wells_dynamical(const DynamicalCocycle& dc, int x0,
                                             const Caps& caps = {}) {
    WellsDynReport rep;
    const int n = dc.base.n, m = dc.fiber;
    auto auts = aut_x0_S(dc, x0, caps);
    rep.aut_count = auts.size();

    // (a) Kernel of the restriction vs the direct lambda enumeration.
    try {
        std::set<std::vector<Perm>> kernel_lams;
        for (const auto& psi : auts) {
            auto [phi, theta] = phi_restrict(psi, x0);
            if (!phi.is_identity() || !theta.is_identity()) continue;
            std::vector<Perm> lam(n);
            for (int x = 0; x < n; ++x) lam[x] = psi.tau[x].inverse();
            kernel_lams.insert(std::move(lam));
        }

        std::set<std::vector<Perm>> direct;
        std::vector<Perm> sigma = all_permutations(m);
        std::vector<Perm> lam(n, Perm::identity(m));
        long long nodes = 0;
        auto sweep = [&](auto&& self, int k) -> void {
            if (k == n) {
                if (twist_dynamical(dc, lam).alpha == dc.alpha) direct.insert(lam);
                return;
            }
            if (k == x0) {
                lam[k] = Perm::identity(m);
                self(self, k + 1);
                return;
            }
            for (const Perm& p : sigma) {
                if (++nodes > caps.search_budget)
                    throw CapExceeded("kernel sweep exceeded budget");
                lam[k] = p;
                self(self, k + 1);
            }
        };
        sweep(sweep, 0);
        rep.kernel_count = direct.size();
        rep.kernel_ok = kernel_lams == direct;
    } catch (const CapExceeded&) {
        rep.kernel_skipped = true;
    }

    // (b) Image vs the stabilizer of [alpha] in Aut^{x0}(X) x Sigma_S.
    try {
        std::set<std::pair<Perm, Perm>> image;
        for (const auto& psi : auts) image.insert(phi_restrict(psi, x0));
        std::set<std::pair<Perm, Perm>> stab;
        for (const Perm& phi : stabilizer_aut(dc.base, x0, caps))
            for (const Perm& theta : all_permutations(m)) {
                DynamicalCocycle acted = act_on_dynamical(phi, theta, dc);
                if (cohomologous_dynamical(dc, acted, caps)) stab.emplace(phi, theta);
            }
        rep.stab_count = stab.size();
        rep.image_ok = image == stab;
    } catch (const CapExceeded&) {
        rep.image_skipped = true;
    }

    rep.order_ok = rep.aut_count == rep.kernel_count * rep.stab_count;
    return rep;
}

/// Splitting of the restriction sequence for the product cocycle
/// alpha_{x,y}(s,t) = s*t: the section zeta(phi,theta)(x,s) = (phi(x), theta(s)).
struct SplitReport {
    bool section_lands_in_aut = true;  // every zeta(phi,theta) is a fibered automorphism
    bool retraction_ok = true;         // Phi o zeta = id elementwise
    bool homomorphism_ok = true;       // zeta(g1 g2) = zeta(g1) zeta(g2)
    bool stabilizer_full = true;       // every (phi,theta) fixes alpha exactly
    size_t pairs = 0;

    bool all_ok() const {
        return section_lands_in_aut && retraction_ok && homomorphism_ok && stabilizer_full;
    }
};

inline SplitReport splitting_section(const Quandle& x, const Quandle& s_quandle, int x0,
                                     const Caps& caps = {}) {
    DynamicalCocycle dc = product_dynamical(x, s_quandle);
    Quandle e = build_extension(dc);
    const int m = s_quandle.n;
    auto phis = stabilizer_aut(x, x0, caps);
    auto thetas = automorphism_group(s_quandle, caps);

    auto zeta = [&](const Perm& phi, const Perm& theta) {
        ExtensionAutomorphism psi;
        psi.phi = phi;
        psi.tau.assign(x.n, theta);
        return psi;
    };

    SplitReport rep;
    for (const Perm& phi : phis)
        for (const Perm& theta : thetas) {
            ++rep.pairs;
            ExtensionAutomorphism psi = zeta(phi, theta);
            Perm p = psi.as_perm(m);
            if (!is_quandle_hom(e, e, p.img) || !is_permutation(p.img))
                rep.section_lands_in_aut = false;
            auto [rphi, rtheta] = phi_restrict(psi, x0);
            if (rphi != phi || rtheta != theta) rep.retraction_ok = false;
            if (act_on_dynamical(phi, theta, dc).alpha != dc.alpha) rep.stabilizer_full = false;
            for (const Perm& phi2 : phis)
                for (const Perm& theta2 : thetas) {
                    Perm lhs = zeta(compose(phi, phi2), compose(theta, theta2)).as_perm(m);
                    Perm rhs = compose(psi, zeta(phi2, theta2)).as_perm(m);
                    if (lhs != rhs) rep.homomorphism_ok = false;
                }
        }
    return rep;
}

/// The generalized two-sided construction: (x,s)*(y,t) =
/// (beta_{s,t}(x,y), alpha_{x,y}(s,t)) on raw sets X and S.
struct GeneralizedPair {
    int x_size = 0, s_size = 0;
    std::vector<int> alpha; // [((x*nx + y)*ns + s)*ns + t] -> fiber value
    std::vector<int> beta;  // [((s*ns + t)*nx + x)*nx + y] -> base value

    int a(int x, int y, int s, int t) const {
        return alpha[((static_cast<size_t>(x) * x_size + y) * s_size + s) * s_size + t];
    }
    int b(int s, int t, int x, int y) const {
        return beta[((static_cast<size_t>(s) * s_size + t) * x_size + x) * x_size + y];
    }
};

struct PairCheck {
    bool ok = true;
    int condition = 0; // 1, 2 or 3 on failure
    std::vector<int> witness;
    std::string message;
};

inline PairCheck validate_generalized(const GeneralizedPair& p) {
    const int nx = p.x_size, ns = p.s_size;
    if (nx < 1 || ns < 1 || p.alpha.size() != static_cast<size_t>(nx) * nx * ns * ns ||
        p.beta.size() != static_cast<size_t>(ns) * ns * nx * nx)
        return {false, 0, {}, "tables have wrong shape"};
    for (int v : p.alpha)
        if (v < 0 || v >= ns) return {false, 0, {}, "alpha value out of range"};
    for (int v : p.beta)
        if (v < 0 || v >= nx) return {false, 0, {}, "beta value out of range"};

    // (1) beta_{s,s}(x,x) = x and alpha_{x,x}(s,s) = s.
    for (int x = 0; x < nx; ++x)
        for (int s = 0; s < ns; ++s) {
            if (p.b(s, s, x, x) != x) return {false, 1, {x, s}, "beta_{s,s}(x,x) != x"};
            if (p.a(x, x, s, s) != s) return {false, 1, {x, s}, "alpha_{x,x}(s,s) != s"};
        }
    // (2) for each (y,t), the joint map (x,s) -> (beta, alpha) is a bijection.
    for (int y = 0; y < nx; ++y)
        for (int t = 0; t < ns; ++t) {
            std::vector<char> seen(static_cast<size_t>(nx) * ns, 0);
            for (int x = 0; x < nx; ++x)
                for (int s = 0; s < ns; ++s) {
                    int v = p.b(s, t, x, y) * ns + p.a(x, y, s, t);
                    if (seen[v])
                        return {false, 2, {y, t}, "joint map is not a bijection"};
                    seen[v] = 1;
                }
        }
    // (3) the two compatibility identities.
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y < nx; ++y)
            for (int z = 0; z < nx; ++z)
                for (int s = 0; s < ns; ++s)
                    for (int t = 0; t < ns; ++t)
                        for (int u = 0; u < ns; ++u) {
                            int bl = p.b(p.a(x, y, s, t), u, p.b(s, t, x, y), z);
                            int br = p.b(p.a(x, z, s, u), p.a(y, z, t, u), p.b(s, u, x, z),
                                         p.b(t, u, y, z));
                            if (bl != br)
                                return {false, 3, {x, y, z, s, t, u}, "beta identity fails"};
                            int al = p.a(p.b(s, t, x, y), z, p.a(x, y, s, t), u);
                            int ar = p.a(p.b(s, u, x, z), p.b(t, u, y, z), p.a(x, z, s, u),
                                         p.a(y, z, t, u));
                            if (al != ar)
                                return {false, 3, {x, y, z, s, t, u}, "alpha identity fails"};
                        }
    return {};
}

inline Quandle build_generalized(const GeneralizedPair& p) {
    PairCheck c = validate_generalized(p);
    if (!c.ok)
        throw Error("PairCondition" + std::to_string(c.condition), c.message);
    const int nx = p.x_size, ns = p.s_size, n = nx * ns;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < nx; ++x)
        for (int s = 0; s < ns; ++s)
            for (int y = 0; y < nx; ++y)
                for (int u = 0; u < ns; ++u)
                    t[x * ns + s][y * ns + u] = p.b(s, u, x, y) * ns + p.a(x, y, s, u);
    return make_quandle(t);
}

} // namespace qf
