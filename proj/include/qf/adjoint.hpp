#pragma once

#include <optional>
#include <set>

#include "qf/dynamical.hpp"
#include "qf/quandle.hpp"
#include "qf/smith.hpp"

namespace qf {

/// The two word shapes that give a quandle operation on every group:
/// CORE: w(x,y) = y x^{-1} y, and CONJ(n): w(x,y) = y^{-n} x y^n.
struct QuandleWord {
    enum class Tag { Core, Conj } tag = Tag::Conj;
    int n = 1; // exponent for Conj

    static QuandleWord core() { return {Tag::Core, 0}; }
    static QuandleWord conj(int n) { return {Tag::Conj, n}; }

    std::string str() const {
        return tag == Tag::Core ? "core" : "conj:" + std::to_string(n);
    }
};

inline Quandle q_w(const FiniteGroup& g, const QuandleWord& w) {
    return w.tag == QuandleWord::Tag::Core ? core_quandle(g) : conj_quandle(g, w.n);
}

/// Presentation by generators e_0..e_{k-1} and relator words; a word is a
/// sequence of signed entries +-(index+1), negative meaning the inverse.
struct GroupPresentation {
    int generators = 0;
    std::vector<std::vector<int>> relators;
};

inline int eval_word(const FiniteGroup& g, const std::vector<int>& word,
                     const std::vector<int>& assignment) {
    int acc = g.identity;
    for (int lit : word) {
        require(lit != 0, "ShapeMismatch", "zero literal in relator word");
        int idx = std::abs(lit) - 1;
        require(idx < static_cast<int>(assignment.size()), "ShapeMismatch",
                "relator literal out of range");
        int v = assignment[idx];
        acc = g.mul(acc, lit > 0 ? v : g.inverse(v));
    }
    return acc;
}

namespace detail {

// w(e_a, e_b) as a word, for the two admissible shapes.
inline std::vector<int> word_of(const QuandleWord& w, int a, int b) {
    std::vector<int> out;
    if (w.tag == QuandleWord::Tag::Core) {
        out = {b + 1, -(a + 1), b + 1};
    } else {
        for (int i = 0; i < std::abs(w.n); ++i) out.push_back(w.n > 0 ? -(b + 1) : b + 1);
        out.push_back(a + 1);
        for (int i = 0; i < std::abs(w.n); ++i) out.push_back(w.n > 0 ? b + 1 : -(b + 1));
    }
    return out;
}

inline std::vector<int> inverse_word(const std::vector<int>& w) {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int& lit : out) lit = -lit;
    return out;
}

} // namespace detail

/// Presentation of Adj_w(X): one generator per element, one relator
/// e_{x*y} w(e_x,e_y)^{-1} per ordered pair.
inline GroupPresentation adj_w_presentation(const Quandle& x, const QuandleWord& w) {
    GroupPresentation p;
    p.generators = x.n;
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b) {
            std::vector<int> rel{x.op(a, b) + 1};
            for (int lit : detail::inverse_word(detail::word_of(w, a, b))) rel.push_back(lit);
            p.relators.push_back(std::move(rel));
        }
    return p;
}

/// Presentation of Adj_phi(X): relators e_{x*y} (e_{phi(x)} e_{phi(y)}^{-1} e_y)^{-1}.
inline GroupPresentation adj_phi_presentation(const Quandle& x, const Perm& phi) {
    require(phi.degree() == x.n && is_quandle_hom(x, x, phi.img), "PhiNotAutomorphism",
            "phi is not a quandle automorphism");
    GroupPresentation p;
    p.generators = x.n;
    for (int a = 0; a < x.n; ++a)
        for (int b = 0; b < x.n; ++b) {
            std::vector<int> word = {phi(a) + 1, -(phi(b) + 1), b + 1};
            std::vector<int> rel{x.op(a, b) + 1};
            for (int lit : detail::inverse_word(word)) rel.push_back(lit);
            p.relators.push_back(std::move(rel));
        }
    return p;
}

/// Invariant factors of the abelianization: cokernel of the relator
/// exponent-sum matrix.
inline AbelianGroupStructure abelianization(const GroupPresentation& p) {
    IntMatrix m(p.generators, static_cast<int>(p.relators.size()));
    for (size_t r = 0; r < p.relators.size(); ++r)
        for (int lit : p.relators[r]) {
            int idx = std::abs(lit) - 1;
            require(idx >= 0 && idx < p.generators, "ShapeMismatch", "relator literal out of range");
            m.at(idx, static_cast<int>(r)) += lit > 0 ? 1 : -1;
        }
    return cokernel_structure(m);
}

/// All generator assignments into G satisfying every relator.
inline std::vector<std::vector<int>> presentation_homs_to(const GroupPresentation& p,
                                                          const FiniteGroup& g,
                                                          const Caps& caps = {}) {
    double nominal = 1;
    for (int i = 0; i < p.generators; ++i) {
        nominal *= g.n;
        if (nominal > static_cast<double>(caps.search_budget))
            throw CapExceeded("presentation hom enumeration above budget");
    }
    std::vector<std::vector<int>> out;
    std::vector<int> assign(p.generators, 0);
    while (true) {
        bool ok = true;
        for (const auto& rel : p.relators)
            if (eval_word(g, rel, assign) != g.identity) {
                ok = false;
                break;
            }
        if (ok) out.push_back(assign);
        int pos = 0;
        while (pos < p.generators && ++assign[pos] == g.n) assign[pos++] = 0;
        if (pos == p.generators) break;
    }
    return out;
}

/// Instance-level adjointness: the count of quandle homomorphisms
/// X -> Q_w(G) equals the count of relator-satisfying assignments of
/// Adj_w(X) into G, with the tautological bijection checked elementwise.
struct AdjointCountReport {
    size_t quandle_homs = 0, group_homs = 0;
    bool counts_equal = false, bijection_ok = false;

    bool all_ok() const { return counts_equal && bijection_ok; }
};

inline AdjointCountReport adjointness_count_check(const Quandle& x, const FiniteGroup& g,
                                                  const QuandleWord& w, const Caps& caps = {}) {
    Quandle target = q_w(g, w);
    GroupPresentation p = adj_w_presentation(x, w);
    auto qhoms = quandle_homs(x, target, caps);
    auto ghoms = presentation_homs_to(p, g, caps);

    AdjointCountReport rep;
    rep.quandle_homs = qhoms.size();
    rep.group_homs = ghoms.size();
    rep.counts_equal = qhoms.size() == ghoms.size();

    std::set<std::vector<int>> gset(ghoms.begin(), ghoms.end());
    std::set<std::vector<int>> qset;
    for (const auto& h : qhoms) qset.insert(h.images);
    // phi -> (e_x -> phi(x)) is a bijection between the two hom sets.
    rep.bijection_ok = gset == qset;
    return rep;
}

/// A group extension 1 -> A -> E -> G -> 1 presented concretely: the normal
/// subgroup A of E, the quotient G with projection pi, and a transversal
/// kappa with kappa(1) = 1.
struct GroupExtensionData {
    FiniteGroup e;
    std::vector<int> a_elems; // sorted subset of E
    FiniteGroup g;
    std::vector<int> pi;    // E -> G
    std::vector<int> kappa; // G -> E
    std::vector<int> a_pos; // E index -> position in a_elems, or -1

    int fiber_size() const { return static_cast<int>(a_elems.size()); }
};

inline GroupExtensionData make_extension_data(const FiniteGroup& e, std::vector<int> a_elems,
                                              std::optional<std::vector<int>> kappa = {}) {
    std::sort(a_elems.begin(), a_elems.end());
    require(is_normal_subgroup(e, a_elems), "NotNormal", "A is not a normal subgroup of E");
    QuotientGroup q = quotient_group(e, a_elems);

    GroupExtensionData d;
    d.e = e;
    d.a_elems = std::move(a_elems);
    d.g = q.group;
    d.pi = q.pi;
    d.kappa = kappa ? *kappa : q.min_rep;
    require(static_cast<int>(d.kappa.size()) == d.g.n, "ShapeMismatch",
            "kappa must pick one representative per coset");
    require(d.kappa[0] == e.identity, "ShapeMismatch", "kappa must send 1 to 1");
    for (int c = 0; c < d.g.n; ++c)
        require(d.pi[d.kappa[c]] == c, "ShapeMismatch", "kappa is not a section of pi");
    d.a_pos.assign(e.n, -1);
    for (size_t i = 0; i < d.a_elems.size(); ++i) d.a_pos[d.a_elems[i]] = static_cast<int>(i);
    return d;
}

/// Transport of a group extension along Q_w (core or n-conjugation) or along
/// the generalized Alexander functor: a dynamical cocycle on Q_w(G) with
/// fiber A, plus the verified reconstruction isomorphism.
struct TransportResult {
    DynamicalCocycle cocycle;
    std::vector<int> mu;      // per (x,y), position in A of the transversal defect
    Perm witness;             // (x,s) -> kappa(x) * s, as E-index permutation
    bool witness_is_iso = false;
    bool identity_fiber_matches = false;
    Quandle fiber_model;      // Q_w(A) resp. Alex_{f_2}(A)
};

namespace detail {

template <typename Op>
inline TransportResult transport_common(const GroupExtensionData& d, const Quandle& base,
                                        Op&& op_e, const Quandle& fiber_model) {
    const int n = d.g.n, m = d.fiber_size();
    TransportResult out;
    out.fiber_model = fiber_model;
    out.cocycle.base = base;
    out.cocycle.fiber = m;
    out.cocycle.alpha.assign(static_cast<size_t>(n) * n * m * m, 0);
    out.mu.assign(static_cast<size_t>(n) * n, 0);

    // gamma_x(kappa(x) s) = s; alpha_{x,y}(s,t) = gamma_{x*y}(kappa(x)s * kappa(y)t).
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = base.op(x, y);
            int defect = d.e.mul(d.e.inverse(d.kappa[xy]), op_e(d.kappa[x], d.kappa[y]));
            require(d.a_pos[defect] >= 0, "TransportFailure",
                    "transversal defect does not lie in A");
            out.mu[static_cast<size_t>(x) * n + y] = d.a_pos[defect];
            for (int si = 0; si < m; ++si)
                for (int ti = 0; ti < m; ++ti) {
                    int u = op_e(d.e.mul(d.kappa[x], d.a_elems[si]),
                                 d.e.mul(d.kappa[y], d.a_elems[ti]));
                    int v = d.e.mul(d.e.inverse(d.kappa[xy]), u);
                    require(d.a_pos[v] >= 0, "TransportFailure",
                            "cocycle value does not lie in A");
                    out.cocycle.a(x, y, si, ti) = d.a_pos[v];
                }
        }
    DynCheck c = validate_dynamical(out.cocycle);
    require(c.ok, c.code, "transported table is not a dynamical cocycle");

    // Witness (x,s) -> kappa(x)s is an isomorphism onto Q_w(E) resp Alex_f(E).
    std::vector<int> wit(static_cast<size_t>(n) * m);
    for (int x = 0; x < n; ++x)
        for (int si = 0; si < m; ++si) wit[x * m + si] = d.e.mul(d.kappa[x], d.a_elems[si]);
    out.witness = Perm(wit);
    Quandle ext = build_extension(out.cocycle);
    std::vector<std::vector<int>> et(d.e.n, std::vector<int>(d.e.n));
    for (int u = 0; u < d.e.n; ++u)
        for (int v = 0; v < d.e.n; ++v) et[u][v] = op_e(u, v);
    Quandle target{d.e.n, std::move(et)};
    out.witness_is_iso = is_permutation(wit) && is_quandle_hom(ext, target, wit);

    // The fiber over the identity is the model quandle on A.
    out.identity_fiber_matches = fiber_quandle(out.cocycle, 0) == fiber_model;
    return out;
}

} // namespace detail

inline TransportResult extension_transport_qw(const GroupExtensionData& d, const QuandleWord& w) {
    Quandle base = q_w(d.g, w);
    Quandle fiber = q_w(subgroup_as_group(d.e, d.a_elems), w);
    Quandle qe = q_w(d.e, w);
    auto op_e = [&qe](int u, int v) { return qe.op(u, v); };
    return detail::transport_common(d, base, op_e, fiber);
}

inline TransportResult extension_transport_alex(const GroupExtensionData& d, const Perm& f) {
    require(f.degree() == d.e.n && is_group_hom(d.e, d.e, f.img), "FNotAutomorphism",
            "f is not an automorphism of E");
    for (int a : d.a_elems)
        require(d.a_pos[f(a)] >= 0, "FDoesNotPreserveA", "f does not preserve A");

    // Induced automorphisms on the quotient and the kernel.
    std::vector<int> f1(d.g.n), f2(d.fiber_size());
    for (int c = 0; c < d.g.n; ++c) f1[c] = d.pi[f(d.kappa[c])];
    require(is_permutation(f1) && is_group_hom(d.g, d.g, f1), "TransportFailure",
            "induced map on the quotient is not an automorphism");
    for (int i = 0; i < d.fiber_size(); ++i) f2[i] = d.a_pos[f(d.a_elems[i])];

    Quandle base = alexander_quandle(d.g, Perm(f1));
    Quandle fiber = alexander_quandle(subgroup_as_group(d.e, d.a_elems), Perm(f2));
    Quandle ae = alexander_quandle(d.e, f);
    auto op_e = [&ae](int u, int v) { return ae.op(u, v); };
    return detail::transport_common(d, base, op_e, fiber);
}

/// The worked example on the adjoint group of R_4: abelianization Z^2, the
/// 16 conjugation relators hold in the dihedral quotient e_{a_i} -> s r^i,
/// and the kernel element b_0 = e_0 e_2^{-1} maps to an element of order 2.
struct R4AdjointReport {
    AbelianGroupStructure abelianized;
    bool abelianization_ok = false;
    bool relators_hold = false;
    int b0_image = -1;
    int b0_order = 0;
    bool b0_ok = false;

    bool all_ok() const { return abelianization_ok && relators_hold && b0_ok; }
};

inline R4AdjointReport r4_adjoint_report() {
    R4AdjointReport rep;
    Quandle r4 = dihedral_quandle(4);
    GroupPresentation p = adj_w_presentation(r4, QuandleWord::conj(1));

    rep.abelianized = abelianization(p);
    rep.abelianization_ok = rep.abelianized == AbelianGroupStructure({0, 0});

    FiniteGroup d4 = dihedral_group(4);
    std::vector<int> assign = {4, 5, 6, 7}; // e_{a_i} -> s r^i
    rep.relators_hold = true;
    for (const auto& rel : p.relators)
        rep.relators_hold = rep.relators_hold && eval_word(d4, rel, assign) == d4.identity;

    rep.b0_image = d4.mul(assign[0], d4.inverse(assign[2]));
    rep.b0_order = d4.element_order(rep.b0_image);
    rep.b0_ok = rep.b0_image == 2 /* r^2 */ && rep.b0_order == 2;
    return rep;
}

} // namespace qf
