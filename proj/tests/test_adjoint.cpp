#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qf/adjoint.hpp"

using namespace qf;

TEST_CASE("q_w dispatch") {
    REQUIRE(q_w(cyclic_group(4), QuandleWord::core()) == dihedral_quandle(4));
    REQUIRE(q_w(symmetric_group(3), QuandleWord::conj(1)) ==
            conj_quandle(symmetric_group(3), 1));
    REQUIRE(q_w(symmetric_group(3), QuandleWord::conj(0)) == trivial_quandle(6));
}

TEST_CASE("presentations and word evaluation") {
    auto t2 = trivial_quandle(2);
    auto p = adj_w_presentation(t2, QuandleWord::conj(1));
    REQUIRE(p.generators == 2);
    REQUIRE(p.relators.size() == 4);

    // In the abelianization the conj relators force e_{x*y} = e_x.
    REQUIRE(abelianization(p) == AbelianGroupStructure({0, 0}));
    REQUIRE(abelianization(adj_w_presentation(trivial_quandle(3), QuandleWord::conj(1))) ==
            AbelianGroupStructure({0, 0, 0}));

    // Free presentation with no relators.
    GroupPresentation freep{3, {}};
    REQUIRE(abelianization(freep) == AbelianGroupStructure({0, 0, 0}));

    // Core relators: e_{x*y} = e_y e_x^{-1} e_y; abelianized e_{x*y} = 2e_y - e_x.
    auto pc = adj_w_presentation(dihedral_quandle(3), QuandleWord::core());
    IntMatrix em(3, static_cast<int>(pc.relators.size()));
    for (size_t r = 0; r < pc.relators.size(); ++r)
        for (int lit : pc.relators[r]) em.at(std::abs(lit) - 1, static_cast<int>(r)) += lit > 0 ? 1 : -1;
    // Column for the pair (0,1): relator e_{0*1} (e_1 e_0^{-1} e_1)^{-1} = e_2 - 2e_1 + e_0.
    bool found = false;
    for (int c = 0; c < em.cols(); ++c)
        found = found || (em.at(0, c) == 1 && em.at(1, c) == -2 && em.at(2, c) == 1);
    REQUIRE(found);
}

TEST_CASE("adj_phi presentations") {
    // phi = id on T_n: relators collapse, free of rank n.
    auto pid = adj_phi_presentation(trivial_quandle(3), Perm::identity(3));
    REQUIRE(abelianization(pid) == AbelianGroupStructure({0, 0, 0}));

    auto r3 = dihedral_quandle(3);
    auto p = adj_phi_presentation(r3, Perm::identity(3));
    REQUIRE(p.generators == 3);
    REQUIRE(p.relators.size() == 9);
    // Abelianized relation e_{x*y} = e_{phi(x)} - e_{phi(y)} + e_y with phi = id.
    IntMatrix em(3, static_cast<int>(p.relators.size()));
    for (size_t r = 0; r < p.relators.size(); ++r)
        for (int lit : p.relators[r]) em.at(std::abs(lit) - 1, static_cast<int>(r)) += lit > 0 ? 1 : -1;
    auto ab = cokernel_structure(em);
    REQUIRE(ab == abelianization(p));

    REQUIRE_THROWS_AS(adj_phi_presentation(dihedral_quandle(4), Perm({1, 0, 2, 3})), Error);
}

TEST_CASE("abelianization of Adj(R_4)") {
    auto p = adj_w_presentation(dihedral_quandle(4), QuandleWord::conj(1));
    REQUIRE(abelianization(p) == AbelianGroupStructure({0, 0}));
}

TEST_CASE("rank of abelianized conj-adjoint counts inner orbits") {
    for (const auto& x : {trivial_quandle(2), dihedral_quandle(3), dihedral_quandle(4),
                          dihedral_quandle(6), conj_quandle(symmetric_group(3), 1)}) {
        auto ab = abelianization(adj_w_presentation(x, QuandleWord::conj(1)));
        REQUIRE(ab.free_rank() == static_cast<int>(is_connected(x).orbits.size()));
        REQUIRE(ab.order() == 0);
        REQUIRE(static_cast<int>(ab.factors.size()) == ab.free_rank()); // no torsion
    }
}

TEST_CASE("presentation homs into groups") {
    auto p = adj_w_presentation(trivial_quandle(2), QuandleWord::conj(1));
    REQUIRE(presentation_homs_to(p, cyclic_group(2)).size() == 4);

    // Trivial target group: exactly one assignment.
    REQUIRE(presentation_homs_to(p, cyclic_group(1)).size() == 1);

    // e_{a_i} -> s r^i satisfies the R_4 relators in D_4.
    auto pr4 = adj_w_presentation(dihedral_quandle(4), QuandleWord::conj(1));
    auto homs = presentation_homs_to(pr4, dihedral_group(4));
    std::set<std::vector<int>> hset(homs.begin(), homs.end());
    REQUIRE(hset.count({4, 5, 6, 7}) == 1);
}

TEST_CASE("adjointness counting") {
    std::vector<Quandle> xs = {trivial_quandle(2), dihedral_quandle(3), dihedral_quandle(4)};
    std::vector<FiniteGroup> gs = {cyclic_group(2), cyclic_group(4), symmetric_group(3)};
    for (const auto& x : xs)
        for (const auto& g : gs)
            for (const auto& w : {QuandleWord::core(), QuandleWord::conj(1)}) {
                auto rep = adjointness_count_check(x, g, w);
                INFO(x.n << " -> |" << g.n << "| word " << w.str());
                REQUIRE(rep.all_ok());
            }
    auto rep = adjointness_count_check(trivial_quandle(2), cyclic_group(2), QuandleWord::conj(1));
    REQUIRE(rep.quandle_homs == 4);
}

TEST_CASE("extension data validation") {
    auto z4 = cyclic_group(4);
    auto d = make_extension_data(z4, {0, 2});
    REQUIRE(d.g.n == 2);
    REQUIRE(d.kappa == std::vector<int>{0, 1});
    REQUIRE(d.pi == std::vector<int>{0, 1, 0, 1});

    // Non-normal subset rejected: {0, 4} in D_4 is <s>, not normal.
    REQUIRE_THROWS_AS(make_extension_data(dihedral_group(4), {0, 4}), Error);
    // Custom transversal must satisfy kappa(1) = 1 and section-ness.
    REQUIRE_THROWS_AS(make_extension_data(z4, {0, 2}, std::vector<int>{2, 1}), Error);
    auto d2 = make_extension_data(z4, {0, 2}, std::vector<int>{0, 3});
    REQUIRE(d2.kappa[1] == 3);
}

TEST_CASE("core transport of Z_4 over Z_2 rebuilds R_4") {
    auto z4 = cyclic_group(4);
    auto d = make_extension_data(z4, {0, 2});
    auto t = extension_transport_qw(d, QuandleWord::core());

    // mu(0,1) = mu(1,0) = 2, i.e. position 1 in A = {0,2}; mu vanishes on the diagonal.
    REQUIRE(t.mu == std::vector<int>{0, 1, 1, 0});
    // alpha_{x,y}(s,t) = mu(x,y) - s in A-coordinates.
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int s = 0; s < 2; ++s)
                for (int u = 0; u < 2; ++u)
                    REQUIRE(t.cocycle.a(x, y, s, u) ==
                            ((t.mu[x * 2 + y] - s) % 2 + 2) % 2);

    REQUIRE(t.witness_is_iso);
    REQUIRE(t.identity_fiber_matches);
    auto rebuilt = build_extension(t.cocycle);
    REQUIRE(are_isomorphic(rebuilt, dihedral_quandle(4)).has_value());
}

TEST_CASE("direct products transport with zero mu") {
    auto g = symmetric_group(3);
    auto a = cyclic_group(2);
    auto e = direct_product(g, a);
    std::vector<int> a_sub;
    for (int i = 0; i < a.n; ++i) a_sub.push_back(i); // {1} x A = indices 0..|A|-1
    auto d = make_extension_data(e, a_sub);

    for (const auto& w : {QuandleWord::core(), QuandleWord::conj(1), QuandleWord::conj(2)}) {
        auto t = extension_transport_qw(d, w);
        REQUIRE(t.witness_is_iso);
        REQUIRE(t.identity_fiber_matches);
        for (int v : t.mu) REQUIRE(v == 0);
        // Product decomposition: alpha is the fiber operation, independent of (x,y).
        for (int x = 0; x < d.g.n; ++x)
            for (int y = 0; y < d.g.n; ++y)
                for (int s = 0; s < 2; ++s)
                    for (int u = 0; u < 2; ++u)
                        REQUIRE(t.cocycle.a(x, y, s, u) == t.fiber_model.op(s, u));
    }
}

TEST_CASE("conj transport of D_4 over its center") {
    auto d4 = dihedral_group(4);
    // Center of D_4 is {1, r^2}.
    auto d = make_extension_data(d4, {0, 2});
    REQUIRE(d.g.n == 4);
    REQUIRE(d.g.is_abelian()); // D_4 / Z(D_4) = Z_2 x Z_2
    auto t = extension_transport_qw(d, QuandleWord::conj(1));
    REQUIRE(t.witness_is_iso);
    REQUIRE(t.identity_fiber_matches);
    REQUIRE(validate_dynamical(t.cocycle).ok);
}

TEST_CASE("alexander transport") {
    auto z4 = cyclic_group(4);
    auto d = make_extension_data(z4, {0, 2});

    // f = negation on Z_4 preserves {0,2}.
    auto t = extension_transport_alex(d, Perm({0, 3, 2, 1}));
    REQUIRE(t.witness_is_iso);
    REQUIRE(t.identity_fiber_matches);

    // f = identity: the transported quandle is trivial.
    auto tid = extension_transport_alex(d, Perm::identity(4));
    REQUIRE(tid.witness_is_iso);
    REQUIRE(build_extension(tid.cocycle) == trivial_quandle(4));

    // Direct product with f = (f_1, f_2): zero mu, product decomposition.
    auto g = cyclic_group(3);
    auto a = cyclic_group(2);
    auto e = direct_product(g, a);
    std::vector<int> f(e.n);
    for (int x = 0; x < 3; ++x)
        for (int s = 0; s < 2; ++s) f[x * 2 + s] = ((3 - x) % 3) * 2 + s; // (negation, id)
    auto dd = make_extension_data(e, {0, 1});
    auto tp = extension_transport_alex(dd, Perm(f));
    REQUIRE(tp.witness_is_iso);
    REQUIRE(tp.identity_fiber_matches);
    for (int v : tp.mu) REQUIRE(v == 0);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int s = 0; s < 2; ++s)
                for (int u = 0; u < 2; ++u)
                    REQUIRE(tp.cocycle.a(x, y, s, u) == tp.fiber_model.op(s, u));

    // f not preserving A is rejected: swap (0,1) in Z_2 x Z_2... use Klein.
    auto v4 = klein_four_group();
    auto dv = make_extension_data(v4, {0, 1});
    // The automorphism exchanging the two generators moves {0,1} to {0,2}.
    std::vector<int> swap_gens = {0, 2, 1, 3};
    REQUIRE(is_group_hom(v4, v4, swap_gens));
    REQUIRE_THROWS_AS(extension_transport_alex(dv, Perm(swap_gens)), Error);
}

TEST_CASE("transported cocycles always validate and reconstruct") {
    // Sweep a few extensions x words.
    struct Case {
        FiniteGroup e;
        std::vector<int> a;
    };
    std::vector<Case> cases = {{cyclic_group(4), {0, 2}},
                               {cyclic_group(6), {0, 2, 4}},
                               {cyclic_group(6), {0, 3}},
                               {dihedral_group(4), {0, 1, 2, 3}},
                               {symmetric_group(3), {0, 3, 4}}};
    for (const auto& c : cases) {
        auto d = make_extension_data(c.e, c.a);
        for (const auto& w : {QuandleWord::core(), QuandleWord::conj(1)}) {
            auto t = extension_transport_qw(d, w);
            REQUIRE(validate_dynamical(t.cocycle).ok);
            REQUIRE(t.witness_is_iso);
            REQUIRE(t.identity_fiber_matches);
        }
    }
}

TEST_CASE("r4 adjoint report") {
    auto rep = r4_adjoint_report();
    REQUIRE(rep.abelianization_ok);
    REQUIRE(rep.relators_hold);
    REQUIRE(rep.b0_image == 2);
    REQUIRE(rep.b0_order == 2);
    REQUIRE(rep.all_ok());
}
