#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qf/quandle.hpp"

using namespace qf;

namespace {

// Oracle: inner group order by composing columns until stable, with its own
// closure loop independent of permutation_closure.
int inner_order_oracle(const Quandle& x) {
    std::set<std::vector<int>> elems;
    std::vector<int> id(x.n);
    std::iota(id.begin(), id.end(), 0);
    elems.insert(id);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(elems.begin(), elems.end());
        for (const auto& p : cur)
            for (int c = 0; c < x.n; ++c) {
                std::vector<int> q(x.n);
                for (int i = 0; i < x.n; ++i) q[i] = x.table[p[i]][c];
                if (elems.insert(q).second) grew = true;
            }
    }
    return static_cast<int>(elems.size());
}

int brute_force_quandle_aut_count(const Quandle& x) {
    int count = 0;
    for (const Perm& p : all_permutations(x.n))
        if (is_quandle_hom(x, x, p.img)) ++count;
    return count;
}

} // namespace

TEST_CASE("make_quandle validates the axioms with witnesses") {
    REQUIRE(make_quandle({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}).n == 3);
    REQUIRE(make_quandle({{0, 0}, {1, 1}}).n == 2);

    auto bad = check_quandle_table({{0, 1}, {0, 1}});
    REQUIRE_FALSE(bad.ok);
    REQUIRE(bad.code == "Q2Violation");
    REQUIRE(bad.witness[0] == 0);

    auto q1 = check_quandle_table({{1, 0}, {0, 1}});
    REQUIRE_FALSE(q1.ok);
    REQUIRE(q1.code == "Q1Violation");
}

TEST_CASE("constructors: trivial and dihedral") {
    REQUIRE(trivial_quandle(1).table == std::vector<std::vector<int>>{{0}});
    REQUIRE(trivial_quandle(2).table == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
    for (int y = 0; y < 3; ++y) REQUIRE(trivial_quandle(3).op(2, y) == 2);

    REQUIRE(dihedral_quandle(3).table ==
            std::vector<std::vector<int>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
    REQUIRE(dihedral_quandle(4).table ==
            std::vector<std::vector<int>>{{0, 2, 0, 2}, {3, 1, 3, 1}, {2, 0, 2, 0}, {1, 3, 1, 3}});
    REQUIRE(dihedral_quandle(1).table == std::vector<std::vector<int>>{{0}});
    for (int n = 1; n <= 12; ++n) REQUIRE(check_quandle_table(dihedral_quandle(n).table).ok);
}

TEST_CASE("constructors from groups") {
    // Conjugation in an abelian group is trivial; so is Conj_0.
    for (int m = 2; m <= 6; ++m)
        REQUIRE(conj_quandle(cyclic_group(m), 1) == trivial_quandle(m));
    REQUIRE(conj_quandle(symmetric_group(3), 0) == trivial_quandle(6));

    auto c = conj_quandle(symmetric_group(3), 1);
    REQUIRE(check_quandle_table(c.table).ok);
    std::set<size_t> sizes;
    for (const auto& orb : is_connected(c).orbits) sizes.insert(orb.size());
    REQUIRE(sizes == std::set<size_t>{1, 2, 3});

    for (int m = 2; m <= 8; ++m)
        REQUIRE(core_quandle(cyclic_group(m)) == dihedral_quandle(m));
    REQUIRE(core_quandle(cyclic_group(2)) == trivial_quandle(2));
    REQUIRE(check_quandle_table(core_quandle(dihedral_group(4)).table).ok);

    // Alexander with negation is dihedral; with the identity, trivial.
    for (int m = 2; m <= 8; ++m) {
        auto g = cyclic_group(m);
        std::vector<int> neg(m);
        for (int i = 0; i < m; ++i) neg[i] = (m - i) % m;
        REQUIRE(alexander_quandle(g, Perm(neg)) == dihedral_quandle(m));
        REQUIRE(alexander_quandle(g, Perm::identity(m)) == trivial_quandle(m));
    }
    auto z5 = cyclic_group(5);
    std::vector<int> dbl(5);
    for (int i = 0; i < 5; ++i) dbl[i] = 2 * i % 5;
    auto a = alexander_quandle(z5, Perm(dbl));
    REQUIRE(check_quandle_table(a.table).ok);
    REQUIRE(is_connected(a).connected);
    // Non-automorphism rejected.
    REQUIRE_THROWS_AS(alexander_quandle(z5, Perm({1, 0, 2, 3, 4})), Error);
}

TEST_CASE("inner group and connectivity") {
    REQUIRE(inner_group(trivial_quandle(4)).size() == 1);
    for (const auto& x : {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(6)})
        REQUIRE(static_cast<int>(inner_group(x).size()) == inner_order_oracle(x));
    REQUIRE(inner_group(dihedral_quandle(4)).size() == 4);
    REQUIRE(inner_group(dihedral_quandle(3)).size() == 6);

    REQUIRE(is_connected(dihedral_quandle(3)).connected);
    auto r4 = is_connected(dihedral_quandle(4));
    REQUIRE_FALSE(r4.connected);
    REQUIRE(r4.orbits == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    REQUIRE_FALSE(is_connected(trivial_quandle(2)).connected);

    // S_x fixes x (from Q1).
    for (const auto& x : {dihedral_quandle(5), conj_quandle(symmetric_group(3), 1)})
        for (int e = 0; e < x.n; ++e) REQUIRE(x.inner(e)(e) == e);
}

TEST_CASE("automorphism group with oracle cross-check") {
    REQUIRE(automorphism_group(trivial_quandle(3)).size() == 6);
    REQUIRE(automorphism_group(trivial_quandle(4)).size() == 24);
    REQUIRE(automorphism_group(dihedral_quandle(3)).size() == 6);
    REQUIRE(automorphism_group(dihedral_quandle(4)).size() == 8);
    for (const auto& x : {dihedral_quandle(3), dihedral_quandle(4), dihedral_quandle(5)})
        REQUIRE(static_cast<int>(automorphism_group(x).size()) ==
                brute_force_quandle_aut_count(x));

    // Inn(X) is a subgroup of Aut(X).
    for (const auto& x : {dihedral_quandle(4), conj_quandle(symmetric_group(3), 1)}) {
        auto aut = automorphism_group(x);
        std::set<Perm> s(aut.begin(), aut.end());
        for (const Perm& p : inner_group(x)) REQUIRE(s.count(p) == 1);
    }
}

TEST_CASE("stabilizers and orbit-stabilizer") {
    auto t3 = stabilizer_aut(trivial_quandle(3), 0);
    REQUIRE(t3.size() == 2);

    for (const auto& x : {dihedral_quandle(3), dihedral_quandle(4), trivial_quandle(4)}) {
        auto aut = automorphism_group(x);
        for (int x0 = 0; x0 < x.n; ++x0) {
            std::set<int> orbit;
            for (const Perm& p : aut) orbit.insert(p(x0));
            REQUIRE(aut.size() == orbit.size() * stabilizer_aut(x, x0).size());
        }
    }
    REQUIRE(stabilizer_aut(dihedral_quandle(3), 1).size() == 2);
    REQUIRE(stabilizer_aut(dihedral_quandle(4), 0).size() == 2);
}

TEST_CASE("homomorphism search") {
    REQUIRE(quandle_homs(trivial_quandle(2), trivial_quandle(2)).size() == 4);

    // Every map is counted: R_3 -> R_3 has 3 constants + 6 automorphisms.
    auto homs = quandle_homs(dihedral_quandle(3), dihedral_quandle(3));
    REQUIRE(homs.size() == 9);
    int constants = 0;
    for (const auto& h : homs)
        if (h.images[0] == h.images[1] && h.images[1] == h.images[2]) ++constants;
    REQUIRE(constants == 3);

    // a_i -> s r^i lands in Conj(D_4).
    auto d4 = dihedral_group(4);
    auto target = conj_quandle(d4, 1);
    std::vector<int> f = {4, 5, 6, 7};
    REQUIRE(is_quandle_hom(dihedral_quandle(4), target, f));
    auto all = quandle_homs(dihedral_quandle(4), target);
    bool found = false;
    for (const auto& h : all) found = found || h.images == f;
    REQUIRE(found);
}

TEST_CASE("isomorphism search") {
    auto iso = are_isomorphic(dihedral_quandle(3), core_quandle(cyclic_group(3)));
    REQUIRE(iso.has_value());
    REQUIRE(iso->is_identity());

    REQUIRE_FALSE(are_isomorphic(dihedral_quandle(4), trivial_quandle(4)).has_value());

    // Alex(Z_5, x->2x) vs Alex(Z_5, x->3x): settle by full enumeration.
    auto z5 = cyclic_group(5);
    std::vector<int> dbl(5), tri(5);
    for (int i = 0; i < 5; ++i) { dbl[i] = 2 * i % 5; tri[i] = 3 * i % 5; }
    auto a2 = alexander_quandle(z5, Perm(dbl)), a3 = alexander_quandle(z5, Perm(tri));
    bool oracle_iso = false;
    for (const Perm& p : all_permutations(5))
        oracle_iso = oracle_iso || is_quandle_hom(a2, a3, p.img);
    auto found = are_isomorphic(a2, a3);
    REQUIRE(found.has_value() == oracle_iso);
    if (found) REQUIRE(is_quandle_hom(a2, a3, found->img));
}

TEST_CASE("product quandle") {
    auto x = dihedral_quandle(3);
    REQUIRE(product_quandle(trivial_quandle(1), x) == x);
    REQUIRE(product_quandle(trivial_quandle(2), trivial_quandle(2)) == trivial_quandle(4));
    auto p = product_quandle(x, trivial_quandle(2));
    REQUIRE(p.n == 6);
    REQUIRE(check_quandle_table(p.table).ok);
}
