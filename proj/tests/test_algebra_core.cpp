#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "qf/group.hpp"
#include "qf/smith.hpp"

using namespace qf;

namespace {

// Oracle: count automorphisms of a Cayley table by checking every permutation.
int brute_force_aut_count(const FiniteGroup& g) {
    int count = 0;
    for (const Perm& p : all_permutations(g.n))
        if (is_group_hom(g, g, p.img)) ++count;
    return count;
}

IntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

} // namespace

TEST_CASE("make_group validates Cayley tables") {
    auto z2 = make_group({{0, 1}, {1, 0}});
    REQUIRE(z2.n == 2);
    REQUIRE(z2.inverse(1) == 1);

    auto s3 = symmetric_group(3);
    REQUIRE(s3.n == 6);
    REQUIRE_FALSE(s3.is_abelian());
    REQUIRE(check_group_table(s3.table).ok);

    auto bad = check_group_table({{0, 1}, {1, 1}});
    REQUIRE_FALSE(bad.ok);
    REQUIRE((bad.code == "NoInverse" || bad.code == "NotAssociative"));

    // Identity exists but sits at index 1: rejected by the index-0 convention.
    auto shifted = check_group_table({{1, 0}, {0, 1}});
    REQUIRE_FALSE(shifted.ok);
    REQUIRE(shifted.code == "IdentityNotZero");

    auto noid = check_group_table({{1, 0}, {1, 0}});
    REQUIRE_FALSE(noid.ok);
    REQUIRE(noid.code == "NoIdentity");
}

TEST_CASE("group constructors") {
    auto z4 = cyclic_group(4);
    REQUIRE(z4.mul(3, 2) == 1);
    REQUIRE(z4.identity == 0);

    auto v4 = klein_four_group();
    REQUIRE(v4.n == 4);
    for (int a = 0; a < 4; ++a) REQUIRE(v4.mul(a, a) == 0);

    auto d4 = dihedral_group(4);
    REQUIRE(d4.n == 8);
    REQUIRE(d4.element_order(1) == 4);  // r
    REQUIRE(d4.element_order(4) == 2);  // s
    // s r s = r^{-1}
    REQUIRE(d4.mul(d4.mul(4, 1), 4) == d4.inverse(1));

    REQUIRE(dihedral_group(1).n == 2);
    REQUIRE_THROWS_AS(cyclic_group(1000), CapExceeded);
}

TEST_CASE("group associativity and inverse invariants hold for every constructor") {
    std::vector<FiniteGroup> groups = {cyclic_group(1), cyclic_group(6), dihedral_group(3),
                                       klein_four_group(), symmetric_group(4),
                                       direct_product(cyclic_group(2), cyclic_group(4))};
    for (const auto& g : groups) {
        REQUIRE(check_group_table(g.table).ok);
        for (int a = 0; a < g.n; ++a) {
            REQUIRE(g.mul(a, g.inverse(a)) == g.identity);
            REQUIRE(g.mul(a, g.identity) == a);
        }
    }
}

TEST_CASE("group automorphisms match the brute-force oracle") {
    auto z2 = cyclic_group(2);
    REQUIRE(group_automorphisms(z2).size() == 1);

    auto z4 = cyclic_group(4);
    auto aut4 = group_automorphisms(z4);
    REQUIRE(static_cast<int>(aut4.size()) == brute_force_aut_count(z4));
    REQUIRE(aut4.size() == 2);

    auto v4 = klein_four_group();
    auto autv = group_automorphisms(v4);
    REQUIRE(static_cast<int>(autv.size()) == brute_force_aut_count(v4));
    REQUIRE(autv.size() == 6);

    auto s3 = symmetric_group(3);
    REQUIRE(static_cast<int>(group_automorphisms(s3).size()) == brute_force_aut_count(s3));
}

TEST_CASE("automorphism lists are groups") {
    for (const auto& g : {cyclic_group(8), dihedral_group(4), symmetric_group(3)}) {
        auto aut = group_automorphisms(g);
        std::set<Perm> s(aut.begin(), aut.end());
        REQUIRE(s.count(Perm::identity(g.n)) == 1);
        for (const Perm& a : aut) {
            REQUIRE(s.count(a.inverse()) == 1);
            for (const Perm& b : aut) REQUIRE(s.count(compose(a, b)) == 1);
        }
    }
}

TEST_CASE("smith normal form: hand examples") {
    {
        auto f = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
        REQUIRE(f.diag() == std::vector<Int>{1, 6});
    }
    {
        auto f = smith_normal_form(from_rows({{0, 0}, {0, 0}}));
        REQUIRE(f.D.is_zero());
        REQUIRE(f.U == IntMatrix::identity(2));
        REQUIRE(f.V == IntMatrix::identity(2));
    }
    {
        auto f = smith_normal_form(from_rows({{1}}));
        REQUIRE(f.diag() == std::vector<Int>{1});
    }
}

TEST_CASE("smith normal form: transform invariants on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<int>(rng() % 19) - 9;
        auto f = smith_normal_form(m);

        REQUIRE(f.U * m * f.V == f.D);
        REQUIRE(f.U * f.Uinv == IntMatrix::identity(r));
        REQUIRE(f.V * f.Vinv == IntMatrix::identity(c));
        Int du = f.U.determinant(), dv = f.V.determinant();
        REQUIRE((du == 1 || du == -1));
        REQUIRE((dv == 1 || dv == -1));

        auto d = f.diag();
        for (size_t i = 0; i + 1 < d.size(); ++i) {
            REQUIRE(d[i] >= 0);
            if (d[i] != 0) REQUIRE(d[i + 1] % d[i] == 0);
            else REQUIRE(d[i + 1] == 0);
        }
        // Off-diagonal entries vanish.
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) REQUIRE(f.D.at(i, j) == 0);
    }
}

TEST_CASE("cokernel structure") {
    REQUIRE(cokernel_structure(from_rows({{2}})) == AbelianGroupStructure({2}));
    REQUIRE(cokernel_structure(from_rows({{2, 0}, {0, 2}})) == AbelianGroupStructure({2, 2}));
    REQUIRE(cokernel_structure(IntMatrix(2, 0)) == AbelianGroupStructure({0, 0}));
    REQUIRE(cokernel_structure(from_rows({{2, 0}, {0, 3}})) == AbelianGroupStructure({6}));
    REQUIRE(cokernel_structure(from_rows({{1, 0}, {0, 1}})).is_trivial());
}

TEST_CASE("abelian structure utilities") {
    auto s = AbelianGroupStructure::from_cyclic_orders({2, 4, 3});
    REQUIRE(s == AbelianGroupStructure({2, 12}));
    REQUIRE(s.order() == 24);
    REQUIRE(AbelianGroupStructure::from_cyclic_orders({0, 2, 0}) ==
            AbelianGroupStructure({2, 0, 0}));
    REQUIRE(AbelianGroupStructure({0, 0}).str() == "Z^2");
    REQUIRE(AbelianGroupStructure({2, 12}).str() == "Z_2 x Z_12");
}

TEST_CASE("solve_mod finds witnesses exactly when solvable") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        long long m = std::vector<long long>{2, 3, 4, 6}[rng() % 4];
        int r = 1 + static_cast<int>(rng() % 4), c = 1 + static_cast<int>(rng() % 4);
        IntMatrix a(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) a.at(i, j) = static_cast<int>(rng() % 11) - 5;
        std::vector<long long> z(c);
        for (auto& v : z) v = rng() % m;
        // Solvable instance: b = A z mod m.
        std::vector<Int> zz(z.begin(), z.end());
        auto bz = a.apply(zz);
        std::vector<long long> b(r);
        for (int i = 0; i < r; ++i) b[i] = detail::emod(bz[i], m);
        auto sol = solve_mod(a, b, m);
        REQUIRE(sol.has_value());
        std::vector<Int> ss(sol->begin(), sol->end());
        auto check = a.apply(ss);
        for (int i = 0; i < r; ++i) REQUIRE(detail::emod(check[i], m) == b[i]);
    }
    // An inconsistent system: 2x = 1 mod 4.
    REQUIRE_FALSE(solve_mod(from_rows({{2}}), {1}, 4).has_value());
}

TEST_CASE("kernel_mod_basis spans the kernel") {
    IntMatrix a = from_rows({{2, 0, 1}, {0, 2, 1}});
    long long m = 4;
    IntMatrix b = kernel_mod_basis(a, m);
    // Every basis column lies in the kernel.
    for (int j = 0; j < b.cols(); ++j) {
        std::vector<Int> v(b.rows());
        for (int i = 0; i < b.rows(); ++i) v[i] = b.at(i, j);
        for (const Int& e : a.apply(v)) REQUIRE(detail::emod(e, m) == 0);
    }
    // Count lattice points mod m reachable from the basis and compare with a
    // direct sweep of (Z_4)^3.
    std::set<std::vector<long long>> spanned;
    std::vector<long long> coef(b.cols(), 0);
    while (true) {
        std::vector<long long> v(b.rows(), 0);
        for (int j = 0; j < b.cols(); ++j)
            for (int i = 0; i < b.rows(); ++i)
                v[i] = (v[i] + coef[j] * detail::emod(b.at(i, j), m)) % m;
        spanned.insert(v);
        size_t pos = 0;
        while (pos < coef.size() && ++coef[pos] == m) coef[pos++] = 0;
        if (pos == coef.size()) break;
    }
    int direct = 0;
    for (long long x = 0; x < m; ++x)
        for (long long y = 0; y < m; ++y)
            for (long long z = 0; z < m; ++z) {
                bool in = (2 * x + z) % m == 0 && (2 * y + z) % m == 0;
                if (in) {
                    ++direct;
                    REQUIRE(spanned.count({x, y, z}) == 1);
                }
            }
    REQUIRE(static_cast<int>(spanned.size()) == direct);
}
