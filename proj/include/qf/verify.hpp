#pragma once

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <random>
#include <thread>

#include "qf/bridge.hpp"
#include "qf/catalog.hpp"
#include "qf/report.hpp"

namespace qf {

struct VerifyOptions {
    bool small = false;               // trimmed sweep for smoke runs
    unsigned long long seed = 1;      // seeds the coboundary-twist sampling
    Caps caps;
    int max_threads = 0;              // 0 = hardware; QF_MAX_THREADS bounds either way
};

namespace detail {

/// Oracle-side H^2 structure from the explicit Z2/B2 lists. For prime
/// moduli the quotient of F_p-spaces is elementary abelian, so the
/// structure is forced by the order; composite moduli fall back to
/// canonical-representative order counting.
inline AbelianGroupStructure structure_from_lists(const Z2B2Lists& lists, const CoeffGroup& a,
                                                  const Caps& caps) {
    bool all_prime = true;
    for (long long m : a.moduli) {
        for (long long d = 2; d * d <= m; ++d)
            if (m % d == 0) all_prime = false;
        all_prime = all_prime && m >= 2;
    }
    if (all_prime && a.k() == 1) {
        long long p = a.moduli[0];
        long long q = static_cast<long long>(lists.z2.size() / lists.b2.size());
        std::vector<Int> factors;
        while (q > 1) {
            require(q % p == 0, "OracleFailure", "quotient size is not a power of the modulus");
            q /= p;
            factors.push_back(p);
        }
        return AbelianGroupStructure(factors);
    }

    if (static_cast<long long>(lists.z2.size()) > caps.max_enumeration)
        throw CapExceeded("oracle quotient too large to materialize");
    auto add = [&](const Cochain& c, const Cochain& d) {
        Cochain r = c;
        for (size_t i = 0; i < r.vals.size(); ++i) r.vals[i] = a.add(r.vals[i], d.vals[i]);
        return r;
    };
    auto canonical = [&](const Cochain& c) {
        Cochain best = add(c, lists.b2.front());
        for (const Cochain& b : lists.b2) best = std::min(best, add(c, b));
        return best;
    };
    std::set<Cochain> classes;
    for (const Cochain& z : lists.z2) classes.insert(canonical(z));
    std::vector<Int> orders;
    for (const Cochain& c : classes) {
        Cochain acc = canonical(c);
        Cochain zero = acc;
        for (auto& v : zero.vals) v = 0;
        zero = canonical(zero);
        int ord = 1;
        while (!(acc == zero)) {
            acc = canonical(add(acc, c));
            ++ord;
        }
        orders.push_back(ord);
    }
    // Assemble invariant factors from the order statistics per prime.
    Int expo = 1;
    for (const Int& o : orders) expo = expo / boost::multiprecision::gcd(expo, o) * o;
    std::map<Int, std::vector<int>> prime_slots;
    for (Int p = 2; p <= expo; ++p) {
        if (expo % p != 0) continue;
        std::vector<int> slots;
        long long prev = 1;
        Int pj = p;
        while (true) {
            long long count = 0;
            for (const Int& o : orders)
                if (pj % o == 0) ++count;
            int lam = 0;
            long long ratio = count / prev;
            Int pp = p;
            while (ratio > 1) {
                ratio /= pp.convert_to<long long>();
                ++lam;
            }
            if (lam == 0) break;
            for (int i = 0; i < lam; ++i) {
                if (static_cast<int>(slots.size()) <= i) slots.push_back(0);
                slots[i]++;
            }
            prev = count;
            pj *= p;
        }
        prime_slots[p] = slots;
    }
    size_t nslots = 0;
    for (auto& [p, s] : prime_slots) nslots = std::max(nslots, s.size());
    std::vector<Int> invs(nslots, 1);
    for (auto& [p, s] : prime_slots)
        for (size_t i = 0; i < s.size(); ++i) {
            Int q = 1;
            for (int e = 0; e < s[i]; ++e) q *= p;
            invs[i] *= q;
        }
    std::reverse(invs.begin(), invs.end());
    return AbelianGroupStructure(invs);
}

inline Cochain carry_cochain(const Quandle& t2) {
    TupleBasis pairs = nondegenerate_tuples(t2, 2);
    Cochain c{2, std::vector<long long>(pairs.size(), 0)};
    c.vals[pairs.find({0, 1})] = 1;
    c.vals[pairs.find({1, 0})] = 1;
    return c;
}

} // namespace detail

// ---- criterion bodies ------------------------------------------------------

inline std::vector<Report> verify_axioms(const VerifyOptions& opt) {
    std::vector<Report> out;
    out.push_back(run_claim(1, "axioms/dihedral n=1..12", [&](std::string& d) {
        for (int n = 1; n <= 12; ++n)
            if (!check_quandle_table(dihedral_quandle(n).table).ok) {
                d = "dihedral:" + std::to_string(n);
                return false;
            }
        d = "12 tables";
        return true;
    }));
    out.push_back(run_claim(1, "axioms/conj core alexander over catalog groups", [&](std::string& d) {
        int count = 0;
        for (const auto& [name, g] : catalog_groups(opt.caps)) {
            for (int n = 0; n <= 2; ++n, ++count)
                if (!check_quandle_table(conj_quandle(g, n).table).ok) {
                    d = "conj:" + name + ":" + std::to_string(n);
                    return false;
                }
            ++count;
            if (!check_quandle_table(core_quandle(g).table).ok) {
                d = "core:" + name;
                return false;
            }
            for (const Perm& f : group_automorphisms(g, opt.caps)) {
                ++count;
                if (!check_quandle_table(alexander_quandle(g, f).table).ok) {
                    d = "alex over " + name;
                    return false;
                }
            }
        }
        d = std::to_string(count) + " tables";
        return true;
    }));
    return out;
}

inline std::vector<Report> verify_construction_identities(const VerifyOptions& opt) {
    std::vector<Report> out;
    out.push_back(run_claim(2, "identities/core of cyclic is dihedral", [&](std::string& d) {
        for (int n = 2; n <= 8; ++n)
            if (!(core_quandle(cyclic_group(n, opt.caps)) == dihedral_quandle(n))) {
                d = "n=" + std::to_string(n);
                return false;
            }
        return true;
    }));
    out.push_back(run_claim(2, "identities/alexander with negation is dihedral", [&](std::string& d) {
        for (int n = 2; n <= 8; ++n) {
            auto g = cyclic_group(n, opt.caps);
            std::vector<int> neg(n);
            for (int i = 0; i < n; ++i) neg[i] = (n - i) % n;
            if (!(alexander_quandle(g, Perm(neg)) == dihedral_quandle(n))) {
                d = "n=" + std::to_string(n);
                return false;
            }
        }
        return true;
    }));
    out.push_back(run_claim(2, "identities/alexander with identity is trivial", [&](std::string& d) {
        for (const auto& [name, g] : catalog_groups(opt.caps))
            if (!(alexander_quandle(g, Perm::identity(g.n)) == trivial_quandle(g.n))) {
                d = name;
                return false;
            }
        return true;
    }));
    out.push_back(run_claim(2, "identities/conj of abelian is trivial", [&](std::string& d) {
        for (const auto& [name, g] : catalog_groups(opt.caps)) {
            if (!g.is_abelian()) continue;
            for (int n = 0; n <= 2; ++n)
                if (!(conj_quandle(g, n) == trivial_quandle(g.n))) {
                    d = "conj:" + name + ":" + std::to_string(n);
                    return false;
                }
        }
        return true;
    }));
    return out;
}

inline std::vector<Report> verify_double_path(const VerifyOptions& opt) {
    std::vector<Report> out;
    // Distinct catalog tables of size <= 4.
    std::vector<std::pair<std::string, Quandle>> cases;
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& [name, x] : catalog_quandles(opt.caps))
        if (x.n <= 4 && seen.insert(x.table).second) cases.emplace_back(name, x);

    for (const auto& [name, x] : cases)
        for (long long m : {2LL, 3LL}) {
            TupleBasis pairs = nondegenerate_tuples(x, 2);
            double nominal = std::pow(static_cast<double>(m), pairs.size());
            if (opt.small && nominal > 1e5) continue;
            out.push_back(run_claim(
                3, "double-path/" + name + " Z" + std::to_string(m), [&, m](std::string& d) {
                    CoeffGroup a({m});
                    CohomologySpace h(x, a, 2, opt.caps);
                    auto lists = enumerate_Z2_B2(x, a, opt.caps);
                    Int oracle_order(lists.z2.size() / lists.b2.size());
                    auto oracle = detail::structure_from_lists(lists, a, opt.caps);
                    d = h.structure().str() + ", |Z2|=" + std::to_string(lists.z2.size()) +
                        ", |B2|=" + std::to_string(lists.b2.size());
                    return oracle_order == h.structure().order() && oracle == h.structure();
                }));
        }
    return out;
}

inline std::vector<Report> verify_anchors(const VerifyOptions& opt) {
    std::vector<Report> out;
    out.push_back(run_claim(4, "anchors/H2(T2;Z2) order 4, trivial B2", [&](std::string& d) {
        CohomologySpace h(trivial_quandle(2), CoeffGroup({2}), 2, opt.caps);
        auto lists = enumerate_Z2_B2(trivial_quandle(2), CoeffGroup({2}), opt.caps);
        d = h.structure().str();
        return h.structure().order() == 4 && lists.b2.size() == 1 && lists.z2.size() == 4;
    }));
    out.push_back(run_claim(4, "anchors/H2(T3;Z2) order 64", [&](std::string& d) {
        CohomologySpace h(trivial_quandle(3), CoeffGroup({2}), 2, opt.caps);
        d = h.structure().str();
        return h.structure().order() == 64;
    }));
    out.push_back(run_claim(4, "anchors/H1 counts inner orbits over the catalog", [&](std::string& d) {
        int count = 0;
        for (const auto& [name, x] : catalog_quandles(opt.caps)) {
            size_t orbits = is_connected(x).orbits.size();
            for (long long m : {2LL, 3LL}) {
                CohomologySpace h(x, CoeffGroup({m}), 1, opt.caps);
                Int expect = 1;
                for (size_t i = 0; i < orbits; ++i) expect *= m;
                ++count;
                if (h.structure().order() != expect) {
                    d = name + " Z" + std::to_string(m);
                    return false;
                }
            }
        }
        d = std::to_string(count) + " pairs";
        return true;
    }));
    return out;
}

inline std::vector<Report> verify_wells_abelian_sweep(const VerifyOptions& opt) {
    std::vector<Report> out;
    struct Case {
        std::string name;
        Quandle x;
        long long m;
    };
    std::vector<Case> cases = {{"T2 Z2", trivial_quandle(2), 2},
                               {"T3 Z2", trivial_quandle(3), 2},
                               {"R3 Z3", dihedral_quandle(3), 3},
                               {"R4 Z2", dihedral_quandle(4), 2}};
    for (const auto& c : cases) {
        out.push_back(run_claim(5, "exactness-abelian/" + c.name, [&](std::string& d) {
            CoeffGroup a({c.m});
            CohomologySpace h(c.x, a, 2, opt.caps);
            size_t limit = h.class_reps().size();
            if (opt.small) limit = std::min<size_t>(limit, 16);
            for (size_t i = 0; i < limit; ++i) {
                auto rep = verify_wells_abelian(c.x, a, h.class_reps()[i], opt.caps);
                if (!rep.all_ok()) {
                    d = "class " + std::to_string(i);
                    return false;
                }
            }
            d = std::to_string(limit) + " classes";
            return true;
        }));
    }
    return out;
}

inline std::vector<Report> verify_wells_dynamical_sweep(const VerifyOptions& opt) {
    std::vector<Report> out;
    out.push_back(run_claim(6, "exactness-dynamical/trivial cocycle over T2", [&](std::string& d) {
        auto rep = verify_wells_dynamical(trivial_dynamical(trivial_quandle(2), 2), 0, opt.caps);
        d = "|Aut|=" + std::to_string(rep.aut_count);
        return rep.all_ok();
    }));
    out.push_back(run_claim(6, "exactness-dynamical/product cocycle over R3", [&](std::string& d) {
        auto rep = verify_wells_dynamical(
            product_dynamical(dihedral_quandle(3), trivial_quandle(2)), 0, opt.caps);
        d = "|Aut|=" + std::to_string(rep.aut_count);
        return rep.all_ok();
    }));
    out.push_back(run_claim(6, "exactness-dynamical/R4 as extension of T2", [&](std::string& d) {
        auto dc = abelian_dynamical(trivial_quandle(2), CoeffGroup({2}),
                                    detail::carry_cochain(trivial_quandle(2)));
        auto rep = verify_wells_dynamical(dc, 0, opt.caps);
        d = "|Aut|=" + std::to_string(rep.aut_count);
        return rep.all_ok();
    }));
    out.push_back(run_claim(6, "splitting/R3 with fiber T2", [&](std::string& d) {
        auto rep = splitting_section(dihedral_quandle(3), trivial_quandle(2), 0, opt.caps);
        d = std::to_string(rep.pairs) + " pairs";
        return rep.all_ok();
    }));
    out.push_back(run_claim(6, "splitting/T2 with fiber T2", [&](std::string& d) {
        auto rep = splitting_section(trivial_quandle(2), trivial_quandle(2), 0, opt.caps);
        d = std::to_string(rep.pairs) + " pairs";
        return rep.all_ok();
    }));
    if (!opt.small)
        out.push_back(run_claim(6, "splitting/R4 with fiber R3", [&](std::string& d) {
            auto rep = splitting_section(dihedral_quandle(4), dihedral_quandle(3), 0, opt.caps);
            d = std::to_string(rep.pairs) + " pairs";
            return rep.all_ok();
        }));
    return out;
}

inline std::vector<Report> verify_theta(const VerifyOptions& opt) {
    std::vector<Report> out;
    struct Case {
        std::string name;
        Quandle x;
        long long m;
    };
    std::vector<Case> cases = {{"T2 Z2", trivial_quandle(2), 2},
                               {"R4 Z2", dihedral_quandle(4), 2}};
    for (const auto& c : cases) {
        out.push_back(run_claim(7, "theta-derivation/" + c.name, [&](std::string& d) {
            CoeffGroup a({c.m});
            CohomologySpace h(c.x, a, 2, opt.caps);
            size_t limit = h.class_reps().size();
            if (opt.small) limit = std::min<size_t>(limit, 4);
            for (size_t i = 0; i < limit; ++i) {
                auto rep = check_theta_derivation(c.x, a, h.class_reps()[i], opt.caps);
                if (!rep.all_ok()) {
                    d = "class " + std::to_string(i);
                    return false;
                }
            }
            d = std::to_string(limit) + " base classes";
            return true;
        }));
    }
    out.push_back(run_claim(7, "semidirect-action/T2 Z2", [&](std::string& d) {
        auto rep = semidirect_action_check(trivial_quandle(2), CoeffGroup({2}), opt.caps);
        d = std::to_string(rep.checks) + " composition checks";
        return rep.all_ok();
    }));
    return out;
}

inline std::vector<Report> verify_transport(const VerifyOptions& opt) {
    std::vector<Report> out;
    out.push_back(run_claim(8, "transport/core Z4 over Z2 rebuilds R4", [&](std::string& d) {
        auto data = make_extension_data(cyclic_group(4, opt.caps), {0, 2});
        auto t = extension_transport_qw(data, QuandleWord::core());
        bool mu_ok = t.mu == std::vector<int>{0, 1, 1, 0};
        auto rebuilt = build_extension(t.cocycle);
        bool iso = are_isomorphic(rebuilt, dihedral_quandle(4), opt.caps).has_value();
        d = "mu=(0,1,1,0)";
        return mu_ok && t.witness_is_iso && t.identity_fiber_matches && iso;
    }));
    out.push_back(run_claim(8, "transport/direct products decompose with zero mu", [&](std::string& d) {
        struct Case {
            FiniteGroup g, a;
        };
        std::vector<Case> cases = {{symmetric_group(3, opt.caps), cyclic_group(2, opt.caps)},
                                   {cyclic_group(3, opt.caps), klein_four_group(opt.caps)}};
        int count = 0;
        for (const auto& c : cases) {
            auto e = direct_product(c.g, c.a, opt.caps);
            std::vector<int> sub(c.a.n);
            std::iota(sub.begin(), sub.end(), 0);
            auto data = make_extension_data(e, sub);
            for (const auto& w : {QuandleWord::core(), QuandleWord::conj(1)}) {
                ++count;
                auto t = extension_transport_qw(data, w);
                if (!t.witness_is_iso || !t.identity_fiber_matches) return false;
                for (int v : t.mu)
                    if (v != 0) return false;
                for (int x = 0; x < data.g.n; ++x)
                    for (int y = 0; y < data.g.n; ++y)
                        for (int s = 0; s < data.fiber_size(); ++s)
                            for (int u = 0; u < data.fiber_size(); ++u)
                                if (t.cocycle.a(x, y, s, u) != t.fiber_model.op(s, u))
                                    return false;
            }
            // The Alexander variant with a componentwise automorphism.
            std::vector<int> f(e.n);
            for (int x = 0; x < c.g.n; ++x)
                for (int s = 0; s < c.a.n; ++s)
                    f[x * c.a.n + s] = x * c.a.n + c.a.inverse(s);
            ++count;
            auto t = extension_transport_alex(data, Perm(f));
            if (!t.witness_is_iso || !t.identity_fiber_matches) return false;
            for (int v : t.mu)
                if (v != 0) return false;
        }
        d = std::to_string(count) + " transports";
        return true;
    }));
    out.push_back(run_claim(8, "transport/conj D4 over its center", [&](std::string& d) {
        auto data = make_extension_data(dihedral_group(4, opt.caps), {0, 2});
        auto t = extension_transport_qw(data, QuandleWord::conj(1));
        d = "base Klein";
        return t.witness_is_iso && t.identity_fiber_matches &&
               validate_dynamical(t.cocycle).ok;
    }));
    return out;
}

inline std::vector<Report> verify_r4_adjoint(const VerifyOptions&) {
    std::vector<Report> out;
    out.push_back(run_claim(9, "r4-adjoint/abelianization, relators, kernel element", [](std::string& d) {
        auto rep = r4_adjoint_report();
        d = "abelianization " + rep.abelianized.str() + ", b0 image order " +
            std::to_string(rep.b0_order);
        return rep.all_ok();
    }));
    return out;
}

inline std::vector<Report> verify_adjoint_counting(const VerifyOptions& opt) {
    std::vector<Report> out;
    out.push_back(run_claim(10, "adjoint-counting/18 instances", [&](std::string& d) {
        std::vector<std::pair<std::string, Quandle>> xs = {
            {"T2", trivial_quandle(2)}, {"R3", dihedral_quandle(3)}, {"R4", dihedral_quandle(4)}};
        std::vector<std::pair<std::string, FiniteGroup>> gs = {
            {"Z2", cyclic_group(2, opt.caps)},
            {"Z4", cyclic_group(4, opt.caps)},
            {"S3", symmetric_group(3, opt.caps)}};
        int count = 0;
        for (const auto& [xn, x] : xs)
            for (const auto& [gn, g] : gs)
                for (const auto& w : {QuandleWord::core(), QuandleWord::conj(1)}) {
                    ++count;
                    auto rep = adjointness_count_check(x, g, w, opt.caps);
                    if (!rep.all_ok()) {
                        d = xn + " " + gn + " " + w.str();
                        return false;
                    }
                }
        d = std::to_string(count) + " instances";
        return true;
    }));
    return out;
}

inline std::vector<Report> verify_bridges(const VerifyOptions& opt) {
    std::vector<Report> out;
    std::vector<std::pair<std::string, FiniteGroup>> lambda_groups = {
        {"Z2", cyclic_group(2, opt.caps)},
        {"Z4", cyclic_group(4, opt.caps)},
        {"Z2xZ2", klein_four_group(opt.caps)}};
    CoeffGroup z2({2});

    out.push_back(run_claim(11, "bridge-lambda/validates on every symmetric cocycle",
                            [&](std::string& d) {
        int count = 0;
        for (const auto& [name, g] : lambda_groups) {
            GroupH2Space h(g, z2, opt.caps);
            for (const auto& nu : h.all_cocycles()) {
                if (!h.is_symmetric(nu)) continue;
                ++count;
                auto fs = lambda_map(h, nu);
                if (!validate_factor_set(fs).ok) {
                    d = name;
                    return false;
                }
            }
        }
        d = std::to_string(count) + " cocycles";
        return true;
    }));

    out.push_back(run_claim(11, "bridge-gamma/validates on every cocycle", [&](std::string& d) {
        std::vector<std::pair<std::string, FiniteGroup>> gs = lambda_groups;
        gs.emplace_back("S3", symmetric_group(3, opt.caps));
        int count = 0;
        for (const auto& [name, g] : gs) {
            GroupH2Space h(g, z2, opt.caps);
            Quandle conj = conj_quandle(g, 1);
            CohomologySpace target(conj, z2, 2, opt.caps);
            for (const auto& nu : h.all_cocycles()) {
                ++count;
                auto br = gamma_map(h, nu);
                if (!target.is_cocycle(br)) {
                    d = name;
                    return false;
                }
            }
        }
        d = std::to_string(count) + " cocycles";
        return true;
    }));

    out.push_back(run_claim(11, "bridge/class-level additivity", [&](std::string& d) {
        for (const auto& [name, g] : lambda_groups) {
            GroupH2Space h(g, z2, opt.caps);
            auto sym = symmetric_classes(h);
            if (!sym.subgroup_verified) {
                d = name + " symmetric classes not a subgroup";
                return false;
            }
            for (const auto& n1 : sym.reps)
                for (const auto& n2 : sym.reps) {
                    auto lhs = lambda_map(h, h.add(n1, n2));
                    auto l1 = lambda_map(h, n1), l2 = lambda_map(h, n2);
                    FactorSet rhs = l1;
                    for (size_t i = 0; i < rhs.mu.size(); ++i)
                        rhs.mu[i] = z2.add(l1.mu[i], l2.mu[i]);
                    if (!cohomologous_factor_sets(lhs, rhs, opt.caps)) {
                        d = "lambda over " + name;
                        return false;
                    }
                }
        }
        // Gamma over S3.
        GroupH2Space hs3(symmetric_group(3, opt.caps), z2, opt.caps);
        Quandle conj = conj_quandle(symmetric_group(3, opt.caps), 1);
        CohomologySpace target(conj, z2, 2, opt.caps);
        for (const auto& n1 : hs3.class_reps())
            for (const auto& n2 : hs3.class_reps()) {
                auto lhs = gamma_map(hs3, hs3.add(n1, n2));
                auto rhs = target.add(gamma_map(hs3, n1), gamma_map(hs3, n2));
                if (!target.cohomologous(lhs, rhs)) {
                    d = "gamma over S3";
                    return false;
                }
            }
        return true;
    }));

    out.push_back(run_claim(11, "bridge/coboundary-twist invariance (seeded)", [&](std::string& d) {
        std::mt19937_64 rng(opt.seed);
        int twists = opt.small ? 20 : 100;
        GroupH2Space hz4(cyclic_group(4, opt.caps), z2, opt.caps);
        auto symz4 = symmetric_classes(hz4);
        GroupH2Space hs3(symmetric_group(3, opt.caps), z2, opt.caps);
        Quandle conj = conj_quandle(symmetric_group(3, opt.caps), 1);
        CohomologySpace target(conj, z2, 2, opt.caps);
        for (int t = 0; t < twists; ++t) {
            {
                const auto& nu = symz4.reps[rng() % symz4.reps.size()];
                std::vector<long long> lam(4);
                for (auto& v : lam) v = static_cast<long long>(rng() % 2);
                auto twisted = hz4.add(nu, hz4.coboundary_of(lam));
                if (!cohomologous_factor_sets(lambda_map(hz4, nu), lambda_map(hz4, twisted),
                                              opt.caps)) {
                    d = "lambda twist " + std::to_string(t);
                    return false;
                }
            }
            {
                const auto& nu = hs3.class_reps()[rng() % hs3.class_reps().size()];
                std::vector<long long> lam(6);
                for (auto& v : lam) v = static_cast<long long>(rng() % 2);
                auto twisted = hs3.add(nu, hs3.coboundary_of(lam));
                if (!target.cohomologous(gamma_map(hs3, nu), gamma_map(hs3, twisted))) {
                    d = "gamma twist " + std::to_string(t);
                    return false;
                }
            }
        }
        d = std::to_string(twists) + " twists each";
        return true;
    }));

    out.push_back(run_claim(11, "bridge-lambda/carry cocycle rebuilds R4", [&](std::string& d) {
        GroupH2Space h(cyclic_group(2, opt.caps), z2, opt.caps);
        GroupCocycle2 carry = h.zero();
        carry.nu[1 * 2 + 1] = 1;
        auto fs = lambda_map(h, carry);
        auto e = build_module_extension(fs);
        d = "module extension of T2 by Z2";
        return are_isomorphic(e, dihedral_quandle(4), opt.caps).has_value();
    }));
    return out;
}

inline std::vector<Report> verify_fibers(const VerifyOptions& opt) {
    std::vector<Report> out;
    out.push_back(run_claim(12, "fibers/pairwise isomorphic over connected bases",
                            [&](std::string& d) {
        int count = 0;
        for (const auto& [name, x] : catalog_quandles(opt.caps)) {
            if (!is_connected(x).connected) continue;
            std::vector<DynamicalCocycle> cocycles = {
                trivial_dynamical(x, 2), product_dynamical(x, trivial_quandle(2)),
                product_dynamical(x, dihedral_quandle(3))};
            for (const auto& dc : cocycles) {
                ++count;
                auto rep = fibers_isomorphic_report(dc);
                if (!rep.all_pairwise_isomorphic || rep.orbits.size() != 1) {
                    d = name;
                    return false;
                }
            }
        }
        d = std::to_string(count) + " cocycles over connected bases";
        return true;
    }));
    return out;
}

/// The full acceptance sweep. Reports come back in a fixed order regardless
/// of the thread count.
inline std::vector<Report> verify_all(const VerifyOptions& opt = {}) {
    using Item = std::function<std::vector<Report>()>;
    std::vector<Item> items = {
        [&] { return verify_axioms(opt); },
        [&] { return verify_construction_identities(opt); },
        [&] { return verify_double_path(opt); },
        [&] { return verify_anchors(opt); },
        [&] { return verify_wells_abelian_sweep(opt); },
        [&] { return verify_wells_dynamical_sweep(opt); },
        [&] { return verify_theta(opt); },
        [&] { return verify_transport(opt); },
        [&] { return verify_r4_adjoint(opt); },
        [&] { return verify_adjoint_counting(opt); },
        [&] { return verify_bridges(opt); },
        [&] { return verify_fibers(opt); },
    };

    int threads = opt.max_threads > 0 ? opt.max_threads
                                      : static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("QF_MAX_THREADS")) {
        int bound = std::atoi(env);
        if (bound >= 1) threads = std::min(threads, bound);
    }
    if (threads < 1) threads = 1;

    std::vector<std::vector<Report>> slots(items.size());
    if (threads == 1) {
        for (size_t i = 0; i < items.size(); ++i) slots[i] = items[i]();
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= items.size()) break;
                slots[i] = items[i]();
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < std::min<int>(threads, static_cast<int>(items.size())); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<Report> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

} // namespace qf
