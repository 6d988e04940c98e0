#pragma once

#include <iostream>

#include <CLI11.hpp>

#include "qf/json_io.hpp"
#include "qf/verify.hpp"

namespace qf::cli {

struct Ctx {
    Caps caps;
    bool json_out = false;
    bool strict = false;
    unsigned long long seed = 1;
    bool any_fail = false;
    bool any_skip = false;

    void emit(const Report& r) {
        if (r.verdict == Report::Verdict::Fail) any_fail = true;
        if (r.verdict == Report::Verdict::Skipped) any_skip = true;
        if (json_out) std::cout << report_to_json(r).dump() << "\n";
        else std::cout << report_line(r) << "\n";
    }

    void claim(const std::string& name, const std::function<bool(std::string&)>& body) {
        emit(run_claim(0, name, body));
    }

    void print(const json& j, const std::string& plain) {
        if (json_out) std::cout << j.dump() << "\n";
        else std::cout << plain << "\n";
    }

    int exit_code() const {
        if (any_fail) return 1;
        if (any_skip && strict) return 1;
        return 0;
    }
};

inline Quandle load_quandle(const std::string& spec, const Caps& caps) {
    if (!spec.empty() && spec[0] == '@') return quandle_from_json(load_json_file(spec.substr(1)));
    return parse_quandle_spec(spec, caps);
}

inline FiniteGroup load_group(const std::string& spec, const Caps& caps) {
    if (!spec.empty() && spec[0] == '@') return group_from_json(load_json_file(spec.substr(1)));
    return parse_group_spec(spec, caps);
}

/// Cocycle specs use '/' between components because quandle specs contain ':'.
///   @file.json
///   trivial/<quandle>/<fiber size>
///   product/<base quandle>/<fiber quandle>
///   abelian/<quandle>/<coeff>/@cochain.json
///   abelian/<quandle>/<coeff>/class:<k>     (k-th stored H^2 class)
///   r4                                       (the 4-element dihedral quandle
///                                             as an extension of trivial:2)
inline DynamicalCocycle load_cocycle(const std::string& spec, const Caps& caps) {
    if (!spec.empty() && spec[0] == '@')
        return dynamical_from_json(load_json_file(spec.substr(1)));
    if (spec == "r4") {
        auto t2 = trivial_quandle(2);
        CoeffGroup z2({2});
        TupleBasis pairs = nondegenerate_tuples(t2, 2);
        Cochain c{2, std::vector<long long>(pairs.size(), 1)};
        return abelian_dynamical(t2, z2, c);
    }
    auto parts = detail::split(spec, '/');
    require(parts.size() >= 2, "BadSpec", "unknown cocycle spec '" + spec + "'");
    if (parts[0] == "trivial" && parts.size() == 3)
        return trivial_dynamical(load_quandle(parts[1], caps), detail::parse_int(parts[2]));
    if (parts[0] == "product" && parts.size() == 3)
        return product_dynamical(load_quandle(parts[1], caps), load_quandle(parts[2], caps));
    if (parts[0] == "abelian" && parts.size() == 4) {
        Quandle x = load_quandle(parts[1], caps);
        CoeffGroup a = parse_coeff_spec(parts[2]);
        if (!parts[3].empty() && parts[3][0] == '@')
            return abelian_dynamical(x, a,
                                     cochain_from_json(load_json_file(parts[3].substr(1)), x, a));
        auto sub = detail::split(parts[3], ':');
        require(sub.size() == 2 && sub[0] == "class", "BadSpec",
                "expected @file or class:<k> in '" + spec + "'");
        CohomologySpace h(x, a, 2, caps);
        size_t k = detail::parse_int(sub[1]);
        require(k < h.class_reps().size(), "BadSpec", "class index out of range");
        return abelian_dynamical(x, a, h.class_reps()[k]);
    }
    throw Error("BadSpec", "unknown cocycle spec '" + spec + "'");
}

inline std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    for (const auto& part : detail::split(s, ',')) out.push_back(detail::parse_int(part));
    return out;
}

inline Perm parse_perm(const std::string& s) {
    Perm p(parse_int_list(s));
    require(is_permutation(p.img), "BadSpec", "'" + s + "' is not a permutation image list");
    return p;
}

inline json perm_list_json(const std::vector<Perm>& ps) {
    json out = json::array();
    for (const Perm& p : ps) out.push_back(p.img);
    return out;
}

// ---- subcommand bodies -------------------------------------------------

/// Raw table load: spec/file problems throw (usage error, exit 2); an axiom
/// violation in the table itself is a claim failure (exit 1).
inline std::vector<std::vector<int>> load_raw_table(const std::string& spec, const Caps& caps) {
    if (!spec.empty() && spec[0] == '@') return table_from_json(load_json_file(spec.substr(1)));
    return parse_quandle_spec(spec, caps).table;
}

inline void cmd_quandle_check(Ctx& c, const std::string& spec, bool print_table) {
    auto table = load_raw_table(spec, c.caps);
    c.claim("quandle-axioms/" + spec, [&](std::string& d) {
        auto chk = check_quandle_table(table);
        d = chk.ok ? "size " + std::to_string(table.size()) : chk.code + ": " + chk.message;
        return chk.ok;
    });
    if (print_table && !c.any_fail) {
        std::ostringstream os;
        for (const auto& row : table) {
            for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
            os << "\n";
        }
        c.print(table_to_json(static_cast<int>(table.size()), table), os.str());
    }
}

inline void cmd_quandle_aut(Ctx& c, const std::string& spec, bool inner) {
    Quandle x = load_quandle(spec, c.caps);
    auto group = inner ? inner_group(x, c.caps) : automorphism_group(x, c.caps);
    c.print(json{{"order", group.size()}, {"elements", perm_list_json(group)}},
            (inner ? "Inn order " : "Aut order ") + std::to_string(group.size()));
}

inline void cmd_quandle_orbits(Ctx& c, const std::string& spec) {
    Quandle x = load_quandle(spec, c.caps);
    auto conn = is_connected(x);
    std::ostringstream os;
    os << (conn.connected ? "connected" : "not connected") << ", orbits:";
    for (const auto& orb : conn.orbits) {
        os << " {";
        for (size_t i = 0; i < orb.size(); ++i) os << (i ? "," : "") << orb[i];
        os << "}";
    }
    c.print(json{{"connected", conn.connected}, {"orbits", conn.orbits}}, os.str());
}

inline void cmd_quandle_homs(Ctx& c, const std::string& from, const std::string& to) {
    Quandle x = load_quandle(from, c.caps), y = load_quandle(to, c.caps);
    auto homs = quandle_homs(x, y, c.caps);
    json imgs = json::array();
    for (const auto& h : homs) imgs.push_back(h.images);
    c.print(json{{"count", homs.size()}, {"maps", imgs}},
            std::to_string(homs.size()) + " homomorphisms");
}

inline void cmd_quandle_iso(Ctx& c, const std::string& a, const std::string& b) {
    Quandle x = load_quandle(a, c.caps), y = load_quandle(b, c.caps);
    auto iso = are_isomorphic(x, y, c.caps);
    if (iso)
        c.print(json{{"isomorphic", true}, {"witness", iso->img}}, "isomorphic");
    else
        c.print(json{{"isomorphic", false}}, "not isomorphic");
}

inline void cmd_cohomology(Ctx& c, const std::string& spec, int degree,
                           const std::string& coeffs, bool reps) {
    Quandle x = load_quandle(spec, c.caps);
    for (const auto& coeff : detail::split(coeffs, ',')) {
        CoeffGroup a = parse_coeff_spec(coeff);
        CohomologySpace h(x, a, degree, c.caps);
        json out{{"quandle", spec},
                 {"degree", degree},
                 {"coeff", coeff},
                 {"structure", h.structure().str()},
                 {"order", h.structure().order().str()}};
        if (reps && h.reps_complete()) {
            json rj = json::array();
            for (const auto& r : h.class_reps()) rj.push_back(cochain_to_json(x, a, r));
            out["representatives"] = std::move(rj);
        }
        c.print(out, "H^" + std::to_string(degree) + "(" + spec + "; " + coeff + ") = " +
                         h.structure().str() + " (order " + h.structure().order().str() + ")");
    }
}

inline void cmd_extension_build(Ctx& c, const std::string& cocycle) {
    auto dc = load_cocycle(cocycle, c.caps);
    Quandle e = build_extension(dc);
    c.print(to_json(e), "extension of size " + std::to_string(e.n) + " (axioms verified)");
}

inline void cmd_extension_fibers(Ctx& c, const std::string& cocycle) {
    auto dc = load_cocycle(cocycle, c.caps);
    auto rep = fibers_isomorphic_report(dc);
    c.claim("fibers-isomorphic", [&](std::string& d) {
        d = std::to_string(rep.orbits.size()) + " orbits";
        return rep.all_pairwise_isomorphic;
    });
}

inline void cmd_extension_act(Ctx& c, const std::string& cocycle, const std::string& phi,
                              const std::string& theta) {
    auto dc = load_cocycle(cocycle, c.caps);
    auto acted = act_on_dynamical(parse_perm(phi), parse_perm(theta), dc);
    c.print(to_json(acted), "acted cocycle (re-validated)");
}

inline void cmd_extension_cohomologous(Ctx& c, const std::string& a, const std::string& b) {
    auto da = load_cocycle(a, c.caps), db = load_cocycle(b, c.caps);
    auto wit = cohomologous_dynamical(da, db, c.caps);
    if (wit) c.print(json{{"cohomologous", true}, {"lambda", perm_list_json(*wit)}},
                     "cohomologous (witness found)");
    else c.print(json{{"cohomologous", false}}, "not cohomologous (search exhausted)");
}

inline void cmd_wells_dynamical(Ctx& c, const std::string& cocycle, int x0) {
    auto dc = load_cocycle(cocycle, c.caps);
    auto rep = verify_wells_dynamical(dc, x0, c.caps);
    c.claim("exactness-dynamical/" + cocycle, [&](std::string& d) {
        d = "|Aut| = " + std::to_string(rep.aut_count) +
            ", |Ker| = " + std::to_string(rep.kernel_count) +
            ", |stab| = " + std::to_string(rep.stab_count);
        if (rep.kernel_skipped || rep.image_skipped) throw CapExceeded("partial report: " + d);
        return rep.all_ok();
    });
}

inline void cmd_wells_abelian(Ctx& c, const std::string& spec, const std::string& coeff,
                              const std::string& cocycle_file, bool all_cocycles) {
    Quandle x = load_quandle(spec, c.caps);
    CoeffGroup a = parse_coeff_spec(coeff);
    CohomologySpace h(x, a, 2, c.caps);
    std::vector<std::pair<std::string, Cochain>> inputs;
    if (!cocycle_file.empty()) {
        inputs.emplace_back(cocycle_file,
                            cochain_from_json(load_json_file(cocycle_file), x, a));
    } else if (all_cocycles) {
        for (size_t i = 0; i < h.class_reps().size(); ++i)
            inputs.emplace_back("class " + std::to_string(i), h.class_reps()[i]);
    } else {
        inputs.emplace_back("class 0 (zero)", h.zero());
    }
    for (const auto& [name, alpha] : inputs) {
        c.claim("exactness-abelian/" + spec + "," + coeff + "/" + name, [&](std::string& d) {
            auto rep = verify_wells_abelian(x, a, alpha, c.caps);
            d = "|Aut_A| = " + std::to_string(rep.aut_count) +
                ", |Z1| = " + std::to_string(rep.z1_count) +
                ", |stab| = " + std::to_string(rep.stab_count);
            return rep.all_ok();
        });
    }
}

inline void cmd_theta_map(Ctx& c, const std::string& spec, const std::string& coeff,
                          const std::string& cocycle_file, const std::string& phi,
                          const std::string& theta) {
    Quandle x = load_quandle(spec, c.caps);
    CoeffGroup a = parse_coeff_spec(coeff);
    CohomologySpace h(x, a, 2, c.caps);
    Cochain alpha = cocycle_file.empty()
                        ? h.zero()
                        : cochain_from_json(load_json_file(cocycle_file), x, a);
    Perm th = theta.empty() ? Perm::identity(static_cast<int>(a.size())) : parse_perm(theta);
    Cochain result = h.theta_map(alpha, parse_perm(phi), th);
    bool zero_class = h.is_coboundary(result);
    json out = cochain_to_json(x, a, result);
    out["zero_class"] = zero_class;
    c.print(out, std::string("theta representative computed; ") +
                     (zero_class ? "zero class (pair stabilizes)" : "nonzero class"));
}

inline void cmd_theta_derivation(Ctx& c, const std::string& spec, const std::string& coeff,
                                 const std::string& cocycle_file) {
    Quandle x = load_quandle(spec, c.caps);
    CoeffGroup a = parse_coeff_spec(coeff);
    CohomologySpace h(x, a, 2, c.caps);
    Cochain alpha = cocycle_file.empty()
                        ? h.zero()
                        : cochain_from_json(load_json_file(cocycle_file), x, a);
    c.claim("theta-derivation/" + spec + "," + coeff, [&](std::string& d) {
        auto rep = check_theta_derivation(x, a, alpha, c.caps);
        d = std::to_string(rep.pair_count) + " pairs, " + std::to_string(rep.class_count) +
            " classes";
        return rep.all_ok();
    });
}

inline void cmd_bridge_lambda(Ctx& c, const std::string& group, const std::string& coeff) {
    FiniteGroup g = load_group(group, c.caps);
    CoeffGroup a = parse_coeff_spec(coeff);
    GroupH2Space h(g, a, c.caps);
    auto sym = symmetric_classes(h);
    c.claim("bridge-lambda/" + group + "," + coeff, [&](std::string& d) {
        size_t valid = 0;
        for (const auto& nu : sym.reps) {
            auto fs = lambda_map(h, nu);
            if (!validate_factor_set(fs).ok) return false;
            ++valid;
        }
        d = std::to_string(valid) + " symmetric classes of " + h.structure().str() +
            ", all images validate";
        return sym.subgroup_verified;
    });
    if (c.json_out)
        for (const auto& nu : sym.reps)
            std::cout << factor_set_to_json(lambda_map(h, nu)).dump() << "\n";
}

inline void cmd_bridge_gamma(Ctx& c, const std::string& group, const std::string& coeff) {
    FiniteGroup g = load_group(group, c.caps);
    CoeffGroup a = parse_coeff_spec(coeff);
    GroupH2Space h(g, a, c.caps);
    Quandle conj = conj_quandle(g, 1);
    CohomologySpace target(conj, a, 2, c.caps);
    c.claim("bridge-gamma/" + group + "," + coeff, [&](std::string& d) {
        for (const auto& nu : h.class_reps())
            if (!target.is_cocycle(gamma_map(h, nu))) return false;
        d = std::to_string(h.class_reps().size()) + " classes of " + h.structure().str() +
            ", all images are quandle cocycles";
        return true;
    });
    if (c.json_out)
        for (const auto& nu : h.class_reps())
            std::cout << cochain_to_json(conj, a, gamma_map(h, nu)).dump() << "\n";
}

inline void cmd_bridge_h2group(Ctx& c, const std::string& group, const std::string& coeff) {
    FiniteGroup g = load_group(group, c.caps);
    CoeffGroup a = parse_coeff_spec(coeff);
    GroupH2Space h(g, a, c.caps);
    json out{{"group", group}, {"coeff", coeff}, {"structure", h.structure().str()},
             {"order", h.structure().order().str()}};
    std::string plain = "H^2(" + group + "; " + coeff + ") = " + h.structure().str();
    try {
        auto all = h.all_cocycles();
        size_t b2 = 0;
        for (const auto& nu : all)
            if (h.is_coboundary(nu)) ++b2;
        out["z2_size"] = all.size();
        out["b2_size"] = b2;
        plain += " (|Z2| = " + std::to_string(all.size()) + ", |B2| = " + std::to_string(b2) + ")";
    } catch (const CapExceeded&) {
        out["z2_size"] = nullptr;
    }
    if (g.is_abelian()) {
        auto sym = symmetric_classes(h);
        out["symmetric_classes"] = sym.reps.size();
        plain += ", symmetric subgroup order " + std::to_string(sym.reps.size());
    }
    c.print(out, plain);
}

inline void cmd_bridge_naturality(Ctx& c, const std::string& variant, const std::string& g1spec,
                                  const std::string& g2spec, const std::string& coeff,
                                  const std::string& fmap, const std::string& hmap) {
    FiniteGroup g1 = load_group(g1spec, c.caps), g2 = load_group(g2spec, c.caps);
    CoeffGroup a = parse_coeff_spec(coeff);
    GroupH2Space h1(g1, a, c.caps), h2(g2, a, c.caps);
    std::vector<int> f = parse_int_list(fmap);
    std::vector<long long> hm;
    if (hmap.empty())
        for (long long i = 0; i < a.size(); ++i) hm.push_back(i);
    else
        for (int v : parse_int_list(hmap)) hm.push_back(v);
    c.claim("bridge-naturality/" + variant, [&](std::string& d) {
        NaturalityReport rep = variant == "lambda"
                                   ? lambda_naturality(h1, h2, f, hm, c.caps)
                                   : gamma_naturality(h1, h2, f, hm, c.caps);
        d = std::to_string(rep.classes) + " classes";
        return rep.commutes;
    });
}

inline void cmd_adjoint_present(Ctx& c, const std::string& spec, const std::string& word,
                                const std::string& phi) {
    Quandle x = load_quandle(spec, c.caps);
    GroupPresentation p = phi.empty() ? adj_w_presentation(x, parse_word_spec(word))
                                      : adj_phi_presentation(x, parse_perm(phi));
    c.print(to_json(p), std::to_string(p.generators) + " generators, " +
                            std::to_string(p.relators.size()) + " relators");
}

inline void cmd_adjoint_abelianize(Ctx& c, const std::string& spec, const std::string& word,
                                   const std::string& phi) {
    Quandle x = load_quandle(spec, c.caps);
    GroupPresentation p = phi.empty() ? adj_w_presentation(x, parse_word_spec(word))
                                      : adj_phi_presentation(x, parse_perm(phi));
    auto ab = abelianization(p);
    c.print(json{{"structure", ab.str()}, {"free_rank", ab.free_rank()}},
            "abelianization " + ab.str());
}

inline void cmd_adjoint_count(Ctx& c, const std::string& spec, const std::string& group,
                              const std::string& word) {
    Quandle x = load_quandle(spec, c.caps);
    FiniteGroup g = load_group(group, c.caps);
    c.claim("adjoint-counting/" + spec + "," + group + "," + word, [&](std::string& d) {
        auto rep = adjointness_count_check(x, g, parse_word_spec(word), c.caps);
        d = std::to_string(rep.quandle_homs) + " quandle homs vs " +
            std::to_string(rep.group_homs) + " relator-satisfying assignments";
        return rep.all_ok();
    });
}

inline void cmd_adjoint_transport(Ctx& c, const std::string& group, const std::string& kernel,
                                  const std::string& word, const std::string& alex,
                                  const std::string& kappa) {
    FiniteGroup e = load_group(group, c.caps);
    std::optional<std::vector<int>> kap;
    if (!kappa.empty()) kap = parse_int_list(kappa);
    auto data = make_extension_data(e, parse_int_list(kernel), kap);
    TransportResult t = alex.empty()
                            ? extension_transport_qw(data, parse_word_spec(word))
                            : extension_transport_alex(data, parse_perm(alex));
    c.claim("transport/" + group + " by {" + kernel + "}", [&](std::string& d) {
        d = "base size " + std::to_string(t.cocycle.base.n) + ", fiber " +
            std::to_string(t.cocycle.fiber);
        return t.witness_is_iso && t.identity_fiber_matches;
    });
    if (c.json_out) std::cout << to_json(t.cocycle).dump() << "\n";
}

inline void cmd_adjoint_r4(Ctx& c) {
    c.claim("r4-adjoint", [&](std::string& d) {
        auto rep = r4_adjoint_report();
        d = "abelianization " + rep.abelianized.str() + ", b0 -> element of order " +
            std::to_string(rep.b0_order);
        return rep.all_ok();
    });
}

inline void cmd_catalog(Ctx& c) {
    json out = json::array();
    for (const auto& [name, x] : catalog_quandles(c.caps)) {
        out.push_back(json{{"name", name}, {"size", x.n}});
        if (!c.json_out)
            std::cout << name << "  (size " << x.n << ")\n";
    }
    if (c.json_out) std::cout << out.dump() << "\n";
}

inline void cmd_verify_all(Ctx& c, const std::string& scale) {
    VerifyOptions opt;
    opt.small = scale == "small";
    opt.seed = c.seed;
    opt.caps = c.caps;
    for (const Report& r : verify_all(opt)) c.emit(r);
}

// ---- entry point ---------------------------------------------------------

inline int run(std::vector<std::string> args) {
    CLI::App app{"qf — finite quandles: cohomology, extensions, automorphisms"};
    app.require_subcommand(1);

    Ctx ctx;
    app.add_flag("--json", ctx.json_out, "emit machine-readable JSON lines");
    app.add_flag("--strict", ctx.strict, "treat skipped (capped) checks as failures");
    app.add_option("--seed", ctx.seed, "seed for sampled sweeps");
    app.add_option("--max-quandle", ctx.caps.max_quandle_size,
                   "size cap for automorphism/isomorphism searches");
    app.add_option("--max-search", ctx.caps.search_budget, "node budget for searches");
    app.add_option("--max-enum", ctx.caps.max_enumeration, "cap for brute-force sweeps");

    std::string spec, target, coeff = "Z2", cocycle, word = "conj:1", phi, theta, group, kernel,
                kappa, scale = "default", variant = "lambda", g2, fmap, hmap, alex;
    int degree = 2, x0 = 0;
    bool all_cocycles = false, reps = false;

    auto* quandle = app.add_subcommand("quandle", "construct and inspect quandles");
    quandle->require_subcommand(1);
    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec, "constructor spec or @file.json")->required();
    };
    add_spec(quandle->add_subcommand("make", "validate and emit a quandle table"));
    add_spec(quandle->add_subcommand("check", "validate the axioms with witnesses"));
    add_spec(quandle->add_subcommand("aut", "full automorphism group"));
    add_spec(quandle->add_subcommand("inn", "inner automorphism group (closure)"));
    add_spec(quandle->add_subcommand("orbits", "inner orbits / connectivity"));
    auto* homs = quandle->add_subcommand("homs", "all homomorphisms to a target");
    add_spec(homs);
    homs->add_option("--target", target, "target quandle spec")->required();
    auto* iso = quandle->add_subcommand("iso", "isomorphism witness search");
    add_spec(iso);
    iso->add_option("--target", target, "target quandle spec")->required();

    auto* coh = app.add_subcommand("cohomology", "quandle cohomology via Smith reduction");
    coh->add_option("--quandle", spec)->required();
    coh->add_option("--degree", degree, "1, 2 or 3");
    coh->add_option("--coeff", coeff, "comma list: Z2,Z3,Z2xZ2,...");
    coh->add_flag("--reps", reps, "emit class representatives");

    auto* ext = app.add_subcommand("extension", "dynamical cocycles and their extensions");
    ext->require_subcommand(1);
    auto add_cocycle = [&](CLI::App* cmd) {
        cmd->add_option("--cocycle", cocycle,
                        "cocycle spec: @file | r4 | trivial/<q>/<m> | product/<q>/<s> | "
                        "abelian/<q>/<A>/(class:<k>|@file)")
            ->required();
    };
    add_cocycle(ext->add_subcommand("build", "build the extension quandle"));
    add_cocycle(ext->add_subcommand("fibers", "fiber quandles and isomorphism witnesses"));
    auto* act = ext->add_subcommand("act", "act by (phi, theta)");
    add_cocycle(act);
    act->add_option("--phi", phi, "base automorphism images, comma list")->required();
    act->add_option("--theta", theta, "fiber permutation images, comma list")->required();
    auto* cohm = ext->add_subcommand("cohomologous", "search for a twisting lambda");
    add_cocycle(cohm);
    cohm->add_option("--other", target, "second cocycle spec")->required();

    auto* wd = app.add_subcommand("wells-dynamical", "exact-sequence report on an extension");
    add_cocycle(wd);
    wd->add_option("--x0", x0, "base point (default 0)");

    auto* wa = app.add_subcommand("wells-abelian", "exact-sequence report, abelian case");
    wa->add_option("--quandle", spec)->required();
    wa->add_option("--coeff", coeff);
    wa->add_option("--cocycle", cocycle, "cochain JSON file");
    wa->add_flag("--all-cocycles", all_cocycles, "sweep every H^2 class representative");

    auto* theta_cmd = app.add_subcommand("theta", "the obstruction map");
    theta_cmd->require_subcommand(1);
    auto* tmap = theta_cmd->add_subcommand("map", "evaluate theta at (phi, theta)");
    tmap->add_option("--quandle", spec)->required();
    tmap->add_option("--coeff", coeff);
    tmap->add_option("--cocycle", cocycle, "cochain JSON file (default: zero class)");
    tmap->add_option("--phi", phi)->required();
    tmap->add_option("--theta-aut", theta, "coefficient automorphism images");
    auto* tder = theta_cmd->add_subcommand("derivation", "derivation and inner-difference check");
    tder->add_option("--quandle", spec)->required();
    tder->add_option("--coeff", coeff);
    tder->add_option("--cocycle", cocycle);

    auto* bridge = app.add_subcommand("bridge", "group cohomology to quandle cohomology");
    bridge->require_subcommand(1);
    auto* bl = bridge->add_subcommand("lambda", "symmetric classes to Core(G) factor sets");
    bl->add_option("--group", group)->required();
    bl->add_option("--coeff", coeff);
    auto* bg = bridge->add_subcommand("gamma", "classes to Conj(G) quandle cocycles");
    bg->add_option("--group", group)->required();
    bg->add_option("--coeff", coeff);
    auto* bh = bridge->add_subcommand("h2group", "group H^2 structure and cocycle counts");
    bh->add_option("--group", group)->required();
    bh->add_option("--coeff", coeff);
    auto* bn = bridge->add_subcommand("naturality", "commuting-square check");
    bn->add_option("--variant", variant, "lambda or gamma");
    bn->add_option("--g1", group, "source group of the classes")->required();
    bn->add_option("--g2", g2, "group mapped into g1")->required();
    bn->add_option("--coeff", coeff);
    bn->add_option("--fmap", fmap, "group hom g2 -> g1 as image list")->required();
    bn->add_option("--hmap", hmap, "coefficient hom as image list (default identity)");

    auto* adj = app.add_subcommand("adjoint", "adjoint groups and extension transport");
    adj->require_subcommand(1);
    auto* ap = adj->add_subcommand("present", "presentation of the adjoint group");
    ap->add_option("--quandle", spec)->required();
    ap->add_option("--word", word, "core or conj:n");
    ap->add_option("--phi", phi, "use the twisted presentation for this automorphism");
    auto* ab = adj->add_subcommand("abelianize", "invariant factors of the abelianization");
    ab->add_option("--quandle", spec)->required();
    ab->add_option("--word", word);
    ab->add_option("--phi", phi);
    auto* ac = adj->add_subcommand("count", "instance-level adjointness counting");
    ac->add_option("--quandle", spec)->required();
    ac->add_option("--group", group)->required();
    ac->add_option("--word", word);
    auto* at = adj->add_subcommand("transport", "transport a group extension");
    at->add_option("--group", group, "the extension group E")->required();
    at->add_option("--kernel", kernel, "normal subgroup elements, comma list")->required();
    at->add_option("--word", word);
    at->add_option("--alex", alex, "use the Alexander functor for this automorphism of E");
    at->add_option("--kappa", kappa, "custom transversal, one E-element per coset");
    adj->add_subcommand("r4-report", "the 4-element dihedral quandle worked example");

    auto* cat = app.add_subcommand("catalog", "built-in object corpus");
    cat->require_subcommand(1);
    cat->add_subcommand("list", "list catalog quandles");

    auto* va = app.add_subcommand("verify-all", "run the full claim sweep");
    va->add_option("--scale", scale, "small or default");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (quandle->parsed()) {
            if (quandle->get_subcommand("make")->parsed()) cmd_quandle_check(ctx, spec, true);
            if (quandle->get_subcommand("check")->parsed()) cmd_quandle_check(ctx, spec, false);
            if (quandle->get_subcommand("aut")->parsed()) cmd_quandle_aut(ctx, spec, false);
            if (quandle->get_subcommand("inn")->parsed()) cmd_quandle_aut(ctx, spec, true);
            if (quandle->get_subcommand("orbits")->parsed()) cmd_quandle_orbits(ctx, spec);
            if (homs->parsed()) cmd_quandle_homs(ctx, spec, target);
            if (iso->parsed()) cmd_quandle_iso(ctx, spec, target);
        }
        if (coh->parsed()) cmd_cohomology(ctx, spec, degree, coeff, reps);
        if (ext->parsed()) {
            if (ext->get_subcommand("build")->parsed()) cmd_extension_build(ctx, cocycle);
            if (ext->get_subcommand("fibers")->parsed()) cmd_extension_fibers(ctx, cocycle);
            if (act->parsed()) cmd_extension_act(ctx, cocycle, phi, theta);
            if (cohm->parsed()) cmd_extension_cohomologous(ctx, cocycle, target);
        }
        if (wd->parsed()) cmd_wells_dynamical(ctx, cocycle, x0);
        if (wa->parsed()) cmd_wells_abelian(ctx, spec, coeff, cocycle, all_cocycles);
        if (theta_cmd->parsed()) {
            if (tmap->parsed()) cmd_theta_map(ctx, spec, coeff, cocycle, phi, theta);
            if (tder->parsed()) cmd_theta_derivation(ctx, spec, coeff, cocycle);
        }
        if (bridge->parsed()) {
            if (bl->parsed()) cmd_bridge_lambda(ctx, group, coeff);
            if (bg->parsed()) cmd_bridge_gamma(ctx, group, coeff);
            if (bh->parsed()) cmd_bridge_h2group(ctx, group, coeff);
            if (bn->parsed()) cmd_bridge_naturality(ctx, variant, group, g2, coeff, fmap, hmap);
        }
        if (adj->parsed()) {
            if (ap->parsed()) cmd_adjoint_present(ctx, spec, word, phi);
            if (ab->parsed()) cmd_adjoint_abelianize(ctx, spec, word, phi);
            if (ac->parsed()) cmd_adjoint_count(ctx, spec, group, word);
            if (at->parsed()) cmd_adjoint_transport(ctx, group, kernel, word, alex, kappa);
            if (adj->get_subcommand("r4-report")->parsed()) cmd_adjoint_r4(ctx);
        }
        if (cat->parsed()) cmd_catalog(ctx);
        if (va->parsed()) cmd_verify_all(ctx, scale);
    } catch (const CapExceeded& e) {
        ctx.emit(Report{0, "run", Report::Verdict::Skipped, e.what(), 0});
        return ctx.exit_code();
    } catch (const Error& e) {
        std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return ctx.exit_code();
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(std::move(args));
}

} // namespace qf::cli
