#pragma once

#include <charconv>
#include <sstream>

#include "qf/adjoint.hpp"
#include "qf/coeff.hpp"
#include "qf/quandle.hpp"

namespace qf {

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else cur.push_back(c);
    }
    parts.push_back(cur);
    return parts;
}

inline int parse_int(const std::string& s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc() && p == s.data() + s.size(), "BadSpec",
            "expected an integer, got '" + s + "'");
    return v;
}

} // namespace detail

/// Group specs: "Z4", "S3", "D4", "Klein"/"V4", and products joined by 'x'
/// ("Z2xZ2", "Z2xZ4").
inline FiniteGroup parse_group_spec(const std::string& spec, const Caps& caps = {}) {
    auto parts = detail::split(spec, 'x');
    FiniteGroup acc;
    bool first = true;
    for (const auto& part : parts) {
        require(!part.empty(), "BadSpec", "empty group spec component in '" + spec + "'");
        FiniteGroup g;
        if (part == "Klein" || part == "V4") g = klein_four_group(caps);
        else if (part[0] == 'Z') g = cyclic_group(detail::parse_int(part.substr(1)), caps);
        else if (part[0] == 'S') g = symmetric_group(detail::parse_int(part.substr(1)), caps);
        else if (part[0] == 'D') g = dihedral_group(detail::parse_int(part.substr(1)), caps);
        else throw Error("BadSpec", "unknown group spec '" + part + "'");
        acc = first ? g : direct_product(acc, g, caps);
        first = false;
    }
    return acc;
}

/// Coefficient specs: "Z2", "Z4", "Z2xZ2", ...
inline CoeffGroup parse_coeff_spec(const std::string& spec) {
    std::vector<long long> moduli;
    for (const auto& part : detail::split(spec, 'x')) {
        require(part.size() >= 2 && part[0] == 'Z', "BadSpec",
                "coefficient spec must look like Z2 or Z2xZ4, got '" + spec + "'");
        moduli.push_back(detail::parse_int(part.substr(1)));
    }
    return CoeffGroup(moduli);
}

/// Quandle specs: "trivial:3", "dihedral:4", "conj:S3:1", "core:Z4",
/// "alex:Z5:2" (multiplier automorphism on a cyclic group), and products
/// "product/<spec>/<spec>" (slashes because specs contain colons).
inline Quandle parse_quandle_spec(const std::string& spec, const Caps& caps = {}) {
    if (spec.rfind("product/", 0) == 0) {
        auto factors = detail::split(spec.substr(8), '/');
        require(factors.size() == 2, "BadSpec", "product spec needs two factors");
        return product_quandle(parse_quandle_spec(factors[0], caps),
                               parse_quandle_spec(factors[1], caps));
    }
    auto parts = detail::split(spec, ':');
    const std::string& kind = parts[0];
    if (kind == "trivial" && parts.size() == 2)
        return trivial_quandle(detail::parse_int(parts[1]));
    if (kind == "dihedral" && parts.size() == 2)
        return dihedral_quandle(detail::parse_int(parts[1]));
    if (kind == "conj" && (parts.size() == 2 || parts.size() == 3))
        return conj_quandle(parse_group_spec(parts[1], caps),
                            parts.size() == 3 ? detail::parse_int(parts[2]) : 1);
    if (kind == "core" && parts.size() == 2)
        return core_quandle(parse_group_spec(parts[1], caps));
    if (kind == "alex" && parts.size() == 3) {
        FiniteGroup g = parse_group_spec(parts[1], caps);
        int k = detail::parse_int(parts[2]);
        std::vector<int> f(g.n);
        for (int i = 0; i < g.n; ++i) f[i] = g.pow(i, k);
        require(is_permutation(f), "FNotAutomorphism",
                "multiplier " + parts[2] + " is not invertible on " + parts[1]);
        return alexander_quandle(g, Perm(f));
    }
    throw Error("BadSpec", "unknown quandle spec '" + spec + "'");
}

/// Word specs: "core" or "conj:n".
inline QuandleWord parse_word_spec(const std::string& spec) {
    if (spec == "core") return QuandleWord::core();
    auto parts = detail::split(spec, ':');
    if (parts[0] == "conj" && parts.size() == 2)
        return QuandleWord::conj(detail::parse_int(parts[1]));
    if (parts[0] == "conj" && parts.size() == 1) return QuandleWord::conj(1);
    throw Error("BadSpec", "unknown word spec '" + spec + "' (use core or conj:n)");
}

/// The fixed object corpus driven by verify-all; construction is
/// deterministic, names are unique.
inline std::vector<std::pair<std::string, FiniteGroup>> catalog_groups(const Caps& caps = {}) {
    std::vector<std::pair<std::string, FiniteGroup>> out;
    for (int m = 2; m <= 8; ++m) out.emplace_back("Z" + std::to_string(m), cyclic_group(m, caps));
    out.emplace_back("S3", symmetric_group(3, caps));
    out.emplace_back("D4", dihedral_group(4, caps));
    out.emplace_back("Klein", klein_four_group(caps));
    return out;
}

inline std::vector<std::pair<std::string, Quandle>> catalog_quandles(const Caps& caps = {}) {
    std::vector<std::pair<std::string, Quandle>> out;
    for (int n = 1; n <= 4; ++n)
        out.emplace_back("trivial:" + std::to_string(n), trivial_quandle(n));
    for (int n = 3; n <= 8; ++n)
        out.emplace_back("dihedral:" + std::to_string(n), dihedral_quandle(n));
    for (const auto& [name, g] : catalog_groups(caps)) {
        out.emplace_back("conj:" + name + ":1", conj_quandle(g, 1));
        out.emplace_back("core:" + name, core_quandle(g));
    }
    out.emplace_back("alex:Z5:2", parse_quandle_spec("alex:Z5:2", caps));
    return out;
}

} // namespace qf
