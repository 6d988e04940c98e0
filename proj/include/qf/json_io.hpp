#pragma once

#include <fstream>

#include <json.hpp>

#include "qf/adjoint.hpp"
#include "qf/bridge.hpp"
#include "qf/dynamical.hpp"
#include "qf/report.hpp"

namespace qf {

using nlohmann::json;

// Schemas:
//   group / quandle   {"size": n, "table": [[...]]}, table[a][b] = a*b
//   dynamical cocycle {"base": <quandle>, "fiber_size": m, "alpha": [x][y][s][t]}
//   generalized pair  adds "beta": [s][t][x][y]
//   cochain           {"degree": n, "moduli": [m_1,...], "entries": [[x_1..x_n, [tuple]], ...]}
//   presentation      {"generators": k, "relators": [[+i, -j, ...], ...]},
//                     literals are +-(generator index + 1)
//   factor set        {"base": <quandle>, "moduli": [...], "a_maps": [x][y][s],
//                      "b_maps": [first][second][s], "mu": [[x, y, [tuple]], ...]}

inline json table_to_json(int n, const std::vector<std::vector<int>>& table) {
    return json{{"size", n}, {"table", table}};
}

inline std::vector<std::vector<int>> table_from_json(const json& j) {
    require(j.contains("size") && j.contains("table"), "BadJson",
            "expected an object with size and table");
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    require(static_cast<size_t>(j.at("size").get<int>()) == table.size(), "BadJson",
            "size does not match the table");
    return table;
}

inline json to_json(const Quandle& x) { return table_to_json(x.n, x.table); }
inline json to_json(const FiniteGroup& g) { return table_to_json(g.n, g.table); }

inline Quandle quandle_from_json(const json& j) { return make_quandle(table_from_json(j)); }
inline FiniteGroup group_from_json(const json& j) { return make_group(table_from_json(j)); }

inline json to_json(const DynamicalCocycle& dc) {
    const int n = dc.base.n, m = dc.fiber;
    json alpha = json::array();
    for (int x = 0; x < n; ++x) {
        json ax = json::array();
        for (int y = 0; y < n; ++y) {
            json ay = json::array();
            for (int s = 0; s < m; ++s) {
                json as = json::array();
                for (int t = 0; t < m; ++t) as.push_back(dc.a(x, y, s, t));
                ay.push_back(std::move(as));
            }
            ax.push_back(std::move(ay));
        }
        alpha.push_back(std::move(ax));
    }
    return json{{"base", to_json(dc.base)}, {"fiber_size", m}, {"alpha", std::move(alpha)}};
}

inline DynamicalCocycle dynamical_from_json(const json& j) {
    require(j.contains("base") && j.contains("fiber_size") && j.contains("alpha"), "BadJson",
            "expected base, fiber_size and alpha");
    Quandle base = quandle_from_json(j.at("base"));
    int m = j.at("fiber_size").get<int>();
    auto nested = j.at("alpha").get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
    DynamicalCocycle dc{base, m, std::vector<int>(static_cast<size_t>(base.n) * base.n * m * m)};
    require(static_cast<int>(nested.size()) == base.n, "BadJson", "alpha has wrong shape");
    for (int x = 0; x < base.n; ++x)
        for (int y = 0; y < base.n; ++y)
            for (int s = 0; s < m; ++s)
                for (int t = 0; t < m; ++t) dc.a(x, y, s, t) = nested[x][y][s][t];
    DynCheck c = validate_dynamical(dc);
    if (!c.ok) throw Error(c.code, c.message);
    return dc;
}

inline json to_json(const GeneralizedPair& p) {
    json alpha = json::array(), beta = json::array();
    for (int x = 0; x < p.x_size; ++x) {
        json ax = json::array();
        for (int y = 0; y < p.x_size; ++y) {
            json ay = json::array();
            for (int s = 0; s < p.s_size; ++s) {
                json as = json::array();
                for (int t = 0; t < p.s_size; ++t) as.push_back(p.a(x, y, s, t));
                ay.push_back(std::move(as));
            }
            ax.push_back(std::move(ay));
        }
        alpha.push_back(std::move(ax));
    }
    for (int s = 0; s < p.s_size; ++s) {
        json bs = json::array();
        for (int t = 0; t < p.s_size; ++t) {
            json bt = json::array();
            for (int x = 0; x < p.x_size; ++x) {
                json bx = json::array();
                for (int y = 0; y < p.x_size; ++y) bx.push_back(p.b(s, t, x, y));
                bt.push_back(std::move(bx));
            }
            bs.push_back(std::move(bt));
        }
        beta.push_back(std::move(bs));
    }
    return json{{"x_size", p.x_size}, {"s_size", p.s_size},
                {"alpha", std::move(alpha)}, {"beta", std::move(beta)}};
}

inline GeneralizedPair generalized_from_json(const json& j) {
    GeneralizedPair p;
    p.x_size = j.at("x_size").get<int>();
    p.s_size = j.at("s_size").get<int>();
    auto alpha = j.at("alpha").get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
    auto beta = j.at("beta").get<std::vector<std::vector<std::vector<std::vector<int>>>>>();
    p.alpha.assign(static_cast<size_t>(p.x_size) * p.x_size * p.s_size * p.s_size, 0);
    p.beta.assign(static_cast<size_t>(p.s_size) * p.s_size * p.x_size * p.x_size, 0);
    for (int x = 0; x < p.x_size; ++x)
        for (int y = 0; y < p.x_size; ++y)
            for (int s = 0; s < p.s_size; ++s)
                for (int t = 0; t < p.s_size; ++t)
                    p.alpha[((static_cast<size_t>(x) * p.x_size + y) * p.s_size + s) * p.s_size + t] =
                        alpha.at(x).at(y).at(s).at(t);
    for (int s = 0; s < p.s_size; ++s)
        for (int t = 0; t < p.s_size; ++t)
            for (int x = 0; x < p.x_size; ++x)
                for (int y = 0; y < p.x_size; ++y)
                    p.beta[((static_cast<size_t>(s) * p.s_size + t) * p.x_size + x) * p.x_size + y] =
                        beta.at(s).at(t).at(x).at(y);
    return p;
}

inline json cochain_to_json(const Quandle& x, const CoeffGroup& a, const Cochain& c) {
    TupleBasis basis = nondegenerate_tuples(x, c.degree);
    json entries = json::array();
    for (int i = 0; i < basis.size(); ++i) {
        if (c.vals[i] == 0) continue;
        json row = json::array();
        for (int v : basis.tuples[i]) row.push_back(v);
        row.push_back(a.tuple_of(c.vals[i]));
        entries.push_back(std::move(row));
    }
    return json{{"degree", c.degree}, {"moduli", a.moduli}, {"entries", std::move(entries)}};
}

inline Cochain cochain_from_json(const json& j, const Quandle& x, const CoeffGroup& a) {
    int degree = j.at("degree").get<int>();
    if (j.contains("moduli"))
        require(j.at("moduli").get<std::vector<long long>>() == a.moduli, "BadJson",
                "cochain moduli do not match the requested coefficients");
    TupleBasis basis = nondegenerate_tuples(x, degree);
    Cochain c{degree, std::vector<long long>(basis.size(), 0)};
    for (const auto& row : j.at("entries")) {
        require(row.is_array() && static_cast<int>(row.size()) == degree + 1, "BadJson",
                "entry must be [x_1..x_n, [tuple]]");
        std::vector<int> tuple(degree);
        for (int i = 0; i < degree; ++i) tuple[i] = row.at(i).get<int>();
        int idx = basis.find(tuple);
        require(idx >= 0, "BadJson", "entry indexes a degenerate tuple");
        c.vals[idx] = a.index_of(row.at(degree).get<std::vector<long long>>());
    }
    return c;
}

inline json to_json(const GroupPresentation& p) {
    return json{{"generators", p.generators}, {"relators", p.relators}};
}

inline GroupPresentation presentation_from_json(const json& j) {
    GroupPresentation p;
    p.generators = j.at("generators").get<int>();
    p.relators = j.at("relators").get<std::vector<std::vector<int>>>();
    for (const auto& rel : p.relators)
        for (int lit : rel)
            require(lit != 0 && std::abs(lit) <= p.generators, "BadJson",
                    "relator literal out of range");
    return p;
}

inline json factor_set_to_json(const FactorSet& fs) {
    const QuandleModule& m = fs.module;
    json amaps = json::array(), bmaps = json::array();
    for (int x = 0; x < m.base.n; ++x) {
        json ax = json::array(), bx = json::array();
        for (int y = 0; y < m.base.n; ++y) {
            ax.push_back(m.amap(x, y));
            bx.push_back(m.bmap(x, y));
        }
        amaps.push_back(std::move(ax));
        bmaps.push_back(std::move(bx));
    }
    json mu = json::array();
    for (int x = 0; x < m.base.n; ++x)
        for (int y = 0; y < m.base.n; ++y) {
            if (fs.at(x, y) == 0) continue;
            mu.push_back(json::array({x, y, m.coeff.tuple_of(fs.at(x, y))}));
        }
    return json{{"base", to_json(m.base)},
                {"moduli", m.coeff.moduli},
                {"a_maps", std::move(amaps)},
                {"b_maps", std::move(bmaps)},
                {"mu", std::move(mu)}};
}

inline FactorSet factor_set_from_json(const json& j) {
    QuandleModule m{quandle_from_json(j.at("base")),
                    CoeffGroup(j.at("moduli").get<std::vector<long long>>()),
                    {},
                    {}};
    auto amaps = j.at("a_maps").get<std::vector<std::vector<std::vector<long long>>>>();
    auto bmaps = j.at("b_maps").get<std::vector<std::vector<std::vector<long long>>>>();
    for (int x = 0; x < m.base.n; ++x)
        for (int y = 0; y < m.base.n; ++y) {
            m.a_maps.push_back(amaps.at(x).at(y));
            m.b_maps.push_back(bmaps.at(x).at(y));
        }
    ModuleCheck mc = validate_module(m);
    require(mc.ok, "InvalidModule", mc.message);
    FactorSet fs{std::move(m), {}};
    fs.mu.assign(static_cast<size_t>(fs.module.base.n) * fs.module.base.n, 0);
    for (const auto& row : j.at("mu")) {
        int x = row.at(0).get<int>(), y = row.at(1).get<int>();
        fs.mu[static_cast<size_t>(x) * fs.module.base.n + y] =
            fs.module.coeff.index_of(row.at(2).get<std::vector<long long>>());
    }
    FactorSetCheck fc = validate_factor_set(fs);
    require(fc.ok, "InvalidFactorSet", fc.message);
    return fs;
}

inline json report_to_json(const Report& r) {
    return json{{"criterion", r.criterion},
                {"claim", r.claim},
                {"verdict", verdict_str(r.verdict)},
                {"detail", r.detail},
                {"seconds", r.seconds}};
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), "BadJson", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

} // namespace qf
