#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

#include "qf/cli.hpp"

using namespace qf;

namespace {

// Run the CLI with stdout captured.
std::pair<int, std::string> run_cli(std::vector<std::string> args) {
    std::ostringstream captured;
    auto* old = std::cout.rdbuf(captured.rdbuf());
    int code = cli::run(std::move(args));
    std::cout.rdbuf(old);
    return {code, captured.str()};
}

} // namespace

TEST_CASE("spec parsing") {
    REQUIRE(parse_group_spec("Z4").n == 4);
    REQUIRE(parse_group_spec("S3").n == 6);
    REQUIRE(parse_group_spec("D4").n == 8);
    REQUIRE(parse_group_spec("Klein").n == 4);
    REQUIRE(parse_group_spec("Z2xZ4").n == 8);
    REQUIRE(parse_group_spec("Z2xZ2").is_abelian());
    REQUIRE_THROWS_AS(parse_group_spec("Q8"), Error);

    REQUIRE(parse_quandle_spec("trivial:3") == trivial_quandle(3));
    REQUIRE(parse_quandle_spec("dihedral:4") == dihedral_quandle(4));
    REQUIRE(parse_quandle_spec("conj:S3:1") == conj_quandle(symmetric_group(3), 1));
    REQUIRE(parse_quandle_spec("core:Z4") == dihedral_quandle(4));
    REQUIRE(parse_quandle_spec("alex:Z5:2").n == 5);
    REQUIRE(parse_quandle_spec("product/dihedral:3/trivial:2").n == 6);
    REQUIRE_THROWS_AS(parse_quandle_spec("alex:Z6:2"), Error); // 2 not invertible mod 6
    REQUIRE_THROWS_AS(parse_quandle_spec("nonsense:1"), Error);

    REQUIRE(parse_coeff_spec("Z2").moduli == std::vector<long long>{2});
    REQUIRE(parse_coeff_spec("Z2xZ4").moduli == std::vector<long long>{2, 4});
    REQUIRE_THROWS_AS(parse_coeff_spec("4"), Error);

    REQUIRE(parse_word_spec("core").tag == QuandleWord::Tag::Core);
    REQUIRE(parse_word_spec("conj:2").n == 2);
}

TEST_CASE("catalog is deterministic and valid") {
    auto cat = catalog_quandles();
    std::set<std::string> names;
    for (const auto& [name, x] : cat) {
        REQUIRE(names.insert(name).second);
        REQUIRE(check_quandle_table(x.table).ok);
    }
    REQUIRE(names.count("trivial:1") == 1);
    REQUIRE(names.count("dihedral:8") == 1);
    REQUIRE(names.count("alex:Z5:2") == 1);
    REQUIRE(names.count("core:D4") == 1);

    // Construction is deterministic.
    auto cat2 = catalog_quandles();
    for (size_t i = 0; i < cat.size(); ++i) REQUIRE(cat[i].second == cat2[i].second);
}

TEST_CASE("json round trips") {
    // Quandles and groups.
    for (const auto& [name, x] : catalog_quandles())
        REQUIRE(quandle_from_json(to_json(x)) == x);
    for (const auto& [name, g] : catalog_groups())
        REQUIRE(group_from_json(to_json(g)).table == g.table);

    // Identity-not-zero and malformed tables are rejected.
    REQUIRE_THROWS_AS(group_from_json(json{{"size", 2}, {"table", {{1, 0}, {0, 1}}}}), Error);
    REQUIRE_THROWS_AS(quandle_from_json(json{{"size", 3}, {"table", {{0, 1}, {0, 1}}}}), Error);

    // Dynamical cocycles.
    auto dc = cli::load_cocycle("r4", Caps{});
    auto dc2 = dynamical_from_json(to_json(dc));
    REQUIRE(dc2.alpha == dc.alpha);
    REQUIRE(dc2.base == dc.base);

    // Generalized pairs.
    GeneralizedPair p;
    p.x_size = 2;
    p.s_size = 2;
    p.alpha = dc.alpha;
    p.beta.assign(16, 0);
    for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t)
            for (int x = 0; x < 2; ++x)
                for (int y = 0; y < 2; ++y) p.beta[((s * 2 + t) * 2 + x) * 2 + y] = x;
    auto p2 = generalized_from_json(to_json(p));
    REQUIRE(p2.alpha == p.alpha);
    REQUIRE(p2.beta == p.beta);

    // Presentations.
    auto pres = adj_w_presentation(dihedral_quandle(4), QuandleWord::conj(1));
    auto pres2 = presentation_from_json(to_json(pres));
    REQUIRE(pres2.generators == pres.generators);
    REQUIRE(pres2.relators == pres.relators);
    REQUIRE_THROWS_AS(presentation_from_json(json{{"generators", 2}, {"relators", {{3}}}}),
                      Error);
}

TEST_CASE("cochain json round trip is exact on random cochains") {
    auto x = dihedral_quandle(4);
    CoeffGroup a({2, 4});
    TupleBasis pairs = nondegenerate_tuples(x, 2);
    std::mt19937 rng(31415);
    for (int trial = 0; trial < 25; ++trial) {
        Cochain c{2, std::vector<long long>(pairs.size())};
        for (auto& v : c.vals) v = rng() % a.size();
        Cochain back = cochain_from_json(cochain_to_json(x, a, c), x, a);
        REQUIRE(back == c);
    }
    // Degenerate entries and mismatched moduli are rejected.
    json bad{{"degree", 2}, {"entries", {{0, 0, {1}}}}};
    REQUIRE_THROWS_AS(cochain_from_json(bad, x, CoeffGroup({2})), Error);
    json wrongmod{{"degree", 2}, {"moduli", {2}}, {"entries", json::array()}};
    REQUIRE_THROWS_AS(cochain_from_json(wrongmod, x, CoeffGroup({3})), Error);
}

TEST_CASE("factor set json round trip") {
    CoeffGroup z2({2});
    GroupH2Space h(cyclic_group(2), z2);
    GroupCocycle2 carry = h.zero();
    carry.nu[3] = 1;
    FactorSet fs = lambda_map(h, carry);
    FactorSet back = factor_set_from_json(factor_set_to_json(fs));
    REQUIRE(back.mu == fs.mu);
    REQUIRE(back.module.a_maps == fs.module.a_maps);
    REQUIRE(back.module.b_maps == fs.module.b_maps);
}

TEST_CASE("cli exit codes") {
    REQUIRE(run_cli({"quandle", "check", "--spec", "dihedral:4"}).first == 0);
    REQUIRE(run_cli({"quandle", "check", "--spec", "bogus:4"}).first == 2);
    REQUIRE(run_cli({"adjoint", "r4-report"}).first == 0);
    REQUIRE(run_cli({"definitely-not-a-command"}).first == 2);

    // A failing claim gives exit 1 with a witness on stdout.
    std::ofstream("/tmp/qf_bad_table.json") << R"({"size":2,"table":[[0,1],[0,1]]})";
    auto [code, out] = run_cli({"quandle", "check", "--spec", "@/tmp/qf_bad_table.json"});
    REQUIRE(code == 1);
    REQUIRE(out.find("Q2Violation") != std::string::npos);
}

TEST_CASE("cli json output is parseable") {
    auto [code, out] = run_cli({"--json", "cohomology", "--quandle", "trivial:2", "--coeff",
                                "Z2"});
    REQUIRE(code == 0);
    json j = json::parse(out);
    REQUIRE(j.at("order").get<std::string>() == "4");
    REQUIRE(j.at("structure").get<std::string>() == "Z_2 x Z_2");

    auto [code2, out2] = run_cli({"--json", "quandle", "make", "--spec", "dihedral:3"});
    REQUIRE(code2 == 0);
    std::istringstream lines(out2);
    std::string reportline, tableline;
    std::getline(lines, reportline);
    std::getline(lines, tableline);
    REQUIRE(json::parse(reportline).at("verdict").get<std::string>() == "PASS");
    REQUIRE(quandle_from_json(json::parse(tableline)) == dihedral_quandle(3));
}

TEST_CASE("cli verify-all small emits only pass or skipped") {
    auto [code, out] = run_cli({"verify-all", "--scale", "small"});
    REQUIRE(code == 0);
    REQUIRE(out.find("[FAIL]") == std::string::npos);
    REQUIRE(out.find("[PASS]") != std::string::npos);
}

TEST_CASE("cli extension and theta surface") {
    REQUIRE(run_cli({"extension", "build", "--cocycle", "trivial/dihedral:3/2"}).first == 0);
    REQUIRE(run_cli({"extension", "fibers", "--cocycle", "product/dihedral:3/trivial:2"}).first ==
            0);
    REQUIRE(run_cli({"extension", "act", "--cocycle", "r4", "--phi", "0,1", "--theta", "1,0"})
                .first == 0);
    REQUIRE(run_cli({"extension", "cohomologous", "--cocycle", "r4", "--other", "r4"}).first == 0);
    REQUIRE(run_cli({"wells-dynamical", "--cocycle", "trivial/trivial:2/2"}).first == 0);
    REQUIRE(run_cli({"theta", "derivation", "--quandle", "trivial:2", "--coeff", "Z2"}).first ==
            0);
    REQUIRE(run_cli({"theta", "map", "--quandle", "trivial:2", "--coeff", "Z2", "--phi", "1,0"})
                .first == 0);
    REQUIRE(run_cli({"adjoint", "present", "--quandle", "dihedral:4", "--word", "conj:1"}).first ==
            0);
    REQUIRE(run_cli({"adjoint", "abelianize", "--quandle", "dihedral:4"}).first == 0);
    REQUIRE(run_cli({"catalog", "list"}).first == 0);
    REQUIRE(run_cli({"bridge", "h2group", "--group", "S3", "--coeff", "Z2"}).first == 0);
    REQUIRE(run_cli({"bridge", "naturality", "--variant", "gamma", "--g1", "S3", "--g2", "S3",
                     "--coeff", "Z2", "--fmap", "0,1,2,3,4,5"})
                .first == 0);
    // Abelian cocycle spec by stored class index.
    REQUIRE(run_cli({"wells-dynamical", "--cocycle", "abelian/trivial:2/Z2/class:1"}).first == 0);
}
