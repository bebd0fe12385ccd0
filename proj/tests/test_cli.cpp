#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "rightsplit/groupspec.hpp"
#include "rightsplit/suites.hpp"

using namespace rsplit;
using nlohmann::json;

namespace {

std::string cli_path() {
    const char* p = std::getenv("RIGHTSPLIT_CLI");
    return p ? p : "./build/rightsplit";
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/rightsplit_cli_out.txt";
    const std::string cmd = cli_path() + " " + args + " > " + out_path + " 2>&1";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

json strip_timing(json j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) v = strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) v = strip_timing(v);
    }
    return j;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return json::parse(in);
}

} // namespace

TEST_CASE("primesearch prints the expected primes") {
    auto res = run_cli("primesearch -n 4 -r 1 --limit 40");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "5 13 29 37\n");
    auto res2 = run_cli("primesearch -n 1 -r 1 --limit 12");
    CHECK(res2.out == "2 3 5 7 11\n");
}

TEST_CASE("usage errors exit 1") {
    CHECK(run_cli("verify --suite nosuch").exit_code == 1);
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("primesearch -n 4 -r 2 --limit 10").exit_code == 1); // gcd precondition
}

TEST_CASE("splitcheck emits the report schema") {
    auto res = run_cli("splitcheck --group gl2:7 --index 2 --json /tmp/rs_split.json");
    CHECK(res.exit_code == 0);
    const json j = load_json("/tmp/rs_split.json");
    CHECK(j.at("m") == 6);
    CHECK(j.at("n") == 2);
    CHECK(j.at("gcd") == 1);
    CHECK(j.at("verdict") == "SplitWithWitness");
    CHECK(j.contains("witness"));
    CHECK(j.contains("elapsed_ms"));

    auto res2 = run_cli("splitcheck --group gl2:5 --index 2 --json /tmp/rs_split2.json");
    CHECK(res2.exit_code == 0);
    const json j2 = load_json("/tmp/rs_split2.json");
    CHECK(j2.at("verdict") == "NoSplit");
    CHECK(j2.at("witness").is_null());
}

TEST_CASE("induce subcommand reproduces the worked example") {
    auto res = run_cli(
        "induce --group cyclic:4 --subgroup gens:2 --rep \"2->[[4]]\" --ell 5 "
        "--json /tmp/rs_induce.json");
    CHECK(res.exit_code == 0);
    const json j = load_json("/tmp/rs_induce.json");
    CHECK(j.at("n") == 2);
    CHECK(j.at("m") == 1);
    CHECK(j.at("blocks").at(1).at("matrix") == "[[0,1],[4,0]]");
    CHECK(j.at("split").at("verdict") == "NoSplit");
    CHECK(j.at("image_orders").at("rho_G") == 4);
}

TEST_CASE("sdp subcommand builds, verifies and exports") {
    {
        std::ofstream spec("/tmp/rs_sdp_spec.json");
        spec << R"({"factors": [{"group": "sym:3", "subgroup": "derived"},
                                {"group": "sym:3", "subgroup": "derived"}],
                    "transversal": "auto",
                    "export_table": "/tmp/rs_sdp_table.txt"})";
    }
    auto res = run_cli("sdp --spec /tmp/rs_sdp_spec.json --json /tmp/rs_sdp_out.json");
    CHECK(res.exit_code == 0);
    const json j = load_json("/tmp/rs_sdp_out.json");
    CHECK(j.at("order") == 18);
    CHECK(j.at("index") == 2);
    CHECK(j.at("fiber_isomorphism") == "verified");
    CHECK(j.at("law") == "iterated-two-factor");
    // the exported multiplication table parses back into a group of order 18
    std::ifstream table("/tmp/rs_sdp_table.txt");
    std::stringstream ss;
    ss << table.rdbuf();
    auto parsed = parse_table(ss.str());
    CHECK(parsed->order() == 18);
    CHECK(verify_group_axioms(*parsed).ok);
}

TEST_CASE("table:FILE group specs round trip through the exporter") {
    {
        auto s3 = std::make_shared<PermGroup>(3);
        std::ofstream out("/tmp/rs_table_in.txt");
        out << export_table(*s3);
    }
    GroupPtr g = parse_group_spec("table:/tmp/rs_table_in.txt");
    CHECK(g->order() == 6);
    auto res = run_cli(
        "induce --group table:/tmp/rs_table_in.txt --subgroup derived --ell 7 "
        "--json /tmp/rs_induce_tbl.json");
    CHECK(res.exit_code == 0);
    const json j = load_json("/tmp/rs_induce_tbl.json");
    CHECK(j.at("n") == 2);
    CHECK(j.at("split").at("verdict") == "SplitWithWitness");
}

TEST_CASE("verify runs deterministically and reports falsifications via exit 2") {
    auto r1 = run_cli("verify --suite induce --seed 42 --json /tmp/rs_v1.json");
    auto r2 = run_cli("verify --suite induce --seed 42 --json /tmp/rs_v2.json");
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(strip_timing(load_json("/tmp/rs_v1.json")) == strip_timing(load_json("/tmp/rs_v2.json")));
    CHECK(strip_timing(load_json("/tmp/rs_v1.json")).dump() ==
          strip_timing(load_json("/tmp/rs_v2.json")).dump());

    // section2 carries the known q=2 falsification, so it signals exit 2
    auto r3 = run_cli("verify --suite section2 --corpus /tmp/rs_corpus.json --json /tmp/rs_v3.json");
    // restrict to the commutator cases via the corpus filter
    {
        std::ofstream corpus("/tmp/rs_corpus.json");
        corpus << R"({"filter": ["gl2-commutator"]})";
    }
    r3 = run_cli("verify --suite section2 --corpus /tmp/rs_corpus.json --json /tmp/rs_v3.json");
    CHECK(r3.exit_code == 2);
    const json j3 = load_json("/tmp/rs_v3.json");
    CHECK(j3.at("summary").at("falsified") == 1);
    CHECK(j3.at("summary").at("total") == 7);
    // every case carries its statement id and parameters
    for (const auto& c : j3.at("cases")) {
        CHECK(c.contains("statement_id"));
        CHECK(c.contains("parameters"));
        CHECK(c.contains("verdict"));
    }
}

TEST_CASE("sdp accepts explicit transversal lists") {
    {
        std::ofstream spec("/tmp/rs_sdp_explicit.json");
        // element 1 of sym:3 is a transposition outside A3
        spec << R"({"factors": [{"group": "sym:3", "subgroup": "derived"},
                                {"group": "sym:3", "subgroup": "derived"}],
                    "transversal": [[0, 1], [0, 1]]})";
    }
    auto res = run_cli("sdp --spec /tmp/rs_sdp_explicit.json --json /tmp/rs_sdp_exp_out.json");
    CHECK(res.exit_code == 0);
    CHECK(load_json("/tmp/rs_sdp_exp_out.json").at("order") == 18);
    // a non-transversal list is rejected
    {
        std::ofstream spec("/tmp/rs_sdp_bad.json");
        spec << R"({"factors": [{"group": "sym:3", "subgroup": "derived"},
                                {"group": "sym:3", "subgroup": "derived"}],
                    "transversal": [[0, 3], [0, 3]]})";
    }
    CHECK(run_cli("sdp --spec /tmp/rs_sdp_bad.json").exit_code == 1);
}

TEST_CASE("repalg subcommand operations") {
    auto r1 = run_cli("repalg --op pglpsl --p 5 --json /tmp/rs_ra1.json");
    CHECK(r1.exit_code == 0);
    const json j1 = load_json("/tmp/rs_ra1.json");
    CHECK(j1.at("complement_found") == true);
    CHECK(j1.at("pgl_not_psl_x_c2") == true);

    auto r2 = run_cli(
        "repalg --op split --group cyclic:6 --subgroup gens:2 --rep \"1->[[4]]\" --ell 7 "
        "--json /tmp/rs_ra2.json");
    CHECK(r2.exit_code == 0);
    CHECK(load_json("/tmp/rs_ra2.json").at("verdict") == "SplitWithWitness");

    auto r3 = run_cli(
        "repalg --op iso --group cyclic:4 --rep \"1->[[2]]\" --rep2 \"1->[[2]]\" --ell 5 "
        "--json /tmp/rs_ra3.json");
    CHECK(r3.exit_code == 0);
    CHECK(load_json("/tmp/rs_ra3.json").at("isomorphism") == "verified");

    auto r4 = run_cli("repalg --op tensor --group cyclic:4 --rep \"1->[[2]]\" "
                      "--rep2 \"1->[[2]]\" --ell 5 --json /tmp/rs_ra4.json");
    CHECK(r4.exit_code == 0);
    CHECK(load_json("/tmp/rs_ra4.json").at("dim") == 1);
    CHECK(load_json("/tmp/rs_ra4.json").at("image_order") == 2); // g -> 4
}

TEST_CASE("suite engine outcomes") {
    SuiteOptions opts;
    opts.filter = {"pair-kernel-analysis", "graph-splits"};
    const auto rep = run_suite("repalg", opts);
    CHECK(rep.cases.size() == 30); // 15 instances x 2 case families
    CHECK(rep.falsified == 0);
    CHECK(rep.indeterminate == 0);
    for (const auto& c : rep.cases) CHECK(c.verdict == "verified");
    // summary counts equal the case tallies
    std::int64_t v = 0;
    for (const auto& c : rep.cases)
        if (c.verdict == "verified") ++v;
    CHECK(v == rep.verified);
    CHECK(rep.verified + rep.falsified + rep.not_applicable + rep.indeterminate ==
          static_cast<std::int64_t>(rep.cases.size()));
}
