#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
    int status = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(STICKELGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

}  // namespace

TEST_CASE("analyze builtin targets") {
    const CliResult r = run_cli("analyze example:2.4");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["g_coeffs"] == nlohmann::json::array({"1", "-4", "3"}));
    CHECK(j["r"] == 1);
    CHECK(j["special_value"] == "2");
    CHECK(j["delta"] == 0);
    CHECK(j["m"] == "2");
    CHECK(j["bf_rank"] == 1);

    const CliResult s = run_cli("analyze stickelberger:3");
    CHECK(s.status == 0);
    const auto js = nlohmann::json::parse(s.out);
    CHECK(js["bf_torsion_factors"] == nlohmann::json::array({"3"}));
    CHECK(js["m"] == "-1");

    const CliResult p = run_cli("analyze plus:5");
    CHECK(p.status == 0);
    const auto jp = nlohmann::json::parse(p.out);
    CHECK(jp["bf_rank"] == 1);
    CHECK(jp["bf_torsion_factors"] == nlohmann::json::array({"5"}));
    CHECK(jp["m"] == "2");
}

TEST_CASE("analyze with matrix dump") {
    const CliResult r = run_cli("analyze example:2.4 --dump-matrices");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["adjacency"] ==
          nlohmann::json::array({nlohmann::json::array({"2", "1"}),
                                 nlohmann::json::array({"1", "2"})}));
    CHECK(j["bf_operator"] ==
          nlohmann::json::array({nlohmann::json::array({"-1", "-1"}),
                                 nlohmann::json::array({"-1", "-1"})}));
    CHECK(j["invariant_factors"] == nlohmann::json::array({"1", "0"}));
}

TEST_CASE("analyze reads digraph files") {
    write_file("cli_case_bouquet.json", R"({
        "vertices": ["v"],
        "edges": [
            {"id": "l0", "from": "v", "to": "v"},
            {"id": "l1", "from": "v", "to": "v"},
            {"id": "l2", "from": "v", "to": "v"}
        ]
    })");
    const CliResult r = run_cli("analyze cli_case_bouquet.json");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["g_coeffs"] == nlohmann::json::array({"1", "-3"}));
    CHECK(j["bf_torsion_factors"] == nlohmann::json::array({"2"}));
    std::remove("cli_case_bouquet.json");

    // A voltage layer makes the derived cover the analysis target.
    write_file("cli_case_voltage.json", R"({
        "vertices": ["v"],
        "group": [2],
        "edges": [
            {"id": "l0", "from": "v", "to": "v", "voltage": [0]},
            {"id": "l1", "from": "v", "to": "v", "voltage": [0]},
            {"id": "l2", "from": "v", "to": "v", "voltage": [1]}
        ]
    })");
    const CliResult v = run_cli("analyze cli_case_voltage.json");
    CHECK(v.status == 0);
    const auto jv = nlohmann::json::parse(v.out);
    CHECK(jv["g_coeffs"] == nlohmann::json::array({"1", "-4", "3"}));
    CHECK(jv["m"] == "2");
    std::remove("cli_case_voltage.json");
}

TEST_CASE("exit code 2 for unusable input") {
    CHECK(run_cli("analyze example:9.9").status == 2);
    CHECK(run_cli("analyze no_such_file.json").status == 2);
    CHECK(run_cli("analyze stickelberger:abc").status == 2);
    CHECK(run_cli("analyze").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("verify --primes 3..7 --checks nonsense").status == 2);
    CHECK(run_cli("verify --checks a").status == 2);

    write_file("cli_case_malformed.json", "{ this is not json");
    CHECK(run_cli("analyze cli_case_malformed.json").status == 2);
    std::remove("cli_case_malformed.json");
}

TEST_CASE("exit code 3 for violated preconditions") {
    CHECK(run_cli("analyze stickelberger:4").status == 3);
    CHECK(run_cli("analyze stickelberger:211").status == 3);
    CHECK(run_cli("verify --primes 9 --checks a").status == 3);
    CHECK(run_cli("verify --primes 3..7 --checks b").status == 3);  // --ells missing
    CHECK(run_cli("verify --primes 3..7 --ells 4 --checks b").status == 3);
    CHECK(run_cli("verify --primes 211 --checks a").status == 3);

    write_file("cli_case_disconnected.json", R"({
        "vertices": ["x", "y"],
        "edges": [{"id": "e", "from": "x", "to": "y"}]
    })");
    CHECK(run_cli("analyze cli_case_disconnected.json").status == 3);
    std::remove("cli_case_disconnected.json");
}

TEST_CASE("verify produces the expected csv table") {
    const CliResult r =
        run_cli("verify --primes 3..7 --ells 2,3 --checks a,b,plus --format csv");
    CHECK(r.status == 0);
    const std::string golden =
        read_file(std::string(STICKELGRAPH_TEST_DATA_DIR) + "/golden/verify_small.csv");
    CHECK(r.out == golden);
}

TEST_CASE("verify json is deterministic across thread counts") {
    const std::string args = "verify --primes 3..7 --ells 2,3 --checks a,b,plus";
    const CliResult serial = run_cli(args + " --threads 1");
    const CliResult parallel = run_cli(args + " --threads 4");
    CHECK(serial.status == 0);
    CHECK(parallel.status == 0);
    CHECK(serial.out == parallel.out);
    const auto j = nlohmann::json::parse(serial.out);
    REQUIRE(j.contains("rows"));
    REQUIRE(j["rows"].is_array());
    CHECK(j["rows"].size() == 12);
    // Rows are ordered by prime, then check a, plus, b with ell ascending.
    CHECK(j["rows"][0]["check"] == "a");
    CHECK(j["rows"][0]["p"] == 3);
    CHECK(j["rows"][0]["ell"].is_null());
    CHECK(j["rows"][1]["check"] == "plus");
    CHECK(j["rows"][2]["check"] == "b");
    CHECK(j["rows"][2]["ell"] == 2);
    CHECK(j["rows"][2]["status"] == "skip");
    CHECK(j["rows"][2]["report"].is_null());
    CHECK(j["rows"][3]["ell"] == 3);
    CHECK(j["rows"][3]["status"] == "ok");
    for (const auto& row : j["rows"])
        if (row["status"] == "ok" && row["check"] == "a")
            CHECK(row["report"]["theorem_a_holds"] == true);
}

TEST_CASE("verify writes output files atomically") {
    const std::string args =
        "verify --primes 3..5 --ells 3 --checks a,b --format csv";
    const CliResult direct = run_cli(args);
    CHECK(direct.status == 0);
    const CliResult filed = run_cli(args + " --out cli_case_out.csv");
    CHECK(filed.status == 0);
    CHECK(filed.out.empty());
    CHECK(read_file("cli_case_out.csv") == direct.out);
    std::ifstream tmp("cli_case_out.csv.tmp");
    CHECK_FALSE(tmp.good());
    std::remove("cli_case_out.csv");
}

TEST_CASE("verify marks artin rows") {
    const CliResult r = run_cli("verify --primes 5 --checks artin --format csv");
    CHECK(r.status == 0);
    CHECK(r.out.find("artin,5,,ok,") != std::string::npos);
    CHECK(r.out.find("product=ok") != std::string::npos);
}
