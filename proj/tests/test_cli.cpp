#include "cli.hpp"

#include "scv/json_io.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace scv;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    CliRun r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string identity_point(long d) {
    Json j;
    j["d"] = d;
    Json a = Json::array();
    for (long r = 0; r < d; ++r) {
        Json row = Json::array();
        for (long c = 0; c < d; ++c) row.push_back(r == c ? "1" : "0");
        a.push_back(row);
    }
    j["A"] = a;
    j["B"] = std::vector<std::string>(d, "0");
    j["Lambda"] = std::vector<std::string>(d, "0");
    return j.dump();
}

const char* swap_point_json = R"({
  "d": 2,
  "A": [["0", "1"], ["1", "0"]],
  "B": ["0", "0"],
  "Lambda": ["0", "0"]
})";

}  // namespace

TEST_CASE("check: accept, reject, malformed") {
    CliRun accept = run_cli({"check"}, identity_point(2));
    CHECK(accept.code == cli::exit_ok);
    Json rep = Json::parse(accept.out);
    CHECK(rep["agree"] == true);
    CHECK(rep["report"]["c_prime"] == "2");

    CliRun reject = run_cli({"check"}, swap_point_json);
    CHECK(reject.code == cli::exit_reject);
    Json rrep = Json::parse(reject.out);
    CHECK(rrep["matrix_route"] == false);
    CHECK(rrep["direct_route"] == false);

    CliRun truncated = run_cli({"check"}, "{\"d\": 2, \"A\": [[");
    CHECK(truncated.code == cli::exit_malformed);
    CHECK_FALSE(truncated.err.empty());

    CliRun asymmetric = run_cli({"check"}, R"({"d":2,"A":[["0","1"],["0","0"]],"B":["0","0"],"Lambda":["0","0"]})");
    CHECK(asymmetric.code == cli::exit_malformed);
}

TEST_CASE("check: injected fault trips the route-disagreement sentinel") {
    CliRun faulty = run_cli({"check", "--inject-fault"}, identity_point(2));
    CHECK(faulty.code == cli::exit_route_disagreement);
    Json rep = Json::parse(faulty.out);
    CHECK(rep["agree"] == false);
}

TEST_CASE("poly: golden bytes for d=1 and determinism") {
    CliRun run1 = run_cli({"poly", "--d", "1"});
    CHECK(run1.code == cli::exit_ok);
    std::ifstream golden(std::string(TESTS_DATA_DIR) + "/poly_d1_lambda0.txt",
                         std::ios::binary);
    REQUIRE(golden.good());
    std::ostringstream want;
    want << golden.rdbuf();
    CHECK(run1.out == want.str());

    CliRun run2 = run_cli({"poly", "--d", "1"});
    CHECK(run2.out == run1.out);

    CliRun shifted = run_cli({"poly", "--d", "1", "--lambda", "1"});
    CHECK(shifted.out.find("2*a_1_1 - b_1") != std::string::npos);

    CliRun d2 = run_cli({"poly", "--d", "2"});
    CHECK(std::count(d2.out.begin(), d2.out.end(), '\n') == 8);
}

TEST_CASE("commutant: profile, csv, and the lambda guard") {
    std::string diag = R"({"d":2,"A":[["1","0"],["0","0"]],"B":["0","0"],"Lambda":["0","0"]})";
    CliRun r = run_cli({"commutant", "--degree-bound", "5"}, diag);
    CHECK(r.code == cli::exit_ok);
    Json j = Json::parse(r.out);
    CHECK(j["matches_expected"] == true);
    CHECK(j["tensor_identity"] == true);
    CHECK(j["dims_commutant"]["actual"] == Json::array({1, 1, 2, 3, 5, 7}));

    CliRun csv = run_cli({"commutant", "--degree-bound", "3", "--format", "csv"}, diag);
    CHECK(csv.code == cli::exit_ok);
    CHECK(csv.out.find("n,commutant,expected_commutant") == 0);

    std::string shifted =
        R"({"d":1,"A":[["1"]],"B":["1"],"Lambda":["1"]})";
    CliRun unsupported = run_cli({"commutant"}, shifted);
    CHECK(unsupported.code == cli::exit_unsupported);

    CliRun invalid = run_cli({"commutant"}, swap_point_json);
    CHECK(invalid.code == cli::exit_unsupported);
}

TEST_CASE("order: verdicts and exit codes") {
    std::string pair = std::string(R"({"p1": )") +
                       R"({"d":2,"A":[["1","0"],["0","0"]],"B":["0","0"],"Lambda":["0","0"]})" +
                       R"(, "p2": )" + identity_point(2) + "}";
    CliRun r = run_cli({"order"}, pair);
    CHECK(r.code == cli::exit_ok);
    Json j = Json::parse(r.out);
    CHECK(j["leq_matrix"] == true);
    CHECK(j["leq_direct"] == true);

    std::string anti = std::string(R"({"p1": )") + identity_point(2) + R"(, "p2": )" +
                       R"({"d":2,"A":[["1","0"],["0","0"]],"B":["0","0"],"Lambda":["0","0"]})" +
                       "}";
    CliRun rr = run_cli({"order"}, anti);
    CHECK(rr.code == cli::exit_reject);
}

TEST_CASE("involution and chain") {
    CliRun inv = run_cli({"involution"}, identity_point(2));
    CHECK(inv.code == cli::exit_ok);
    Json j = Json::parse(inv.out);
    CHECK(j["A"] == Json::array({Json::array({"0", "0"}), Json::array({"0", "0"})}));
    CHECK(j["rank"] == 0);

    CliRun chain = run_cli({"chain", "--d", "3"});
    CHECK(chain.code == cli::exit_ok);
    Json cj = Json::parse(chain.out);
    CHECK(cj["length"] == 3);
    CHECK(cj["points"].size() == 4);
}

TEST_CASE("orbit: classification and conjugation") {
    std::string input = std::string(R"({"point": )") +
                        R"({"d":2,"A":[["1","0"],["0","0"]],"B":["0","0"],"Lambda":["0","0"]})" +
                        R"(, "o": [["3/5", "-4/5"], ["4/5", "3/5"]]})";
    CliRun r = run_cli({"orbit"}, input);
    CHECK(r.code == cli::exit_ok);
    Json j = Json::parse(r.out);
    CHECK(j["rank"] == 1);
    CHECK(j["classification"]["labels"] == Json::array({"minimal", "maximal"}));
    CHECK(j["rank_preserved"] == true);
    CHECK(j["conjugated"]["A"][0][0] == "9/25");
}

TEST_CASE("byte reproducibility of pure commands") {
    std::string diag = R"({"d":2,"A":[["1","0"],["0","0"]],"B":["0","0"],"Lambda":["0","0"]})";
    for (auto args : std::vector<std::vector<std::string>>{
             {"check"}, {"commutant", "--degree-bound", "4"}, {"involution"}}) {
        CliRun a = run_cli(args, diag);
        CliRun b = run_cli(args, diag);
        CHECK(a.out == b.out);
        CHECK(a.code == b.code);
    }
}

TEST_CASE("fock element json: canonical output, any input order") {
    FockElement v(2);
    v.add_term(FockMonomial({{1, 2}, {2, 1}}), rational_of(1, 2));
    v.add_term(FockMonomial({{3, 1}}), GaussianRational::i());
    Json j = fock_to_json(v);
    CHECK(fock_from_json(j, 2) == v);
    // Scrambled factor order parses to the same element.
    Json scrambled = Json::parse(
        R"([{"monomial": [[1,2],[2,1]], "coeff": "1/2"},
            {"monomial": [[3,1]], "coeff": "0+1i"}])");
    CHECK(fock_from_json(scrambled, 2) == v);
    // Canonical order on output: factors sorted mode desc, flavor asc.
    CHECK(j[0]["monomial"] == Json::array({Json::array({2, 1}), Json::array({1, 2})}));
    CHECK(j[1]["monomial"] == Json::array({Json::array({3, 1})}));
}

TEST_CASE("verify-suite: verdicts stable across seeds, fault fails loudly") {
    CliRun a = run_cli({"verify-suite", "--d", "1", "--seed", "11", "--format", "csv"});
    CHECK(a.code == cli::exit_ok);
    CliRun b = run_cli({"verify-suite", "--d", "1", "--seed", "5040", "--format", "csv"});
    CHECK(b.code == cli::exit_ok);
    auto verdicts = [](const std::string& csv) {
        std::string v;
        std::istringstream is(csv);
        for (std::string line; std::getline(is, line);) {
            auto first = line.find(',');
            auto second = line.find(',', first + 1);
            auto third = line.find(',', second + 1);
            v += line.substr(0, second) + line.substr(second, third - second) + "\n";
        }
        return v;
    };
    CHECK(verdicts(a.out) == verdicts(b.out));

    CliRun faulty = run_cli({"verify-suite", "--d", "1", "--inject-fault"});
    CHECK(faulty.code == cli::exit_reject);
    Json j = Json::parse(faulty.out);
    CHECK(j["all_passed"] == false);
}

TEST_CASE("usage errors exit 64") {
    CliRun nocmd = run_cli({});
    CHECK(nocmd.code == cli::exit_malformed);
    CliRun badflag = run_cli({"poly", "--nonsense"});
    CHECK(badflag.code == cli::exit_malformed);
    CliRun badformat = run_cli({"commutant", "--format", "xml"}, identity_point(2));
    CHECK(badformat.code == cli::exit_malformed);
}

TEST_SUITE_END();
