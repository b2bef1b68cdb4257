#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = jacobsthal::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("term golden outputs") {
    CHECK(run({"term", "--family", "J", "--k", "2", "--n", "6"}).out == "18\n");
    CHECK(run({"term", "--family", "J", "--k", "sym", "--n", "3"}).out == "k^2 - k\n");
    CHECK(run({"term", "--family", "J", "--k", "2", "--n", "-2"}).out == "1/2\n");
    CHECK(run({"term", "--family", "t", "--k", "sym", "--n", "-2"}).out == "-k + 1\n");
    CHECK(run({"term", "--family", "Kc", "--n", "4"}).out == "15\n");
    CHECK(run({"term", "--family", "Z", "--n", "-1"}).out == "1\n");
    CHECK(run({"term", "--family", "Jc", "--k", "ignored-by-classic", "--n", "9"}).out == "146\n");
}

TEST_CASE("matrix golden outputs") {
    CHECK(run({"matrix", "--family", "Jn", "--k", "sym", "--n", "-1", "--format", "json"}).out ==
          "[[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"],[\"k^-1\",\"-1 + k^-1\",\"-1 + k^-1\"]]\n");
    CHECK(run({"matrix", "--family", "M", "--k", "sym", "--n", "0"}).out ==
          "[ 1  0  0 ]\n[ 0  1  0 ]\n[ 0  0  1 ]\n");
    CHECK(run({"matrix", "--family", "N", "--k", "2", "--n", "0", "--format", "csv"}).out ==
          "1,4,4\n2,-1,2\n1,1,-2\n");
    CHECK(run({"matrix", "--family", "jn", "--k", "2", "--n", "1", "--format", "csv"}).out ==
          "5,5,2\n1,4,4\n2,-1,2\n");
}

TEST_CASE("table golden outputs") {
    CHECK(run({"table", "--family", "Jc", "--from", "0", "--to", "7", "--format", "csv"}).out ==
          "n,value\n0,0\n1,1\n2,1\n3,2\n4,5\n5,9\n6,18\n7,37\n");
    CHECK(run({"table", "--family", "Y", "--from", "0", "--to", "5", "--format", "csv"}).out ==
          "n,value\n0,2\n1,-1\n2,-1\n3,2\n4,-1\n5,-1\n");
    CHECK(run({"table", "--family", "j", "--k", "sym", "--from", "0", "--to", "2", "--format", "json"}).out ==
          "[[0,\"2\"],[1,\"k - 1\"],[2,\"k^2 + 1\"]]\n");
    CHECK(run({"table", "--family", "J", "--k", "2", "--from", "-2", "--to", "1"}).out ==
          "-2  1/2\n-1  0\n 0  0\n 1  1\n");
}

TEST_CASE("verify exit codes") {
    const Result all = run({"verify", "--identity", "all", "--k", "2,3,sym", "--n", "1..10", "--m", "1..10"});
    CHECK(all.code == 0);
    CHECK(all.out.find("20/20 identities passed") != std::string::npos);

    CHECK(run({"verify", "--identity", "det_J_formula", "--k", "sym", "--n", "1..12"}).code == 0);
    const Result bad = run({"verify", "--identity", "nonsense"});
    CHECK(bad.code == 2);
    CHECK(bad.out.empty());
    CHECK_FALSE(bad.err.empty());

    const Result json = run({"verify", "--identity", "neg_binet", "--k", "2", "--n", "1..3", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out == "[{\"checks\":3,\"identity\":\"neg_binet\",\"status\":\"pass\"}]\n");
}

TEST_CASE("usage and domain errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"term", "--family", "J", "--k", "-2", "--n", "1"}).code == 2);
    CHECK(run({"term", "--family", "J", "--k", "0", "--n", "1"}).code == 2);
    CHECK(run({"term", "--family", "J", "--n", "1"}).code == 2);
    CHECK(run({"term", "--family", "Q", "--k", "2", "--n", "1"}).code == 2);
    CHECK(run({"term", "--family", "Jc", "--n", "-1"}).code == 2);
    CHECK(run({"matrix", "--family", "M", "--k", "2", "--n", "-1"}).code == 2);
    CHECK(run({"matrix", "--family", "M", "--k", "2", "--n", "1", "--format", "xml"}).code == 2);
    CHECK(run({"table", "--family", "Jc", "--from", "5", "--to", "1"}).code == 2);
    CHECK(run({"verify", "--identity", "lincomb_eq1", "--k", "2", "--n", "1..4"}).code == 2);
    CHECK(run({"verify", "--identity", "all", "--n", "5..1"}).code == 2);
    CHECK(run({"verify", "--identity", "all", "--k", "2,,3"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--out writes the payload verbatim") {
    const auto path = std::filesystem::temp_directory_path() / "jacobsthal_cli_out_test.csv";
    const Result r = run({"matrix", "--family", "N", "--k", "2", "--n", "0", "--format", "csv", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream contents;
    contents << in.rdbuf();
    CHECK(contents.str() == "1,4,4\n2,-1,2\n1,1,-2\n");
    std::filesystem::remove(path);

    CHECK(run({"term", "--family", "J", "--k", "2", "--n", "1", "--out", "/nonexistent-dir/x"}).code == 2);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"verify", "--identity", "all", "--k", "1/2,sym", "--n", "1..3", "--m", "1..3", "--format", "json"};
    CHECK(run(args).out == run(args).out);
}
