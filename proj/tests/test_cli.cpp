#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "catpoly/cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = catpoly::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("catpoly_cli_test_" + std::to_string(++counter) + ".txt");
        std::ofstream f(path_);
        f << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("lpoly prints the canonical text form") {
    CliResult r = run_cli({"lpoly", "-c", "2,2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1*x[4]+1*x[2.2]\n");
    CHECK(r.err.empty());
}

TEST_CASE("lpoly json matches the canonical serialization") {
    CliResult r = run_cli({"lpoly", "-c", "2,2", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"n\":4,\"terms\":[{\"lambda\":[4],\"coeff\":1},"
                   "{\"lambda\":[2,2],\"coeff\":1}]}\n");
}

TEST_CASE("factor prints the chain with the product sign") {
    CHECK(run_cli({"factor", "-c", "2,5,3"}).out == "(2) ∘ (2,3)\n");
    CHECK(run_cli({"factor", "-c", "7"}).out == "(7)\n");
    CHECK(run_cli({"factor", "-c", "2,5,3", "--format", "json"}).out ==
          "{\"factors\":[[2],[2,3]]}\n");
}

TEST_CASE("sym and lclass agree and lclass needs confirmation") {
    CliResult sym = run_cli({"sym", "-c", "2,5,3"});
    CHECK(sym.code == 0);
    CHECK(sym.out == "2,5,3\n3,5,2\n");

    CliResult unconfirmed = run_cli({"lclass", "-c", "2,5,3"});
    CHECK(unconfirmed.code == 2);
    CHECK(unconfirmed.err.find("--exhaustive") != std::string::npos);

    CliResult cls = run_cli({"lclass", "-c", "2,5,3", "--exhaustive"});
    CHECK(cls.code == 0);
    CHECK(cls.out == sym.out);

    CliResult json = run_cli({"sym", "-c", "2,5,3", "--format", "json"});
    CHECK(json.out == "{\"class\":[[2,5,3],[3,5,2]]}\n");
}

TEST_CASE("upoly accepts a composition or a tree file") {
    CliResult from_comp = run_cli({"upoly", "-c", "2,2"});
    CHECK(from_comp.code == 0);
    CHECK(from_comp.out == "1*x[4]+2*x[3.1]+1*x[2.2]+3*x[2.1.1]+1*x[1.1.1.1]\n");

    TempFile tree("0 1\n1 2\n2 3\n");
    CliResult from_tree = run_cli({"upoly", "-t", tree.path()});
    CHECK(from_tree.out == from_comp.out);

    CliResult both = run_cli({"upoly", "-c", "2,2", "-t", tree.path()});
    CHECK(both.code == 2);
    CliResult neither = run_cli({"upoly"});
    CHECK(neither.code == 2);
}

TEST_CASE("ulpoly psi phi round trip through files") {
    CliResult edges = run_cli({"psi", "-c", "2,3"});
    CHECK(edges.code == 0);
    CHECK(edges.out == "0 1\n0 2\n1 3\n1 4\n");

    TempFile tree(edges.out);
    CliResult back = run_cli({"phi", "-t", tree.path()});
    CHECK(back.code == 0);
    CHECK(back.out == "2,3\n");

    CliResult restricted = run_cli({"ulpoly", "-t", tree.path()});
    CHECK(restricted.out == "1*x[5]+1*x[3.2]\n");
    CHECK(run_cli({"ulpoly", "-c", "2,3"}).out == restricted.out);

    CliResult json = run_cli({"psi", "-c", "2,3", "--format", "json"});
    CHECK(json.out ==
          "{\"vertex_count\":5,\"edges\":[[0,1],[0,2],[1,3],[1,4]]}\n");
}

TEST_CASE("tree file warnings go to the error stream") {
    TempFile tree("# caterpillar with sparse labels\n0 7\n7 9\n9 4\n");
    CliResult r = run_cli({"phi", "-t", tree.path()});
    CHECK(r.code == 0);
    CHECK(r.out == "2,2\n");
    CHECK(r.err.find("warning:") != std::string::npos);
}

TEST_CASE("witness subcommand output") {
    CliResult r = run_cli({"witness", "--alpha", "1,1", "--beta", "2", "--gamma", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "alpha: 1,1\nbeta: 2\ngamma: 2,3\nk_alpha_beta: 1\nk_gamma: 1\na: 1\nb: 2\n"
          "delta1: 7\ndelta2: 3\nlambda: 6.3.1\nrho1: 2,3,2\nrho2: 2,5\ncoeff_S: 4\n"
          "coeff_T: 5\n");

    CliResult strict = run_cli({"witness", "--alpha", "2", "--beta", "1,1", "--gamma", "2,3"});
    CHECK(strict.code == 2);
    CHECK(strict.err.find("swap") != std::string::npos);

    CliResult fixed =
        run_cli({"witness", "--alpha", "2", "--beta", "1,1", "--gamma", "2,3", "--normalize"});
    CHECK(fixed.code == 0);
    CHECK(fixed.out == r.out);

    CliResult json = run_cli(
        {"witness", "--alpha", "1,1", "--beta", "2", "--gamma", "2,3", "--format", "json"});
    auto j = nlohmann::json::parse(json.out);
    CHECK(j["delta1"] == 7);
    CHECK(j["lambda"] == nlohmann::json::array({6, 3, 1}));
    CHECK(j["coeff_S"] == 4);
    CHECK(j["coeff_T"] == 5);
}

TEST_CASE("verify subcommand reports and exit codes") {
    CliResult r = run_cli({"verify", "sym-lclass", "--n", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "check: sym-lclass\nn: 6\ninstances: 32\nfailures: 0\n");
    CHECK(r.err.find("elapsed:") != std::string::npos);

    CliResult json = run_cli({"verify", "palindromes", "--n", "6", "--format", "json"});
    CHECK(json.code == 0);
    CHECK(json.out ==
          "{\"check\":\"palindromes\",\"n\":6,\"instances\":8,\"failures\":[]}\n");

    CliResult missing_n = run_cli({"verify", "sym-lclass"});
    CHECK(missing_n.code == 2);
    CliResult unknown = run_cli({"verify", "nonsense", "--n", "4"});
    CHECK(unknown.code == 2);
    CliResult over_cap = run_cli({"verify", "x1", "--n", "13"});
    CHECK(over_cap.code == 2);
    CHECK(over_cap.err.find("CATPOLY_CAP_X1") != std::string::npos);

    CliResult seeded =
        run_cli({"verify", "witness-random", "--count", "10", "--max-size", "24", "--seed",
                 "7", "--jobs", "2"});
    CHECK(seeded.code == 0);
    CHECK(seeded.out.find("seed: 7") != std::string::npos);
    CHECK(seeded.out.find("instances: 10") != std::string::npos);
}

TEST_CASE("worker count never changes report bytes") {
    CliResult serial = run_cli({"verify", "main-result", "--n", "10", "--jobs", "1"});
    CliResult parallel = run_cli({"verify", "main-result", "--n", "10", "--jobs", "8"});
    CHECK(serial.out == parallel.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"nosuch"}).code == 2);
    CHECK(run_cli({"lpoly"}).code == 2);
    CHECK(run_cli({"lpoly", "-c", "0,2"}).code == 2);
    CHECK(run_cli({"phi", "-t", "/nonexistent/file"}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
    CHECK(run_cli({"lpoly", "--help"}).code == 0);
}
