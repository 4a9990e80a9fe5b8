#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qchar/cli.hpp"
#include "qchar/fermionic.hpp"
#include "qchar/qseries.hpp"

using namespace qchar;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("fermionic subcommand prints the series") {
    auto r = run({"fermionic", "--n", "1", "--k", "1", "--weight", "1*L0", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1\n1 1\n2 1\n3 1\n4 2\n5 2\n");
}

TEST_CASE("json output of a series re-parses to the in-memory value") {
    auto r = run({"parafermionic", "--n", "2", "--k", "2", "--weight", "2*L0", "--order", "6",
                  "--mu", "0,0", "--format", "json"});
    CHECK(r.code == 0);
    QSeries parsed = QSeries::from_json(r.out);
    LatticeContext ctx(2);
    HighestWeight hw{2, 2, 2, 0, 0};
    QSeries direct = parafermionic_sum(ctx, hw, Rational(6), std::vector<long long>{0, 0});
    CHECK(parsed.order() == direct.order());
    CHECK(parsed.terms() == direct.terms());
}

TEST_CASE("identical inputs give byte-identical outputs") {
    std::vector<std::string> args = {"character", "--n", "2", "--k", "2", "--weight",
                                     "1*L0+1*L1", "--order", "5", "--weight-resolved",
                                     "--format", "json"};
    auto a = run(args);
    auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"no-such-command"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"fermionic", "--n", "1"}).code == 2);  // missing required options
    auto bad_weight =
        run({"fermionic", "--n", "1", "--k", "2", "--weight", "bogus", "--order", "4"});
    CHECK(bad_weight.code == 2);
    CHECK(bad_weight.err.find("error") != std::string::npos);
    // --k inconsistent with the weight string
    CHECK(run({"fermionic", "--n", "1", "--k", "3", "--weight", "2*L0", "--order", "4"}).code ==
          2);
    // parafermionic needs k >= 2
    CHECK(run({"parafermionic", "--n", "1", "--k", "1", "--weight", "1*L0", "--order", "4"})
              .code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"enumerate", "--help"}).code == 0);
}

TEST_CASE("table subcommand renders the appendix layout") {
    auto r = run({"table", "--n", "2", "--k", "3", "--weight", "3*L0", "--max-energy", "1",
                  "--color-type", "1;2"});
    CHECK(r.code == 0);
    CHECK(r.out == "color-type | energy | charge-type | basis\n"
                   "(1;2) | 1 | (1;2) | (0_{a2} -2_{2a1})\n");
}

TEST_CASE("enumerate census text output") {
    auto r = run({"enumerate", "--n", "2", "--k", "2", "--weight", "2*L0", "--max-energy",
                  "5/2", "--grading", "parafermionic", "--color-type", "1;2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3/2 1\n5/2 2\n");
}

TEST_CASE("string both methods agree on the vacuum string") {
    auto cache = (std::filesystem::temp_directory_path() / "qchar-cli-cache").string();
    auto r = run({"string", "--n", "2", "--k", "2", "--weight", "2*L0", "--mu", "0,0",
                  "--order", "4", "--method", "both", "--cache-dir", cache});
    CHECK(r.code == 0);
    CHECK(r.out.find("fermionic (prefactor exponent -2/15)") != std::string::npos);
    CHECK(r.out.find("oracle (depth") != std::string::npos);
    CHECK(r.out.find("AGREE to order 4") != std::string::npos);
}

TEST_CASE("special-l1l2 formula output and frozen leading terms") {
    auto r = run({"special-l1l2", "--order", "2", "--method", "formula"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0 3\n") != std::string::npos);
    CHECK(r.out.find("1/2 2\n") != std::string::npos);
}

TEST_CASE("verify subcommand exit codes and text") {
    auto r = run({"verify", "--suite", "durfee", "--order", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[pass] durfee") != std::string::npos);
    auto j = run({"verify", "--suite", "cartan-inverse", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out.find("\"status\": \"pass\"") != std::string::npos);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("oracle-build writes the cache where QCHAR_CACHE_DIR points") {
    namespace fs = std::filesystem;
    std::string dir = (fs::temp_directory_path() / "qchar-env-cache").string();
    fs::remove_all(dir);
    setenv("QCHAR_CACHE_DIR", dir.c_str(), 1);
    auto r = run({"oracle-build", "--n", "1", "--k", "1", "--weight", "1*L0", "--max-depth",
                  "4"});
    unsetenv("QCHAR_CACHE_DIR");
    CHECK(r.code == 0);
    CHECK(r.out.find("depth 4 dim") != std::string::npos);
    bool found = false;
    if (fs::exists(dir))
        for (const auto& e : fs::directory_iterator(dir)) found |= e.path().extension() == ".json";
    CHECK(found);
    fs::remove_all(dir);
}

TEST_CASE("config file supplies subcommand options") {
    namespace fs = std::filesystem;
    std::string path = (fs::temp_directory_path() / "qchar-test-config.ini").string();
    {
        std::ofstream out(path);
        out << "[fermionic]\n"
               "n=1\n"
               "k=1\n"
               "weight=\"1*L0\"\n"
               "order=5\n";
    }
    auto r = run({"--config", path, "fermionic"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1\n1 1\n2 1\n3 1\n4 2\n5 2\n");
    fs::remove(path);
}
