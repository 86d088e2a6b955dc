#include <doctest.h>

#include <fstream>
#include <sstream>

#include "wittkit/cli.hpp"

using namespace wittkit;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("supreme find prints the canonical representative") {
    auto r = run({"supreme", "find", "--model", "q3r"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "<1,1,-3,-3>\n");
}

TEST_CASE("torsion enumerate prints canonical classes in canonical order") {
    auto r = run({"torsion", "enumerate", "--model", "q5r"});
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::vector<std::string> reps;
    std::string line;
    while (std::getline(lines, line)) reps.push_back(line);
    CHECK(reps.size() == 8);
    CHECK(reps.front() == "<>");
    CHECK(reps.back() == "<1,2,-5,-2*5>");

    // Byte-identical on repeat invocations.
    CHECK(run({"torsion", "enumerate", "--model", "q5r"}).out == r.out);
}

TEST_CASE("form queries") {
    auto r = run({"form", "isotropic", "--model", "q3r", "--form", "<1,1,1,-3>"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "true\n");

    r = run({"form", "isometric", "--model", "q3r", "--form", "<<3,-1>>", "--other",
             "<1,1,-3,-3>"});
    CHECK(r.out == "true\n");

    r = run({"form", "decompose", "--model", "q3r", "--form", "<1,1,-3,-3,1,-1>", "--machine"});
    CHECK(r.out.find("witt_index=1") != std::string::npos);
    CHECK(r.out.find("anisotropic_part=<1,1,-3,-3>") != std::string::npos);

    r = run({"form", "represents", "--model", "q3r", "--form", "<1,1>", "--element", "3"});
    CHECK(r.out == "false\n");
    r = run({"form", "represents", "--model", "q3r", "--form", "<1,1>"});
    CHECK(r.out == "D = 1,2\n");

    r = run({"form", "pfister", "--model", "q5r", "--form", "<1,-2,5,-2*5>"});
    CHECK(r.out == "<<2,5>>\n");
}

TEST_CASE("invariants report") {
    auto r = run({"invariants", "--model", "q3r", "--machine"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("u=4\n") != std::string::npos);
    CHECK(r.out.find("p=3\n") != std::string::npos);
    CHECK(r.out.find("h=4\n") != std::string::npos);
    CHECK(r.out.find("hasse_u=4\n") != std::string::npos);
    CHECK(r.out.find("chain_indices=2,2\n") != std::string::npos);

    r = run({"invariants", "--model", "reals-st", "--machine", "--hasse-cap", "8"});
    CHECK(r.out.find("hasse_u=>=8\n") != std::string::npos);
}

TEST_CASE("realmax verdicts") {
    auto r = run({"realmax", "--model", "q3r", "--form", "<1,-3>", "--machine"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("verdict=false") != std::string::npos);
    CHECK(r.out.find("witness=<1,-2>") != std::string::npos);
    r = run({"realmax", "--model", "q3r", "--form", "<1,1,-3,-3>"});
    CHECK(r.out == "2-real-maximal\n");
}

TEST_CASE("model management and extension output") {
    auto r = run({"model", "list"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("q3r\n") != std::string::npos);

    r = run({"model", "show", "--model", "minimal-real"});
    CHECK(r.out ==
          "model minimal-real\ngenerators -1 2\nminus_one -1\nsymbol_rank 1\nq -1 -1 1\n");

    r = run({"model", "validate", "--model", "q5r"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("formally_real=true") != std::string::npos);

    r = run({"extend", "--model", "minimal-real", "--var", "t"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("model minimal-real((t))\n") == 0);
    CHECK(r.out.find("generators -1 2 t\n") != std::string::npos);

    // A failing validation exits 2 and prints the witness.
    const std::string bad =
        "model broken\ngenerators -1 2\nminus_one -1\nsymbol_rank 1\nq -1 -1 1\nq 2 2 1\n";
    {
        std::ofstream f("broken_model.txt");
        f << bad;
    }
    r = run({"model", "validate", "--file", "broken_model.txt"});
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({}).exit_code == 1);                                    // usage error
    CHECK(run({"model"}).exit_code == 1);                             // missing subcommand
    CHECK(run({"supreme", "find", "--model", "zzz"}).exit_code == 2); // unknown model
    CHECK(run({"form", "isotropic", "--model", "q3r", "--form", "<oops>"}).exit_code == 2);
    auto r = run({"check-theorems", "--models", "minimal-real"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ALL PASS") != std::string::npos);
}

TEST_CASE("supreme verify reports the structural properties") {
    auto r = run({"supreme", "verify", "--model", "q3r"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("u-invariant equals dim of the supreme form") != std::string::npos);

    r = run({"supreme", "verify", "--model", "reals"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "none\n");
}

TEST_CASE("extend --times numbers the variables") {
    auto r = run({"extend", "--model", "reals", "--var", "v", "--times", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("generators -1 v1 v2\n") != std::string::npos);
}

TEST_CASE("check-theorems covers extensions and skips pythagorean models") {
    auto r = run({"check-theorems", "--models", "reals"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("SKIPPED") != std::string::npos);

    r = run({"check-theorems", "--models", "minimal-real", "--extend", "t"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("residue") != std::string::npos);

    // Deterministic output across identical invocations.
    auto again = run({"check-theorems", "--models", "minimal-real", "--extend", "t"});
    CHECK(again.out == r.out);
}
