#include "doctest.h"

#include "cli.hpp"
#include "stackhom/builtins.hpp"
#include "stackhom/report.hpp"

#include <cstdio>
#include <fstream>

using namespace stackhom;

TEST_CASE("spacefile: every builtin round-trips") {
    for (const Builtin& b : builtins()) {
        std::string text = b.file.serialize();
        SpaceFile back = SpaceFile::parse(text);
        CHECK(back == b.file);
        CHECK(back.serialize() == text);
    }
}

TEST_CASE("spacefile: builtin geometry and actions validate") {
    for (const Builtin& b : builtins()) {
        SimplicialPair p = b.file.pair();
        CHECK(p.ambient().num_vertices() > 0);
        auto action = b.file.action(p.ambient());
        if (b.file.has_group()) {
            REQUIRE(action.has_value());
            CHECK(action->preserves(p));
        } else {
            CHECK_FALSE(action.has_value());
        }
        auto o = b.file.orientation_signs(p.ambient());
        if (!b.file.orientation.empty()) {
            REQUIRE(o.has_value());
            fundamental_chain(p.ambient(), o, Coefficients::integers());
        }
    }
}

TEST_CASE("spacefile: parse errors") {
    CHECK_THROWS_AS(SpaceFile::parse(""), ParseError);
    CHECK_THROWS_AS(SpaceFile::parse("SPACE x\nVERTICES\na\nEND\n"), ParseError); // no facets
    CHECK_THROWS_AS(SpaceFile::parse("SPACE x\nVERTICES\na\nFACETS\na\n"), ParseError); // no END
    CHECK_THROWS_AS(SpaceFile::parse("SPACE x\nstray\nEND\n"), ParseError);
    // table group with a non-generating action set is rejected
    std::string bad = "SPACE x\nVERTICES\na\nFACETS\na\nGROUP table 2\nTABLE\n0 1\n1 0\nACTION 0 a\nEND\n";
    SpaceFile f = SpaceFile::parse(bad);
    CHECK_THROWS_AS(f.action(f.complex()), ParseError);
}

TEST_CASE("spacefile: table groups work end to end") {
    std::string text =
        "SPACE twisted\nVERTICES\na b\nFACETS\na b\nGROUP table 2\nTABLE\n0 1\n1 0\n"
        "ACTION 1 b a\nEND\n";
    SpaceFile f = SpaceFile::parse(text);
    auto action = f.action(f.complex());
    REQUIRE(action.has_value());
    CHECK(action->group().order() == 2);
    CHECK(action->perm(1) == std::vector<int>{1, 0});
}

TEST_CASE("cli: determinism across repeated runs") {
    std::vector<std::vector<std::string>> commands = {
        {"list-builtins"},
        {"compute", "builtin:torus", "--theory", "chains", "--coeff", "z"},
        {"compute", "builtin:rp2", "--theory", "cochains", "--coeff", "z", "--format", "records"},
        {"verify", "builtin:circle", "--check", "descent", "--cover", "arcs:2"},
        {"equivariant", "builtin:circle_flip", "--variant", "homology", "--coeff", "f2",
         "--window", "-2..1"},
    };
    for (const auto& cmd : commands) {
        cli::CliResult a = cli::run(cmd);
        cli::CliResult b = cli::run(cmd);
        CHECK(a.output == b.output);
        CHECK(a.exit_code == b.exit_code);
    }
}

TEST_CASE("cli: exit code contract") {
    CHECK(cli::run({"compute", "builtin:point", "--theory", "chains"}).exit_code == 0);
    CHECK(cli::run({"compute", "builtin:nonesuch", "--theory", "chains"}).exit_code == 2);
    CHECK(cli::run({"compute", "builtin:point", "--theory", "waffles"}).exit_code == 2);
    CHECK(cli::run({"compute", "builtin:point"}).exit_code == 2); // missing --theory
    // incompatible theory: chains on a non-compact pair
    CHECK(cli::run({"compute", "builtin:line_pair", "--theory", "chains"}).exit_code == 3);
    // missing check input
    CHECK(cli::run({"verify", "builtin:sphere2", "--check", "localization"}).exit_code == 3);
    // group attachment to a space that already has one
    CHECK(cli::run({"equivariant", "builtin:circle_flip", "--variant", "homology", "--group",
                    "cyclic:2", "--coeff", "f2", "--window", "-1..0"})
              .exit_code == 3);
    // bad coefficient spec
    CHECK(cli::run({"compute", "builtin:point", "--theory", "chains", "--coeff", "f9"})
              .exit_code == 2);
}

TEST_CASE("cli: verification failure exits 4") {
    // complete graph K5: pure one-dimensional, the all-edges chain is a
    // mod-2 cycle, but duality fails
    std::string k5 = "SPACE k5\nVERTICES\nk0 k1 k2 k3 k4\nFACETS\n";
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5 += "k" + std::to_string(i) + " k" + std::to_string(j) + "\n";
    k5 += "END\n";
    std::string path = "/tmp/stackhom_k5_test.space";
    {
        std::ofstream out(path);
        out << k5;
    }
    cli::CliResult r = cli::run({"verify", path, "--check", "poincare", "--coeff", "f2"});
    CHECK(r.exit_code == 4);
    CHECK(r.output.find("FAIL") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: window restricts reported degrees") {
    cli::CliResult r = cli::run(
        {"compute", "builtin:torus", "--theory", "chains", "--coeff", "z", "--window", "1..2"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("H_1 = Z^2") != std::string::npos);
    CHECK(r.output.find("H_2 = Z\n") != std::string::npos);
    CHECK(r.output.find("H_0") == std::string::npos);
}

TEST_CASE("cli: records format") {
    cli::CliResult r = cli::run(
        {"compute", "builtin:rp2", "--theory", "chains", "--coeff", "z", "--format", "records"});
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("record group 0 free=1 torsion=\n") != std::string::npos);
    CHECK(r.output.find("record group 1 free=0 torsion=2\n") != std::string::npos);
    CHECK(r.output.find("record group 2 free=0 torsion=\n") != std::string::npos);
}

TEST_CASE("cli: spec examples print the expected tables") {
    cli::CliResult point = cli::run({"compute", "builtin:point", "--theory", "chains", "--coeff", "z"});
    CHECK(point.output.find("H_0 = Z\n") != std::string::npos);
    cli::CliResult circle = cli::run({"compute", "builtin:circle", "--theory", "chains", "--coeff", "z"});
    CHECK(circle.output.find("H_0 = Z\n") != std::string::npos);
    CHECK(circle.output.find("H_1 = Z\n") != std::string::npos);
    cli::CliResult line = cli::run({"compute", "builtin:line_pair", "--theory", "bm", "--coeff", "z"});
    CHECK(line.output.find("H^BM_1 = Z\n") != std::string::npos);
    cli::CliResult eq = cli::run({"equivariant", "builtin:point", "--group", "cyclic:2",
                                  "--variant", "homology", "--coeff", "f2", "--window", "-4..0"});
    CHECK(eq.exit_code == 0);
    CHECK(eq.output.find("stabilization: N=6 vs N=8: stabilized\n") != std::string::npos);
}

TEST_CASE("digest: stable and input-sensitive") {
    CHECK(digest64("") == "cbf29ce484222325");
    CHECK(digest64("a") != digest64("b"));
    const Builtin& b = find_builtin("circle");
    CHECK(digest64(b.file.serialize()) == digest64(b.file.serialize()));
}
