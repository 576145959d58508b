// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Target runtime well under a minute.

#include "cli.hpp"
#include "stackhom/builtins.hpp"
#include "stackhom/equivariant.hpp"
#include "stackhom/theories.hpp"

#include <fmt/core.h>

#include <functional>

using namespace stackhom;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = fmt::format(" (exception: {})", e.what());
    }
    fmt::print("[{}] criterion {:2}: {}{}\n", ok ? "PASS" : "FAIL", number, title, note);
    if (!ok) ++failures;
}

GroupAction trivial_action(const FiniteGroup& g, const SimplicialComplex& x) {
    std::vector<int> id(static_cast<size_t>(x.num_vertices()));
    for (long i = 0; i < x.num_vertices(); ++i) id[static_cast<size_t>(i)] = static_cast<int>(i);
    return GroupAction(g, std::vector<std::vector<int>>(static_cast<size_t>(g.order()), id), x);
}

SimplicialPair builtin_pair(const std::string& name) { return find_builtin(name).file.pair(); }

} // namespace

int main() {
    const Coefficients z = Coefficients::integers();
    const Coefficients q = Coefficients::rationals();
    const Coefficients f2 = Coefficients::prime_field(2);
    const Coefficients f3 = Coefficients::prime_field(3);

    criterion(1, "all four theories on the point are the coefficients in degree 0", [&] {
        SimplicialPair pt = builtin_pair("point");
        for (TheorySelector t : {TheorySelector::Chains, TheorySelector::Cochains,
                                 TheorySelector::BorelMoore, TheorySelector::CompactCochains}) {
            TheoryReport r = compute_theory(pt, t, z);
            if (!(r.groups.at(0) == HomologySummary{1, {}})) return false;
            if (r.groups.support() != std::vector<int>{0}) return false;
        }
        return true;
    });

    criterion(2, "duality dimension law on every builtin over Q and F2", [&] {
        for (const Builtin& b : builtins()) {
            SimplicialPair p = b.file.pair();
            for (const Coefficients& c : {q, f2}) {
                TheoryReport bm = compute_theory(p, TheorySelector::BorelMoore, c);
                TheoryReport cc = compute_theory(p, TheorySelector::CompactCochains, c);
                for (int i = 0; i <= p.ambient().dim(); ++i)
                    if (cc.groups.at(-i).free_rank != bm.groups.at(i).free_rank) return false;
                if (!p.boundary_empty()) continue;
                TheoryReport hom = compute_theory(p, TheorySelector::Chains, c);
                TheoryReport coh = compute_theory(p, TheorySelector::Cochains, c);
                for (int i = 0; i <= p.ambient().dim(); ++i)
                    if (coh.groups.at(-i).free_rank != hom.groups.at(i).free_rank) return false;
            }
        }
        return true;
    });

    criterion(3, "localization long exact sequence for (S2, vertex) and (circle, vertex)", [&] {
        for (const Coefficients& c : {f2, q}) {
            if (!localization_check(builtin_pair("sphere2").ambient(), {{0}}, c).all_pass())
                return false;
            if (!localization_check(builtin_pair("circle").ambient(), {{0}}, c).all_pass())
                return false;
        }
        return true;
    });

    criterion(4, "homotopy invariance for point and circle, ranks 1 and 2", [&] {
        for (const std::string& name : {std::string("point"), std::string("circle")})
            for (int r : {1, 2})
                if (!homotopy_invariance_check(builtin_pair(name), r, z).all_pass()) return false;
        return true;
    });

    criterion(5, "Poincare duality: circle and torus over Z, RP2 over F2", [&] {
        const Builtin& circle = find_builtin("circle");
        const Builtin& torus = find_builtin("torus");
        const Builtin& rp2 = find_builtin("rp2");
        SimplicialComplex cx = circle.file.complex();
        if (!poincare_duality_check(cx, circle.file.orientation_signs(cx), z).all_pass())
            return false;
        SimplicialComplex tx = torus.file.complex();
        if (!poincare_duality_check(tx, torus.file.orientation_signs(tx), z).all_pass())
            return false;
        return poincare_duality_check(rp2.file.complex(), std::nullopt, f2).all_pass();
    });

    criterion(6, "proper descent for two-piece covers of the circle and the sphere", [&] {
        std::vector<std::vector<Simplex>> arcs{{{0, 1}, {1, 2}, {2, 3}}, {{3, 4}, {4, 5}, {5, 0}}};
        if (!proper_descent_check(builtin_pair("circle").ambient(), arcs, z).all_pass())
            return false;
        std::vector<std::vector<Simplex>> hemis{{{0, 1, 2}, {0, 1, 3}}, {{0, 2, 3}, {1, 2, 3}}};
        return proper_descent_check(builtin_pair("sphere2").ambient(), hemis, z).all_pass();
    });

    criterion(7, "equivariant stabilization: H_i^{Z/2}(pt; F2) = F2 on [-8, 0]", [&] {
        SimplicialPair pt = builtin_pair("point");
        TheoryReport r = equivariant_homology(pt, trivial_action(FiniteGroup::cyclic(2),
                                                                 pt.ambient()),
                                              f2, -8, 0);
        if (!r.stabilization || !r.stabilization->stabilized) return false;
        for (int i = -8; i <= 0; ++i)
            if (!(r.groups.at(i) == HomologySummary{1, {}})) return false;
        return true;
    });

    criterion(8, "free-action collapse: antipodal sphere matches RP2 over F2", [&] {
        const Builtin& b = find_builtin("sphere2_antipodal");
        SimplicialPair p = b.file.pair();
        auto action = b.file.action(p.ambient());
        if (!action) return false;
        TheoryReport r = equivariant_homology(p, *action, f2, -4, 2);
        GradedModulePresentation rp2 =
            find_builtin("rp2").file.complex().boundary_complex(f2).homology();
        for (int i = 0; i <= 2; ++i)
            if (!(r.groups.at(i) == rp2.at(i))) return false;
        for (int i = -4; i <= -1; ++i)
            if (!r.groups.at(i).is_zero()) return false;
        return true;
    });

    criterion(9, "Borel comparison: projective stages for Z/2, lens stages for Z/3", [&] {
        SimplicialPair pt = builtin_pair("point");
        TheoryReport z2 = borel_comparison(pt, trivial_action(FiniteGroup::cyclic(2), pt.ambient()),
                                           f2, 9, -8, 0);
        if (!z2.all_pass()) return false;
        for (int i = -8; i <= 0; ++i)
            if (!(z2.groups.at(i) == HomologySummary{1, {}})) return false;
        TheoryReport z3 = borel_comparison(pt, trivial_action(FiniteGroup::cyclic(3), pt.ambient()),
                                           f3, 5, -8, 0);
        return z3.all_pass();
    });

    criterion(10, "stack chains of [pt/(Z/2)] over F2 fill the truncation window", [&] {
        SimplicialPair pt = builtin_pair("point");
        TheoryReport r = homotopy_orbit_chains(pt, trivial_action(FiniteGroup::cyclic(2),
                                                                  pt.ambient()),
                                               f2, 8);
        for (int i = 0; i <= 6; ++i)
            if (!(r.groups.at(i) == HomologySummary{1, {}})) return false;
        return r.all_pass();
    });

    criterion(11, "rational semisimplicity for Z/2, Z/3, S3 on point and circle", [&] {
        for (const FiniteGroup& g :
             {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)}) {
            for (const std::string& name : {std::string("point"), std::string("circle")}) {
                SimplicialPair p = builtin_pair(name);
                TheoryReport r =
                    equivariant_homology(p, trivial_action(g, p.ambient()), q, -3, 0);
                for (int i = -3; i < 0; ++i)
                    if (!r.groups.at(i).is_zero()) return false;
            }
        }
        return true;
    });

    criterion(12, "determinism: repeated CLI runs are byte-identical", [&] {
        std::vector<std::vector<std::string>> commands = {{"list-builtins"}};
        for (const Builtin& b : builtins()) {
            std::string space = "builtin:" + b.name;
            commands.push_back({"compute", space, "--theory", "bm", "--coeff", "z"});
            commands.push_back({"compute", space, "--theory", "cohc", "--coeff", "f2",
                                "--format", "records"});
            if (b.file.pair().boundary_empty())
                commands.push_back({"compute", space, "--theory", "chains", "--coeff", "q"});
            if (b.file.has_group())
                commands.push_back({"equivariant", space, "--variant", "stack-chains",
                                    "--coeff", "f2", "--window", "0..3"});
        }
        commands.push_back({"verify", "builtin:sphere2", "--check", "localization", "--closed",
                            "vertex:0", "--coeff", "f2"});
        commands.push_back({"verify", "builtin:torus", "--check", "poincare", "--coeff", "q"});
        commands.push_back({"verify", "builtin:circle", "--check", "descent", "--cover",
                            "arcs:2", "--coeff", "z"});
        commands.push_back({"equivariant", "builtin:point", "--group", "cyclic:2", "--variant",
                            "borel-compare", "--stage", "5", "--coeff", "f2", "--window",
                            "-4..0"});
        for (const auto& cmd : commands) {
            cli::CliResult a = cli::run(cmd);
            cli::CliResult b = cli::run(cmd);
            if (a.output != b.output || a.exit_code != b.exit_code) return false;
            if (a.exit_code != 0) return false;
        }
        return true;
    });

    fmt::print("acceptance: {}/12 criteria passed\n", 12 - failures);
    return failures == 0 ? 0 : 1;
}
