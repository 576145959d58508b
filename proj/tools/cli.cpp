#include "cli.hpp"

#include "stackhom/builtins.hpp"
#include "stackhom/equivariant.hpp"
#include "stackhom/report.hpp"
#include "stackhom/theories.hpp"

#include <CLI11.hpp>
#include <fmt/core.h>

#include <fstream>
#include <sstream>

namespace stackhom::cli {

namespace {

Coefficients parse_coeff(const std::string& s) {
    if (s == "z") return Coefficients::integers();
    if (s == "q") return Coefficients::rationals();
    if (s.size() > 1 && s[0] == 'f') {
        long p = 0;
        try {
            p = std::stol(s.substr(1));
        } catch (...) {
            throw ParseError(fmt::format("bad coefficient spec '{}'", s));
        }
        try {
            return Coefficients::prime_field(p);
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError(fmt::format("bad coefficient spec '{}' (use z, q, or f<p>)", s));
}

std::pair<int, int> parse_window(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) throw ParseError("window must read a..b");
    try {
        int lo = std::stoi(s.substr(0, pos));
        int hi = std::stoi(s.substr(pos + 2));
        if (lo > hi) throw ParseError("window must read a..b with a <= b");
        return {lo, hi};
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("window must read a..b");
    }
}

SpaceFile load_space(const std::string& spec) {
    if (spec.rfind("builtin:", 0) == 0) return find_builtin(spec.substr(8)).file;
    std::ifstream in(spec);
    if (!in) throw ParseError(fmt::format("cannot read space file '{}'", spec));
    std::stringstream buf;
    buf << in.rdbuf();
    return SpaceFile::parse(buf.str());
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "vertex:3" or "faces:v0.v1;v2" into facet lists of the closed subcomplex
std::vector<Simplex> parse_closed(const std::string& spec, const SimplicialComplex& x) {
    if (spec.rfind("vertex:", 0) == 0) {
        long v = std::stol(spec.substr(7));
        if (v < 0 || v >= x.num_vertices()) throw ParseError("closed vertex index out of range");
        return {{static_cast<int>(v)}};
    }
    if (spec.rfind("faces:", 0) == 0) {
        std::vector<Simplex> out;
        for (const std::string& face : split(spec.substr(6), ';')) {
            Simplex s;
            for (const std::string& v : split(face, '.')) s.push_back(x.vertex_index(v));
            out.push_back(std::move(s));
        }
        return out;
    }
    throw ParseError("closed subcomplex reads vertex:<k> or faces:<v.w;...>");
}

// "arcs:2" / "hemispheres:2" / "chunks:k": contiguous facet-list chunks;
// "pieces:<face,face;face>": explicit facet lists
std::vector<std::vector<Simplex>> parse_cover(const std::string& spec,
                                              const SimplicialComplex& x) {
    auto chunked = [&](int k) {
        std::vector<Simplex> facets = x.facets();
        if (k < 1 || k > static_cast<int>(facets.size()))
            throw ParseError("cover chunk count out of range");
        // overlapping closed chunks: consecutive runs, each extended by one
        // facet so neighbours share a face
        std::vector<std::vector<Simplex>> cover(static_cast<size_t>(k));
        size_t n = facets.size();
        for (size_t i = 0; i < n; ++i)
            cover[i * static_cast<size_t>(k) / n].push_back(facets[i]);
        return cover;
    };
    for (const char* prefix : {"arcs:", "hemispheres:", "chunks:"}) {
        if (spec.rfind(prefix, 0) == 0)
            return chunked(std::stoi(spec.substr(std::string(prefix).size())));
    }
    if (spec.rfind("pieces:", 0) == 0) {
        std::vector<std::vector<Simplex>> out;
        for (const std::string& piece : split(spec.substr(7), ';')) {
            std::vector<Simplex> facets;
            for (const std::string& face : split(piece, ',')) {
                Simplex s;
                for (const std::string& v : split(face, '.')) s.push_back(x.vertex_index(v));
                facets.push_back(std::move(s));
            }
            out.push_back(std::move(facets));
        }
        return out;
    }
    throw ParseError("cover reads arcs:<k>, hemispheres:<k>, chunks:<k> or pieces:<...>");
}

std::string echo_line(const std::vector<std::string>& args) {
    std::string out = "stackhom";
    for (const auto& a : args) out += " " + a;
    return out + "\n";
}

struct Request {
    std::string space;
    std::string coeff = "z";
    std::string format = "text";
    std::string theory;
    std::string window;
    std::string check;
    std::string closed;
    std::string cover;
    std::string variant;
    std::string group;
    int rank = 1;
    int stage = 0;
};

std::string render(const TheoryReport& rep, const Request& rq) {
    return rq.format == "records" ? render_records(rep) : render_text(rep);
}

int run_compute(const Request& rq, std::string& out) {
    SpaceFile f = load_space(rq.space);
    Coefficients c = parse_coeff(rq.coeff);
    TheorySelector t;
    try {
        t = theory_from_string(rq.theory);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    TheoryReport rep = compute_theory(f.pair(), t, c);
    rep.input_digest = digest64(f.serialize());
    if (!rq.window.empty()) {
        auto [lo, hi] = parse_window(rq.window);
        if (rep.cohomological) rep.groups.set_window(-hi, -lo);
        else rep.groups.set_window(lo, hi);
    }
    out += render(rep, rq);
    return 0;
}

int run_verify(const Request& rq, std::string& out) {
    SpaceFile f = load_space(rq.space);
    Coefficients c = parse_coeff(rq.coeff);
    SimplicialPair pair = f.pair();
    TheoryReport rep;
    if (rq.check == "localization") {
        if (rq.closed.empty()) throw Error("localization needs --closed");
        if (!pair.boundary_empty()) throw Error("theory requires compact model");
        rep = localization_check(pair.ambient(), parse_closed(rq.closed, pair.ambient()), c);
    } else if (rq.check == "homotopy") {
        rep = homotopy_invariance_check(pair, rq.rank, c);
    } else if (rq.check == "poincare") {
        if (!pair.boundary_empty()) throw Error("theory requires compact model");
        rep = poincare_duality_check(pair.ambient(), f.orientation_signs(pair.ambient()), c);
    } else if (rq.check == "descent") {
        if (rq.cover.empty()) throw Error("descent needs --cover");
        if (!pair.boundary_empty()) throw Error("theory requires compact model");
        rep = proper_descent_check(pair.ambient(), parse_cover(rq.cover, pair.ambient()), c);
    } else if (rq.check == "forget-supports") {
        rep = forget_supports_check(pair, c);
    } else {
        throw ParseError(fmt::format("unknown check '{}'", rq.check));
    }
    rep.input_digest = digest64(f.serialize());
    out += render(rep, rq);
    return rep.all_pass() ? 0 : 4;
}

int run_equivariant(const Request& rq, std::string& out) {
    SpaceFile f = load_space(rq.space);
    Coefficients c = parse_coeff(rq.coeff);
    SimplicialPair pair = f.pair();
    std::optional<GroupAction> action = f.action(pair.ambient());
    if (!rq.group.empty()) {
        if (action) throw Error("space already carries a group");
        if (rq.group.rfind("cyclic:", 0) != 0)
            throw ParseError("group attachment reads cyclic:<m>");
        int m = std::stoi(rq.group.substr(7));
        if (m < 1) throw ParseError("cyclic order must be positive");
        std::vector<int> id(static_cast<size_t>(pair.ambient().num_vertices()));
        for (size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
        std::vector<std::vector<int>> perms(static_cast<size_t>(m), id);
        action = GroupAction(FiniteGroup::cyclic(m), std::move(perms), pair.ambient());
    }
    if (!action) throw Error("equivariant commands need a group");

    std::string digest = digest64(f.serialize());
    TheoryReport rep;
    if (rq.variant == "homology" || rq.variant == "bm") {
        if (rq.window.empty()) throw Error("equivariant homology needs --window");
        auto [lo, hi] = parse_window(rq.window);
        rep = rq.variant == "homology" ? equivariant_homology(pair, *action, c, lo, hi)
                                       : equivariant_bm_homology(pair, *action, c, lo, hi);
    } else if (rq.variant == "stack-chains") {
        if (rq.window.empty()) throw Error("stack chains need --window 0..b");
        auto [lo, hi] = parse_window(rq.window);
        if (lo != 0) throw Error("stack chains windows start at 0");
        rep = homotopy_orbit_chains(pair, *action, c, hi + 2);
    } else if (rq.variant == "borel-compare") {
        if (rq.window.empty()) throw Error("borel compare needs --window");
        if (rq.stage < 1) throw Error("borel compare needs --stage");
        auto [lo, hi] = parse_window(rq.window);
        rep = borel_comparison(pair, *action, c, rq.stage, lo, hi);
    } else {
        throw ParseError(fmt::format("unknown variant '{}'", rq.variant));
    }
    rep.input_digest = digest;
    out += render(rep, rq);
    return rep.all_pass() ? 0 : 4;
}

int run_list_builtins(const Request& rq, std::string& out) {
    for (const Builtin& b : builtins()) {
        if (rq.format == "records")
            out += fmt::format("record builtin {}\n", b.name);
        else
            out += fmt::format("{:<20} {}\n", b.name, b.description);
    }
    return 0;
}

} // namespace

CliResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact homology of finite simplicial models and quotient stacks"};
    app.require_subcommand(1);
    Request rq;

    auto add_common = [&](CLI::App* cmd, bool with_space) {
        if (with_space) cmd->add_option("space", rq.space, "builtin:<name> or a space file")->required();
        cmd->add_option("--coeff", rq.coeff, "coefficients: z, q, or f<p>");
        cmd->add_option("--format", rq.format, "text or records")
            ->check(CLI::IsMember({"text", "records"}));
    };

    CLI::App* compute = app.add_subcommand("compute", "compute one of the four theories");
    add_common(compute, true);
    compute->add_option("--theory", rq.theory, "chains, cochains, bm, or cohc")->required();
    compute->add_option("--window", rq.window, "restrict reported degrees, a..b");

    CLI::App* verify = app.add_subcommand("verify", "verify a structural theorem");
    add_common(verify, true);
    verify->add_option("--check", rq.check,
                       "localization, homotopy, poincare, descent, or forget-supports")
        ->required();
    verify->add_option("--closed", rq.closed, "closed subcomplex: vertex:<k> or faces:<...>");
    verify->add_option("--cover", rq.cover, "cover: arcs:<k>, hemispheres:<k>, or pieces:<...>");
    verify->add_option("--rank", rq.rank, "bundle rank for the homotopy check");

    CLI::App* equivariant = app.add_subcommand("equivariant", "equivariant theories");
    add_common(equivariant, true);
    equivariant->add_option("--variant", rq.variant,
                            "homology, bm, stack-chains, or borel-compare")
        ->required();
    equivariant->add_option("--window", rq.window, "degree window a..b");
    equivariant->add_option("--stage", rq.stage, "Borel model stage n");
    equivariant->add_option("--group", rq.group, "attach a trivial action: cyclic:<m>");

    CLI::App* list = app.add_subcommand("list-builtins", "list the shipped spaces");
    add_common(list, false);

    CliResult res;
    res.output = echo_line(args);
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream os;
        os << app.help();
        res.output += os.str();
        res.exit_code = 0;
        return res;
    } catch (const CLI::ParseError& e) {
        res.output += fmt::format("error: {}\n", e.what());
        res.exit_code = 2;
        return res;
    }

    try {
        if (compute->parsed()) res.exit_code = run_compute(rq, res.output);
        else if (verify->parsed()) res.exit_code = run_verify(rq, res.output);
        else if (equivariant->parsed()) res.exit_code = run_equivariant(rq, res.output);
        else if (list->parsed()) res.exit_code = run_list_builtins(rq, res.output);
    } catch (const StabilizationError& e) {
        res.output += fmt::format("error: {}\n", e.what());
        TheoryReport a, b;
        a.command = fmt::format("partial answer at N={}", e.n);
        a.groups = e.at_n;
        a.coeff = parse_coeff(rq.coeff);
        b.command = fmt::format("partial answer at N={}", e.n + 2);
        b.groups = e.at_longer;
        b.coeff = a.coeff;
        res.output += render_text(a) + render_text(b);
        res.exit_code = 5;
    } catch (const ParseError& e) {
        res.output += fmt::format("error: {}\n", e.what());
        res.exit_code = 2;
    } catch (const Error& e) {
        res.output += fmt::format("error: {}\n", e.what());
        res.exit_code = 3;
    }
    return res;
}

} // namespace stackhom::cli
