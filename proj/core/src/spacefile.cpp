#include "stackhom/spacefile.hpp"

#include <fmt/core.h>

#include <map>
#include <sstream>

namespace stackhom {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

} // namespace

SpaceFile SpaceFile::parse(const std::string& text) {
    SpaceFile f;
    std::istringstream is(text);
    std::string line;
    enum class Section { None, Vertices, Facets, AtInfinity, Orientation, Table };
    Section section = Section::None;
    bool saw_space = false, done = false;
    int table_rows = 0;

    while (std::getline(is, line)) {
        if (done) {
            if (!tokens(line).empty()) throw ParseError("content after END");
            continue;
        }
        std::vector<std::string> ts = tokens(line);
        if (ts.empty() || ts[0][0] == '#') continue;
        const std::string& head = ts[0];
        if (head == "SPACE") {
            if (saw_space) throw ParseError("duplicate SPACE header");
            if (ts.size() != 2) throw ParseError("SPACE expects one name");
            f.name = ts[1];
            saw_space = true;
            continue;
        }
        if (!saw_space) throw ParseError("file must start with SPACE <name>");
        if (head == "VERTICES") {
            section = Section::Vertices;
            continue;
        }
        if (head == "FACETS") {
            section = Section::Facets;
            continue;
        }
        if (head == "AT_INFINITY") {
            section = Section::AtInfinity;
            continue;
        }
        if (head == "ORIENTATION") {
            section = Section::Orientation;
            continue;
        }
        if (head == "GROUP") {
            if (ts.size() != 3) throw ParseError("GROUP expects a kind and a size");
            if (ts[1] == "cyclic") {
                f.group.kind = SpaceGroup::Kind::Cyclic;
                f.group.cyclic_order = std::stoi(ts[2]);
                if (f.group.cyclic_order < 1) throw ParseError("cyclic order must be positive");
            } else if (ts[1] == "table") {
                f.group.kind = SpaceGroup::Kind::Table;
                f.group.table_size = std::stoi(ts[2]);
                if (f.group.table_size < 1) throw ParseError("table size must be positive");
            } else {
                throw ParseError(fmt::format("unknown group kind '{}'", ts[1]));
            }
            section = Section::None;
            continue;
        }
        if (head == "TABLE") {
            if (f.group.kind != SpaceGroup::Kind::Table)
                throw ParseError("TABLE requires GROUP table");
            section = Section::Table;
            table_rows = 0;
            continue;
        }
        if (head == "ACTION") {
            if (f.group.kind == SpaceGroup::Kind::None)
                throw ParseError("ACTION requires a GROUP");
            if (ts.size() != 2 + f.vertices.size())
                throw ParseError("ACTION expects an element label and one image per vertex");
            f.group.actions.emplace_back(
                ts[1], std::vector<std::string>(ts.begin() + 2, ts.end()));
            section = Section::None;
            continue;
        }
        if (head == "END") {
            done = true;
            continue;
        }
        switch (section) {
            case Section::Vertices:
                for (const auto& t : ts) f.vertices.push_back(t);
                break;
            case Section::Facets:
                f.facets.push_back(ts);
                break;
            case Section::AtInfinity:
                f.at_infinity.push_back(ts);
                break;
            case Section::Orientation: {
                if (ts.size() < 2 || (ts[0] != "+" && ts[0] != "-"))
                    throw ParseError("orientation lines read '<+|-> v0 v1 ...'");
                f.orientation.emplace_back(ts[0] == "+" ? 1 : -1,
                                           std::vector<std::string>(ts.begin() + 1, ts.end()));
                break;
            }
            case Section::Table: {
                if (static_cast<int>(ts.size()) != f.group.table_size)
                    throw ParseError("table row has the wrong length");
                for (const auto& t : ts) {
                    int v = std::stoi(t);
                    if (v < 0 || v >= f.group.table_size)
                        throw ParseError("table entry out of range");
                    f.group.table.push_back(v);
                }
                if (++table_rows > f.group.table_size) throw ParseError("too many table rows");
                break;
            }
            case Section::None:
                throw ParseError(fmt::format("unexpected line '{}'", line));
        }
    }
    if (!saw_space) throw ParseError("file must start with SPACE <name>");
    if (!done) throw ParseError("missing END");
    if (f.vertices.empty()) throw ParseError("no vertices declared");
    if (f.facets.empty()) throw ParseError("no facets declared");
    if (f.group.kind == SpaceGroup::Kind::Table &&
        static_cast<int>(f.group.table.size()) != f.group.table_size * f.group.table_size)
        throw ParseError("incomplete multiplication table");
    if (f.group.kind != SpaceGroup::Kind::None && f.group.actions.empty())
        throw ParseError("GROUP without ACTION lines");
    return f;
}

std::string SpaceFile::serialize() const {
    std::string out;
    out += "SPACE " + name + "\n";
    out += "VERTICES\n";
    for (size_t i = 0; i < vertices.size(); ++i)
        out += vertices[i] + (i + 1 == vertices.size() ? "\n" : " ");
    out += "FACETS\n";
    for (const auto& fct : facets) {
        for (size_t i = 0; i < fct.size(); ++i) out += fct[i] + (i + 1 == fct.size() ? "\n" : " ");
    }
    if (!at_infinity.empty()) {
        out += "AT_INFINITY\n";
        for (const auto& fct : at_infinity) {
            for (size_t i = 0; i < fct.size(); ++i)
                out += fct[i] + (i + 1 == fct.size() ? "\n" : " ");
        }
    }
    if (!orientation.empty()) {
        out += "ORIENTATION\n";
        for (const auto& [sign, fct] : orientation) {
            out += sign > 0 ? "+" : "-";
            for (const auto& v : fct) out += " " + v;
            out += "\n";
        }
    }
    if (group.kind == SpaceGroup::Kind::Cyclic) {
        out += fmt::format("GROUP cyclic {}\n", group.cyclic_order);
    } else if (group.kind == SpaceGroup::Kind::Table) {
        out += fmt::format("GROUP table {}\n", group.table_size);
        out += "TABLE\n";
        for (int i = 0; i < group.table_size; ++i) {
            for (int j = 0; j < group.table_size; ++j)
                out += std::to_string(group.table[static_cast<size_t>(i) * group.table_size + j]) +
                       (j + 1 == group.table_size ? "\n" : " ");
        }
    }
    for (const auto& [label, images] : group.actions) {
        out += "ACTION " + label;
        for (const auto& v : images) out += " " + v;
        out += "\n";
    }
    out += "END\n";
    return out;
}

SimplicialComplex SpaceFile::complex() const {
    try {
        return SimplicialComplex::from_named_facets(vertices, facets);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

SimplicialPair SpaceFile::pair() const {
    SimplicialComplex x = complex();
    std::vector<Simplex> infty;
    for (const auto& fct : at_infinity) {
        Simplex s;
        for (const auto& v : fct) s.push_back(x.vertex_index(v));
        infty.push_back(std::move(s));
    }
    try {
        return SimplicialPair(std::move(x), infty);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

std::optional<Orientation> SpaceFile::orientation_signs(const SimplicialComplex& x) const {
    if (orientation.empty()) return std::nullopt;
    const int d = x.dim();
    Orientation o;
    o.sign.assign(static_cast<size_t>(x.num_faces(d)), 0);
    for (const auto& [sign, fct] : orientation) {
        Simplex s;
        for (const auto& v : fct) s.push_back(x.vertex_index(v));
        std::sort(s.begin(), s.end());
        long i = x.face_index(d, s);
        if (i < 0) throw ParseError("orientation names a non-top face");
        o.sign[static_cast<size_t>(i)] = sign;
    }
    for (int sg : o.sign)
        if (sg == 0) throw ParseError("orientation misses a top face");
    return o;
}

std::optional<GroupAction> SpaceFile::action(const SimplicialComplex& x) const {
    if (group.kind == SpaceGroup::Kind::None) return std::nullopt;
    FiniteGroup g = group.kind == SpaceGroup::Kind::Cyclic
                        ? FiniteGroup::cyclic(group.cyclic_order)
                        : FiniteGroup(group.table_size, group.table);

    auto to_perm = [&](const std::vector<std::string>& images) {
        std::vector<int> p;
        for (const auto& v : images) p.push_back(x.vertex_index(v));
        return p;
    };
    // permutations for the labeled elements
    std::map<int, std::vector<int>> known;
    std::vector<int> id(static_cast<size_t>(x.num_vertices()));
    for (long i = 0; i < x.num_vertices(); ++i) id[static_cast<size_t>(i)] = static_cast<int>(i);
    known[g.identity()] = id;
    std::vector<int> labeled;
    for (const auto& [label, images] : group.actions) {
        int elem;
        if (group.kind == SpaceGroup::Kind::Cyclic) {
            if (label != "g") throw ParseError("cyclic actions label their generator 'g'");
            elem = 1 % g.order();
        } else {
            elem = std::stoi(label);
            if (elem < 0 || elem >= g.order()) throw ParseError("ACTION element out of range");
        }
        known[elem] = to_perm(images);
        labeled.push_back(elem);
    }
    // close under products of the labeled elements
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<int, std::vector<int>>> batch(known.begin(), known.end());
        for (const auto& [a, pa] : batch)
            for (const auto& [b, pb] : batch) {
                int ab = g.mul(a, b);
                if (known.count(ab)) continue;
                std::vector<int> comp(pa.size());
                for (size_t v = 0; v < pa.size(); ++v)
                    comp[v] = pa[static_cast<size_t>(pb[v])];
                known[ab] = std::move(comp);
                grew = true;
            }
    }
    if (static_cast<int>(known.size()) != g.order())
        throw ParseError("ACTION elements do not generate the group");
    std::vector<std::vector<int>> perms;
    for (int e = 0; e < g.order(); ++e) perms.push_back(known.at(e));
    try {
        return GroupAction(std::move(g), std::move(perms), x);
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

} // namespace stackhom
