#include "stackhom/builtins.hpp"

#include <fmt/core.h>

namespace stackhom {

namespace {

std::vector<std::string> hex_names() { return {"v0", "v1", "v2", "v3", "v4", "v5"}; }

std::vector<std::vector<std::string>> hex_facets() {
    std::vector<std::vector<std::string>> f;
    for (int i = 0; i < 6; ++i) f.push_back({fmt::format("v{}", i), fmt::format("v{}", (i + 1) % 6)});
    return f;
}

void attach_coherent_orientation(SpaceFile& f) {
    SimplicialComplex x = f.complex();
    auto o = coherent_orientation(x);
    if (!o) throw Error("builtin expected to be orientable");
    const int d = x.dim();
    for (long i = 0; i < x.num_faces(d); ++i) {
        std::vector<std::string> names;
        for (int v : x.face(d, i)) names.push_back(x.vertex_names()[static_cast<size_t>(v)]);
        f.orientation.emplace_back(o->sign[static_cast<size_t>(i)], std::move(names));
    }
}

SpaceFile make_point() {
    SpaceFile f;
    f.name = "point";
    f.vertices = {"p"};
    f.facets = {{"p"}};
    return f;
}

SpaceFile make_interval() {
    SpaceFile f;
    f.name = "interval";
    f.vertices = {"a", "b"};
    f.facets = {{"a", "b"}};
    return f;
}

SpaceFile make_line_pair() {
    SpaceFile f = make_interval();
    f.name = "line_pair";
    f.at_infinity = {{"a"}, {"b"}};
    return f;
}

SpaceFile make_circle() {
    SpaceFile f;
    f.name = "circle";
    f.vertices = hex_names();
    f.facets = hex_facets();
    attach_coherent_orientation(f);
    return f;
}

SpaceFile make_disk_pair() {
    SpaceFile f;
    f.name = "disk_pair";
    f.vertices = hex_names();
    f.vertices.push_back("c");
    for (int i = 0; i < 6; ++i)
        f.facets.push_back({fmt::format("v{}", i), fmt::format("v{}", (i + 1) % 6), "c"});
    f.at_infinity = hex_facets();
    return f;
}

SpaceFile make_sphere2() {
    SpaceFile f;
    f.name = "sphere2";
    f.vertices = {"t0", "t1", "t2", "t3"};
    f.facets = {{"t0", "t1", "t2"}, {"t0", "t1", "t3"}, {"t0", "t2", "t3"}, {"t1", "t2", "t3"}};
    attach_coherent_orientation(f);
    return f;
}

SpaceFile make_torus() {
    SimplicialComplex hex = SpaceFile{"h", hex_names(), hex_facets(), {}, {}, {}}.complex();
    ProductResult pr = ez_aw(hex, hex, Coefficients::integers());
    SpaceFile f;
    f.name = "torus";
    f.vertices = pr.product.vertex_names();
    for (const Simplex& s : pr.product.facets()) {
        std::vector<std::string> names;
        for (int v : s) names.push_back(f.vertices[static_cast<size_t>(v)]);
        f.facets.push_back(std::move(names));
    }
    attach_coherent_orientation(f);
    return f;
}

SpaceFile make_rp2() {
    SpaceFile f;
    f.name = "rp2";
    f.vertices = {"r1", "r2", "r3", "r4", "r5", "r6"};
    auto t = [&](int a, int b, int c) {
        return std::vector<std::string>{f.vertices[static_cast<size_t>(a)],
                                        f.vertices[static_cast<size_t>(b)],
                                        f.vertices[static_cast<size_t>(c)]};
    };
    f.facets = {t(0, 1, 2), t(0, 1, 3), t(0, 2, 4), t(0, 3, 5), t(0, 4, 5),
                t(1, 2, 5), t(1, 3, 4), t(1, 4, 5), t(2, 3, 4), t(2, 3, 5)};
    return f;
}

SpaceFile make_sphere2_antipodal() {
    SpaceFile f;
    f.name = "sphere2_antipodal";
    for (int i = 0; i < 12; ++i) f.vertices.push_back(fmt::format("i{}", i));
    auto t = [&](int a, int b, int c) {
        return std::vector<std::string>{f.vertices[static_cast<size_t>(a)],
                                        f.vertices[static_cast<size_t>(b)],
                                        f.vertices[static_cast<size_t>(c)]};
    };
    for (int i = 0; i < 5; ++i) {
        int u = 2 + i, u1 = 2 + (i + 1) % 5;
        int l = 7 + i, l1 = 7 + (i + 1) % 5;
        f.facets.push_back(t(0, u, u1));
        f.facets.push_back(t(1, l, l1));
        f.facets.push_back(t(u, l, u1));
        f.facets.push_back(t(l, l1, u1));
    }
    attach_coherent_orientation(f);
    f.group.kind = SpaceGroup::Kind::Cyclic;
    f.group.cyclic_order = 2;
    std::vector<int> p(12);
    p[0] = 1;
    p[1] = 0;
    for (int i = 0; i < 5; ++i) {
        p[static_cast<size_t>(2 + i)] = 7 + (i + 2) % 5;
        p[static_cast<size_t>(7 + (i + 2) % 5)] = 2 + i;
    }
    std::vector<std::string> images;
    for (int i = 0; i < 12; ++i) images.push_back(fmt::format("i{}", p[static_cast<size_t>(i)]));
    f.group.actions.emplace_back("g", std::move(images));
    return f;
}

SpaceFile make_circle_flip() {
    SpaceFile f = make_circle();
    f.name = "circle_flip";
    f.group.kind = SpaceGroup::Kind::Cyclic;
    f.group.cyclic_order = 2;
    std::vector<std::string> images;
    for (int i = 0; i < 6; ++i) images.push_back(fmt::format("v{}", 5 - i));
    f.group.actions.emplace_back("g", std::move(images));
    return f;
}

SpaceFile make_line_pair_flip() {
    SpaceFile f = make_line_pair();
    f.name = "line_pair_flip";
    f.group.kind = SpaceGroup::Kind::Cyclic;
    f.group.cyclic_order = 2;
    f.group.actions.emplace_back("g", std::vector<std::string>{"b", "a"});
    return f;
}

std::vector<Builtin> make_all() {
    return {
        {"point", "a single vertex", make_point()},
        {"interval", "compact interval [a,b]", make_interval()},
        {"circle", "hexagon model of S^1, oriented", make_circle()},
        {"disk_pair", "(disk, boundary circle): Borel-Moore model of R^2", make_disk_pair()},
        {"sphere2", "boundary of the 3-simplex, oriented", make_sphere2()},
        {"torus", "product of two hexagons, oriented", make_torus()},
        {"rp2", "6-vertex projective plane", make_rp2()},
        {"sphere2_antipodal", "icosahedron with the free antipodal Z/2-action",
         make_sphere2_antipodal()},
        {"line_pair", "(interval, endpoints): Borel-Moore model of R", make_line_pair()},
        {"circle_flip", "hexagon with the reflecting Z/2-action", make_circle_flip()},
        {"line_pair_flip", "line pair with the endpoint-swapping Z/2-action",
         make_line_pair_flip()},
    };
}

} // namespace

const std::vector<Builtin>& builtins() {
    static const std::vector<Builtin> all = make_all();
    return all;
}

const Builtin& find_builtin(const std::string& name) {
    for (const Builtin& b : builtins())
        if (b.name == name) return b;
    throw ParseError(fmt::format("unknown builtin '{}'", name));
}

} // namespace stackhom
