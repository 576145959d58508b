#pragma once

// Shared fixture complexes for the test suites, built by hand so they stay
// independent of the builtin library.

#include "stackhom/simplicial.hpp"

namespace stackhom::fixtures {

inline SimplicialComplex point() { return SimplicialComplex({"p"}, {{0}}); }

inline SimplicialComplex interval() { return SimplicialComplex({"a", "b"}, {{0, 1}}); }

inline SimplicialPair interval_pair() {
    return SimplicialPair(interval(), {{0}, {1}});
}

inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex({"x", "y", "z"}, {{0, 1}, {0, 2}, {1, 2}});
}

inline SimplicialComplex hexagon() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 6; ++i) facets.push_back({i, (i + 1) % 6});
    return SimplicialComplex({"v0", "v1", "v2", "v3", "v4", "v5"}, facets);
}

inline SimplicialComplex tetra_boundary() {
    return SimplicialComplex({"t0", "t1", "t2", "t3"},
                             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// minimal 6-vertex triangulation of the real projective plane
inline SimplicialComplex rp2_6() {
    return SimplicialComplex({"r1", "r2", "r3", "r4", "r5", "r6"},
                             {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
                              {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});
}

// disk as the cone over the hexagon
inline SimplicialComplex disk() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 6; ++i) facets.push_back({i, (i + 1) % 6, 6});
    return SimplicialComplex({"v0", "v1", "v2", "v3", "v4", "v5", "c"}, facets);
}

inline SimplicialPair disk_pair() {
    std::vector<Simplex> boundary;
    for (int i = 0; i < 6; ++i) boundary.push_back({i, (i + 1) % 6});
    return SimplicialPair(disk(), boundary);
}

// icosahedron: poles 0,1; upper pentagon 2..6; lower pentagon 7..11
inline SimplicialComplex icosahedron() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 5; ++i) {
        int u = 2 + i, u1 = 2 + (i + 1) % 5;
        int l = 7 + i, l1 = 7 + (i + 1) % 5;
        facets.push_back({0, u, u1});
        facets.push_back({1, l, l1});
        facets.push_back({u, l, u1});
        facets.push_back({l, l1, u1});
    }
    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i) names.push_back("i" + std::to_string(i));
    return SimplicialComplex(std::move(names), facets);
}

// the antipodal involution of the icosahedron above
inline std::vector<int> icosahedron_antipode() {
    std::vector<int> p(12);
    p[0] = 1;
    p[1] = 0;
    for (int i = 0; i < 5; ++i) {
        p[2 + i] = 7 + (i + 2) % 5;
        p[7 + (i + 2) % 5] = 2 + i;
    }
    return p;
}

inline GroupAction antipodal_icosahedron_action() {
    std::vector<int> id(12);
    for (int i = 0; i < 12; ++i) id[static_cast<size_t>(i)] = i;
    return GroupAction(FiniteGroup::cyclic(2), {id, icosahedron_antipode()}, icosahedron());
}

inline GroupAction hexagon_rotation_action() {
    // free rotation by three steps
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    std::vector<int> rot{3, 4, 5, 0, 1, 2};
    return GroupAction(FiniteGroup::cyclic(2), {id, rot}, hexagon());
}

inline GroupAction hexagon_flip_action() {
    // reflection swapping v2/v3: the edge {v2,v3} is setwise but not
    // pointwise fixed
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    std::vector<int> flip{5, 4, 3, 2, 1, 0};
    return GroupAction(FiniteGroup::cyclic(2), {id, flip}, hexagon());
}

} // namespace stackhom::fixtures
