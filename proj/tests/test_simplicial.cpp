#include "doctest.h"

#include "test_spaces.hpp"

using namespace stackhom;
using namespace stackhom::fixtures;

namespace {

HomologySummary free_of_rank(long r) { return HomologySummary{r, {}}; }

void check_chain_map(const std::vector<ExactMat>& f, const ChainComplex& from,
                     const ChainComplex& to) {
    for (size_t k = 1; k < f.size(); ++k) {
        ExactMat lhs = to.differential(static_cast<int>(k)) * f[k];
        ExactMat rhs = f[k - 1] * from.differential(static_cast<int>(k));
        CHECK(lhs == rhs);
    }
}

} // namespace

TEST_CASE("boundary_complex: point, hollow triangle, sphere") {
    ChainComplex pt = point().boundary_complex(Coefficients::integers());
    CHECK(pt.homology_at_degree(0) == free_of_rank(1));

    ChainComplex tri = hollow_triangle().boundary_complex(Coefficients::integers());
    // oracle: rank of the hand-checkable 3x3 boundary matrix is 2
    CHECK(snf(tri.differential(1)).rank == 2);
    CHECK(tri.homology_at_degree(0) == free_of_rank(1));
    CHECK(tri.homology_at_degree(1) == free_of_rank(1));

    ChainComplex s2 = tetra_boundary().boundary_complex(Coefficients::integers());
    CHECK(snf(s2.differential(1)).rank == 3);
    CHECK(snf(s2.differential(2)).rank == 3);
    CHECK(s2.homology_at_degree(0) == free_of_rank(1));
    CHECK(s2.homology_at_degree(1) == free_of_rank(0));
    CHECK(s2.homology_at_degree(2) == free_of_rank(1));
}

TEST_CASE("boundary_complex: projective plane torsion") {
    ChainComplex cx = rp2_6().boundary_complex(Coefficients::integers());
    HomologySummary h1 = cx.homology_at_degree(1);
    CHECK(h1.free_rank == 0);
    REQUIRE(h1.torsion.size() == 1);
    CHECK(h1.torsion[0] == 2);
    CHECK(cx.homology_at_degree(2) == free_of_rank(0));
    CHECK(cx.homology_at_degree(0) == free_of_rank(1));
    // over F2 every degree carries one copy
    ChainComplex c2 = rp2_6().boundary_complex(Coefficients::prime_field(2));
    for (int k = 0; k <= 2; ++k) CHECK(c2.homology_at_degree(k) == free_of_rank(1));
}

TEST_CASE("malformed facets are rejected") {
    CHECK_THROWS_AS(SimplicialComplex({"a"}, {{0, 0}}), Error);
    CHECK_THROWS_AS(SimplicialComplex({"a"}, {{1}}), Error);
    CHECK_THROWS_AS(SimplicialComplex({"a"}, {{}}), Error);
}

TEST_CASE("relative_complex: interval modulo endpoints") {
    ChainComplex rel = relative_complex(interval_pair(), Coefficients::integers());
    CHECK(rel.dim(0) == 0);
    CHECK(rel.dim(1) == 1);
    CHECK(rel.homology_at_degree(1) == free_of_rank(1));
    CHECK(rel.homology_at_degree(0) == free_of_rank(0));
}

TEST_CASE("relative_complex: empty boundary equals the absolute complex") {
    SimplicialPair p(hexagon());
    CHECK(p.boundary_empty());
    ChainComplex rel = relative_complex(p, Coefficients::integers());
    ChainComplex abs = hexagon().boundary_complex(Coefficients::integers());
    CHECK(rel.homology() == abs.homology());
    for (int k = 0; k <= 1; ++k) CHECK(rel.dim(k) == abs.dim(k));
}

TEST_CASE("relative_complex: disk modulo its boundary circle") {
    ChainComplex rel = relative_complex(disk_pair(), Coefficients::integers());
    CHECK(rel.homology_at_degree(2) == free_of_rank(1));
    CHECK(rel.homology_at_degree(1) == free_of_rank(0));
    CHECK(rel.homology_at_degree(0) == free_of_rank(0));
}

TEST_CASE("relative_complex: at_infinity must lie in the ambient complex") {
    CHECK_THROWS_AS(SimplicialPair(interval(), {{0, 1}, {2}}), Error);
}

TEST_CASE("barycentric subdivision: point and hollow triangle") {
    SubdivisionResult sp = barycentric_subdivision(point());
    CHECK(sp.sd.num_faces(0) == 1);
    CHECK(sp.sd.dim() == 0);

    SubdivisionResult st = barycentric_subdivision(hollow_triangle());
    CHECK(st.sd.num_faces(0) == 6); // a hexagon
    CHECK(st.sd.num_faces(1) == 6);
    ChainComplex before = hollow_triangle().boundary_complex(Coefficients::integers());
    ChainComplex after = st.sd.boundary_complex(Coefficients::integers());
    CHECK(after.homology_at_degree(0) == free_of_rank(1));
    CHECK(after.homology_at_degree(1) == free_of_rank(1));

    check_chain_map(st.subdivide, before, after);
    check_chain_map(st.aggregate, after, before);
    for (int k = 0; k <= 1; ++k)
        CHECK(st.aggregate[static_cast<size_t>(k)] * st.subdivide[static_cast<size_t>(k)] ==
              ExactMat::identity(before.dim(k)));
}

TEST_CASE("barycentric subdivision: Euler characteristic and presentations preserved") {
    for (const SimplicialComplex& x : {point(), interval(), hollow_triangle(), hexagon(),
                                       tetra_boundary(), rp2_6(), disk()}) {
        SubdivisionResult s = barycentric_subdivision(x);
        CHECK(s.sd.euler_characteristic() == x.euler_characteristic());
        ChainComplex before = x.boundary_complex(Coefficients::integers());
        ChainComplex after = s.sd.boundary_complex(Coefficients::integers());
        CHECK(before.homology() == after.homology()); // exact presentations, torsion included
        check_chain_map(s.subdivide, before, after);
        check_chain_map(s.aggregate, after, before);
        for (int k = 0; k <= x.dim(); ++k)
            CHECK(s.aggregate[static_cast<size_t>(k)] * s.subdivide[static_cast<size_t>(k)] ==
                  ExactMat::identity(before.dim(k)));
    }
}

TEST_CASE("ez_aw: point times point") {
    ProductResult r = ez_aw(point(), point(), Coefficients::integers());
    CHECK(r.product.num_faces(0) == 1);
    CHECK(r.tensor.dim(0) == 1);
    CHECK(r.ez[0] == ExactMat::identity(1));
    CHECK(r.aw[0] == ExactMat::identity(1));
}

TEST_CASE("ez_aw: torus from two hexagons") {
    ProductResult r = ez_aw(hexagon(), hexagon(), Coefficients::integers());
    // oracle: Kunneth over Z for circle x circle
    ChainComplex tensor = r.tensor;
    CHECK(tensor.homology_at_degree(0) == free_of_rank(1));
    CHECK(tensor.homology_at_degree(1) == free_of_rank(2));
    CHECK(tensor.homology_at_degree(2) == free_of_rank(1));
    ChainComplex prod = r.product.boundary_complex(Coefficients::integers());
    CHECK(prod.homology() == tensor.homology());

    check_chain_map(r.ez, tensor, prod);
    check_chain_map(r.aw, prod, tensor);
    for (int n = 0; n <= 2; ++n)
        CHECK(r.aw[static_cast<size_t>(n)] * r.ez[static_cast<size_t>(n)] ==
              ExactMat::identity(tensor.dim(n)));
}

TEST_CASE("ez_aw: interval times interval gives a square") {
    ProductResult r = ez_aw(interval(), interval(), Coefficients::integers());
    CHECK(r.product.num_faces(0) == 4);
    CHECK(r.product.num_faces(2) == 2); // two staircase triangles
    ChainComplex prod = r.product.boundary_complex(Coefficients::integers());
    CHECK(prod.homology_at_degree(0) == free_of_rank(1));
    CHECK(prod.homology_at_degree(1) == free_of_rank(0));
    for (int n = 0; n <= 2; ++n)
        CHECK(r.aw[static_cast<size_t>(n)] * r.ez[static_cast<size_t>(n)] ==
              ExactMat::identity(r.tensor.dim(n)));
}

TEST_CASE("ez_aw: mixed-dimensional factor") {
    // an edge plus an isolated vertex: two components, no higher homology
    SimplicialComplex mixed({"m0", "m1", "m2"}, {{0, 1}, {2}});
    ProductResult r = ez_aw(mixed, hexagon(), Coefficients::integers());
    ChainComplex prod = r.product.boundary_complex(Coefficients::integers());
    CHECK(prod.homology_at_degree(0) == free_of_rank(2));
    CHECK(prod.homology_at_degree(1) == free_of_rank(2));
    CHECK(prod.homology() == r.tensor.homology());
    for (size_t n = 0; n < r.ez.size(); ++n)
        CHECK(r.aw[n] * r.ez[n] == ExactMat::identity(r.tensor.dim(static_cast<int>(n))));
}

TEST_CASE("pair_product: the open square has Borel-Moore homology of the plane") {
    SimplicialPair square = pair_product(interval_pair(), interval_pair());
    ChainComplex rel = relative_complex(square, Coefficients::integers());
    CHECK(rel.homology_at_degree(2) == free_of_rank(1));
    CHECK(rel.homology_at_degree(1) == free_of_rank(0));
    CHECK(rel.homology_at_degree(0) == free_of_rank(0));
}

TEST_CASE("fundamental_chain: oriented hexagon generates H_1") {
    SimplicialComplex hex = hexagon();
    auto o = coherent_orientation(hex);
    REQUIRE(o.has_value());
    std::vector<Rat> chain = fundamental_chain(hex, o, Coefficients::integers());
    long nonzero = 0;
    for (const Rat& v : chain)
        if (!v.is_zero()) ++nonzero;
    CHECK(nonzero == 6);
    // the kernel of d_1 is rank one; the fundamental chain must generate it
    ExactMat k = kernel_basis_int(hex.boundary_complex(Coefficients::integers()).differential(1));
    REQUIRE(k.cols() == 1);
    bool plus = true, minus = true;
    for (long i = 0; i < k.rows(); ++i) {
        if (k.at(i, 0) != chain[static_cast<size_t>(i)]) plus = false;
        if (k.at(i, 0) != -chain[static_cast<size_t>(i)]) minus = false;
    }
    CHECK((plus || minus));
}

TEST_CASE("fundamental_chain: projective plane over F2 and failure over Z") {
    SimplicialComplex rp2 = rp2_6();
    std::vector<Rat> chain = fundamental_chain(rp2, std::nullopt, Coefficients::prime_field(2));
    CHECK(static_cast<long>(chain.size()) == 10);
    for (const Rat& v : chain) CHECK(v == 1);

    CHECK_FALSE(coherent_orientation(rp2).has_value());
    Orientation arbitrary;
    arbitrary.sign.assign(10, 1);
    CHECK_THROWS_WITH_AS(fundamental_chain(rp2, arbitrary, Coefficients::integers()),
                         "not a closed oriented manifold model", Error);
}

TEST_CASE("fundamental_chain: tetra boundary is orientable") {
    auto o = coherent_orientation(tetra_boundary());
    REQUIRE(o.has_value());
    std::vector<Rat> chain = fundamental_chain(tetra_boundary(), o, Coefficients::integers());
    CHECK(static_cast<long>(chain.size()) == 4);
}

TEST_CASE("fundamental_chain: open complexes are rejected") {
    auto o = coherent_orientation(interval());
    CHECK_FALSE(o.has_value()); // boundary ridge has a single cofacet
}

TEST_CASE("free ranks over Q match free ranks over Z, and track Euler characteristics") {
    for (const SimplicialComplex& x : {point(), interval(), hollow_triangle(), hexagon(),
                                       tetra_boundary(), rp2_6(), disk(), icosahedron()}) {
        ChainComplex cz = x.boundary_complex(Coefficients::integers());
        ChainComplex cq = x.boundary_complex(Coefficients::rationals());
        long chi_ranks = 0;
        for (int k = 0; k <= x.dim(); ++k) {
            long fq = cq.homology_at_degree(k).free_rank;
            CHECK(fq == cz.homology_at_degree(k).free_rank);
            chi_ranks += (k % 2 == 0) ? fq : -fq;
        }
        CHECK(chi_ranks == x.euler_characteristic());
    }
}

TEST_CASE("group actions: rotation is free and regular, flip is not regular") {
    GroupAction rot = hexagon_rotation_action();
    CHECK(rot.is_free(hexagon()));
    CHECK(rot.is_regular(hexagon()));

    GroupAction flip = hexagon_flip_action();
    CHECK_FALSE(flip.is_free(hexagon()));
    CHECK_FALSE(flip.is_regular(hexagon()));

    SubdivisionResult s = barycentric_subdivision(hexagon());
    GroupAction flip_sd = flip.on_subdivision(hexagon(), s);
    CHECK(flip_sd.is_regular(s.sd));
}

TEST_CASE("group actions: antipodal icosahedron is free") {
    GroupAction a = antipodal_icosahedron_action();
    CHECK(a.is_free(icosahedron()));
    CHECK(a.is_regular(icosahedron()));
    auto orders = a.stabilizer_orders(icosahedron());
    for (const auto& level : orders)
        for (long c : level) CHECK(c == 1);
}

TEST_CASE("group actions: chain matrices commute with the boundary") {
    GroupAction a = antipodal_icosahedron_action();
    ChainComplex cx = icosahedron().boundary_complex(Coefficients::integers());
    auto mats = a.chain_matrices(icosahedron(), 1);
    check_chain_map(mats, cx, cx);
}

TEST_CASE("group actions: invalid data is rejected") {
    std::vector<int> id{0, 1, 2, 3, 4, 5};
    std::vector<int> shift{1, 2, 3, 4, 5, 0}; // order 6, not an involution
    CHECK_THROWS_AS(GroupAction(FiniteGroup::cyclic(2), {id, shift}, hexagon()), Error);
    std::vector<int> bad{0, 0, 2, 3, 4, 5};
    CHECK_THROWS_AS(GroupAction(FiniteGroup::cyclic(2), {id, bad}, hexagon()), Error);
}

TEST_CASE("pair preservation under actions") {
    GroupAction flip = hexagon_flip_action();
    SimplicialPair whole(hexagon());
    CHECK(flip.preserves(whole));
    SimplicialPair lopsided(hexagon(), {{0}});
    CHECK_FALSE(flip.preserves(lopsided)); // v0 maps to v5
    SimplicialPair symmetric(hexagon(), {{0}, {5}});
    CHECK(symmetric.at_infinity(0, 0));
    CHECK(flip.preserves(symmetric));
}
