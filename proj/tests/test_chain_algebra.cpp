#include "doctest.h"

#include "stackhom/group_ring.hpp"
#include "stackhom/simplicial.hpp"

using namespace stackhom;

namespace {

SimplicialComplex hexagon() {
    std::vector<Simplex> facets;
    for (int i = 0; i < 6; ++i) facets.push_back({i, (i + 1) % 6});
    return SimplicialComplex({"v0", "v1", "v2", "v3", "v4", "v5"}, facets);
}

SimplicialComplex point() { return SimplicialComplex({"p"}, {{0}}); }

GroupAlgebraComplex trivial_action_gac(const SimplicialComplex& x, const FiniteGroup& g,
                                       const Coefficients& c) {
    ChainComplex cx = x.boundary_complex(c);
    std::map<int, std::vector<ExactMat>> action;
    for (int k = 0; k <= x.dim(); ++k) {
        std::vector<ExactMat> mats;
        for (int e = 0; e < g.order(); ++e) mats.push_back(ExactMat::identity(cx.dim(k)));
        action[k] = std::move(mats);
    }
    GroupAlgebraComplex gac(std::move(cx), g, std::move(action));
    gac.check();
    return gac;
}

HomologySummary free_of_rank(long r) { return HomologySummary{r, {}}; }

} // namespace

TEST_CASE("shift: point unchanged at n=0, circle moves up") {
    ChainComplex pt = point().boundary_complex(Coefficients::integers());
    ChainComplex s0 = pt.shifted(0);
    CHECK(s0.homology_at_degree(0) == free_of_rank(1));

    ChainComplex circle = hexagon().boundary_complex(Coefficients::integers());
    ChainComplex s2 = circle.shifted(2);
    s2.check();
    CHECK(s2.homology_at_degree(2) == free_of_rank(1));
    CHECK(s2.homology_at_degree(3) == free_of_rank(1));
    CHECK(s2.homology_at_degree(0) == free_of_rank(0));

    ChainComplex back = s2.shifted(-2);
    CHECK(back.homology() == circle.homology());

    ChainComplex odd = circle.shifted(3).shifted(-3);
    CHECK(odd.homology() == circle.homology());
}

TEST_CASE("dual complex computes cohomology degrees") {
    ChainComplex circle = hexagon().boundary_complex(Coefficients::integers());
    ChainComplex d = circle.dual();
    d.check();
    CHECK(d.homology_at_degree(0) == free_of_rank(1));  // H^0
    CHECK(d.homology_at_degree(-1) == free_of_rank(1)); // H^1
}

TEST_CASE("total_complex: one-row bicomplex is the row") {
    ChainComplex circle = hexagon().boundary_complex(Coefficients::integers());
    Bicomplex b(Coefficients::integers());
    for (int q = 0; q <= 1; ++q) b.set_dim(0, q, circle.dim(q));
    b.set_vertical(0, 1, circle.differential(1));
    ChainComplex t = total_complex(b);
    CHECK(t.homology() == circle.homology());
}

TEST_CASE("bicomplex rejects non-anticommuting data") {
    // two-by-two square with identity maps everywhere commutes, so it must fail
    Bicomplex b(Coefficients::integers());
    b.set_dim(0, 0, 1);
    b.set_dim(0, 1, 1);
    b.set_dim(1, 0, 1);
    b.set_dim(1, 1, 1);
    b.set_horizontal(1, 0, ExactMat::identity(1));
    b.set_horizontal(1, 1, ExactMat::identity(1));
    b.set_vertical(0, 1, ExactMat::identity(1));
    b.set_vertical(1, 1, ExactMat::identity(1));
    CHECK_THROWS_WITH_AS(total_complex(b), "not a bicomplex", Error);
}

TEST_CASE("mapping cone of an iso is acyclic") {
    ChainComplex circle = hexagon().boundary_complex(Coefficients::integers());
    std::vector<std::pair<int, ExactMat>> f;
    for (int k = 0; k <= 1; ++k) f.emplace_back(k, ExactMat::identity(circle.dim(k)));
    ChainComplex cone = mapping_cone(f, circle, circle);
    for (int k = cone.min_degree(); k <= cone.max_degree(); ++k)
        CHECK(cone.homology_at_degree(k).is_zero());
}

TEST_CASE("normalize_chain_map_signs repairs anticommuting maps") {
    ChainComplex circle = hexagon().boundary_complex(Coefficients::integers());
    std::map<int, ExactMat> f;
    f[0] = ExactMat::identity(6);
    f[1] = -ExactMat::identity(6);
    auto fixed = normalize_chain_map_signs(f, circle, circle);
    REQUIRE(fixed.has_value());
    CHECK(circle.differential(1) * fixed->at(1) == fixed->at(0) * circle.differential(1));
}

TEST_CASE("direct sum of complexes adds homology") {
    ChainComplex circle = hexagon().boundary_complex(Coefficients::integers());
    ChainComplex pt = point().boundary_complex(Coefficients::integers());
    ChainComplex s = ChainComplex::direct_sum(circle, pt);
    s.check();
    CHECK(s.homology_at_degree(0) == free_of_rank(2));
    CHECK(s.homology_at_degree(1) == free_of_rank(1));
}

TEST_CASE("bar resolution: trivial group pattern") {
    Resolution r = Resolution::bar(FiniteGroup::trivial(), Coefficients::integers(), 5);
    for (int p = 0; p <= 5; ++p) CHECK(r.rank(p) == 1);
    r.check_equivariance();
    r.check_exactness();
    // differentials alternate 0 and identity
    for (int p = 1; p <= 5; ++p) {
        ExactMat d = r.differential(p).expand();
        if (p % 2 == 1)
            CHECK(d.is_zero());
        else
            CHECK(d == ExactMat::identity(1));
    }
}

TEST_CASE("bar resolution: Z/2 ranks and exactness") {
    Resolution r = Resolution::bar(FiniteGroup::cyclic(2), Coefficients::prime_field(2), 4);
    CHECK(r.rank(0) == 1);
    CHECK(r.rank(1) == 2);
    CHECK(r.rank(2) == 4);
    CHECK(r.rank(3) == 8);
    r.check_equivariance();
    r.check_exactness();
}

TEST_CASE("bar resolution: S3 over Q, derived fixed points of the point") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK_FALSE(s3.is_cyclic());
    Resolution r = Resolution::bar(s3, Coefficients::rationals(), 3);
    r.check_exactness();
    GroupAlgebraComplex pt = trivial_action_gac(point(), s3, Coefficients::rationals());
    ChainComplex total = total_complex(hom_over_group_ring(r, pt));
    CHECK(total.homology_at_degree(0) == free_of_rank(1));
    CHECK(total.homology_at_degree(-1).is_zero());
    CHECK(total.homology_at_degree(-2).is_zero());
}

TEST_CASE("periodic resolution: m=2 over F2 has equal differentials") {
    Resolution r = Resolution::periodic(2, Coefficients::prime_field(2), 6);
    r.check_equivariance();
    r.check_exactness();
    ExactMat first = r.differential(1).expand();
    for (int p = 2; p <= 6; ++p) {
        ExactMat d = r.differential(p).expand();
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j) {
                Int diff = numerator(Rat(d.at(i, j) - first.at(i, j)));
                CHECK(diff % 2 == 0); // equal mod 2
            }
    }
    // oracle: kernel/image ranks of the regular representation matrix of t+1
    ExactMat reg = first;
    CHECK(rank_over_field(reg, Coefficients::prime_field(2)) == 1);
}

TEST_CASE("periodic resolution: m=3 over Z alternates t-1 and the norm") {
    Resolution r = Resolution::periodic(3, Coefficients::integers(), 6);
    r.check_equivariance();
    r.check_exactness();
    FiniteGroup g = FiniteGroup::cyclic(3);
    for (int p = 1; p <= 6; ++p) {
        const GroupRingElem& e = r.differential(p).at(0, 0);
        if (p % 2 == 1) {
            CHECK(e.coeff[0] == -1);
            CHECK(e.coeff[1] == 1);
            CHECK(e.coeff[2] == 0);
        } else {
            CHECK(e.coeff[0] == 1);
            CHECK(e.coeff[1] == 1);
            CHECK(e.coeff[2] == 1);
        }
    }
    // oracle: SNF of the 3x3 regular-representation blocks
    CHECK(snf(r.differential(1).expand()).rank == 2);
    CHECK(snf(r.differential(2).expand()).rank == 1);
}

TEST_CASE("reduced resolution: small ranks for S3 over Q, exact") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    Resolution r = Resolution::reduced(s3, Coefficients::rationals(), 4);
    r.check_equivariance();
    r.check_exactness();
    for (int p = 0; p <= 4; ++p) CHECK(r.rank(p) <= 4); // far below the bar ranks 6^p
}

TEST_CASE("reduced resolution: S3 over F2 and over Z stay small and exact") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    Resolution r2 = Resolution::reduced(s3, Coefficients::prime_field(2), 4);
    r2.check_equivariance();
    r2.check_exactness();
    for (int p = 0; p <= 4; ++p) CHECK(r2.rank(p) <= 6);
    Resolution rz = Resolution::reduced(s3, Coefficients::integers(), 3);
    rz.check_equivariance();
    rz.check_exactness();
    for (int p = 0; p <= 3; ++p) CHECK(rz.rank(p) <= 8);
}

TEST_CASE("hom over group ring: trivial group recovers homology") {
    FiniteGroup triv = FiniteGroup::trivial();
    Resolution r = Resolution::bar(triv, Coefficients::integers(), 4);
    GroupAlgebraComplex circle = trivial_action_gac(hexagon(), triv, Coefficients::integers());
    ChainComplex total = total_complex(hom_over_group_ring(r, circle));
    CHECK(total.homology_at_degree(0) == free_of_rank(1));
    CHECK(total.homology_at_degree(1) == free_of_rank(1));
    CHECK(total.homology_at_degree(-1).is_zero());
    CHECK(total.homology_at_degree(-2).is_zero());
}

TEST_CASE("hom over group ring: group cohomology of Z/2 at the point over F2") {
    Coefficients f2 = Coefficients::prime_field(2);
    Resolution r = Resolution::periodic(2, f2, 6);
    GroupAlgebraComplex pt = trivial_action_gac(point(), FiniteGroup::cyclic(2), f2);
    ChainComplex total = total_complex(hom_over_group_ring(r, pt));
    for (int i = -4; i <= 0; ++i) CHECK(total.homology_at_degree(i) == free_of_rank(1));
}

TEST_CASE("hom over group ring: group cohomology of Z/3 at the point over Z") {
    Coefficients z = Coefficients::integers();
    Resolution r = Resolution::periodic(3, z, 8);
    GroupAlgebraComplex pt = trivial_action_gac(point(), FiniteGroup::cyclic(3), z);
    ChainComplex total = total_complex(hom_over_group_ring(r, pt));
    CHECK(total.homology_at_degree(0) == free_of_rank(1));
    for (int i : {-2, -4, -6}) {
        HomologySummary h = total.homology_at_degree(i);
        CHECK(h.free_rank == 0);
        REQUIRE(h.torsion.size() == 1);
        CHECK(h.torsion[0] == 3);
    }
    for (int i : {-1, -3, -5}) CHECK(total.homology_at_degree(i).is_zero());
}

TEST_CASE("hom over group ring: bar bicomplex for Z/2 over F2, window 6") {
    Coefficients f2 = Coefficients::prime_field(2);
    Resolution r = Resolution::bar(FiniteGroup::cyclic(2), f2, 8);
    GroupAlgebraComplex pt = trivial_action_gac(point(), FiniteGroup::cyclic(2), f2);
    ChainComplex total = total_complex(hom_over_group_ring(r, pt));
    // oracle: periodic resolution computation, same window
    Resolution rp = Resolution::periodic(2, f2, 8);
    ChainComplex oracle = total_complex(hom_over_group_ring(rp, pt));
    for (int i = -6; i <= 0; ++i) {
        CHECK(total.homology_at_degree(i) == oracle.homology_at_degree(i));
        CHECK(total.homology_at_degree(i) == free_of_rank(1));
    }
}

TEST_CASE("hom over group ring: group mismatch is rejected") {
    Coefficients f2 = Coefficients::prime_field(2);
    Resolution r = Resolution::periodic(3, f2, 4);
    GroupAlgebraComplex pt = trivial_action_gac(point(), FiniteGroup::cyclic(2), f2);
    CHECK_THROWS_WITH_AS(hom_over_group_ring(r, pt), "group mismatch", Error);
    CHECK_THROWS_WITH_AS(tensor_over_group_ring(r, pt), "group mismatch", Error);
}

TEST_CASE("tensor over group ring: trivial group recovers homology") {
    FiniteGroup triv = FiniteGroup::trivial();
    Resolution r = Resolution::bar(triv, Coefficients::integers(), 4);
    GroupAlgebraComplex circle = trivial_action_gac(hexagon(), triv, Coefficients::integers());
    ChainComplex total = tensor_over_group_ring(r, circle);
    CHECK(total.homology_at_degree(0) == free_of_rank(1));
    CHECK(total.homology_at_degree(1) == free_of_rank(1));
    CHECK(total.homology_at_degree(2).is_zero());
}

TEST_CASE("tensor over group ring: chains of the classifying space of Z/2") {
    Coefficients f2 = Coefficients::prime_field(2);
    Resolution r = Resolution::periodic(2, f2, 5);
    GroupAlgebraComplex pt = trivial_action_gac(point(), FiniteGroup::cyclic(2), f2);
    ChainComplex total = tensor_over_group_ring(r, pt);
    // oracle: CW chains of real projective space — one cell per degree, zero
    // differentials over F2
    for (int i = 0; i <= 4; ++i) CHECK(total.homology_at_degree(i) == free_of_rank(1));
}

TEST_CASE("tensor over group ring: truncation stability") {
    Coefficients z = Coefficients::integers();
    GroupAlgebraComplex pt = trivial_action_gac(point(), FiniteGroup::cyclic(3), z);
    ChainComplex t5 = tensor_over_group_ring(Resolution::periodic(3, z, 5), pt);
    ChainComplex t7 = tensor_over_group_ring(Resolution::periodic(3, z, 7), pt);
    for (int i = 0; i <= 4; ++i) CHECK(t5.homology_at_degree(i) == t7.homology_at_degree(i));
}

TEST_CASE("group algebra complex validates the action") {
    FiniteGroup g = FiniteGroup::cyclic(2);
    ChainComplex pt = point().boundary_complex(Coefficients::integers());
    std::map<int, std::vector<ExactMat>> bad;
    bad[0] = {ExactMat::identity(1), -ExactMat::identity(1)}; // (-1)^2 = 1 is fine...
    GroupAlgebraComplex ok(pt, g, bad);
    ok.check(); // sign action is a valid involution
    std::map<int, std::vector<ExactMat>> worse;
    ExactMat two(1, 1);
    two.at(0, 0) = 2;
    worse[0] = {ExactMat::identity(1), two};
    GroupAlgebraComplex broken(pt, g, worse);
    CHECK_THROWS_AS(broken.check(), Error);
}
