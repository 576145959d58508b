#include "doctest.h"

#include "stackhom/linalg.hpp"

#include <numeric>
#include <random>

using namespace stackhom;

namespace {

ExactMat from_rows(const std::vector<std::vector<long>>& rows) {
    ExactMat m(static_cast<long>(rows.size()), rows.empty() ? 0 : static_cast<long>(rows[0].size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m.at(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
    return m;
}

void check_snf_contract(const ExactMat& m, const SnfResult& s) {
    CHECK(s.U * m * s.V == s.D);
    CHECK(s.U * s.Uinv == ExactMat::identity(m.rows()));
    CHECK(s.V * s.Vinv == ExactMat::identity(m.cols()));
    Int du = det_int(s.U), dv = det_int(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    for (long i = 0; i < std::min(m.rows(), m.cols()); ++i)
        for (long j = 0; j < std::min(m.rows(), m.cols()); ++j)
            if (i != j) CHECK(s.D.at(i, j).is_zero());
    auto divs = s.elementary_divisors();
    for (size_t i = 0; i + 1 < divs.size(); ++i) {
        CHECK(divs[i] > 0);
        CHECK(divs[i + 1] % divs[i] == 0);
    }
}

// boundary matrix of the 3-vertex circle, edges {01},{02},{12} in lex order
ExactMat circle3_d1() {
    return from_rows({{-1, -1, 0}, {1, 0, -1}, {0, 1, 1}});
}

} // namespace

TEST_CASE("snf: identity") {
    ExactMat id = ExactMat::identity(3);
    SnfResult s = snf(id);
    check_snf_contract(id, s);
    CHECK(s.rank == 3);
    CHECK(s.D == id);
}

TEST_CASE("snf: zero matrix") {
    ExactMat z(2, 2);
    SnfResult s = snf(z);
    check_snf_contract(z, s);
    CHECK(s.rank == 0);
    CHECK(s.D.is_zero());
}

TEST_CASE("snf: 2x2 with torsion") {
    ExactMat m = from_rows({{2, 4}, {6, 8}});
    // oracle: d1 = gcd of entries, d1*d2 = |det|
    long g = std::gcd(std::gcd(2L, 4L), std::gcd(6L, 8L));
    Int det = Int(2) * 8 - Int(4) * 6;
    CHECK(g == 2);
    CHECK(abs(det) == 8);
    SnfResult s = snf(m);
    check_snf_contract(m, s);
    CHECK(s.rank == 2);
    CHECK(numerator(s.D.at(0, 0)) == g);
    CHECK(numerator(s.D.at(1, 1)) == abs(det) / g);
}

TEST_CASE("snf: random matrices satisfy the contract") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 30; ++trial) {
        long r = 1 + static_cast<long>(rng() % 5), c = 1 + static_cast<long>(rng() % 5);
        ExactMat m(r, c);
        for (long i = 0; i < r; ++i)
            for (long j = 0; j < c; ++j)
                m.at(i, j) = static_cast<long>(rng() % 19) - 9;
        SnfResult s = snf(m);
        check_snf_contract(m, s);
        CHECK(s.rank == rank_over_field(m, Coefficients::rationals()));
    }
}

TEST_CASE("rank_over_field") {
    CHECK(rank_over_field(ExactMat::identity(4), Coefficients::rationals()) == 4);
    ExactMat ones = from_rows({{1, 1}, {1, 1}});
    CHECK(rank_over_field(ones, Coefficients::prime_field(2)) == 1);
    CHECK_THROWS_WITH_AS(rank_over_field(ones, Coefficients::integers()), "field required", Error);

    // circle boundary: oracle = SNF of the same matrix
    ExactMat d1 = circle3_d1();
    CHECK(snf(d1).rank == 2);
    CHECK(rank_over_field(d1, Coefficients::rationals()) == 2);
    CHECK(rank_over_field(d1, Coefficients::prime_field(2)) == 2);

    // rank drops mod p when p divides a pivot
    ExactMat twos = from_rows({{2, 0}, {0, 2}});
    CHECK(rank_over_field(twos, Coefficients::rationals()) == 2);
    CHECK(rank_over_field(twos, Coefficients::prime_field(2)) == 0);
}

TEST_CASE("kernel bases") {
    ExactMat d1 = circle3_d1();
    ExactMat kq = kernel_basis_field(d1, Coefficients::rationals());
    CHECK(kq.cols() == 1);
    CHECK((d1 * kq).is_zero());
    ExactMat kz = kernel_basis_int(d1);
    CHECK(kz.cols() == 1);
    CHECK((d1 * kz).is_zero());
}

TEST_CASE("solve over Z and fields") {
    ExactMat a = from_rows({{2, 0}, {0, 3}});
    std::vector<Rat> b{4, 9};
    auto xz = solve(a, b, Coefficients::integers());
    REQUIRE(xz.has_value());
    CHECK(mat_vec(a, *xz) == b);
    std::vector<Rat> odd{1, 0};
    CHECK_FALSE(solve(a, odd, Coefficients::integers()).has_value()); // 2x = 1 has no integer solution
    auto xq = solve(a, odd, Coefficients::rationals());
    REQUIRE(xq.has_value());
    CHECK(mat_vec(a, *xq) == odd);
    auto xf3 = solve(a, odd, Coefficients::prime_field(5));
    REQUIRE(xf3.has_value());
}

TEST_CASE("homology_at: zero differentials") {
    ExactMat d_in(4, 0), d_out(0, 4);
    HomologySummary h = homology_at(d_in, d_out, Coefficients::integers());
    CHECK(h.free_rank == 4);
    CHECK(h.torsion.empty());
}

TEST_CASE("homology_at: rejects non-complexes") {
    ExactMat id = ExactMat::identity(2);
    CHECK_THROWS_WITH_AS(homology_at(id, id, Coefficients::integers()), "not a complex", Error);
}

TEST_CASE("homology_at: circle degree 1 over Z") {
    // oracle: direct SNF — rank d1 = 2, so ker is 1-dimensional and no image
    ExactMat d1 = circle3_d1();
    ExactMat d2(3, 0);
    HomologySummary h = homology_at(d2, d1, Coefficients::integers());
    CHECK(h.free_rank == 1);
    CHECK(h.torsion.empty());
}

TEST_CASE("homology_at: torsion example Z/2") {
    // presentation matrix diag(1,2) inside a rank-3 kernel
    ExactMat d_in = from_rows({{1, 0}, {0, 2}, {0, 0}});
    ExactMat d_out(0, 3);
    HomologySummary h = homology_at(d_in, d_out, Coefficients::integers());
    CHECK(h.free_rank == 1);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 2);
    // over Q the torsion disappears but the free rank matches
    HomologySummary hq = homology_at(d_in, d_out, Coefficients::rationals());
    CHECK(hq.free_rank == 1);
    CHECK(hq.torsion.empty());
    // over F2 the rank of d_in drops
    HomologySummary h2 = homology_at(d_in, d_out, Coefficients::prime_field(2));
    CHECK(h2.free_rank == 2);
}

TEST_CASE("det_int") {
    CHECK(det_int(ExactMat::identity(3)) == 1);
    CHECK(det_int(from_rows({{2, 4}, {6, 8}})) == -8);
    CHECK(det_int(from_rows({{1, 2}, {2, 4}})) == 0);
}
