#pragma once

#include "stackhom/matrix.hpp"

#include <optional>
#include <vector>

namespace stackhom {

/// Smith normal form U*M*V = D of an integer matrix. U, V are unimodular
/// (their inverses are tracked alongside), D is diagonal with nonnegative
/// entries forming a divisibility chain d1 | d2 | ...
struct SnfResult {
    ExactMat U, D, V;
    ExactMat Uinv, Vinv;
    long rank = 0;

    /// Nonzero diagonal entries, in chain order.
    std::vector<Int> elementary_divisors() const;
    /// Diagonal entries > 1 (the torsion part of coker).
    std::vector<Int> torsion() const;
};

SnfResult snf(const ExactMat& m);

/// Exact rank over Q or F_p. Errors with "field required" on integer
/// coefficients.
long rank_over_field(const ExactMat& m, const Coefficients& c);

/// Basis of ker(m) as matrix columns, over a field.
ExactMat kernel_basis_field(const ExactMat& m, const Coefficients& c);

/// Basis of the kernel lattice of an integer matrix (saturated by
/// construction), as matrix columns.
ExactMat kernel_basis_int(const ExactMat& m);

/// Solve A x = b. Over a field: any solution. Over Z (c = integers): an
/// integral solution, or nullopt if none exists.
std::optional<std::vector<Rat>> solve(const ExactMat& a, const std::vector<Rat>& b,
                                      const Coefficients& c);

/// Column indices of a maximal linearly independent column set, over a field.
std::vector<long> independent_columns(const ExactMat& m, const Coefficients& c);

/// True if b lies in the column span of a (over the given field).
bool in_column_span(const ExactMat& a, const std::vector<Rat>& b, const Coefficients& c);

/// Presentation of one homology group.
struct HomologySummary {
    long free_rank = 0;
    std::vector<Int> torsion;
    bool operator==(const HomologySummary& o) const {
        return free_rank == o.free_rank && torsion == o.torsion;
    }
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

/// Homology at the middle of  . --d_in--> C --d_out--> .
/// Requires d_out * d_in = 0 ("not a complex" otherwise).
HomologySummary homology_at(const ExactMat& d_in, const ExactMat& d_out, const Coefficients& c);

/// Exact determinant of a square integer matrix (Bareiss).
Int det_int(const ExactMat& m);

/// Zero test respecting the coefficient semantics: exact zero over Z and Q,
/// congruent to zero mod p over F_p.
bool is_zero_mod(const ExactMat& m, const Coefficients& c);
bool is_zero_mod(const Rat& x, const Coefficients& c);
bool equal_mod(const ExactMat& a, const ExactMat& b, const Coefficients& c);

} // namespace stackhom
