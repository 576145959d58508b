#pragma once

#include "stackhom/chain_complex.hpp"

namespace stackhom {

/// Homology basis in one degree of a field-coefficient complex, with class
/// coordinates for arbitrary cycles. Representatives extend a basis of the
/// boundary subspace inside the cycle space.
class FieldHomologyBasis {
public:
    FieldHomologyBasis(const ChainComplex& cx, int degree);

    long dim() const { return static_cast<long>(rep_cols_.size()); }
    /// Cycle representatives as matrix columns (ambient chain coordinates).
    ExactMat representatives() const;
    std::vector<Rat> representative(long i) const;
    /// Coordinates of the class of a cycle in this basis.
    std::vector<Rat> coords(const std::vector<Rat>& cycle) const;

private:
    Coefficients c_;
    ExactMat all_; // [boundaries | kernel basis], restricted to pivot columns
    long image_rank_ = 0;
    std::vector<long> rep_cols_; // indices into all_ of the representatives
};

/// Matrix of the map induced on homology by a chain map, in the given bases.
ExactMat induced_map(const ExactMat& chain_map, const FieldHomologyBasis& from,
                     const FieldHomologyBasis& to);

/// Integral homology in one degree with class coordinates: free coordinates
/// plus residues along the invariant factors.
class IntHomologyBasis {
public:
    IntHomologyBasis(const ChainComplex& cx, int degree);

    long free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    struct Coords {
        std::vector<Int> free;
        std::vector<Int> torsion; // residues mod the invariant factors
    };
    Coords coords(const std::vector<Rat>& cycle) const;
    /// Representative cycles of the free part, as matrix columns.
    ExactMat free_representatives() const;

private:
    ExactMat kernel_;   // columns span the cycle lattice
    SnfResult pres_;    // SNF of the boundary lattice in kernel coordinates
    long free_rank_ = 0;
    std::vector<Int> torsion_;
    std::vector<long> free_rows_, torsion_rows_; // rows of U*y carrying each part
};

} // namespace stackhom
