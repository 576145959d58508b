#pragma once

#include "stackhom/chain_complex.hpp"

#include <map>

namespace stackhom {

/// Bicomplex with anticommuting differentials (verticals stored pre-twisted
/// by the Koszul sign): d^h : (p,q) -> (p-1,q), d^v : (p,q) -> (p,q-1),
/// d^h d^h = 0, d^v d^v = 0, d^h d^v + d^v d^h = 0.
class Bicomplex {
public:
    explicit Bicomplex(Coefficients c) : coeff_(c) {}

    const Coefficients& coeff() const { return coeff_; }

    void set_dim(int p, int q, long d);
    long dim(int p, int q) const;

    void set_horizontal(int p, int q, ExactMat m); // (p,q) -> (p-1,q)
    void set_vertical(int p, int q, ExactMat m);   // (p,q) -> (p,q-1)
    ExactMat horizontal(int p, int q) const;
    ExactMat vertical(int p, int q) const;

    /// Throws "not a bicomplex" when a square or anticommutation fails.
    void check() const;

    const std::map<std::pair<int, int>, long>& dims() const { return dims_; }

private:
    Coefficients coeff_;
    std::map<std::pair<int, int>, long> dims_;
    std::map<std::pair<int, int>, ExactMat> dh_, dv_;
};

/// Total complex: degree n part is the direct sum of the (p, q) parts with
/// p + q = n, blocks in ascending p; differential d^h + d^v.
ChainComplex total_complex(const Bicomplex& b);

} // namespace stackhom
