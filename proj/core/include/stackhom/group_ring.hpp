#pragma once

#include "stackhom/bicomplex.hpp"
#include "stackhom/group.hpp"

namespace stackhom {

/// Element of the group algebra Lambda[G]: one coefficient per group element.
struct GroupRingElem {
    std::vector<Rat> coeff;

    static GroupRingElem zero(const FiniteGroup& g) { return {std::vector<Rat>(g.order())}; }
    static GroupRingElem unit(const FiniteGroup& g, int elem, Rat c = 1);
    /// Sum of all group elements.
    static GroupRingElem norm(const FiniteGroup& g);

    GroupRingElem antipode(const FiniteGroup& g) const; // g -> g^{-1} on coefficients
    bool is_zero() const;
};

/// Matrix over the group ring; expands to a Lambda-matrix on the basis
/// (block j, group element g) <-> g * e_j.
class GroupRingMat {
public:
    GroupRingMat(const FiniteGroup& g, long rows, long cols);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    const FiniteGroup& group() const { return g_; }

    GroupRingElem& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const GroupRingElem& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    ExactMat expand() const;

private:
    FiniteGroup g_;
    long rows_, cols_;
    std::vector<GroupRingElem> a_;
};

/// Truncated free resolution of the trivial module over Lambda[G]:
/// F_length -> ... -> F_1 -> F_0 -> Lambda -> 0, exact in degrees < length.
class Resolution {
public:
    const FiniteGroup& group() const { return g_; }
    const Coefficients& coeff() const { return c_; }
    int length() const { return length_; }
    long rank(int stage) const; // group-ring rank of F_stage, 0 outside [0, length]
    const GroupRingMat& differential(int stage) const; // F_stage -> F_{stage-1}, 1 <= stage

    /// Truncated bar resolution: stage p has group-ring rank |G|^p.
    static Resolution bar(const FiniteGroup& g, const Coefficients& c, int n);
    /// Rank-one periodic resolution for Z/m: differentials alternate
    /// (t - 1) and 1 + t + ... + t^{m-1}.
    static Resolution periodic(int m, const Coefficients& c, int n);
    /// Stage-by-stage resolution with greedily chosen kernel generators;
    /// much smaller than bar for non-cyclic groups.
    static Resolution reduced(const FiniteGroup& g, const Coefficients& c, int n);

    /// The expanded augmented complex Lambda <- F_0 <- ... <- F_length,
    /// with the trivial module in degree -1.
    ChainComplex augmented_complex() const;
    /// Throws unless the augmented complex is exact in degrees < length.
    void check_exactness() const;
    /// Checks d ρ(g) = ρ(g) d on expanded matrices for every g.
    void check_equivariance() const;

    /// CW chains of the free G-sphere used by the Borel comparison for
    /// cyclic groups: not exact at the top stage (the sphere's top cycle).
    static Resolution sphere_model(int m, const Coefficients& c, int dim);

private:
    Resolution(FiniteGroup g, Coefficients c) : g_(std::move(g)), c_(c) {}
    FiniteGroup g_;
    Coefficients c_;
    int length_ = 0;
    std::vector<long> ranks_;
    std::vector<GroupRingMat> diff_; // diff_[p-1] : F_p -> F_{p-1}
};

/// Left regular representation matrix of one group element on Lambda[G]^rank
/// in the expanded basis.
ExactMat regular_action(const FiniteGroup& g, int elem, long rank);

/// Chain complex with a degree-preserving G-action commuting with the
/// differentials (signed permutation matrices in our applications).
class GroupAlgebraComplex {
public:
    GroupAlgebraComplex(ChainComplex cx, FiniteGroup g,
                        std::map<int, std::vector<ExactMat>> action);

    const ChainComplex& complex() const { return cx_; }
    const FiniteGroup& group() const { return g_; }

    ExactMat act(int degree, int elem) const;
    /// Sum of coeff_g * rho(g) in the given degree.
    ExactMat act_elem(int degree, const GroupRingElem& a) const;

    /// Throws unless the action matrices satisfy the group law and commute
    /// with every differential.
    void check() const;

private:
    ChainComplex cx_;
    FiniteGroup g_;
    std::map<int, std::vector<ExactMat>> action_;
};

/// Hom_{Lambda[G]}(F_p, C_q) bicomplex computing derived G-invariants
/// (hypercohomology); stored at bidegree (-p, q) so that total degree is
/// q - p and reads homologically.
Bicomplex hom_over_group_ring(const Resolution& r, const GroupAlgebraComplex& c);

/// Total complex of F_p (x)_{Lambda[G]} C_q: homotopy orbits, i.e. chains of
/// the Borel construction in degrees below the truncation.
ChainComplex tensor_over_group_ring(const Resolution& r, const GroupAlgebraComplex& c);

} // namespace stackhom
