#pragma once

#include "stackhom/graded.hpp"

#include <map>

namespace stackhom {

/// Bounded chain complex: differentials d_k : C_k -> C_{k-1} with d d = 0.
/// Homological grading; cohomological reports read H^i := H_{-i}.
class ChainComplex {
public:
    explicit ChainComplex(Coefficients c) : coeff_(c) {}

    const Coefficients& coeff() const { return coeff_; }

    void set_dim(int k, long d);
    long dim(int k) const;

    /// d_k : C_k -> C_{k-1}; both dims must be set beforehand.
    void set_differential(int k, ExactMat m);
    ExactMat differential(int k) const; // zero matrix of the right shape if unset

    /// Lowest/highest degree with a (possibly zero-dimensional) term.
    int min_degree() const;
    int max_degree() const;
    bool empty() const { return dims_.empty(); }

    /// Throws "not a complex" unless all composites vanish and shapes match.
    void check() const;

    HomologySummary homology_at_degree(int k) const;
    GradedModulePresentation homology() const;

    /// H_i(shifted) = H_{i-n}; differentials pick up the sign (-1)^n.
    ChainComplex shifted(int n) const;

    /// Dual complex D with D_{-k} = C_k^*; its H_{-i} is H^i of this complex.
    ChainComplex dual() const;

    /// Direct sum, blocks in argument order.
    static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

    long total_dim() const;
    /// Sum of (-1)^k dim C_k.
    long euler_characteristic() const;

private:
    Coefficients coeff_;
    std::map<int, long> dims_;
    std::map<int, ExactMat> diff_;
};

/// Mapping cone of a degree-preserving chain map f : A -> B.
/// Cone_n = A_{n-1} (+) B_n; acyclic iff f is a quasi-isomorphism.
ChainComplex mapping_cone(const std::vector<std::pair<int, ExactMat>>& f, const ChainComplex& a,
                          const ChainComplex& b);

/// Flip the sign of every matrix in f as needed so that it commutes with the
/// differentials on the nose. Input must commute up to a per-degree sign;
/// returns nullopt if no global sign pattern works.
std::optional<std::map<int, ExactMat>> normalize_chain_map_signs(std::map<int, ExactMat> f,
                                                                 const ChainComplex& a,
                                                                 const ChainComplex& b);

} // namespace stackhom
