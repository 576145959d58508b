#pragma once

#include "stackhom/coefficients.hpp"

#include <vector>

namespace stackhom {

/// Finite group given by its multiplication table. Associativity, identity
/// and inverses are verified at construction.
class FiniteGroup {
public:
    /// table[g*n + h] = g*h, elements 0..n-1.
    FiniteGroup(int n, std::vector<int> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int m);
    /// Group generated by permutations of {0..n-1} (closure must stay small);
    /// elements ordered by BFS discovery from the identity.
    static FiniteGroup from_permutations(int n, const std::vector<std::vector<int>>& gens,
                                         std::vector<std::vector<int>>* elements = nullptr);
    static FiniteGroup symmetric(int n);

    int order() const { return n_; }
    int mul(int g, int h) const { return table_[static_cast<size_t>(g) * n_ + h]; }
    int inv(int g) const { return inverse_[static_cast<size_t>(g)]; }
    int identity() const { return identity_; }
    bool is_cyclic() const;
    /// A generator when cyclic, -1 otherwise.
    int cyclic_generator() const;

    const std::vector<int>& table() const { return table_; }
    bool operator==(const FiniteGroup& o) const { return n_ == o.n_ && table_ == o.table_; }
    bool operator!=(const FiniteGroup& o) const { return !(*this == o); }

private:
    int n_;
    std::vector<int> table_;
    int identity_ = -1;
    std::vector<int> inverse_;
};

} // namespace stackhom
