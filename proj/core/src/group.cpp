#include "stackhom/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace stackhom {

FiniteGroup::FiniteGroup(int n, std::vector<int> table) : n_(n), table_(std::move(table)) {
    if (n <= 0 || static_cast<int>(table_.size()) != n * n) throw Error("group: bad table size");
    for (int x : table_)
        if (x < 0 || x >= n) throw Error("group: table entry out of range");
    for (int e = 0; e < n; ++e) {
        bool left = true, right = true;
        for (int g = 0; g < n && (left || right); ++g) {
            if (mul(e, g) != g) left = false;
            if (mul(g, e) != g) right = false;
        }
        if (left && right) {
            identity_ = e;
            break;
        }
    }
    if (identity_ < 0) throw Error("group: no identity");
    inverse_.assign(static_cast<size_t>(n), -1);
    for (int g = 0; g < n; ++g) {
        for (int h = 0; h < n; ++h)
            if (mul(g, h) == identity_ && mul(h, g) == identity_) {
                inverse_[static_cast<size_t>(g)] = h;
                break;
            }
        if (inverse_[static_cast<size_t>(g)] < 0) throw Error("group: missing inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw Error("group: not associative");
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(int m) {
    if (m < 1) throw Error("cyclic group: order must be positive");
    std::vector<int> t(static_cast<size_t>(m) * m);
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) t[static_cast<size_t>(g) * m + h] = (g + h) % m;
    return FiniteGroup(m, std::move(t));
}

FiniteGroup FiniteGroup::from_permutations(int n, const std::vector<std::vector<int>>& gens,
                                           std::vector<std::vector<int>>* elements) {
    std::vector<int> id(static_cast<size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    auto compose = [n](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = a[static_cast<size_t>(b[static_cast<size_t>(i)])];
        return r;
    };
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> elems{id};
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); ++head) {
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != n) throw Error("permutation size mismatch");
            auto next = compose(g, elems[head]);
            if (!index.count(next)) {
                index[next] = static_cast<int>(elems.size());
                elems.push_back(next);
                if (elems.size() > 100000) throw Error("permutation group too large");
            }
        }
    }
    int m = static_cast<int>(elems.size());
    std::vector<int> table(static_cast<size_t>(m) * m);
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) table[static_cast<size_t>(g) * m + h] = index.at(compose(elems[g], elems[h]));
    if (elements) *elements = elems;
    return FiniteGroup(m, std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw Error("symmetric group: supported for n in 1..5");
    if (n == 1) return trivial();
    std::vector<int> transposition(static_cast<size_t>(n));
    std::iota(transposition.begin(), transposition.end(), 0);
    std::swap(transposition[0], transposition[1]);
    std::vector<int> cycle(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<size_t>(i)] = (i + 1) % n;
    return from_permutations(n, {transposition, cycle});
}

bool FiniteGroup::is_cyclic() const { return cyclic_generator() >= 0; }

int FiniteGroup::cyclic_generator() const {
    for (int g = 0; g < n_; ++g) {
        int x = g, count = 1;
        while (x != identity_) {
            x = mul(x, g);
            ++count;
        }
        if (count == n_) return g;
    }
    return n_ == 1 ? identity_ : -1;
}

} // namespace stackhom
