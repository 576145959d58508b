#include "stackhom/group_ring.hpp"

#include <fmt/core.h>

#include <algorithm>

namespace stackhom {

GroupRingElem GroupRingElem::unit(const FiniteGroup& g, int elem, Rat c) {
    GroupRingElem e = zero(g);
    e.coeff[static_cast<size_t>(elem)] = std::move(c);
    return e;
}

GroupRingElem GroupRingElem::norm(const FiniteGroup& g) {
    GroupRingElem e = zero(g);
    for (auto& x : e.coeff) x = 1;
    return e;
}

GroupRingElem GroupRingElem::antipode(const FiniteGroup& g) const {
    GroupRingElem r = zero(g);
    for (int e = 0; e < g.order(); ++e)
        r.coeff[static_cast<size_t>(g.inv(e))] = coeff[static_cast<size_t>(e)];
    return r;
}

bool GroupRingElem::is_zero() const {
    for (const auto& x : coeff)
        if (!x.is_zero()) return false;
    return true;
}

GroupRingMat::GroupRingMat(const FiniteGroup& g, long rows, long cols)
    : g_(g), rows_(rows), cols_(cols),
      a_(static_cast<size_t>(rows * cols), GroupRingElem::zero(g)) {}

ExactMat GroupRingMat::expand() const {
    const long m = g_.order();
    ExactMat e(rows_ * m, cols_ * m);
    for (long k = 0; k < rows_; ++k)
        for (long j = 0; j < cols_; ++j) {
            const GroupRingElem& a = at(k, j);
            if (a.is_zero()) continue;
            for (int g = 0; g < m; ++g)
                for (int h = 0; h < m; ++h) {
                    const Rat& lam = a.coeff[static_cast<size_t>(h)];
                    if (lam.is_zero()) continue;
                    e.at(k * m + g_.mul(g, h), j * m + g) += lam;
                }
        }
    return e;
}

ExactMat regular_action(const FiniteGroup& g, int elem, long rank) {
    const long m = g.order();
    ExactMat r(rank * m, rank * m);
    for (long j = 0; j < rank; ++j)
        for (int h = 0; h < m; ++h) r.at(j * m + g.mul(elem, h), j * m + h) = 1;
    return r;
}

long Resolution::rank(int stage) const {
    if (stage < 0 || stage > length_) return 0;
    return ranks_[static_cast<size_t>(stage)];
}

const GroupRingMat& Resolution::differential(int stage) const {
    if (stage < 1 || stage > length_) throw Error("resolution differential out of range");
    return diff_[static_cast<size_t>(stage - 1)];
}

Resolution Resolution::bar(const FiniteGroup& g, const Coefficients& c, int n) {
    if (n < 1) throw Error("bar resolution: length must be >= 1");
    const int m = g.order();
    Resolution r(g, c);
    r.length_ = n;
    long rank = 1;
    r.ranks_.push_back(1);
    for (int p = 1; p <= n; ++p) {
        if (rank > 100000 / m) throw Error("bar resolution stage too large");
        long prev = rank;
        rank *= m;
        r.ranks_.push_back(rank);
        GroupRingMat d(g, prev, rank);
        // tuple (g_1,...,g_p) indexed big-endian in base m
        std::vector<int> tuple(static_cast<size_t>(p));
        for (long idx = 0; idx < rank; ++idx) {
            long t = idx;
            for (int i = p - 1; i >= 0; --i) {
                tuple[static_cast<size_t>(i)] = static_cast<int>(t % m);
                t /= m;
            }
            // face 0: g_1 acting on the popped tuple
            long face0 = idx % prev;
            d.at(face0, idx).coeff[static_cast<size_t>(tuple[0])] += 1;
            // inner faces: merge g_i g_{i+1}
            int sign = -1;
            for (int i = 1; i < p; ++i) {
                long merged = 0;
                for (int s = 0; s < p; ++s) {
                    if (s == i) continue;
                    int v = (s == i - 1) ? g.mul(tuple[static_cast<size_t>(i - 1)],
                                                 tuple[static_cast<size_t>(i)])
                                         : tuple[static_cast<size_t>(s)];
                    merged = merged * m + v;
                }
                d.at(merged, idx).coeff[static_cast<size_t>(g.identity())] += sign;
                sign = -sign;
            }
            // last face: drop g_p
            long faceLast = idx / m;
            d.at(faceLast, idx).coeff[static_cast<size_t>(g.identity())] += sign;
        }
        r.diff_.push_back(std::move(d));
    }
    return r;
}

Resolution Resolution::periodic(int m, const Coefficients& c, int n) {
    if (n < 1) throw Error("periodic resolution: length must be >= 1");
    if (m < 2) throw Error("periodic resolution: modulus must be >= 2");
    FiniteGroup g = FiniteGroup::cyclic(m);
    Resolution r(g, c);
    r.length_ = n;
    r.ranks_.assign(static_cast<size_t>(n + 1), 1);
    GroupRingElem tminus1 = GroupRingElem::zero(g);
    tminus1.coeff[static_cast<size_t>(1 % m)] += 1;
    tminus1.coeff[0] += -1;
    GroupRingElem norm = GroupRingElem::norm(g);
    for (int p = 1; p <= n; ++p) {
        GroupRingMat d(g, 1, 1);
        d.at(0, 0) = (p % 2 == 1) ? tminus1 : norm;
        r.diff_.push_back(std::move(d));
    }
    return r;
}

Resolution Resolution::sphere_model(int m, const Coefficients& c, int dim) {
    if (dim < 1) throw Error("sphere model: dimension must be >= 1");
    Resolution r = periodic(m, c, dim);
    return r; // same differentials; top stage is the sphere's top cells
}

Resolution Resolution::reduced(const FiniteGroup& g, const Coefficients& c, int n) {
    if (n < 1) throw Error("reduced resolution: length must be >= 1");
    const long m = g.order();
    Resolution r(g, c);
    r.length_ = n;
    r.ranks_.push_back(1);

    // previous differential, expanded; stage 0 uses the augmentation row
    ExactMat prev(1, m);
    for (long j = 0; j < m; ++j) prev.at(0, j) = 1;

    for (int p = 1; p <= n; ++p) {
        ExactMat kernel = c.is_field() ? kernel_basis_field(prev, c) : kernel_basis_int(prev);
        const long dim_prev = prev.cols();
        std::vector<std::vector<Rat>> gens;
        ExactMat span(dim_prev, 0);
        for (long col = 0; col < kernel.cols(); ++col) {
            std::vector<Rat> v = kernel.col(col);
            bool member;
            if (span.cols() == 0)
                member = std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.is_zero(); });
            else if (c.is_field())
                member = in_column_span(span, v, c);
            else
                member = solve(span, v, c).has_value();
            if (member) continue;
            gens.push_back(v);
            ExactMat orbit(dim_prev, m);
            long rank_prev = r.ranks_.back();
            for (int e = 0; e < m; ++e) {
                std::vector<Rat> gv = mat_vec(regular_action(g, e, rank_prev), v);
                orbit.set_col(e, gv);
            }
            span = ExactMat::hcat(span, orbit);
        }
        long rk = static_cast<long>(gens.size());
        GroupRingMat d(g, r.ranks_.back(), rk);
        for (long j = 0; j < rk; ++j)
            for (long k = 0; k < r.ranks_.back(); ++k)
                for (int e = 0; e < m; ++e)
                    d.at(k, j).coeff[static_cast<size_t>(e)] = gens[static_cast<size_t>(j)][static_cast<size_t>(k * m + e)];
        prev = d.expand();
        r.ranks_.push_back(rk);
        r.diff_.push_back(std::move(d));
    }
    return r;
}

ChainComplex Resolution::augmented_complex() const {
    if (ranks_.empty() || ranks_[0] != 1) throw Error("augmented complex needs rank-1 stage 0");
    const long m = g_.order();
    ChainComplex cx(c_);
    cx.set_dim(-1, 1);
    for (int p = 0; p <= length_; ++p) cx.set_dim(p, rank(p) * m);
    ExactMat aug(1, m);
    for (long j = 0; j < m; ++j) aug.at(0, j) = 1;
    cx.set_differential(0, std::move(aug));
    for (int p = 1; p <= length_; ++p) cx.set_differential(p, differential(p).expand());
    cx.check();
    return cx;
}

void Resolution::check_exactness() const {
    ChainComplex cx = augmented_complex();
    for (int p = -1; p < length_; ++p)
        if (!cx.homology_at_degree(p).is_zero())
            throw Error(fmt::format("resolution not exact in degree {}", p));
}

void Resolution::check_equivariance() const {
    const long m = g_.order();
    for (int p = 1; p <= length_; ++p) {
        ExactMat d = differential(p).expand();
        for (int e = 0; e < m; ++e) {
            ExactMat lhs = d * regular_action(g_, e, rank(p));
            ExactMat rhs = regular_action(g_, e, rank(p - 1)) * d;
            if (!equal_mod(lhs, rhs, c_)) throw Error("resolution differential not equivariant");
        }
    }
}

GroupAlgebraComplex::GroupAlgebraComplex(ChainComplex cx, FiniteGroup g,
                                         std::map<int, std::vector<ExactMat>> action)
    : cx_(std::move(cx)), g_(std::move(g)), action_(std::move(action)) {}

ExactMat GroupAlgebraComplex::act(int degree, int elem) const {
    auto it = action_.find(degree);
    if (it == action_.end()) {
        if (cx_.dim(degree) != 0) throw Error("missing action in degree with cells");
        return ExactMat::zero(0, 0);
    }
    return it->second[static_cast<size_t>(elem)];
}

ExactMat GroupAlgebraComplex::act_elem(int degree, const GroupRingElem& a) const {
    ExactMat r(cx_.dim(degree), cx_.dim(degree));
    for (int e = 0; e < g_.order(); ++e) {
        const Rat& lam = a.coeff[static_cast<size_t>(e)];
        if (lam.is_zero()) continue;
        r = r + act(degree, e).scaled(lam);
    }
    return r;
}

void GroupAlgebraComplex::check() const {
    if (cx_.empty()) return;
    for (int k = cx_.min_degree(); k <= cx_.max_degree(); ++k) {
        if (cx_.dim(k) == 0) continue;
        auto it = action_.find(k);
        if (it == action_.end() || static_cast<int>(it->second.size()) != g_.order())
            throw Error("group action missing matrices");
        if (!equal_mod(act(k, g_.identity()), ExactMat::identity(cx_.dim(k)), cx_.coeff()))
            throw Error("identity must act trivially");
        for (int a = 0; a < g_.order(); ++a)
            for (int b = 0; b < g_.order(); ++b)
                if (!equal_mod(act(k, a) * act(k, b), act(k, g_.mul(a, b)), cx_.coeff()))
                    throw Error("action violates the group law");
    }
    for (int k = cx_.min_degree() + 1; k <= cx_.max_degree(); ++k) {
        if (cx_.dim(k) == 0 || cx_.dim(k - 1) == 0) continue;
        ExactMat d = cx_.differential(k);
        for (int e = 0; e < g_.order(); ++e)
            if (!equal_mod(d * act(k, e), act(k - 1, e) * d, cx_.coeff()))
                throw Error("action does not commute with the differential");
    }
}

namespace {

void require_compatible(const Resolution& r, const GroupAlgebraComplex& c) {
    if (r.group() != c.group()) throw Error("group mismatch");
    if (r.coeff() != c.complex().coeff()) throw Error("coefficient mismatch");
}

} // namespace

Bicomplex hom_over_group_ring(const Resolution& r, const GroupAlgebraComplex& c) {
    require_compatible(r, c);
    const ChainComplex& cx = c.complex();
    Bicomplex b(r.coeff());
    if (cx.empty()) return b;
    const int qlo = cx.min_degree(), qhi = cx.max_degree();
    for (int p = 0; p <= r.length(); ++p)
        for (int q = qlo; q <= qhi; ++q) b.set_dim(-p, q, r.rank(p) * cx.dim(q));
    for (int p = 0; p <= r.length(); ++p) {
        for (int q = qlo; q <= qhi; ++q) {
            const long rp = r.rank(p);
            const long dq = cx.dim(q);
            if (rp * dq == 0) continue;
            // horizontal: precompose with d_{p+1}
            if (p + 1 <= r.length() && r.rank(p + 1) > 0) {
                const GroupRingMat& d = r.differential(p + 1);
                ExactMat h(r.rank(p + 1) * dq, rp * dq);
                for (long j = 0; j < r.rank(p + 1); ++j)
                    for (long k = 0; k < rp; ++k) {
                        const GroupRingElem& a = d.at(k, j);
                        if (a.is_zero()) continue;
                        ExactMat block = c.act_elem(q, a);
                        for (long x = 0; x < dq; ++x)
                            for (long y = 0; y < dq; ++y)
                                if (!block.at(x, y).is_zero())
                                    h.at(j * dq + x, k * dq + y) = block.at(x, y);
                    }
                b.set_horizontal(-p, q, std::move(h));
            }
            // vertical: postcompose with the complex differential, Koszul sign
            if (cx.dim(q - 1) > 0) {
                ExactMat dv(rp * cx.dim(q - 1), rp * dq);
                ExactMat dq_mat = cx.differential(q);
                const bool flip = (p % 2) != 0;
                for (long j = 0; j < rp; ++j)
                    for (long x = 0; x < dq_mat.rows(); ++x)
                        for (long y = 0; y < dq; ++y)
                            if (!dq_mat.at(x, y).is_zero())
                                dv.at(j * cx.dim(q - 1) + x, j * dq + y) =
                                    flip ? -dq_mat.at(x, y) : dq_mat.at(x, y);
                b.set_vertical(-p, q, std::move(dv));
            }
        }
    }
    return b;
}

ChainComplex tensor_over_group_ring(const Resolution& r, const GroupAlgebraComplex& c) {
    require_compatible(r, c);
    const ChainComplex& cx = c.complex();
    Bicomplex b(r.coeff());
    if (cx.empty()) return ChainComplex(r.coeff());
    const int qlo = cx.min_degree(), qhi = cx.max_degree();
    for (int p = 0; p <= r.length(); ++p)
        for (int q = qlo; q <= qhi; ++q) b.set_dim(p, q, r.rank(p) * cx.dim(q));
    for (int p = 0; p <= r.length(); ++p) {
        for (int q = qlo; q <= qhi; ++q) {
            const long rp = r.rank(p);
            const long dq = cx.dim(q);
            if (rp * dq == 0) continue;
            if (p >= 1 && r.rank(p - 1) > 0) {
                const GroupRingMat& d = r.differential(p);
                ExactMat h(r.rank(p - 1) * dq, rp * dq);
                for (long k = 0; k < r.rank(p - 1); ++k)
                    for (long j = 0; j < rp; ++j) {
                        GroupRingElem a = d.at(k, j).antipode(r.group());
                        if (a.is_zero()) continue;
                        ExactMat block = c.act_elem(q, a);
                        for (long x = 0; x < dq; ++x)
                            for (long y = 0; y < dq; ++y)
                                if (!block.at(x, y).is_zero())
                                    h.at(k * dq + x, j * dq + y) = block.at(x, y);
                    }
                b.set_horizontal(p, q, std::move(h));
            }
            if (cx.dim(q - 1) > 0) {
                ExactMat dv(rp * cx.dim(q - 1), rp * dq);
                ExactMat dq_mat = cx.differential(q);
                const bool flip = (p % 2) != 0;
                for (long j = 0; j < rp; ++j)
                    for (long x = 0; x < dq_mat.rows(); ++x)
                        for (long y = 0; y < dq; ++y)
                            if (!dq_mat.at(x, y).is_zero())
                                dv.at(j * cx.dim(q - 1) + x, j * dq + y) =
                                    flip ? -dq_mat.at(x, y) : dq_mat.at(x, y);
                b.set_vertical(p, q, std::move(dv));
            }
        }
    }
    return total_complex(b);
}

} // namespace stackhom
