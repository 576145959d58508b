#include "stackhom/bicomplex.hpp"

#include <vector>

namespace stackhom {

void Bicomplex::set_dim(int p, int q, long d) {
    if (d < 0) throw Error("negative dimension");
    dims_[{p, q}] = d;
}

long Bicomplex::dim(int p, int q) const {
    auto it = dims_.find({p, q});
    return it == dims_.end() ? 0 : it->second;
}

void Bicomplex::set_horizontal(int p, int q, ExactMat m) {
    if (m.rows() != dim(p - 1, q) || m.cols() != dim(p, q))
        throw Error("horizontal differential shape mismatch");
    dh_[{p, q}] = std::move(m);
}

void Bicomplex::set_vertical(int p, int q, ExactMat m) {
    if (m.rows() != dim(p, q - 1) || m.cols() != dim(p, q))
        throw Error("vertical differential shape mismatch");
    dv_[{p, q}] = std::move(m);
}

ExactMat Bicomplex::horizontal(int p, int q) const {
    auto it = dh_.find({p, q});
    if (it != dh_.end()) return it->second;
    return ExactMat::zero(dim(p - 1, q), dim(p, q));
}

ExactMat Bicomplex::vertical(int p, int q) const {
    auto it = dv_.find({p, q});
    if (it != dv_.end()) return it->second;
    return ExactMat::zero(dim(p, q - 1), dim(p, q));
}

void Bicomplex::check() const {
    for (const auto& [pq, d] : dims_) {
        auto [p, q] = pq;
        if (d == 0) continue;
        if (!is_zero_mod(horizontal(p - 1, q) * horizontal(p, q), coeff_))
            throw Error("not a bicomplex");
        if (!is_zero_mod(vertical(p, q - 1) * vertical(p, q), coeff_))
            throw Error("not a bicomplex");
        ExactMat mixed = horizontal(p, q - 1) * vertical(p, q) + vertical(p - 1, q) * horizontal(p, q);
        if (!is_zero_mod(mixed, coeff_)) throw Error("not a bicomplex");
    }
}

ChainComplex total_complex(const Bicomplex& b) {
    b.check();
    ChainComplex t(b.coeff());
    if (b.dims().empty()) return t;

    // group bidegrees by total degree, ascending p inside each block
    std::map<int, std::vector<std::pair<int, int>>> layers;
    int lo = 0, hi = 0;
    bool first = true;
    for (const auto& [pq, d] : b.dims()) {
        int n = pq.first + pq.second;
        layers[n].push_back(pq);
        lo = first ? n : std::min(lo, n);
        hi = first ? n : std::max(hi, n);
        first = false;
    }
    std::map<int, std::map<std::pair<int, int>, long>> offset;
    for (int n = lo; n <= hi; ++n) {
        long total = 0;
        for (const auto& pq : layers[n]) {
            offset[n][pq] = total;
            total += b.dim(pq.first, pq.second);
        }
        t.set_dim(n, total);
    }
    for (int n = lo + 1; n <= hi; ++n) {
        ExactMat m(t.dim(n - 1), t.dim(n));
        for (const auto& pq : layers[n]) {
            auto [p, q] = pq;
            long co = offset[n][pq];
            ExactMat h = b.horizontal(p, q);
            if (offset[n - 1].count({p - 1, q})) {
                long ro = offset[n - 1][{p - 1, q}];
                for (long i = 0; i < h.rows(); ++i)
                    for (long j = 0; j < h.cols(); ++j)
                        if (!h.at(i, j).is_zero()) m.at(ro + i, co + j) = h.at(i, j);
            }
            ExactMat v = b.vertical(p, q);
            if (offset[n - 1].count({p, q - 1})) {
                long ro = offset[n - 1][{p, q - 1}];
                for (long i = 0; i < v.rows(); ++i)
                    for (long j = 0; j < v.cols(); ++j)
                        if (!v.at(i, j).is_zero()) m.at(ro + i, co + j) = v.at(i, j);
            }
        }
        t.set_differential(n, std::move(m));
    }
    t.check();
    return t;
}

} // namespace stackhom
