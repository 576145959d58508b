#include "stackhom/homology_basis.hpp"

namespace stackhom {

FieldHomologyBasis::FieldHomologyBasis(const ChainComplex& cx, int degree) : c_(cx.coeff()) {
    if (!c_.is_field()) throw Error("field required");
    ExactMat boundaries = cx.differential(degree + 1);
    ExactMat cycles = kernel_basis_field(cx.differential(degree), c_);
    ExactMat m = ExactMat::hcat(boundaries, cycles);
    std::vector<long> pivots = independent_columns(m, c_);
    ExactMat keep(m.rows(), static_cast<long>(pivots.size()));
    long col = 0;
    for (long j : pivots) {
        for (long i = 0; i < m.rows(); ++i) keep.at(i, col) = m.at(i, j);
        if (j >= boundaries.cols())
            rep_cols_.push_back(col);
        else
            ++image_rank_;
        ++col;
    }
    all_ = std::move(keep);
}

ExactMat FieldHomologyBasis::representatives() const {
    ExactMat r(all_.rows(), dim());
    for (long j = 0; j < dim(); ++j)
        for (long i = 0; i < all_.rows(); ++i) r.at(i, j) = all_.at(i, rep_cols_[static_cast<size_t>(j)]);
    return r;
}

std::vector<Rat> FieldHomologyBasis::representative(long i) const {
    return all_.col(rep_cols_[static_cast<size_t>(i)]);
}

std::vector<Rat> FieldHomologyBasis::coords(const std::vector<Rat>& cycle) const {
    auto sol = solve(all_, cycle, c_);
    if (!sol) throw Error("vector is not a cycle in this degree");
    std::vector<Rat> out;
    for (long j : rep_cols_) out.push_back((*sol)[static_cast<size_t>(j)]);
    return out;
}

ExactMat induced_map(const ExactMat& chain_map, const FieldHomologyBasis& from,
                     const FieldHomologyBasis& to) {
    ExactMat m(to.dim(), from.dim());
    for (long j = 0; j < from.dim(); ++j) {
        std::vector<Rat> img = mat_vec(chain_map, from.representative(j));
        std::vector<Rat> c = to.coords(img);
        for (long i = 0; i < to.dim(); ++i) m.at(i, j) = c[static_cast<size_t>(i)];
    }
    return m;
}

IntHomologyBasis::IntHomologyBasis(const ChainComplex& cx, int degree) {
    if (cx.coeff().kind() != CoeffKind::Integers) throw Error("integer coefficients required");
    ExactMat d_out = cx.differential(degree);
    ExactMat d_in = cx.differential(degree + 1);
    SnfResult so = snf(d_out);
    const long n = d_out.cols();
    const long k = n - so.rank;
    kernel_ = ExactMat(n, k);
    for (long j = 0; j < k; ++j)
        for (long i = 0; i < n; ++i) kernel_.at(i, j) = so.V.at(i, so.rank + j);
    // boundaries in kernel coordinates
    ExactMat y = so.Vinv * d_in;
    ExactMat b(k, d_in.cols());
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < d_in.cols(); ++j) {
            if (i < so.rank) {
                if (!y.at(i, j).is_zero()) throw Error("not a complex");
            } else {
                b.at(i - so.rank, j) = y.at(i, j);
            }
        }
    pres_ = snf(b);
    for (long i = 0; i < k; ++i) {
        if (i >= pres_.rank) {
            free_rows_.push_back(i);
        } else {
            Int d = numerator(pres_.D.at(i, i));
            if (d > 1) {
                torsion_rows_.push_back(i);
                torsion_.push_back(d);
            }
        }
    }
    free_rank_ = static_cast<long>(free_rows_.size());
}

IntHomologyBasis::Coords IntHomologyBasis::coords(const std::vector<Rat>& cycle) const {
    auto y = solve(kernel_, cycle, Coefficients::integers());
    if (!y) throw Error("vector is not an integral cycle in this degree");
    std::vector<Rat> w = mat_vec(pres_.U, *y);
    Coords out;
    for (long i : free_rows_) out.free.push_back(numerator(w[static_cast<size_t>(i)]));
    for (size_t t = 0; t < torsion_rows_.size(); ++t) {
        Int d = torsion_[t];
        Int r = numerator(w[static_cast<size_t>(torsion_rows_[t])]) % d;
        if (r < 0) r += d;
        out.torsion.push_back(r);
    }
    return out;
}

ExactMat IntHomologyBasis::free_representatives() const {
    ExactMat r(kernel_.rows(), free_rank_);
    for (long j = 0; j < free_rank_; ++j) {
        // preimage under U of the unit vector on the chosen row
        std::vector<Rat> unit(static_cast<size_t>(kernel_.cols()));
        unit[static_cast<size_t>(free_rows_[static_cast<size_t>(j)])] = 1;
        std::vector<Rat> y = mat_vec(pres_.Uinv, unit);
        std::vector<Rat> z = mat_vec(kernel_, y);
        for (long i = 0; i < kernel_.rows(); ++i) r.at(i, j) = z[static_cast<size_t>(i)];
    }
    return r;
}

} // namespace stackhom
