#include "stackhom/matrix.hpp"

namespace stackhom {

ExactMat ExactMat::identity(long n) {
    ExactMat m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ExactMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMat::is_integral() const {
    for (const auto& x : a_)
        if (denominator(x) != 1) return false;
    return true;
}

ExactMat ExactMat::transpose() const {
    ExactMat t(cols_, rows_);
    for (long i = 0; i < rows_; ++i)
        for (long j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMat ExactMat::operator-() const {
    ExactMat m(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

ExactMat ExactMat::scaled(const Rat& s) const {
    ExactMat m(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] * s;
    return m;
}

std::vector<Rat> ExactMat::col(long j) const {
    std::vector<Rat> v(static_cast<size_t>(rows_));
    for (long i = 0; i < rows_; ++i) v[static_cast<size_t>(i)] = at(i, j);
    return v;
}

std::vector<Rat> ExactMat::row(long i) const {
    std::vector<Rat> v(static_cast<size_t>(cols_));
    for (long j = 0; j < cols_; ++j) v[static_cast<size_t>(j)] = at(i, j);
    return v;
}

void ExactMat::set_col(long j, const std::vector<Rat>& v) {
    for (long i = 0; i < rows_; ++i) at(i, j) = v[static_cast<size_t>(i)];
}

ExactMat ExactMat::hcat(const ExactMat& a, const ExactMat& b) {
    if (a.rows() != b.rows()) throw Error("hcat: row mismatch");
    ExactMat m(a.rows(), a.cols() + b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (long j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

ExactMat operator*(const ExactMat& a, const ExactMat& b) {
    if (a.cols() != b.rows()) throw Error("matrix product: shape mismatch");
    ExactMat m(a.rows(), b.cols());
    for (long i = 0; i < a.rows(); ++i) {
        for (long k = 0; k < a.cols(); ++k) {
            const Rat& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (long j = 0; j < b.cols(); ++j) {
                const Rat& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

ExactMat operator+(const ExactMat& a, const ExactMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix sum: shape mismatch");
    ExactMat m(a.rows(), a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) + b.at(i, j);
    return m;
}

ExactMat operator-(const ExactMat& a, const ExactMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix diff: shape mismatch");
    ExactMat m(a.rows(), a.cols());
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j) - b.at(i, j);
    return m;
}

bool operator==(const ExactMat& a, const ExactMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

std::vector<Rat> mat_vec(const ExactMat& m, const std::vector<Rat>& v) {
    if (static_cast<long>(v.size()) != m.cols()) throw Error("mat_vec: shape mismatch");
    std::vector<Rat> r(static_cast<size_t>(m.rows()));
    for (long i = 0; i < m.rows(); ++i) {
        Rat s = 0;
        for (long j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            if (!x.is_zero() && !v[static_cast<size_t>(j)].is_zero()) s += x * v[static_cast<size_t>(j)];
        }
        r[static_cast<size_t>(i)] = s;
    }
    return r;
}

} // namespace stackhom
