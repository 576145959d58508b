#pragma once

#include "stackhom/coefficients.hpp"

#include <vector>

namespace stackhom {

/// Dense matrix of exact rational scalars. The coefficient semantics
/// (Z, Q, F_p) are supplied by the operations, not stored here; integer
/// matrices are those whose entries all have denominator 1.
class ExactMat {
public:
    ExactMat() : rows_(0), cols_(0) {}
    ExactMat(long rows, long cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {
        if (rows < 0 || cols < 0) throw Error("negative matrix dimension");
    }

    static ExactMat identity(long n);
    static ExactMat zero(long rows, long cols) { return ExactMat(rows, cols); }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    Rat& at(long i, long j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
    const Rat& at(long i, long j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

    bool is_zero() const;
    bool is_integral() const;
    bool is_square() const { return rows_ == cols_; }

    ExactMat transpose() const;
    ExactMat operator-() const;
    ExactMat scaled(const Rat& s) const;

    std::vector<Rat> col(long j) const;
    std::vector<Rat> row(long i) const;
    void set_col(long j, const std::vector<Rat>& v);

    /// Column-wise concatenation [a | b].
    static ExactMat hcat(const ExactMat& a, const ExactMat& b);

    friend ExactMat operator*(const ExactMat& a, const ExactMat& b);
    friend ExactMat operator+(const ExactMat& a, const ExactMat& b);
    friend ExactMat operator-(const ExactMat& a, const ExactMat& b);
    friend bool operator==(const ExactMat& a, const ExactMat& b);

private:
    long rows_, cols_;
    std::vector<Rat> a_;
};

std::vector<Rat> mat_vec(const ExactMat& m, const std::vector<Rat>& v);

} // namespace stackhom
