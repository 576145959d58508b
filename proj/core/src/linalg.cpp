#include "stackhom/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace stackhom {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Coefficients Coefficients::prime_field(long p) {
    if (!is_prime(p)) throw Error("prime field: modulus must be prime");
    return Coefficients(CoeffKind::PrimeField, p);
}

long Coefficients::prime() const {
    if (kind_ != CoeffKind::PrimeField) throw Error("prime(): not a prime field");
    return p_;
}

std::string Coefficients::label() const {
    switch (kind_) {
        case CoeffKind::Integers: return "Z";
        case CoeffKind::Rationals: return "Q";
        case CoeffKind::PrimeField: return "F" + std::to_string(p_);
    }
    return "?";
}

namespace {

// ---------------------------------------------------------------------------
// Integer working matrix for SNF / Bareiss.

struct IntMat {
    long rows = 0, cols = 0;
    std::vector<Int> a;
    IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r * c)) {}
    Int& at(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
    const Int& at(long i, long j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

IntMat to_int_mat(const ExactMat& m) {
    if (!m.is_integral()) throw Error("integer matrix required");
    IntMat w(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) w.at(i, j) = numerator(m.at(i, j));
    return w;
}

ExactMat from_int_mat(const IntMat& w) {
    ExactMat m(w.rows, w.cols);
    for (long i = 0; i < w.rows; ++i)
        for (long j = 0; j < w.cols; ++j)
            if (w.at(i, j) != 0) m.at(i, j) = Rat(w.at(i, j));
    return m;
}

// SNF driver tracking U, Uinv (row ops) and V, Vinv (column ops).
struct SnfWork {
    IntMat a;
    IntMat u, uinv, v, vinv;

    explicit SnfWork(const ExactMat& m)
        : a(to_int_mat(m)),
          u(m.rows(), m.rows()), uinv(m.rows(), m.rows()),
          v(m.cols(), m.cols()), vinv(m.cols(), m.cols()) {
        for (long i = 0; i < a.rows; ++i) u.at(i, i) = uinv.at(i, i) = 1;
        for (long j = 0; j < a.cols; ++j) v.at(j, j) = vinv.at(j, j) = 1;
    }

    void swap_rows(long i, long k) {
        if (i == k) return;
        for (long j = 0; j < a.cols; ++j) std::swap(a.at(i, j), a.at(k, j));
        for (long j = 0; j < u.cols; ++j) std::swap(u.at(i, j), u.at(k, j));
        for (long r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, i), uinv.at(r, k));
    }
    void swap_cols(long j, long l) {
        if (j == l) return;
        for (long i = 0; i < a.rows; ++i) std::swap(a.at(i, j), a.at(i, l));
        for (long i = 0; i < v.rows; ++i) std::swap(v.at(i, j), v.at(i, l));
        for (long c = 0; c < vinv.cols; ++c) std::swap(vinv.at(j, c), vinv.at(l, c));
    }
    // row_k -= q * row_t
    void row_sub(long k, long t, const Int& q) {
        if (q == 0) return;
        for (long j = 0; j < a.cols; ++j) a.at(k, j) -= q * a.at(t, j);
        for (long j = 0; j < u.cols; ++j) u.at(k, j) -= q * u.at(t, j);
        for (long r = 0; r < uinv.rows; ++r) uinv.at(r, t) += q * uinv.at(r, k);
    }
    // col_l -= q * col_t
    void col_sub(long l, long t, const Int& q) {
        if (q == 0) return;
        for (long i = 0; i < a.rows; ++i) a.at(i, l) -= q * a.at(i, t);
        for (long i = 0; i < v.rows; ++i) v.at(i, l) -= q * v.at(i, t);
        for (long c = 0; c < vinv.cols; ++c) vinv.at(t, c) += q * vinv.at(l, c);
    }
    // row_t += row_i
    void row_add(long t, long i) {
        for (long j = 0; j < a.cols; ++j) a.at(t, j) += a.at(i, j);
        for (long j = 0; j < u.cols; ++j) u.at(t, j) += u.at(i, j);
        for (long r = 0; r < uinv.rows; ++r) uinv.at(r, i) -= uinv.at(r, t);
    }
    void negate_row(long t) {
        for (long j = 0; j < a.cols; ++j) a.at(t, j) = -a.at(t, j);
        for (long j = 0; j < u.cols; ++j) u.at(t, j) = -u.at(t, j);
        for (long r = 0; r < uinv.rows; ++r) uinv.at(r, t) = -uinv.at(r, t);
    }
    // rows (t,i) <- [[p,q],[r,s]] * rows (t,i), with ps - qr = 1
    void row_combine(long t, long i, const Int& p, const Int& q, const Int& r, const Int& s) {
        for (long j = 0; j < a.cols; ++j) {
            Int x = a.at(t, j), y = a.at(i, j);
            a.at(t, j) = p * x + q * y;
            a.at(i, j) = r * x + s * y;
        }
        for (long j = 0; j < u.cols; ++j) {
            Int x = u.at(t, j), y = u.at(i, j);
            u.at(t, j) = p * x + q * y;
            u.at(i, j) = r * x + s * y;
        }
        for (long k = 0; k < uinv.rows; ++k) {
            Int x = uinv.at(k, t), y = uinv.at(k, i);
            uinv.at(k, t) = s * x - r * y;
            uinv.at(k, i) = -q * x + p * y;
        }
    }
    // cols (t,j) <- cols (t,j) * [[p,r],[q,s]], with ps - qr = 1
    void col_combine(long t, long j, const Int& p, const Int& q, const Int& r, const Int& s) {
        for (long i = 0; i < a.rows; ++i) {
            Int x = a.at(i, t), y = a.at(i, j);
            a.at(i, t) = p * x + q * y;
            a.at(i, j) = r * x + s * y;
        }
        for (long i = 0; i < v.rows; ++i) {
            Int x = v.at(i, t), y = v.at(i, j);
            v.at(i, t) = p * x + q * y;
            v.at(i, j) = r * x + s * y;
        }
        for (long k = 0; k < vinv.cols; ++k) {
            Int x = vinv.at(t, k), y = vinv.at(j, k);
            vinv.at(t, k) = s * x - r * y;
            vinv.at(j, k) = -q * x + p * y;
        }
    }
};

// extended gcd: g = gcd(a,b) > 0 with g = pa + qb
void ext_gcd(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int quot = old_r / r;
        Int tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
        tmp = old_t - quot * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    g = old_r;
    p = old_s;
    q = old_t;
}

} // namespace

std::vector<Int> SnfResult::elementary_divisors() const {
    std::vector<Int> d;
    for (long i = 0; i < rank; ++i) d.push_back(numerator(D.at(i, i)));
    return d;
}

std::vector<Int> SnfResult::torsion() const {
    std::vector<Int> t;
    for (long i = 0; i < rank; ++i) {
        Int d = numerator(D.at(i, i));
        if (d > 1) t.push_back(d);
    }
    return t;
}

SnfResult snf(const ExactMat& m) {
    SnfWork w(m);
    const long rows = w.a.rows, cols = w.a.cols;
    long t = 0;
    while (t < rows && t < cols) {
        // smallest-nonzero-magnitude pivot, ties broken by (row, col)
        long pi = -1, pj = -1;
        Int best = 0;
        for (long i = t; i < rows; ++i)
            for (long j = t; j < cols; ++j) {
                const Int& x = w.a.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (pi < 0 || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            // one extended-gcd combination per entry clears the column, then
            // the row; column entries can reappear, so sweep until clean
            bool dirty = false;
            for (long i = t + 1; i < rows; ++i) {
                const Int& b = w.a.at(i, t);
                if (b == 0) continue;
                const Int& piv = w.a.at(t, t);
                if (b % piv == 0) {
                    w.row_sub(i, t, b / piv);
                } else {
                    Int g, p, q;
                    ext_gcd(piv, b, g, p, q);
                    w.row_combine(t, i, p, q, -b / g, piv / g);
                }
            }
            for (long j = t + 1; j < cols; ++j) {
                const Int& b = w.a.at(t, j);
                if (b == 0) continue;
                const Int& piv = w.a.at(t, t);
                if (b % piv == 0) {
                    w.col_sub(j, t, b / piv);
                } else {
                    Int g, p, q;
                    ext_gcd(piv, b, g, p, q);
                    w.col_combine(t, j, p, q, -b / g, piv / g);
                }
            }
            for (long i = t + 1; i < rows && !dirty; ++i)
                if (w.a.at(i, t) != 0) dirty = true;
            if (dirty) continue;

            if (w.a.at(t, t) < 0) w.negate_row(t);
            break;
        }
        ++t;
    }

    // divisibility chain: replace diagonal pairs by (gcd, lcm)
    for (long i = 0; i < t; ++i)
        for (long j = i + 1; j < t; ++j) {
            const Int& a = w.a.at(i, i);
            if (w.a.at(j, j) % a == 0) continue;
            w.row_add(i, j); // block [[a, b], [0, b]]
            Int g, p, q;
            ext_gcd(a, w.a.at(i, j), g, p, q);
            Int b = w.a.at(i, j);
            w.col_combine(i, j, p, q, -b / g, a / g); // [[g, 0], [qb, ab/g]]
            w.row_sub(j, i, w.a.at(j, i) / g);        // [[g, 0], [0, ab/g]]
        }

    SnfResult r;
    r.U = from_int_mat(w.u);
    r.Uinv = from_int_mat(w.uinv);
    r.V = from_int_mat(w.v);
    r.Vinv = from_int_mat(w.vinv);
    r.D = from_int_mat(w.a);
    r.rank = t;
    return r;
}

// ---------------------------------------------------------------------------
// Field elimination: F_p fast path on machine words, Q on exact rationals.

namespace {

struct FpMat {
    uint64_t p;
    long rows, cols;
    std::vector<uint64_t> a;
    uint64_t& at(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
    uint64_t at(long i, long j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

uint64_t fp_pow(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
uint64_t fp_inv(uint64_t x, uint64_t p) { return fp_pow(x % p, p - 2, p); }

uint64_t rat_mod_p(const Rat& x, uint64_t p) {
    Int num = numerator(x) % Int(p);
    Int den = denominator(x) % Int(p);
    if (num < 0) num += Int(p);
    uint64_t n = static_cast<uint64_t>(num);
    uint64_t d = static_cast<uint64_t>(den < 0 ? den + Int(p) : den);
    if (d == 0) throw Error("entry not defined mod p");
    return n * fp_inv(d, p) % p;
}

FpMat to_fp(const ExactMat& m, uint64_t p) {
    FpMat w{p, m.rows(), m.cols(), {}};
    w.a.resize(static_cast<size_t>(m.rows() * m.cols()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) w.at(i, j) = rat_mod_p(m.at(i, j), p);
    return w;
}

// Reduced row echelon form; returns pivot columns (one per pivot row).
std::vector<long> fp_rref(FpMat& w) {
    std::vector<long> pivots;
    long r = 0;
    for (long j = 0; j < w.cols && r < w.rows; ++j) {
        long pr = -1;
        for (long i = r; i < w.rows; ++i)
            if (w.at(i, j) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (long c = 0; c < w.cols; ++c) std::swap(w.at(pr, c), w.at(r, c));
        uint64_t inv = fp_inv(w.at(r, j), w.p);
        for (long c = j; c < w.cols; ++c) w.at(r, c) = w.at(r, c) * inv % w.p;
        for (long i = 0; i < w.rows; ++i) {
            if (i == r || w.at(i, j) == 0) continue;
            uint64_t f = w.at(i, j);
            for (long c = j; c < w.cols; ++c)
                w.at(i, c) = (w.at(i, c) + (w.p - f) * w.at(r, c)) % w.p;
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

struct QMat {
    long rows, cols;
    std::vector<Rat> a;
    Rat& at(long i, long j) { return a[static_cast<size_t>(i * cols + j)]; }
    const Rat& at(long i, long j) const { return a[static_cast<size_t>(i * cols + j)]; }
};

QMat to_q(const ExactMat& m) {
    QMat w{m.rows(), m.cols(), {}};
    w.a.resize(static_cast<size_t>(m.rows() * m.cols()));
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) w.at(i, j) = m.at(i, j);
    return w;
}

std::vector<long> q_rref(QMat& w) {
    std::vector<long> pivots;
    long r = 0;
    for (long j = 0; j < w.cols && r < w.rows; ++j) {
        long pr = -1;
        for (long i = r; i < w.rows; ++i)
            if (!w.at(i, j).is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (long c = 0; c < w.cols; ++c) std::swap(w.at(pr, c), w.at(r, c));
        Rat inv = 1 / w.at(r, j);
        for (long c = j; c < w.cols; ++c) w.at(r, c) *= inv;
        for (long i = 0; i < w.rows; ++i) {
            if (i == r || w.at(i, j).is_zero()) continue;
            Rat f = w.at(i, j);
            for (long c = j; c < w.cols; ++c) w.at(i, c) -= f * w.at(r, c);
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

// Kernel basis from an RREF with pivot columns: one column per free column.
template <class GetEntry>
ExactMat kernel_from_rref(long cols, const std::vector<long>& pivots, GetEntry entry) {
    std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
    for (long j : pivots) is_pivot[static_cast<size_t>(j)] = 1;
    std::vector<long> free_cols;
    for (long j = 0; j < cols; ++j)
        if (!is_pivot[static_cast<size_t>(j)]) free_cols.push_back(j);
    ExactMat k(cols, static_cast<long>(free_cols.size()));
    for (size_t fc = 0; fc < free_cols.size(); ++fc) {
        long j = free_cols[fc];
        k.at(j, static_cast<long>(fc)) = 1;
        for (size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], static_cast<long>(fc)) = -entry(static_cast<long>(r), j);
    }
    return k;
}

void require_field(const Coefficients& c) {
    if (!c.is_field()) throw Error("field required");
}

long bareiss_rank(const ExactMat& m) {
    // Clear denominators row by row, then fraction-free elimination.
    IntMat w(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i) {
        Int lcm = 1;
        for (long j = 0; j < m.cols(); ++j) {
            Int d = denominator(m.at(i, j));
            lcm = lcm / gcd(lcm, d) * d;
        }
        for (long j = 0; j < m.cols(); ++j) {
            const Rat& x = m.at(i, j);
            w.at(i, j) = numerator(x) * (lcm / denominator(x));
        }
    }
    Int prev = 1;
    long r = 0;
    for (long j = 0; j < w.cols && r < w.rows; ++j) {
        long pr = -1;
        for (long i = r; i < w.rows; ++i)
            if (w.at(i, j) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != r)
            for (long c = 0; c < w.cols; ++c) std::swap(w.at(pr, c), w.at(r, c));
        for (long i = r + 1; i < w.rows; ++i) {
            for (long c = j + 1; c < w.cols; ++c)
                w.at(i, c) = (w.at(r, j) * w.at(i, c) - w.at(i, j) * w.at(r, c)) / prev;
            w.at(i, j) = 0;
        }
        prev = w.at(r, j);
        ++r;
    }
    return r;
}

} // namespace

long rank_over_field(const ExactMat& m, const Coefficients& c) {
    require_field(c);
    if (c.kind() == CoeffKind::Rationals) return bareiss_rank(m);
    FpMat w = to_fp(m, static_cast<uint64_t>(c.prime()));
    return static_cast<long>(fp_rref(w).size());
}

ExactMat kernel_basis_field(const ExactMat& m, const Coefficients& c) {
    require_field(c);
    if (c.kind() == CoeffKind::PrimeField) {
        FpMat w = to_fp(m, static_cast<uint64_t>(c.prime()));
        auto pivots = fp_rref(w);
        return kernel_from_rref(m.cols(), pivots,
                                [&](long r, long j) { return Rat(w.at(r, j)); });
    }
    QMat w = to_q(m);
    auto pivots = q_rref(w);
    return kernel_from_rref(m.cols(), pivots, [&](long r, long j) { return w.at(r, j); });
}

ExactMat kernel_basis_int(const ExactMat& m) {
    SnfResult s = snf(m);
    ExactMat k(m.cols(), m.cols() - s.rank);
    for (long j = s.rank; j < m.cols(); ++j)
        for (long i = 0; i < m.cols(); ++i) k.at(i, j - s.rank) = s.V.at(i, j);
    return k;
}

std::optional<std::vector<Rat>> solve(const ExactMat& a, const std::vector<Rat>& b,
                                      const Coefficients& c) {
    if (static_cast<long>(b.size()) != a.rows()) throw Error("solve: shape mismatch");
    if (c.kind() == CoeffKind::Integers) {
        SnfResult s = snf(a);
        std::vector<Rat> ub = mat_vec(s.U, b);
        std::vector<Rat> y(static_cast<size_t>(a.cols()));
        for (long i = 0; i < a.rows(); ++i) {
            if (i < s.rank) {
                if (i < a.cols()) {
                    Rat q = ub[static_cast<size_t>(i)] / s.D.at(i, i);
                    if (denominator(q) != 1) return std::nullopt;
                    y[static_cast<size_t>(i)] = q;
                }
            } else if (!ub[static_cast<size_t>(i)].is_zero()) {
                return std::nullopt;
            }
        }
        return mat_vec(s.V, y);
    }
    // field: eliminate on the augmented matrix
    if (c.kind() == CoeffKind::PrimeField) {
        uint64_t p = static_cast<uint64_t>(c.prime());
        FpMat w = to_fp(a, p);
        FpMat aug{p, w.rows, w.cols + 1, {}};
        aug.a.resize(static_cast<size_t>(aug.rows * aug.cols));
        for (long i = 0; i < w.rows; ++i) {
            for (long j = 0; j < w.cols; ++j) aug.at(i, j) = w.at(i, j);
            aug.at(i, w.cols) = rat_mod_p(b[static_cast<size_t>(i)], p);
        }
        auto pivots = fp_rref(aug);
        if (!pivots.empty() && pivots.back() == w.cols) return std::nullopt;
        std::vector<Rat> x(static_cast<size_t>(a.cols()));
        for (size_t r = 0; r < pivots.size(); ++r)
            x[static_cast<size_t>(pivots[r])] = Rat(aug.at(static_cast<long>(r), w.cols));
        return x;
    }
    QMat w = to_q(a);
    QMat aug{w.rows, w.cols + 1, {}};
    aug.a.resize(static_cast<size_t>(aug.rows * aug.cols));
    for (long i = 0; i < w.rows; ++i) {
        for (long j = 0; j < w.cols; ++j) aug.at(i, j) = w.at(i, j);
        aug.at(i, w.cols) = b[static_cast<size_t>(i)];
    }
    auto pivots = q_rref(aug);
    if (!pivots.empty() && pivots.back() == w.cols) return std::nullopt;
    std::vector<Rat> x(static_cast<size_t>(a.cols()));
    for (size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<long>(r), w.cols);
    return x;
}

std::vector<long> independent_columns(const ExactMat& m, const Coefficients& c) {
    require_field(c);
    if (c.kind() == CoeffKind::PrimeField) {
        FpMat w = to_fp(m, static_cast<uint64_t>(c.prime()));
        return fp_rref(w);
    }
    QMat w = to_q(m);
    return q_rref(w);
}

bool in_column_span(const ExactMat& a, const std::vector<Rat>& b, const Coefficients& c) {
    require_field(c);
    return solve(a, b, c).has_value();
}

bool is_zero_mod(const Rat& x, const Coefficients& c) {
    if (c.kind() != CoeffKind::PrimeField) return x.is_zero();
    return rat_mod_p(x, static_cast<uint64_t>(c.prime())) == 0;
}

bool is_zero_mod(const ExactMat& m, const Coefficients& c) {
    if (c.kind() != CoeffKind::PrimeField) return m.is_zero();
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            if (!is_zero_mod(m.at(i, j), c)) return false;
    return true;
}

bool equal_mod(const ExactMat& a, const ExactMat& b, const Coefficients& c) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (c.kind() != CoeffKind::PrimeField) return a == b;
    for (long i = 0; i < a.rows(); ++i)
        for (long j = 0; j < a.cols(); ++j)
            if (!is_zero_mod(Rat(a.at(i, j) - b.at(i, j)), c)) return false;
    return true;
}

HomologySummary homology_at(const ExactMat& d_in, const ExactMat& d_out, const Coefficients& c) {
    if (d_out.cols() != d_in.rows()) throw Error("homology_at: shape mismatch");
    if (!is_zero_mod(d_out * d_in, c)) throw Error("not a complex");
    const long n = d_in.rows();
    HomologySummary h;
    if (c.is_field()) {
        h.free_rank = (n - rank_over_field(d_out, c)) - rank_over_field(d_in, c);
        return h;
    }
    SnfResult so = snf(d_out);
    const long k = n - so.rank; // kernel lattice rank
    // coordinates of im(d_in) in the kernel basis: bottom rows of Vinv * d_in
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
    SnfResult sb = snf(b);
    h.free_rank = k - sb.rank;
    h.torsion = sb.torsion();
    return h;
}

Int det_int(const ExactMat& m) {
    if (!m.is_square()) throw Error("det: not square");
    IntMat w = to_int_mat(m);
    const long n = w.rows;
    Int prev = 1;
    int sign = 1;
    for (long k = 0; k < n; ++k) {
        long pr = -1;
        for (long i = k; i < n; ++i)
            if (w.at(i, k) != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return 0;
        if (pr != k) {
            for (long c = 0; c < n; ++c) std::swap(w.at(pr, c), w.at(k, c));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long c = k + 1; c < n; ++c)
                w.at(i, c) = (w.at(k, k) * w.at(i, c) - w.at(i, k) * w.at(k, c)) / prev;
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

} // namespace stackhom
