#include "stackhom/chain_complex.hpp"

namespace stackhom {

void ChainComplex::set_dim(int k, long d) {
    if (d < 0) throw Error("negative dimension");
    dims_[k] = d;
}

long ChainComplex::dim(int k) const {
    auto it = dims_.find(k);
    return it == dims_.end() ? 0 : it->second;
}

void ChainComplex::set_differential(int k, ExactMat m) {
    if (!dims_.count(k) || !dims_.count(k - 1)) throw Error("differential before dims");
    if (m.rows() != dim(k - 1) || m.cols() != dim(k)) throw Error("differential shape mismatch");
    diff_[k] = std::move(m);
}

ExactMat ChainComplex::differential(int k) const {
    auto it = diff_.find(k);
    if (it != diff_.end()) return it->second;
    return ExactMat::zero(dim(k - 1), dim(k));
}

int ChainComplex::min_degree() const {
    if (dims_.empty()) throw Error("empty complex");
    return dims_.begin()->first;
}

int ChainComplex::max_degree() const {
    if (dims_.empty()) throw Error("empty complex");
    return dims_.rbegin()->first;
}

void ChainComplex::check() const {
    if (dims_.empty()) return;
    for (int k = min_degree(); k <= max_degree() + 1; ++k) {
        if (!is_zero_mod(differential(k - 1) * differential(k), coeff_))
            throw Error("not a complex");
    }
}

HomologySummary ChainComplex::homology_at_degree(int k) const {
    return homology_at(differential(k + 1), differential(k), coeff_);
}

GradedModulePresentation ChainComplex::homology() const {
    GradedModulePresentation p;
    if (dims_.empty()) return p;
    for (int k = min_degree(); k <= max_degree(); ++k) p.set(k, homology_at_degree(k));
    return p;
}

ChainComplex ChainComplex::shifted(int n) const {
    ChainComplex s(coeff_);
    for (const auto& [k, d] : dims_) s.set_dim(k + n, d);
    const bool flip = (n % 2) != 0;
    for (const auto& [k, m] : diff_) s.set_differential(k + n, flip ? -m : m);
    return s;
}

ChainComplex ChainComplex::dual() const {
    ChainComplex d(coeff_);
    for (const auto& [k, n] : dims_) d.set_dim(-k, n);
    for (const auto& [k, m] : diff_) d.set_differential(-k + 1, m.transpose());
    return d;
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& a, const ChainComplex& b) {
    if (a.coeff_ != b.coeff_) throw Error("direct sum: coefficient mismatch");
    ChainComplex s(a.coeff_);
    int lo = std::min(a.empty() ? 0 : a.min_degree(), b.empty() ? 0 : b.min_degree());
    int hi = std::max(a.empty() ? 0 : a.max_degree(), b.empty() ? 0 : b.max_degree());
    for (int k = lo; k <= hi; ++k) s.set_dim(k, a.dim(k) + b.dim(k));
    for (int k = lo + 1; k <= hi; ++k) {
        ExactMat da = a.differential(k), db = b.differential(k);
        ExactMat m(da.rows() + db.rows(), da.cols() + db.cols());
        for (long i = 0; i < da.rows(); ++i)
            for (long j = 0; j < da.cols(); ++j) m.at(i, j) = da.at(i, j);
        for (long i = 0; i < db.rows(); ++i)
            for (long j = 0; j < db.cols(); ++j) m.at(da.rows() + i, da.cols() + j) = db.at(i, j);
        s.set_differential(k, std::move(m));
    }
    return s;
}

long ChainComplex::total_dim() const {
    long t = 0;
    for (const auto& [k, d] : dims_) t += d;
    return t;
}

long ChainComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& [k, d] : dims_) chi += (k % 2 == 0) ? d : -d;
    return chi;
}

ChainComplex mapping_cone(const std::vector<std::pair<int, ExactMat>>& f, const ChainComplex& a,
                          const ChainComplex& b) {
    if (a.coeff() != b.coeff()) throw Error("cone: coefficient mismatch");
    ChainComplex cone(a.coeff());
    std::map<int, ExactMat> fm(f.begin(), f.end());
    auto fat = [&](int k) -> ExactMat {
        auto it = fm.find(k);
        if (it != fm.end()) return it->second;
        return ExactMat::zero(b.dim(k), a.dim(k));
    };
    int lo = std::min(a.empty() ? 0 : a.min_degree(), b.empty() ? 0 : b.min_degree());
    int hi = std::max(a.empty() ? 0 : a.max_degree() + 1, b.empty() ? 0 : b.max_degree());
    for (int n = lo; n <= hi; ++n) cone.set_dim(n, a.dim(n - 1) + b.dim(n));
    for (int n = lo + 1; n <= hi; ++n) {
        ExactMat da = a.differential(n - 1);
        ExactMat db = b.differential(n);
        ExactMat fn = fat(n - 1);
        ExactMat m(a.dim(n - 2) + b.dim(n - 1), a.dim(n - 1) + b.dim(n));
        for (long i = 0; i < da.rows(); ++i)
            for (long j = 0; j < da.cols(); ++j) m.at(i, j) = -da.at(i, j);
        for (long i = 0; i < fn.rows(); ++i)
            for (long j = 0; j < fn.cols(); ++j) m.at(a.dim(n - 2) + i, j) = fn.at(i, j);
        for (long i = 0; i < db.rows(); ++i)
            for (long j = 0; j < db.cols(); ++j)
                m.at(a.dim(n - 2) + i, a.dim(n - 1) + j) = db.at(i, j);
        cone.set_differential(n, std::move(m));
    }
    cone.check();
    return cone;
}

std::optional<std::map<int, ExactMat>> normalize_chain_map_signs(std::map<int, ExactMat> f,
                                                                 const ChainComplex& a,
                                                                 const ChainComplex& b) {
    if (f.empty()) return f;
    int lo = f.begin()->first, hi = f.rbegin()->first;
    auto fat = [&](int k) -> ExactMat {
        auto it = f.find(k);
        if (it != f.end()) return it->second;
        return ExactMat::zero(b.dim(k), a.dim(k));
    };
    for (int k = lo; k <= hi + 1; ++k) {
        ExactMat lhs = b.differential(k) * fat(k);
        ExactMat rhs = fat(k - 1) * a.differential(k);
        if (equal_mod(lhs, rhs, b.coeff())) continue;
        if (equal_mod(lhs, -rhs, b.coeff())) {
            auto it = f.find(k);
            if (it == f.end()) return std::nullopt;
            it->second = -it->second;
            continue;
        }
        return std::nullopt;
    }
    return f;
}

} // namespace stackhom
