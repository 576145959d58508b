#include "stackhom/theories.hpp"

#include "stackhom/bicomplex.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace stackhom {

TheorySelector theory_from_string(const std::string& s) {
    if (s == "chains") return TheorySelector::Chains;
    if (s == "cochains") return TheorySelector::Cochains;
    if (s == "bm" || s == "borel-moore") return TheorySelector::BorelMoore;
    if (s == "cohc" || s == "compact-cochains") return TheorySelector::CompactCochains;
    throw Error(fmt::format("unknown theory '{}'", s));
}

std::string theory_name(TheorySelector t) {
    switch (t) {
        case TheorySelector::Chains: return "chains";
        case TheorySelector::Cochains: return "cochains";
        case TheorySelector::BorelMoore: return "borel-moore";
        case TheorySelector::CompactCochains: return "compact-cochains";
    }
    return "?";
}

TheoryReport compute_theory(const SimplicialPair& p, TheorySelector t, const Coefficients& c) {
    TheoryReport r;
    r.command = "compute";
    r.coeff = c;
    r.theory_label = theory_name(t);
    switch (t) {
        case TheorySelector::Chains:
            if (!p.boundary_empty()) throw Error("theory requires compact model");
            r.groups = p.ambient().boundary_complex(c).homology();
            r.degree_symbol = "H";
            break;
        case TheorySelector::Cochains:
            if (!p.boundary_empty()) throw Error("theory requires compact model");
            r.groups = p.ambient().boundary_complex(c).dual().homology();
            r.degree_symbol = "H^";
            r.cohomological = true;
            break;
        case TheorySelector::BorelMoore:
            r.groups = relative_complex(p, c).homology();
            r.degree_symbol = "H^BM";
            break;
        case TheorySelector::CompactCochains:
            r.groups = relative_complex(p, c).dual().homology();
            r.degree_symbol = "H_c^";
            r.cohomological = true;
            break;
    }
    return r;
}

namespace {

SimplicialPair make_interval_pair() {
    SimplicialComplex interval({"iv0", "iv1"}, {{0, 1}});
    return SimplicialPair(std::move(interval), {{0}, {1}});
}

// Subcomplex of x as a per-dimension membership mask.
struct Mask {
    std::vector<std::vector<char>> in;

    explicit Mask(const SimplicialComplex& x) {
        in.assign(static_cast<size_t>(x.dim() + 1), {});
        for (int k = 0; k <= x.dim(); ++k)
            in[static_cast<size_t>(k)].assign(static_cast<size_t>(x.num_faces(k)), 0);
    }
    bool get(int k, long i) const { return in[static_cast<size_t>(k)][static_cast<size_t>(i)] != 0; }
    void set(int k, long i) { in[static_cast<size_t>(k)][static_cast<size_t>(i)] = 1; }
};

Mask closure_mask(const SimplicialComplex& x, const std::vector<Simplex>& facets) {
    Mask m(x);
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        if (!x.has_face(f)) throw Error("subcomplex face not in the ambient complex");
        const size_t n = f.size();
        for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
            Simplex sub;
            for (size_t i = 0; i < n; ++i)
                if (mask & (size_t(1) << i)) sub.push_back(f[i]);
            int k = static_cast<int>(sub.size()) - 1;
            m.set(k, x.face_index(k, sub));
        }
    }
    return m;
}

Mask intersect(const Mask& a, const Mask& b) {
    Mask m = a;
    for (size_t k = 0; k < m.in.size(); ++k)
        for (size_t i = 0; i < m.in[k].size(); ++i)
            m.in[k][i] = a.in[k][i] && b.in[k][i];
    return m;
}

std::vector<long> mask_ids(const Mask& m, int k) {
    std::vector<long> ids;
    if (k < 0 || k >= static_cast<int>(m.in.size())) return ids;
    for (size_t i = 0; i < m.in[static_cast<size_t>(k)].size(); ++i)
        if (m.in[static_cast<size_t>(k)][i]) ids.push_back(static_cast<long>(i));
    return ids;
}

ChainComplex mask_complex(const SimplicialComplex& x, const Mask& m, const Coefficients& c) {
    ChainComplex full = x.boundary_complex(c);
    ChainComplex cx(c);
    std::vector<std::vector<long>> ids(static_cast<size_t>(x.dim() + 1));
    std::vector<std::map<long, long>> pos(static_cast<size_t>(x.dim() + 1));
    for (int k = 0; k <= x.dim(); ++k) {
        ids[static_cast<size_t>(k)] = mask_ids(m, k);
        for (size_t t = 0; t < ids[static_cast<size_t>(k)].size(); ++t)
            pos[static_cast<size_t>(k)][ids[static_cast<size_t>(k)][t]] = static_cast<long>(t);
        cx.set_dim(k, static_cast<long>(ids[static_cast<size_t>(k)].size()));
    }
    for (int k = 1; k <= x.dim(); ++k) {
        ExactMat d(cx.dim(k - 1), cx.dim(k));
        ExactMat full_d = full.differential(k);
        for (size_t j = 0; j < ids[static_cast<size_t>(k)].size(); ++j)
            for (long i = 0; i < full_d.rows(); ++i) {
                const Rat& v = full_d.at(i, ids[static_cast<size_t>(k)][j]);
                if (v.is_zero()) continue;
                auto it = pos[static_cast<size_t>(k - 1)].find(i);
                if (it == pos[static_cast<size_t>(k - 1)].end())
                    throw Error("mask not closed under faces");
                d.at(it->second, static_cast<long>(j)) = v;
            }
        cx.set_differential(k, std::move(d));
    }
    return cx;
}

// C_k(sub) -> C_k(super) for nested masks.
ExactMat mask_inclusion(const Mask& sub, const Mask& super, int k) {
    std::vector<long> si = mask_ids(sub, k), bi = mask_ids(super, k);
    std::map<long, long> pos;
    for (size_t t = 0; t < bi.size(); ++t) pos[bi[t]] = static_cast<long>(t);
    ExactMat m(static_cast<long>(bi.size()), static_cast<long>(si.size()));
    for (size_t j = 0; j < si.size(); ++j) {
        auto it = pos.find(si[j]);
        if (it == pos.end()) throw Error("inclusion: masks not nested");
        m.at(it->second, static_cast<long>(j)) = 1;
    }
    return m;
}

Mask full_mask(const SimplicialComplex& x) {
    Mask m(x);
    for (int k = 0; k <= x.dim(); ++k)
        for (long i = 0; i < x.num_faces(k); ++i) m.set(k, i);
    return m;
}

bool mask_is_full_subcomplex(const SimplicialComplex& x, const Mask& z) {
    std::vector<char> zvert(static_cast<size_t>(x.num_vertices()), 0);
    for (long i = 0; i < x.num_faces(0); ++i)
        if (z.get(0, i)) zvert[static_cast<size_t>(x.face(0, i)[0])] = 1;
    for (int k = 0; k <= x.dim(); ++k)
        for (long i = 0; i < x.num_faces(k); ++i) {
            bool inside = true;
            for (int v : x.face(k, i))
                if (!zvert[static_cast<size_t>(v)]) inside = false;
            if (inside && !z.get(k, i)) return false;
        }
    return true;
}

long rank_of(const ExactMat& m, const Coefficients& c) { return rank_over_field(m, c); }

// One field instance of the localization long exact sequence.
void localization_field_checks(const SimplicialComplex& x, const Mask& zmask,
                               const Coefficients& c, std::vector<Verdict>& verdicts) {
    ChainComplex cz = mask_complex(x, zmask, c);
    ChainComplex cx = x.boundary_complex(c);
    SimplicialPair pair(x, [&] {
        std::vector<Simplex> faces;
        for (int k = 0; k <= x.dim(); ++k)
            for (long i : mask_ids(zmask, k)) faces.push_back(x.face(k, i));
        return faces;
    }());
    ChainComplex cu = relative_complex(pair, c);

    const int d = x.dim();
    std::vector<FieldHomologyBasis> hz, hx, hu;
    for (int n = 0; n <= d; ++n) {
        hz.emplace_back(cz, n);
        hx.emplace_back(cx, n);
        hu.emplace_back(cu, n);
    }
    Mask whole = full_mask(x);
    auto incl = [&](int n) { return mask_inclusion(zmask, whole, n); };
    auto proj = [&](int n) {
        std::vector<long> ids = pair.relative_face_ids(n);
        ExactMat m(static_cast<long>(ids.size()), x.num_faces(n));
        for (size_t t = 0; t < ids.size(); ++t) m.at(static_cast<long>(t), ids[t]) = 1;
        return m;
    };

    // induced maps per degree, plus the connecting map via lift and boundary
    std::vector<ExactMat> I, J, D;
    for (int n = 0; n <= d; ++n) {
        I.push_back(induced_map(incl(n), hz[static_cast<size_t>(n)], hx[static_cast<size_t>(n)]));
        J.push_back(induced_map(proj(n), hx[static_cast<size_t>(n)], hu[static_cast<size_t>(n)]));
    }
    for (int n = 0; n <= d; ++n) {
        const auto& basis = hu[static_cast<size_t>(n)];
        ExactMat m(n >= 1 ? hz[static_cast<size_t>(n - 1)].dim() : 0, basis.dim());
        std::vector<long> rel = pair.relative_face_ids(n);
        for (long j = 0; j < basis.dim(); ++j) {
            std::vector<Rat> rep = basis.representative(j);
            std::vector<Rat> lift(static_cast<size_t>(x.num_faces(n)));
            for (size_t t = 0; t < rel.size(); ++t) lift[static_cast<size_t>(rel[t])] = rep[t];
            std::vector<Rat> bd = mat_vec(cx.differential(n), lift);
            // the boundary of the lift is supported on Z
            std::vector<long> zids = mask_ids(zmask, n - 1);
            std::vector<Rat> zvec(zids.size());
            std::vector<char> on_z(bd.size(), 0);
            for (size_t t = 0; t < zids.size(); ++t) {
                zvec[t] = bd[static_cast<size_t>(zids[t])];
                on_z[static_cast<size_t>(zids[t])] = 1;
            }
            for (size_t t = 0; t < bd.size(); ++t)
                if (!on_z[t] && !is_zero_mod(bd[t], c))
                    throw Error("connecting map: boundary not supported on Z");
            if (n >= 1) {
                std::vector<Rat> coords = hz[static_cast<size_t>(n - 1)].coords(zvec);
                for (long i = 0; i < m.rows(); ++i) m.at(i, j) = coords[static_cast<size_t>(i)];
            }
        }
        D.push_back(std::move(m));
    }

    auto exact_at = [&](const std::string& where, int n, const ExactMat& incoming,
                        const ExactMat& outgoing) {
        bool composite_zero = is_zero_mod(outgoing * incoming, c);
        long nullity = outgoing.cols() - rank_of(outgoing, c);
        bool ranks = rank_of(incoming, c) == nullity;
        verdicts.push_back({fmt::format("{} exact at {} in degree {}", c.label(), where, n),
                            composite_zero && ranks,
                            fmt::format("rank in = {}, nullity out = {}", rank_of(incoming, c),
                                        nullity)});
    };
    for (int n = 0; n <= d; ++n) {
        // H_n(Z): in = connecting from H_{n+1}(U), out = i_*
        ExactMat in_z = (n + 1 <= d) ? D[static_cast<size_t>(n + 1)]
                                     : ExactMat::zero(hz[static_cast<size_t>(n)].dim(), 0);
        exact_at("H(Z)", n, in_z, I[static_cast<size_t>(n)]);
        exact_at("H(X)", n, I[static_cast<size_t>(n)], J[static_cast<size_t>(n)]);
        ExactMat out_u = D[static_cast<size_t>(n)];
        exact_at("H(U)", n, J[static_cast<size_t>(n)], out_u);
    }
}

} // namespace

TheoryReport localization_check(const SimplicialComplex& x_in,
                                const std::vector<Simplex>& z_facets, const Coefficients& c) {
    TheoryReport r;
    r.command = "verify localization";
    r.coeff = c;
    r.theory_label = "localization";
    r.degree_symbol = "H^BM";

    SimplicialComplex x = x_in;
    Mask zmask = closure_mask(x, z_facets);
    if (!mask_is_full_subcomplex(x, zmask)) {
        // one subdivision makes any subcomplex full
        SubdivisionResult s = barycentric_subdivision(x);
        std::vector<Simplex> z_sd;
        for (int k = 0; k <= s.sd.dim(); ++k)
            for (long i = 0; i < s.sd.num_faces(k); ++i) {
                bool inside = true;
                for (int v : s.sd.face(k, i)) {
                    auto [fk, fi] = s.source_face[static_cast<size_t>(v)];
                    if (!zmask.get(fk, fi)) inside = false;
                }
                if (inside) z_sd.push_back(s.sd.face(k, i));
            }
        x = s.sd;
        zmask = closure_mask(x, z_sd);
        if (!mask_is_full_subcomplex(x, zmask))
            throw Error("closed subcomplex still not full after subdivision");
        r.verdicts.push_back({"auto-subdivided once to make Z full", true, ""});
    }

    std::vector<Simplex> zfaces;
    for (int k = 0; k <= x.dim(); ++k)
        for (long i : mask_ids(zmask, k)) zfaces.push_back(x.face(k, i));
    SimplicialPair pair(x, zfaces);
    r.groups = relative_complex(pair, c).homology();

    if (c.is_field()) {
        localization_field_checks(x, zmask, c, r.verdicts);
    } else {
        // Euler characteristics add up along the triangle, and exactness is
        // checked over Q and small prime fields
        long chi_x = x.euler_characteristic();
        long chi_z = 0, chi_rel = 0;
        for (int k = 0; k <= x.dim(); ++k) {
            long nz = static_cast<long>(mask_ids(zmask, k).size());
            long nr = x.num_faces(k) - nz;
            chi_z += (k % 2 == 0) ? nz : -nz;
            chi_rel += (k % 2 == 0) ? nr : -nr;
        }
        r.verdicts.push_back({"Euler characteristic additivity", chi_x == chi_z + chi_rel,
                              fmt::format("chi(X) = {}, chi(Z) + chi_c(U) = {}", chi_x,
                                          chi_z + chi_rel)});
        localization_field_checks(x, zmask, Coefficients::rationals(), r.verdicts);
        localization_field_checks(x, zmask, Coefficients::prime_field(2), r.verdicts);
        localization_field_checks(x, zmask, Coefficients::prime_field(3), r.verdicts);
    }
    r.verdicts.push_back(
        {"chains-variant triangle read through the pair sequence of (X, Z)", true, ""});
    return r;
}

TheoryReport homotopy_invariance_check(const SimplicialPair& x, int r, const Coefficients& c) {
    if (r <= 0) throw Error("bundle rank must be positive");
    TheoryReport rep;
    rep.command = "verify homotopy";
    rep.coeff = c;
    rep.theory_label = "homotopy-invariance";
    rep.degree_symbol = "H^BM";

    SimplicialPair e = x;
    for (int i = 0; i < r; ++i) e = pair_product(e, make_interval_pair());

    GradedModulePresentation bm_x = relative_complex(x, c).homology();
    GradedModulePresentation bm_e = relative_complex(e, c).homology();
    int lo = 0, hi = std::max(0, x.ambient().dim());
    for (int n = lo; n <= hi; ++n) {
        bool ok = bm_e.at(n + r) == bm_x.at(n);
        rep.verdicts.push_back(
            {fmt::format("H^BM_{}(X x R^{}) = H^BM_{}(X)", n + r, r, n), ok,
             GradedModulePresentation::group_string(bm_e.at(n + r), c) + " vs " +
                 GradedModulePresentation::group_string(bm_x.at(n), c)});
    }
    for (int n = 0; n < r; ++n) {
        bool ok = bm_e.at(n).is_zero();
        rep.verdicts.push_back({fmt::format("H^BM_{}(X x R^{}) = 0 below the shift", n, r), ok, ""});
    }
    GradedModulePresentation ch_x = x.ambient().boundary_complex(c).homology();
    GradedModulePresentation ch_e = e.ambient().boundary_complex(c).homology();
    bool chains_ok = ch_x == ch_e;
    rep.verdicts.push_back({"chains of the compact product agree with chains of X", chains_ok, ""});
    rep.groups = bm_e;
    return rep;
}

std::vector<Rat> coboundary(const SimplicialComplex& x, int p, const std::vector<Rat>& a) {
    if (static_cast<long>(a.size()) != x.num_faces(p)) throw Error("cochain size mismatch");
    ChainComplex cx = x.boundary_complex(Coefficients::integers());
    return mat_vec(cx.differential(p + 1).transpose(), a);
}

bool is_cocycle(const SimplicialComplex& x, int p, const std::vector<Rat>& a,
                const Coefficients& c) {
    for (const Rat& v : coboundary(x, p, a))
        if (!is_zero_mod(v, c)) return false;
    return true;
}

bool is_coboundary(const SimplicialComplex& x, int p, const std::vector<Rat>& a,
                   const Coefficients& c) {
    if (p == 0) {
        for (const Rat& v : a)
            if (!is_zero_mod(v, c)) return false;
        return true;
    }
    ChainComplex cx = x.boundary_complex(c);
    return in_column_span(cx.differential(p).transpose(), a, c);
}

std::vector<Rat> cup(const SimplicialComplex& x, int p, const std::vector<Rat>& a, int q,
                     const std::vector<Rat>& b) {
    if (p < 0 || q < 0 || p + q > x.dim()) throw Error("cup: degree out of range");
    if (static_cast<long>(a.size()) != x.num_faces(p) ||
        static_cast<long>(b.size()) != x.num_faces(q))
        throw Error("cochain size mismatch");
    std::vector<Rat> out(static_cast<size_t>(x.num_faces(p + q)));
    for (long i = 0; i < x.num_faces(p + q); ++i) {
        const Simplex& s = x.face(p + q, i);
        Simplex front(s.begin(), s.begin() + p + 1);
        Simplex back(s.begin() + p, s.end());
        long fi = x.face_index(p, front);
        long bi = x.face_index(q, back);
        const Rat& av = a[static_cast<size_t>(fi)];
        const Rat& bv = b[static_cast<size_t>(bi)];
        if (!av.is_zero() && !bv.is_zero()) out[static_cast<size_t>(i)] = av * bv;
    }
    return out;
}

Verdict cup_well_defined(const SimplicialComplex& x, int p, const std::vector<Rat>& a, int q,
                         const std::vector<Rat>& b, const Coefficients& c) {
    if (!c.is_field()) throw Error("field required");
    std::vector<Rat> base = cup(x, p, a, q, b);
    auto class_change_is_trivial = [&](const std::vector<Rat>& pa, const std::vector<Rat>& pb) {
        std::vector<Rat> other = cup(x, p, pa, q, pb);
        std::vector<Rat> diff(other.size());
        for (size_t i = 0; i < diff.size(); ++i) diff[i] = other[i] - base[i];
        return is_coboundary(x, p + q, diff, c);
    };
    auto perturb = [&](const std::vector<Rat>& v, int deg, const std::vector<Rat>& u) {
        std::vector<Rat> db = coboundary(x, deg - 1, u);
        std::vector<Rat> out = v;
        for (size_t i = 0; i < out.size(); ++i) out[i] += db[i];
        return out;
    };
    long checked = 0;
    bool ok = true;
    const bool f2 = c.kind() == CoeffKind::PrimeField && c.prime() == 2;
    std::mt19937 rng(0x5eed1e5);
    auto random_cochain = [&](int deg) {
        std::vector<Rat> u(static_cast<size_t>(x.num_faces(deg)));
        for (auto& v : u) {
            if (c.kind() == CoeffKind::PrimeField)
                v = static_cast<long>(rng() % static_cast<unsigned long>(c.prime()));
            else
                v = static_cast<long>(rng() % 7) - 3;
        }
        return u;
    };
    for (int side = 0; side < 2; ++side) {
        int deg = side == 0 ? p : q;
        if (deg == 0) continue; // no coboundaries to add in degree 0
        long n_prev = x.num_faces(deg - 1);
        if (f2 && n_prev <= 16) {
            for (unsigned long mask = 1; mask < (1ul << n_prev); ++mask) {
                std::vector<Rat> u(static_cast<size_t>(n_prev));
                for (long t = 0; t < n_prev; ++t)
                    if (mask & (1ul << t)) u[static_cast<size_t>(t)] = 1;
                ok = ok && (side == 0 ? class_change_is_trivial(perturb(a, p, u), b)
                                      : class_change_is_trivial(a, perturb(b, q, u)));
                ++checked;
                if (!ok) break;
            }
        } else {
            for (int t = 0; t < 32 && ok; ++t) {
                std::vector<Rat> u = random_cochain(deg - 1);
                ok = side == 0 ? class_change_is_trivial(perturb(a, p, u), b)
                               : class_change_is_trivial(a, perturb(b, q, u));
                ++checked;
            }
        }
        if (!ok) break;
    }
    // a handful of joint perturbations
    for (int t = 0; t < 8 && ok && p > 0 && q > 0; ++t) {
        std::vector<Rat> u = random_cochain(p - 1), v = random_cochain(q - 1);
        ok = class_change_is_trivial(perturb(a, p, u), perturb(b, q, v));
        ++checked;
    }
    return {"cup product well-defined on classes", ok,
            fmt::format("{} coboundary perturbations tested", checked)};
}

std::vector<Rat> cap(const SimplicialComplex& x, int p, const std::vector<Rat>& a, int n,
                     const std::vector<Rat>& chain) {
    if (p < 0 || n > x.dim() || n - p < 0) throw Error("cap: degree out of range");
    if (static_cast<long>(a.size()) != x.num_faces(p) ||
        static_cast<long>(chain.size()) != x.num_faces(n))
        throw Error("cap: size mismatch");
    // back-face evaluation so that (a cup b) cap m = a cap (b cap m) on the nose
    std::vector<Rat> out(static_cast<size_t>(x.num_faces(n - p)));
    for (long i = 0; i < x.num_faces(n); ++i) {
        const Rat& lam = chain[static_cast<size_t>(i)];
        if (lam.is_zero()) continue;
        const Simplex& s = x.face(n, i);
        Simplex back(s.end() - (p + 1), s.end());
        Simplex front(s.begin(), s.end() - p);
        const Rat& av = a[static_cast<size_t>(x.face_index(p, back))];
        if (av.is_zero()) continue;
        out[static_cast<size_t>(x.face_index(n - p, front))] += lam * av;
    }
    return out;
}

std::vector<Rat> cap_relative(const SimplicialPair& xp, int p, const std::vector<Rat>& a, int n,
                              const std::vector<Rat>& rel_chain) {
    const SimplicialComplex& x = xp.ambient();
    std::vector<long> ids_n = xp.relative_face_ids(n);
    if (rel_chain.size() != ids_n.size()) throw Error("cap: size mismatch");
    std::vector<Rat> ambient(static_cast<size_t>(x.num_faces(n)));
    for (size_t t = 0; t < ids_n.size(); ++t) ambient[static_cast<size_t>(ids_n[t])] = rel_chain[t];
    std::vector<Rat> full = cap(x, p, a, n, ambient);
    std::vector<long> ids_out = xp.relative_face_ids(n - p);
    std::vector<Rat> out(ids_out.size());
    for (size_t t = 0; t < ids_out.size(); ++t) out[t] = full[static_cast<size_t>(ids_out[t])];
    return out;
}

std::map<int, ExactMat> duality_chain_map(const SimplicialComplex& m, const std::vector<Rat>& mu,
                                          const Coefficients& c) {
    const int d = m.dim();
    ChainComplex cx = m.boundary_complex(c);
    ChainComplex dualc = cx.dual();
    ChainComplex target = cx.shifted(-d);
    std::map<int, ExactMat> f;
    for (int k = 0; k <= d; ++k) {
        ExactMat mk(m.num_faces(d - k), m.num_faces(k));
        for (long j = 0; j < m.num_faces(k); ++j) {
            std::vector<Rat> unit(static_cast<size_t>(m.num_faces(k)));
            unit[static_cast<size_t>(j)] = 1;
            std::vector<Rat> img = cap(m, k, unit, d, mu);
            for (long i = 0; i < mk.rows(); ++i) mk.at(i, j) = img[static_cast<size_t>(i)];
        }
        f[-k] = std::move(mk);
    }
    auto fixed = normalize_chain_map_signs(f, dualc, target);
    if (!fixed) throw Error("duality cap map is not a chain map up to signs");
    return *fixed;
}

TheoryReport poincare_duality_check(const SimplicialComplex& m, const std::optional<Orientation>& o,
                                    const Coefficients& c) {
    TheoryReport rep;
    rep.command = "verify poincare";
    rep.coeff = c;
    rep.theory_label = "poincare-duality";
    const int d = m.dim();

    std::optional<Orientation> ori = o;
    const bool f2 = c.kind() == CoeffKind::PrimeField && c.prime() == 2;
    if (!ori && !f2) {
        ori = coherent_orientation(m);
        if (!ori) throw Error("not a closed oriented manifold model");
    }
    std::vector<Rat> mu = fundamental_chain(m, ori, c);

    ChainComplex cx = m.boundary_complex(c);
    ChainComplex dualc = cx.dual();
    ChainComplex target = cx.shifted(-d);
    std::map<int, ExactMat> f = duality_chain_map(m, mu, c);

    std::vector<std::pair<int, ExactMat>> fv(f.begin(), f.end());
    ChainComplex cone = mapping_cone(fv, dualc, target);
    bool acyclic = true;
    for (int n = cone.min_degree(); n <= cone.max_degree(); ++n)
        if (!cone.homology_at_degree(n).is_zero()) acyclic = false;
    rep.verdicts.push_back({"mapping cone of cap with the fundamental class is acyclic", acyclic,
                            fmt::format("coefficients {}", c.label())});

    if (c.is_field()) {
        for (int k = 0; k <= d; ++k) {
            FieldHomologyBasis hk(dualc, -k);
            FieldHomologyBasis hdk(cx, d - k);
            ExactMat cap_matrix = induced_map(f.at(-k), hk, hdk);
            bool square = cap_matrix.rows() == cap_matrix.cols();
            bool full = rank_over_field(cap_matrix, c) == cap_matrix.rows();
            rep.verdicts.push_back(
                {fmt::format("cap matrix H^{} -> H_{} is an isomorphism", k, d - k),
                 square && full,
                 fmt::format("{} x {}, rank {}", cap_matrix.rows(), cap_matrix.cols(),
                             rank_over_field(cap_matrix, c))});
        }
    } else {
        GradedModulePresentation hom = cx.homology();
        GradedModulePresentation coh = dualc.homology();
        for (int k = 0; k <= d; ++k) {
            bool same = hom.at(d - k) == coh.at(-k);
            rep.verdicts.push_back({fmt::format("H^{} and H_{} presentations agree", k, d - k),
                                    same, ""});
        }
    }
    rep.groups = cx.homology();
    return rep;
}

GysinResult gysin_trivial_bundle(const SimplicialPair& x, int r, const Coefficients& c) {
    if (r <= 0) throw Error("bundle rank must be positive");
    GysinResult out;
    out.report.command = "gysin";
    out.report.coeff = c;
    out.report.theory_label = "gysin-trivial-bundle";
    out.report.degree_symbol = "H^BM";

    SimplicialPair interval = make_interval_pair();
    SimplicialPair cur = x;
    // total relative cross map and its slant inverse, composed over r steps
    std::map<int, ExactMat> cross_total, slant_total;
    for (int step = 0; step < r; ++step) {
        ProductResult pr = ez_aw(cur.ambient(), interval.ambient(), c);
        SimplicialPair next = pair_product_marked(pr, cur, interval);
        const int dcur = cur.ambient().dim();
        for (int n = 0; n <= dcur; ++n) {
            if (n - step < 0 || n - step > x.ambient().dim()) continue;
            // ambient cross: z -> EZ(z (x) edge)
            long off = pr.block_offset(n + 1, n);
            ExactMat crossn(pr.product.num_faces(n + 1), cur.ambient().num_faces(n));
            for (long j = 0; j < cur.ambient().num_faces(n); ++j)
                for (long i = 0; i < crossn.rows(); ++i)
                    crossn.at(i, j) = pr.ez[static_cast<size_t>(n + 1)].at(i, off + j);
            // ambient slant: w -> (id (x) edge-dual)(AW w)
            ExactMat slantn(cur.ambient().num_faces(n), pr.product.num_faces(n + 1));
            long roff = pr.block_offset(n + 1, n);
            for (long i = 0; i < slantn.rows(); ++i)
                for (long j = 0; j < slantn.cols(); ++j)
                    slantn.at(i, j) = pr.aw[static_cast<size_t>(n + 1)].at(roff + i, j);
            // restrict both to the relative bases
            std::vector<long> src = cur.relative_face_ids(n);
            std::vector<long> dst = next.relative_face_ids(n + 1);
            ExactMat cross_rel(static_cast<long>(dst.size()), static_cast<long>(src.size()));
            ExactMat slant_rel(static_cast<long>(src.size()), static_cast<long>(dst.size()));
            for (size_t a = 0; a < dst.size(); ++a)
                for (size_t b = 0; b < src.size(); ++b) {
                    cross_rel.at(static_cast<long>(a), static_cast<long>(b)) =
                        crossn.at(dst[a], src[b]);
                    slant_rel.at(static_cast<long>(b), static_cast<long>(a)) =
                        slantn.at(src[b], dst[a]);
                }
            ExactMat composed_cross =
                (step == 0) ? cross_rel : cross_rel * cross_total.at(n - step);
            ExactMat composed_slant =
                (step == 0) ? slant_rel : slant_total.at(n - step) * slant_rel;
            cross_total[n - step] = std::move(composed_cross);
            slant_total[n - step] = std::move(composed_slant);
        }
        cur = next;
    }
    const SimplicialPair& e = cur;

    ChainComplex relx = relative_complex(x, c);
    ChainComplex rele = relative_complex(e, c);
    // chain map property and the split identity
    bool chain_map_ok = true, split_ok = true;
    for (int n = 0; n <= x.ambient().dim(); ++n) {
        const ExactMat& fn = cross_total.at(n);
        if (n >= 1) {
            ExactMat lhs = rele.differential(n + r) * fn;
            ExactMat rhs = cross_total.at(n - 1) * relx.differential(n);
            if (!equal_mod(lhs, rhs, c)) chain_map_ok = false;
        }
        ExactMat comp = slant_total.at(n) * fn;
        if (!equal_mod(comp, ExactMat::identity(relx.dim(n)), c)) split_ok = false;
    }
    out.report.verdicts.push_back({"cross with the interval class is a chain map", chain_map_ok, ""});
    out.report.verdicts.push_back(
        {"projection-induced inverse composes to the identity on chains", split_ok, ""});

    // quasi-isomorphism over the actual coefficients via the mapping cone
    ChainComplex shifted_e = rele.shifted(-r);
    std::map<int, ExactMat> f(cross_total.begin(), cross_total.end());
    auto fixed = normalize_chain_map_signs(f, relx, shifted_e);
    bool cone_ok = false;
    if (fixed) {
        std::vector<std::pair<int, ExactMat>> fv(fixed->begin(), fixed->end());
        ChainComplex cone = mapping_cone(fv, relx, shifted_e);
        cone_ok = true;
        for (int n = cone.min_degree(); n <= cone.max_degree(); ++n)
            if (!cone.homology_at_degree(n).is_zero()) cone_ok = false;
    }
    out.report.verdicts.push_back({"Gysin map is a quasi-isomorphism (mapping cone acyclic)",
                                   cone_ok, ""});

    // explicit matrices on homology
    for (int n = 0; n <= x.ambient().dim(); ++n) {
        if (c.is_field()) {
            FieldHomologyBasis hs(relx, n), ht(rele, n + r);
            out.matrices[n] = induced_map(cross_total.at(n), hs, ht);
        } else {
            IntHomologyBasis hs(relx, n), ht(rele, n + r);
            ExactMat m(ht.free_rank(), hs.free_rank());
            ExactMat reps = hs.free_representatives();
            for (long j = 0; j < hs.free_rank(); ++j) {
                std::vector<Rat> img = mat_vec(cross_total.at(n), reps.col(j));
                auto coords = ht.coords(img);
                for (long i = 0; i < ht.free_rank(); ++i) m.at(i, j) = Rat(coords.free[static_cast<size_t>(i)]);
            }
            out.matrices[n] = std::move(m);
        }
    }
    out.report.groups = rele.homology();
    return out;
}

TheoryReport proper_descent_check(const SimplicialComplex& x,
                                  const std::vector<std::vector<Simplex>>& cover,
                                  const Coefficients& c) {
    TheoryReport rep;
    rep.command = "verify descent";
    rep.coeff = c;
    rep.theory_label = "proper-descent";
    if (cover.empty()) throw Error("not a cover");

    std::vector<Mask> pieces;
    for (const auto& facets : cover) pieces.push_back(closure_mask(x, facets));
    for (int k = 0; k <= x.dim(); ++k)
        for (long i = 0; i < x.num_faces(k); ++i) {
            bool covered = false;
            for (const Mask& m : pieces)
                if (m.get(k, i)) covered = true;
            if (!covered) throw Error("not a cover");
        }

    const int np = static_cast<int>(pieces.size());
    // strictly increasing index tuples, by size
    std::vector<std::vector<std::vector<int>>> tuples(static_cast<size_t>(np));
    {
        std::vector<int> t;
        std::function<void(int, int)> gen = [&](int start, int size) {
            if (static_cast<int>(t.size()) == size) {
                tuples[static_cast<size_t>(size - 1)].push_back(t);
                return;
            }
            for (int i = start; i < np; ++i) {
                t.push_back(i);
                gen(i + 1, size);
                t.pop_back();
            }
        };
        for (int size = 1; size <= np; ++size) gen(0, size);
    }
    auto tuple_mask = [&](const std::vector<int>& t) {
        Mask m = pieces[static_cast<size_t>(t[0])];
        for (size_t i = 1; i < t.size(); ++i) m = intersect(m, pieces[static_cast<size_t>(t[i])]);
        return m;
    };

    Bicomplex b(c);
    std::map<std::vector<int>, Mask> masks;
    for (int p = 0; p < np; ++p) {
        for (const auto& t : tuples[static_cast<size_t>(p)]) masks.emplace(t, tuple_mask(t));
        for (int q = 0; q <= x.dim(); ++q) {
            long dimq = 0;
            for (const auto& t : tuples[static_cast<size_t>(p)])
                dimq += static_cast<long>(mask_ids(masks.at(t), q).size());
            b.set_dim(p, q, dimq);
        }
    }
    // differentials: vertical boundary (Koszul sign), horizontal alternating
    // face-drop inclusions
    for (int p = 0; p < np; ++p) {
        const auto& ts = tuples[static_cast<size_t>(p)];
        std::vector<ChainComplex> cxs;
        for (const auto& t : ts) cxs.push_back(mask_complex(x, masks.at(t), c));
        for (int q = 0; q <= x.dim(); ++q) {
            // vertical
            if (q >= 1) {
                ExactMat dv(b.dim(p, q - 1), b.dim(p, q));
                long ro = 0, co = 0;
                for (size_t ti = 0; ti < ts.size(); ++ti) {
                    ExactMat dq = cxs[ti].differential(q);
                    for (long i = 0; i < dq.rows(); ++i)
                        for (long j = 0; j < dq.cols(); ++j)
                            if (!dq.at(i, j).is_zero())
                                dv.at(ro + i, co + j) = (p % 2 == 0) ? dq.at(i, j) : -dq.at(i, j);
                    ro += dq.rows();
                    co += dq.cols();
                }
                b.set_vertical(p, q, std::move(dv));
            }
            // horizontal into p-1
            if (p >= 1) {
                const auto& smaller = tuples[static_cast<size_t>(p - 1)];
                std::map<std::vector<int>, long> soff;
                long acc = 0;
                for (const auto& s : smaller) {
                    soff[s] = acc;
                    acc += static_cast<long>(mask_ids(masks.at(s), q).size());
                }
                ExactMat dh(b.dim(p - 1, q), b.dim(p, q));
                long co = 0;
                for (const auto& t : ts) {
                    const Mask& mt = masks.at(t);
                    long w = static_cast<long>(mask_ids(mt, q).size());
                    for (size_t drop = 0; drop < t.size(); ++drop) {
                        std::vector<int> s = t;
                        s.erase(s.begin() + static_cast<long>(drop));
                        ExactMat inc = mask_inclusion(mt, masks.at(s), q);
                        Rat sign = (drop % 2 == 0) ? 1 : -1;
                        long ro = soff.at(s);
                        for (long i = 0; i < inc.rows(); ++i)
                            for (long j = 0; j < inc.cols(); ++j)
                                if (!inc.at(i, j).is_zero()) dh.at(ro + i, co + j) += sign * inc.at(i, j);
                    }
                    co += w;
                }
                b.set_horizontal(p, q, std::move(dh));
            }
        }
    }
    ChainComplex total = total_complex(b);
    GradedModulePresentation got = total.homology();
    GradedModulePresentation want = x.boundary_complex(c).homology();
    for (int n = 0; n <= x.dim(); ++n) {
        bool ok = got.at(n) == want.at(n);
        rep.verdicts.push_back({fmt::format("Cech totalization recovers H_{}", n), ok,
                                GradedModulePresentation::group_string(got.at(n), c) + " vs " +
                                    GradedModulePresentation::group_string(want.at(n), c)});
    }
    // degrees above dim(x) must vanish in the totalization
    for (int n = x.dim() + 1; n <= total.max_degree(); ++n) {
        bool ok = got.at(n).is_zero();
        rep.verdicts.push_back({fmt::format("Cech totalization vanishes in degree {}", n), ok, ""});
    }
    rep.groups = got;
    return rep;
}

TheoryReport forget_supports_check(const SimplicialPair& x, const Coefficients& c) {
    if (!x.boundary_empty()) throw Error("theory requires compact model");
    TheoryReport rep;
    rep.command = "verify forget-supports";
    rep.coeff = c;
    rep.theory_label = "forget-supports";
    GradedModulePresentation chains = x.ambient().boundary_complex(c).homology();
    GradedModulePresentation bm = relative_complex(x, c).homology();
    bool ok = chains == bm;
    rep.verdicts.push_back({"chains and Borel-Moore chains coincide for proper X", ok, ""});
    rep.groups = chains;
    return rep;
}

} // namespace stackhom
