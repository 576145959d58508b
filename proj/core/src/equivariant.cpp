#include "stackhom/equivariant.hpp"

#include <fmt/core.h>

#include <algorithm>

namespace stackhom {

EquivariantComplex equivariant_chain_complex(const SimplicialPair& x, const GroupAction& a,
                                             const Coefficients& c) {
    if (!a.preserves(x)) throw Error("at_infinity not G-stable");

    SimplicialPair pair = x;
    GroupAction action = a;
    bool regularized = false;
    if (!action.is_regular(pair.ambient())) {
        for (int round = 0; round < 2; ++round) {
            SubdivisionResult s = barycentric_subdivision(pair.ambient());
            action = action.on_subdivision(pair.ambient(), s);
            pair = subdivide_pair(pair, s);
        }
        regularized = true;
        if (!action.is_regular(pair.ambient()))
            throw Error("action not regular after two subdivisions");
    }

    const SimplicialComplex& ambient = pair.ambient();
    ChainComplex rel = relative_complex(pair, c);
    std::map<int, std::vector<ExactMat>> mats;
    for (int e = 0; e < action.group().order(); ++e) {
        std::vector<ExactMat> full = action.chain_matrices(ambient, e);
        for (int k = 0; k <= ambient.dim(); ++k) {
            std::vector<long> ids = pair.relative_face_ids(k);
            ExactMat m(static_cast<long>(ids.size()), static_cast<long>(ids.size()));
            for (size_t j = 0; j < ids.size(); ++j)
                for (size_t i = 0; i < ids.size(); ++i)
                    m.at(static_cast<long>(i), static_cast<long>(j)) =
                        full[static_cast<size_t>(k)].at(ids[i], ids[j]);
            mats[k].push_back(std::move(m));
        }
    }
    std::map<int, std::vector<ExactMat>> action_mats;
    for (auto& [k, v] : mats) action_mats[k] = std::move(v);

    EquivariantComplex out{GroupAlgebraComplex(std::move(rel), action.group(),
                                               std::move(action_mats)),
                           pair, action, action.stabilizer_orders(ambient), regularized, false};
    out.gac.check();
    out.free_action = action.is_free(ambient);
    return out;
}

ChainComplex orbit_complex(const EquivariantComplex& e) {
    const SimplicialPair& pair = e.pair;
    const SimplicialComplex& x = pair.ambient();
    const GroupAction& a = e.action;
    const FiniteGroup& g = a.group();
    ChainComplex out(e.gac.complex().coeff());

    // orbit representatives among the relative faces, with the signed
    // projection chain map
    std::vector<ExactMat> proj;
    std::vector<std::vector<long>> reps(static_cast<size_t>(x.dim() + 1));
    for (int k = 0; k <= x.dim(); ++k) {
        std::vector<long> ids = pair.relative_face_ids(k);
        std::map<long, long> pos;
        for (size_t t = 0; t < ids.size(); ++t) pos[ids[t]] = static_cast<long>(t);
        std::vector<long> rep_of(ids.size(), -1);
        std::vector<Rat> sign_of(ids.size());
        std::vector<long>& rp = reps[static_cast<size_t>(k)];
        std::vector<char> seen(ids.size(), 0);
        for (size_t t = 0; t < ids.size(); ++t) {
            if (seen[t]) continue;
            long rep_local = static_cast<long>(t);
            rp.push_back(rep_local);
            const Simplex& s = x.face(k, ids[t]);
            for (int el = 0; el < g.order(); ++el) {
                Simplex img;
                for (int v : s) img.push_back(a.perm(el)[static_cast<size_t>(v)]);
                int sg = 1;
                for (size_t i = 1; i < img.size(); ++i)
                    for (size_t j = i; j > 0 && img[j] < img[j - 1]; --j) {
                        std::swap(img[j], img[j - 1]);
                        sg = -sg;
                    }
                long gid = x.face_index(k, img);
                long local = pos.at(gid);
                seen[static_cast<size_t>(local)] = 1;
                if (rep_of[static_cast<size_t>(local)] < 0) {
                    rep_of[static_cast<size_t>(local)] = static_cast<long>(rp.size()) - 1;
                    sign_of[static_cast<size_t>(local)] = sg;
                }
            }
        }
        ExactMat p(static_cast<long>(rp.size()), static_cast<long>(ids.size()));
        for (size_t t = 0; t < ids.size(); ++t)
            p.at(rep_of[t], static_cast<long>(t)) = sign_of[t];
        proj.push_back(std::move(p));
        out.set_dim(k, static_cast<long>(rp.size()));
    }
    for (int k = 1; k <= x.dim(); ++k) {
        ExactMat d(out.dim(k - 1), out.dim(k));
        ExactMat full_d = e.gac.complex().differential(k);
        for (long j = 0; j < out.dim(k); ++j) {
            long rep_local = reps[static_cast<size_t>(k)][static_cast<size_t>(j)];
            std::vector<Rat> col(static_cast<size_t>(full_d.rows()));
            for (long i = 0; i < full_d.rows(); ++i) col[static_cast<size_t>(i)] = full_d.at(i, rep_local);
            std::vector<Rat> pc = mat_vec(proj[static_cast<size_t>(k - 1)], col);
            for (long i = 0; i < d.rows(); ++i) d.at(i, j) = pc[static_cast<size_t>(i)];
        }
        out.set_differential(k, std::move(d));
    }
    out.check();
    return out;
}

Resolution resolution_for(const FiniteGroup& g, const Coefficients& c, int length) {
    if (g.order() == 1) return Resolution::bar(g, c, length);
    if (g.is_cyclic()) return Resolution::periodic(g.order(), c, length);
    return Resolution::reduced(g, c, length);
}

namespace {

GradedModulePresentation window_presentation(const ChainComplex& total, int lo, int hi) {
    GradedModulePresentation p;
    p.set_window(lo, hi);
    for (int i = lo; i <= hi; ++i) p.set(i, total.homology_at_degree(i));
    return p;
}

enum class Variant { Chains, BorelMoore };

TheoryReport stabilized_equivariant(const SimplicialPair& x, const GroupAction& a,
                                    const Coefficients& c, int lo, int hi, int cap,
                                    Variant variant) {
    if (lo > hi) throw Error("empty window");
    if (variant == Variant::Chains && !x.boundary_empty())
        throw Error("theory requires compact model");
    EquivariantComplex e = equivariant_chain_complex(x, a, c);
    const int dim = x.ambient().dim();

    int n = std::max<int>(2, std::abs(std::min(lo, 0)) + std::max(dim, 0) + 2);
    TheoryReport rep;
    rep.command = variant == Variant::Chains ? "equivariant homology" : "equivariant bm homology";
    rep.coeff = c;
    rep.theory_label = variant == Variant::Chains ? "equivariant-homology" : "equivariant-bm";
    rep.degree_symbol = variant == Variant::Chains ? "H^G" : "H^BM,G";

    while (true) {
        Resolution r1 = resolution_for(a.group(), c, n);
        Resolution r2 = resolution_for(a.group(), c, n + 2);
        GradedModulePresentation p1 =
            window_presentation(total_complex(hom_over_group_ring(r1, e.gac)), lo, hi);
        GradedModulePresentation p2 =
            window_presentation(total_complex(hom_over_group_ring(r2, e.gac)), lo, hi);
        if (p1.equal_on(p2, lo, hi)) {
            rep.groups = p1;
            rep.stabilization = StabilizationMeta{n, n + 2, cap, true};
            if (e.regularized)
                rep.verdicts.push_back({"action regularized by two barycentric subdivisions",
                                        true, ""});
            return rep;
        }
        if (2 * n > cap)
            throw StabilizationError(
                fmt::format("stabilization cap {} exceeded at resolution length {}", cap, n), p1,
                p2, n);
        n *= 2;
    }
}

} // namespace

TheoryReport equivariant_homology(const SimplicialPair& x, const GroupAction& a,
                                  const Coefficients& c, int lo, int hi, int cap) {
    return stabilized_equivariant(x, a, c, lo, hi, cap, Variant::Chains);
}

TheoryReport equivariant_bm_homology(const SimplicialPair& x, const GroupAction& a,
                                     const Coefficients& c, int lo, int hi, int cap) {
    return stabilized_equivariant(x, a, c, lo, hi, cap, Variant::BorelMoore);
}

TheoryReport homotopy_orbit_chains(const SimplicialPair& x, const GroupAction& a,
                                   const Coefficients& c, int truncation) {
    if (truncation < 1) throw Error("truncation must be >= 1");
    EquivariantComplex e = equivariant_chain_complex(x, a, c);
    Resolution r = resolution_for(a.group(), c, truncation);
    ChainComplex total = tensor_over_group_ring(r, e.gac);
    TheoryReport rep;
    rep.command = "stack chains";
    rep.coeff = c;
    rep.theory_label = "stack-chains";
    rep.degree_symbol = "H";
    const int hi = truncation - 2;
    rep.groups = window_presentation(total, 0, std::max(hi, 0));
    rep.groups.set_window(0, std::max(hi, 0));
    if (e.free_action) {
        ChainComplex q = orbit_complex(e);
        GradedModulePresentation qh = q.homology();
        bool ok = true;
        for (int i = 0; i <= std::min(hi, x.ambient().dim()); ++i)
            if (!(rep.groups.at(i) == qh.at(i))) ok = false;
        rep.verdicts.push_back({"free action: stack chains match the quotient complex", ok, ""});
    }
    if (e.regularized)
        rep.verdicts.push_back({"action regularized by two barycentric subdivisions", true, ""});
    return rep;
}

BorelManifoldModel BorelManifoldModel::make(int modulus, int stage) {
    if (modulus < 2) throw Error("model/group mismatch");
    BorelManifoldModel m;
    m.modulus = modulus;
    m.stage = stage;
    m.quotient_dim = modulus == 2 ? stage - 1 : 2 * stage - 1;
    if (m.quotient_dim < 1) throw Error("model stage too small");
    return m;
}

TheoryReport borel_comparison(const SimplicialPair& x, const GroupAction& a,
                              const Coefficients& c, int stage, int lo, int hi) {
    const FiniteGroup& g = a.group();
    if (!g.is_cyclic() || g.order() < 2) throw Error("model/group mismatch");
    if (!x.boundary_empty()) throw Error("theory requires compact model");
    const int m = g.order();
    if (m == 2) {
        if (!(c.kind() == CoeffKind::PrimeField && c.prime() == 2))
            throw Error("model requires F2 coefficients for m = 2");
    } else if (!c.is_field()) {
        throw Error("field required");
    }
    BorelManifoldModel model = BorelManifoldModel::make(m, stage);
    BorelManifoldModel next = BorelManifoldModel::make(m, stage + 1);

    const int dim = x.ambient().dim();
    const bool p_divides = c.kind() == CoeffKind::PrimeField && (m % c.prime() == 0);
    const int guaranteed_lo = -model.quotient_dim + dim + (p_divides ? 0 : 1);
    if (lo < guaranteed_lo || hi > dim) throw Error("window exceeds model acyclicity range");

    EquivariantComplex e = equivariant_chain_complex(x, a, c);
    auto shifted_stage = [&](const BorelManifoldModel& bm) {
        Resolution sphere = Resolution::sphere_model(m, c, bm.quotient_dim);
        ChainComplex borel = tensor_over_group_ring(sphere, e.gac);
        GradedModulePresentation p;
        p.set_window(lo, hi);
        for (int i = lo; i <= hi; ++i) p.set(i, borel.homology_at_degree(i + bm.quotient_dim));
        return p;
    };
    GradedModulePresentation pn = shifted_stage(model);
    GradedModulePresentation pn1 = shifted_stage(next);
    TheoryReport res = equivariant_homology(x, a, c, lo, hi);
    TheoryReport res_bm = equivariant_bm_homology(x, a, c, lo, hi);

    TheoryReport rep;
    rep.command = "borel comparison";
    rep.coeff = c;
    rep.theory_label = "borel-compare";
    rep.degree_symbol = "H^G";
    rep.groups = pn;
    rep.stabilization = res.stabilization;
    bool stages_agree = pn.equal_on(pn1, lo, hi);
    bool matches_res = pn.equal_on(res.groups, lo, hi);
    bool matches_bm = pn.equal_on(res_bm.groups, lo, hi);
    auto row = [&](const GradedModulePresentation& p) {
        std::string s = "[";
        for (int i = lo; i <= hi; ++i) {
            if (i > lo) s += ", ";
            s += GradedModulePresentation::group_string(p.at(i), c);
        }
        return s + "]";
    };
    rep.verdicts.push_back({fmt::format("stages n={} (dim {}) and n+1={} (dim {}) agree", stage,
                                        model.quotient_dim, stage + 1, next.quotient_dim),
                            stages_agree,
                            fmt::format("stage n: {}; stage n+1: {}", row(pn), row(pn1))});
    rep.verdicts.push_back({"shifted sphere-model homology matches the resolution answer",
                            matches_res,
                            fmt::format("stage n: {}; resolution: {}", row(pn), row(res.groups))});
    rep.verdicts.push_back(
        {"Borel-Moore reading agrees (compact model, no twist for finite groups)", matches_bm,
         fmt::format("stage n: {}; resolution BM: {}", row(pn), row(res_bm.groups))});
    return rep;
}

} // namespace stackhom
