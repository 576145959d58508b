#pragma once

#include "stackhom/homology_basis.hpp"
#include "stackhom/report.hpp"
#include "stackhom/simplicial.hpp"

#include <map>

namespace stackhom {

enum class TheorySelector { Chains, Cochains, BorelMoore, CompactCochains };

TheorySelector theory_from_string(const std::string& s);
std::string theory_name(TheorySelector t);

/// The four theories on a compact pair. Chains and cochains demand an empty
/// at-infinity part ("theory requires compact model"); Borel-Moore and
/// compactly supported cochains read the pair as a compactified open object.
TheoryReport compute_theory(const SimplicialPair& p, TheorySelector t, const Coefficients& c);

/// Long exact localization sequence of (X, Z) with explicit matrices over a
/// field; exactness is verified at every position. Integer coefficients run
/// the field checks over Q, F2 and F3 plus Euler-characteristic additivity.
/// A non-full Z triggers one barycentric subdivision retry.
TheoryReport localization_check(const SimplicialComplex& x, const std::vector<Simplex>& z_facets,
                                const Coefficients& c);

/// H^BM_{n+r}(X x R^r) vs H^BM_n(X), plus the compact chains comparison.
TheoryReport homotopy_invariance_check(const SimplicialPair& x, int r, const Coefficients& c);

// --- cochain-level products (front-face / back-face conventions) ---

std::vector<Rat> coboundary(const SimplicialComplex& x, int p, const std::vector<Rat>& a);
bool is_cocycle(const SimplicialComplex& x, int p, const std::vector<Rat>& a,
                const Coefficients& c);
bool is_coboundary(const SimplicialComplex& x, int p, const std::vector<Rat>& a,
                   const Coefficients& c);

/// Cup product of cochains of degrees p and q.
std::vector<Rat> cup(const SimplicialComplex& x, int p, const std::vector<Rat>& a, int q,
                     const std::vector<Rat>& b);

/// Class-level well-definedness of a cup product: perturb both factors by
/// coboundaries (exhaustively over F2 on small complexes, otherwise by
/// deterministic samples) and test that the class is unchanged.
Verdict cup_well_defined(const SimplicialComplex& x, int p, const std::vector<Rat>& a, int q,
                         const std::vector<Rat>& b, const Coefficients& c);

/// Cap product: p-cochain against an n-chain, yielding an (n-p)-chain.
std::vector<Rat> cap(const SimplicialComplex& x, int p, const std::vector<Rat>& a, int n,
                     const std::vector<Rat>& chain);

/// Cap against a relative chain (coordinates over the relative basis).
std::vector<Rat> cap_relative(const SimplicialPair& xp, int p, const std::vector<Rat>& a, int n,
                              const std::vector<Rat>& rel_chain);

/// Cap with the fundamental class as an explicit chain map from the dual
/// complex into the shifted chain complex, signs normalized.
std::map<int, ExactMat> duality_chain_map(const SimplicialComplex& m, const std::vector<Rat>& mu,
                                          const Coefficients& c);

/// Cap with the fundamental class is an isomorphism H^k -> H_{d-k}: verified
/// by mapping-cone acyclicity (all coefficients) and by explicit full-rank
/// cap matrices over fields.
TheoryReport poincare_duality_check(const SimplicialComplex& m, const std::optional<Orientation>& o,
                                    const Coefficients& c);

struct GysinResult {
    TheoryReport report;
    /// Per degree n: matrix of H^BM_n(X) -> H^BM_{n+r}(X x R^r) in homology
    /// bases (free part over Z).
    std::map<int, ExactMat> matrices;
};

/// Cross product with the relative fundamental class of (I,dI)^r; inverse is
/// the slant against the dual cocycle, and the composite is the identity on
/// the chain level.
GysinResult gysin_trivial_bundle(const SimplicialPair& x, int r, const Coefficients& c);

/// Cech double complex of a closed cover; the totalization must reproduce
/// the homology of the space.
TheoryReport proper_descent_check(const SimplicialComplex& x,
                                  const std::vector<std::vector<Simplex>>& cover,
                                  const Coefficients& c);

/// For compact pairs the chains and Borel-Moore computations coincide.
TheoryReport forget_supports_check(const SimplicialPair& x, const Coefficients& c);

} // namespace stackhom
