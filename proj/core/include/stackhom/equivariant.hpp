#pragma once

#include "stackhom/group_ring.hpp"
#include "stackhom/report.hpp"
#include "stackhom/simplicial.hpp"
#include "stackhom/theories.hpp"

namespace stackhom {

/// Thrown when the stabilization protocol hits its resolution-length cap;
/// both partial answers are attached.
class StabilizationError : public Error {
public:
    StabilizationError(std::string what, GradedModulePresentation at_n,
                       GradedModulePresentation at_longer, int n)
        : Error(std::move(what)), at_n(std::move(at_n)), at_longer(std::move(at_longer)), n(n) {}
    GradedModulePresentation at_n, at_longer;
    int n;
};

/// Chain-level model of the G-space: the (relative) chain complex of the
/// regularized pair with its signed permutation action.
struct EquivariantComplex {
    GroupAlgebraComplex gac;
    SimplicialPair pair;  // possibly subdivided
    GroupAction action;   // on pair.ambient()
    std::vector<std::vector<long>> stabilizer_orders;
    bool regularized = false;
    bool free_action = false;
};

/// Builds the equivariant chain complex; applies two barycentric
/// subdivisions when the action is not regular. The at-infinity part must be
/// carried into itself by the group.
EquivariantComplex equivariant_chain_complex(const SimplicialPair& x, const GroupAction& a,
                                             const Coefficients& c);

/// Coinvariants: the chain complex of the quotient cell structure. For free
/// actions this computes the homology of the quotient space.
ChainComplex orbit_complex(const EquivariantComplex& e);

/// Resolution of the trivial module used for a group: periodic for cyclic
/// groups, the reduced kernel-generator resolution otherwise.
Resolution resolution_for(const FiniteGroup& g, const Coefficients& c, int length);

/// H_i^G(X) on the window, computed at resolution length N and re-computed
/// at N+2; N doubles on disagreement up to the cap.
TheoryReport equivariant_homology(const SimplicialPair& x, const GroupAction& a,
                                  const Coefficients& c, int lo, int hi, int cap = 64);

/// Borel-Moore variant on a G-stable pair; same stabilization protocol.
TheoryReport equivariant_bm_homology(const SimplicialPair& x, const GroupAction& a,
                                     const Coefficients& c, int lo, int hi, int cap = 64);

/// Chains of the quotient stack via homotopy orbits; degrees up to
/// truncation - 2 are reported, with a quotient-complex cross-check for free
/// actions.
TheoryReport homotopy_orbit_chains(const SimplicialPair& x, const GroupAction& a,
                                   const Coefficients& c, int truncation);

/// Sphere model of the Borel construction for a cyclic group at one stage:
/// real projective spaces for m = 2, lens spaces for m > 2.
struct BorelManifoldModel {
    int modulus = 0;
    int stage = 0;
    int quotient_dim = 0;
    static BorelManifoldModel make(int modulus, int stage);
};

/// Shifted homology of X x^G E_n at stages n and n+1 against the
/// resolution-based answer on the guaranteed window.
TheoryReport borel_comparison(const SimplicialPair& x, const GroupAction& a,
                              const Coefficients& c, int stage, int lo, int hi);

} // namespace stackhom
