#pragma once

#include "stackhom/chain_complex.hpp"
#include "stackhom/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stackhom {

/// Vertices of a simplex as strictly increasing vertex indices.
using Simplex = std::vector<int>;

/// Finite simplicial complex over a totally ordered vertex set; the order
/// fixes all orientation signs. Faces are the closure of the facet list.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    SimplicialComplex(std::vector<std::string> vertex_names, const std::vector<Simplex>& facets);

    /// Facets given as vertex-name lists.
    static SimplicialComplex from_named_facets(std::vector<std::string> vertex_names,
                                               const std::vector<std::vector<std::string>>& facets);

    long num_vertices() const { return static_cast<long>(vertex_names_.size()); }
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    int vertex_index(const std::string& name) const;

    /// Dimension of the complex; -1 when empty.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    long num_faces(int k) const;
    const Simplex& face(int k, long i) const;
    long face_index(int k, const Simplex& s) const; // -1 if absent
    bool has_face(const Simplex& s) const;

    /// Maximal faces, dimension-major then lexicographic.
    std::vector<Simplex> facets() const;

    long total_faces() const;
    long euler_characteristic() const;

    ChainComplex boundary_complex(const Coefficients& c) const;

private:
    std::vector<std::string> vertex_names_;
    std::vector<std::vector<Simplex>> faces_; // faces_[k]: sorted list of k-faces
};

/// Compact pair (ambient, at-infinity subcomplex); the open object it models
/// is |ambient| minus |at_infinity|.
class SimplicialPair {
public:
    explicit SimplicialPair(SimplicialComplex ambient);
    SimplicialPair(SimplicialComplex ambient, const std::vector<Simplex>& at_infinity_faces);

    const SimplicialComplex& ambient() const { return ambient_; }
    bool at_infinity(int k, long face) const;
    bool boundary_empty() const;
    std::vector<Simplex> infinity_faces() const; // all of them, closure included

    /// Faces of the ambient complex not at infinity, per degree.
    std::vector<long> relative_face_ids(int k) const;

private:
    SimplicialComplex ambient_;
    std::vector<std::vector<char>> infty_;
};

/// Quotient complex C(ambient)/C(at_infinity); computes Borel-Moore homology
/// of the open complement under the pair convention.
ChainComplex relative_complex(const SimplicialPair& p, const Coefficients& c);

/// Chain map induced by a vertex map; simplices with repeated image vertices
/// map to zero, others pick up the sort-permutation sign.
std::vector<ExactMat> simplicial_map_chain(const SimplicialComplex& from,
                                           const SimplicialComplex& to,
                                           const std::vector<int>& vertex_map);

struct SubdivisionResult {
    SimplicialComplex sd;
    std::vector<ExactMat> subdivide; // per degree: C_k(x) -> C_k(sd)
    std::vector<ExactMat> aggregate; // per degree: C_k(sd) -> C_k(x); aggregate o subdivide = id
    /// sd-vertex index of the barycenter of each face of x.
    std::vector<std::vector<long>> barycenter;
    /// The face of x whose barycenter is the given sd-vertex.
    std::vector<std::pair<int, long>> source_face;
};

SubdivisionResult barycentric_subdivision(const SimplicialComplex& x);

/// Carry the at-infinity subcomplex through a subdivision of the ambient.
SimplicialPair subdivide_pair(const SimplicialPair& p, const SubdivisionResult& s);

struct ProductResult {
    explicit ProductResult(const Coefficients& c) : tensor(c) {}
    SimplicialComplex product;
    ChainComplex tensor; // C(x) (x) C(y), blocks (p, q) ascending in p
    std::vector<ExactMat> ez; // per degree: tensor_n -> C_n(product), shuffle map
    std::vector<ExactMat> aw; // per degree: C_n(product) -> tensor_n, front/back faces
    std::vector<std::map<int, long>> offsets; // per degree: p -> block offset in tensor_n
    /// Offset of block (p, n-p) inside tensor degree n; -1 if absent.
    long block_offset(int n, int p) const;
};

/// Ordered product complex (monotone staircase triangulation) together with
/// the Eilenberg-Zilber and Alexander-Whitney chain maps; aw o ez = id.
ProductResult ez_aw(const SimplicialComplex& x, const SimplicialComplex& y,
                    const Coefficients& c);

/// Product of pairs: at infinity when either projection is.
SimplicialPair pair_product(const SimplicialPair& a, const SimplicialPair& b);

/// Same marking, reusing an already computed product of the ambients.
SimplicialPair pair_product_marked(const ProductResult& pr, const SimplicialPair& a,
                                   const SimplicialPair& b);

/// Per-top-simplex signs, aligned with face(dim, .) order.
struct Orientation {
    std::vector<int> sign;
};

/// Signed sum of top simplices; must be a cycle. With F2 coefficients the
/// orientation may be omitted.
std::vector<Rat> fundamental_chain(const SimplicialComplex& x, const std::optional<Orientation>& o,
                                   const Coefficients& c);

/// Propagates signs across shared codimension-1 faces; nullopt when the
/// complex is not a closed orientable pseudo-manifold.
std::optional<Orientation> coherent_orientation(const SimplicialComplex& x);

/// Group acting by vertex permutations preserving the complex.
class GroupAction {
public:
    GroupAction(FiniteGroup g, std::vector<std::vector<int>> vertex_perm,
                const SimplicialComplex& x);

    const FiniteGroup& group() const { return g_; }
    const std::vector<int>& perm(int elem) const { return perm_[static_cast<size_t>(elem)]; }

    /// Signed permutation matrices on chains, per degree.
    std::vector<ExactMat> chain_matrices(const SimplicialComplex& x, int elem) const;

    /// Stabilizers fix simplices pointwise?
    bool is_regular(const SimplicialComplex& x) const;
    /// Orders of the setwise stabilizer of every face, dimension-major.
    std::vector<std::vector<long>> stabilizer_orders(const SimplicialComplex& x) const;
    bool is_free(const SimplicialComplex& x) const;

    /// Induced action on the barycentric subdivision.
    GroupAction on_subdivision(const SimplicialComplex& x, const SubdivisionResult& s) const;

    /// The at-infinity part must be carried into itself by every element.
    bool preserves(const SimplicialPair& p) const;

private:
    FiniteGroup g_;
    std::vector<std::vector<int>> perm_;
};

} // namespace stackhom
