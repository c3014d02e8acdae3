#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "transint/complexes.hpp"
#include "transint/monomial_ideal.hpp"

namespace transint {

using Face = std::vector<std::size_t>;  // sorted vertex list

/// Simplicial complex given by its facets. The vertex set may contain
/// vertices that lie in no facet only if they are listed explicitly; such
/// vertices are not faces. Facets are stored maximal, sorted, deduplicated.
class SimplicialComplex {
 public:
  /// The complex {∅}.
  SimplicialComplex() : facets_{Face{}} {}
  explicit SimplicialComplex(std::vector<Face> facets);

  const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }
  const std::vector<Face>& facets() const noexcept { return facets_; }
  /// Largest face size minus one; -1 for {∅}.
  int dimension() const;

  bool contains(const Face& f) const;
  /// All faces of dimension `dim` (size dim+1), lexicographically sorted.
  /// dim = -1 yields {∅}.
  std::vector<Face> faces(int dim) const;

  std::string to_string() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<std::size_t> vertices_;
  std::vector<Face> facets_;
};

/// The full simplex on `vertices`.
SimplicialComplex standard_simplex(std::vector<std::size_t> vertices);

/// Facets {σ ∪ τ}. Throws DomainError when the vertex sets overlap.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

/// Renames vertices; `map` must be injective on the vertex set.
SimplicialComplex relabel(const SimplicialComplex& d, const std::map<std::size_t, std::size_t>& map);
/// Adds `offset` to every vertex.
SimplicialComplex shift(const SimplicialComplex& d, std::size_t offset);

/// One-variable ring carrying constant frames.
RingPtr frame_ring();

/// Chain complex of Δ as a frame: the face σ sits at level |σ| (so ∅ is
/// level 0) and ∂e_σ = Σ_t (-1)^{t-1} e_{σ - j_t}, j_1 < j_2 < … the vertices
/// of σ. Labels carry the face as `subset` and multidegree 1.
FreeComplex chain_complex(const SimplicialComplex& d, const RingPtr& ring = frame_ring());

/// M-homogenization of a frame: level-1 element j gets multidegree gens[j];
/// higher elements get the lcm of the multidegrees their boundary touches,
/// and each coefficient α becomes α·mdeg(v)/mdeg(u). Throws DomainError when
/// the frame has non-constant entries or gens does not match its level-1 rank.
FreeComplex homogenize(const FreeComplex& frame, const std::vector<Monomial>& gens, const RingPtr& ring);

/// Verifies θ(e_γ ⊗ e_σ) = ±e_{γ∪σ} is a bijective chain map
/// C(Δ1) ⊗ C(Δ2) → C(Δ1 * Δ2). The sign is that of the shuffle sorting
/// γ followed by σ, which is +1 when every vertex of Δ1 precedes those of Δ2.
ComplexCheck join_iso_check(const SimplicialComplex& a, const SimplicialComplex& b);

struct SupportedResolution {
  bool is_complex = false;
  bool acyclic = false;
  bool minimal = false;

  bool ok() const noexcept { return is_complex && acyclic && minimal; }
};

/// Homogenizes the chain complex of Δ with G(I) (vertex k, in increasing
/// vertex order, gets the k-th generator) and checks that the result is a
/// minimal free resolution of R/I. Throws DomainError on a count mismatch.
SupportedResolution supported_resolution_check(const MonomialIdeal& ideal, const SimplicialComplex& d);
/// Same with an explicit generator for each vertex, in increasing vertex order.
SupportedResolution supported_resolution_check(const MonomialIdeal& ideal, const std::vector<Monomial>& gens,
                                               const SimplicialComplex& d);

}  // namespace transint
