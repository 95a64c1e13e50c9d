#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zkring/vertex_set.hpp"

namespace zkring {

// An abstract simplicial complex on [m], stored by its facets.
//
// Every singleton {i} is a face, facets are pairwise incomparable and kept
// sorted by bitmask. The empty complex {∅} is the value with m = 0 and a
// single empty facet; it is what core() returns for a simplex and what
// link() returns for a facet.
class SimplicialComplex {
 public:
  // Validates, prunes non-maximal faces and sorts. Throws Error with
  // kEmptyInput, kVertexOutOfRange or kMissingVertex.
  static SimplicialComplex from_facets(int m, std::vector<VertexSet> facets);
  static SimplicialComplex from_facets(
      int m, const std::vector<std::vector<int>>& facets);

  // The complex whose minimal non-faces are exactly `missing`. Enumerates
  // all 2^m subsets, so intended for m <= 24.
  static SimplicialComplex from_missing_faces(
      int m, const std::vector<VertexSet>& missing);

  static SimplicialComplex empty();

  int vertex_count() const { return m_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  // Maximal facet size minus one; -1 for the empty complex.
  int dimension() const;
  bool is_empty_complex() const { return m_ == 0; }
  bool is_pure() const;

  bool is_face(VertexSet sigma) const;

  // All faces including ∅, sorted by (size, bitmask).
  std::vector<VertexSet> faces() const;
  // Faces counted by dimension; entry 0 is the empty face (dimension -1).
  std::vector<std::size_t> face_counts() const;
  // χ̃(K) = Σ_{σ ∈ K} (-1)^{dim σ}, the empty face contributing -1.
  long long reduced_euler_characteristic() const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int m, std::vector<VertexSet> facets)
      : m_(m), facets_(std::move(facets)) {}

  int m_ = 0;
  std::vector<VertexSet> facets_;
};

// A complex re-indexed onto 1..k together with the original label of each
// new vertex: labels[j - 1] is the original vertex of new vertex j.
struct Relabeled {
  SimplicialComplex complex;
  std::vector<int> labels;
};

// Incidence data of a simple n-polytope with m facets: for each polytope
// vertex, the set of facets containing it.
struct PolytopeIncidence {
  int n = 0;
  int m = 0;
  std::vector<VertexSet> vertices;
};

struct DecompositionReport {
  std::vector<VertexSet> parts;
  VertexSet cone_vertices;
  // factors[k] is the full subcomplex on parts[k], re-indexed.
  std::vector<Relabeled> factors;

  bool is_trivial() const { return parts.size() <= 1 && cone_vertices.empty(); }
};

struct CoreResult {
  Relabeled core;
  VertexSet cone_vertices;
};

// Minimal non-faces sorted by (cardinality, bitmask).
std::vector<VertexSet> missing_faces(const SimplicialComplex& k);

// K_I re-indexed onto 1..|I|. Throws kEmptySelection if I = ∅.
Relabeled full_subcomplex(const SimplicialComplex& k, VertexSet subset);

// K1 ∗ K2 on m1 + m2 vertices, the second factor shifted by m1.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);
SimplicialComplex cone(const SimplicialComplex& k);

// lk_K(σ) on the vertices {i ∉ σ : σ ∪ {i} ∈ K}. Throws kNotAFace.
Relabeled link(const SimplicialComplex& k, VertexSet sigma);

CoreResult core(const SimplicialComplex& k);

// K = ∂P^*. Throws kNotSimple when an entry does not have n facets.
SimplicialComplex dual_of_polytope(const PolytopeIncidence& p);

// Finest partition of the non-cone vertices such that no missing face meets
// two parts. Parts are ordered by minimum vertex.
DecompositionReport join_decomposition(const SimplicialComplex& k);

// Applies a permutation: vertex i goes to perm[i - 1] (1-indexed values).
SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& perm);

std::string to_string(const SimplicialComplex& k);

}  // namespace zkring
