#pragma once

#include <map>
#include <vector>

#include "zkring/complex.hpp"
#include "zkring/field.hpp"
#include "zkring/linalg.hpp"

namespace zkring {

// A ℤ^m exponent vector; square-free ones are identified with subsets of [m].
struct Multidegree {
  std::vector<int> exponents;

  static Multidegree of(VertexSet j, int m);
  bool is_square_free() const;
  VertexSet support() const;
  int total() const;
};

// Key of a bigraded Tor entry, ordered by (|J|, J, i).
struct BettiKey {
  int i = 0;
  VertexSet j;

  int cohomological_degree() const { return 2 * j.size() - i; }
  friend bool operator==(const BettiKey&, const BettiKey&) = default;
  friend bool operator<(const BettiKey& a, const BettiKey& b) {
    if (a.j.size() != b.j.size()) return a.j.size() < b.j.size();
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

// dim Tor_i^S(k[K], k)_J for square-free J; only nonzero entries stored.
struct BettiTable {
  FieldSpec field;
  int vertex_count = 0;
  std::map<BettiKey, std::size_t> entries;

  std::size_t at(int i, VertexSet j) const;
  std::size_t total() const;
  // Σ over J, keyed by cohomological degree 2|J| - i.
  std::map<int, std::size_t> by_cohomological_degree() const;
  // Σ over J of fixed size, keyed by (i, |J|).
  std::map<std::pair<int, int>, std::size_t> by_bidegree() const;
  // Σ over J, keyed by homological degree i.
  std::map<int, std::size_t> by_homological_degree() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

// Hochster: Tor_i(k[K],k)_J ≅ H̃^{|J|-i-1}(K_J; k), over all 2^m subsets.
BettiTable betti_table_hochster(const SimplicialComplex& k, const FieldSpec& field);

// One element m ⊗ u_σ of a Koszul strand: monomial exponents in k[K] and the
// exterior support σ.
struct KoszulBasisElement {
  std::vector<int> monomial;
  VertexSet exterior;
};

// The multidegree-J strand of k[K] ⊗ Λ(u_1..u_m), d(u_i) = v_i, with
//   d(m ⊗ u_{i1}∧...∧u_{is}) = Σ_j (-1)^{j-1} v_{ij} m ⊗ u_{i1}∧..û_{ij}..∧u_{is}.
// basis[i] spans homological degree i; differential(i) maps degree i to i-1.
struct KoszulStrand {
  Multidegree j;
  std::vector<std::vector<KoszulBasisElement>> basis;
  std::vector<ExactMatrix> differentials;  // index i: C_i -> C_{i-1}, i >= 1

  ExactMatrix differential(int i) const;
  std::size_t index_of(const KoszulBasisElement& e) const;
};

KoszulStrand koszul_strand(const SimplicialComplex& k, const Multidegree& j,
                           const FieldSpec& field);

// Homology dimensions of the strand, indexed by homological degree 0..|supp J|.
std::vector<std::size_t> koszul_strand_homology(const SimplicialComplex& k,
                                                const Multidegree& j,
                                                const FieldSpec& field);

// The same table assembled from Koszul strands on every square-free J.
BettiTable betti_table_koszul(const SimplicialComplex& k, const FieldSpec& field);

}  // namespace zkring
