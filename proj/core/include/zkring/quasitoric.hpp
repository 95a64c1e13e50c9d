#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkring/algebra.hpp"
#include "zkring/complex.hpp"
#include "zkring/field.hpp"
#include "zkring/linalg.hpp"

namespace zkring {

// n × m integer matrix; row j is the linear form t_j = Σ_i λ_{ji} v_i.
struct CharMatrix {
  int n = 0;
  int m = 0;
  std::vector<std::vector<long long>> rows;

  friend bool operator==(const CharMatrix&, const CharMatrix&) = default;
};

// Rank test on every facet: Λ restricted to the columns of σ has rank |σ|.
// Throws kDimensionMismatch unless Λ.m = m and Λ.n = dim K + 1.
bool is_lsop(const SimplicialComplex& k, const CharMatrix& lambda, const FieldSpec& field);

// k[K]/(t_1, ..., t_n), built degree by degree. Basis elements are the
// standard monomials (those not leading a row of the RREF of the ideal's
// degree-d part under descending graded-lex order); degrees are
// cohomological (twice the polynomial degree).
class GradedAlgebra : public FiniteAlgebra {
 public:
  const FieldSpec& field() const override { return field_; }
  std::size_t dimension() const override { return monomials_.size(); }
  int degree(std::size_t index) const override { return degrees_[index]; }
  GradeLabel grade(std::size_t index) const override { return {degrees_[index], 0}; }
  std::size_t unit() const override { return 0; }
  SparseVector product(std::size_t a, std::size_t b) const override;

  const std::vector<std::vector<int>>& monomials() const { return monomials_; }
  // Degree-2 basis z_1, ..., z_{m-n}.
  const std::vector<std::size_t>& generators() const { return generators_; }
  // dims[d] = dim of cohomological degree 2d.
  std::vector<std::size_t> dimensions_by_degree() const;

  // Normal form of an arbitrary homogeneous polynomial of k[K] (given as
  // monomial -> coefficient) in this quotient.
  Element normal_form(const std::map<std::vector<int>, Scalar>& polynomial) const;

 private:
  friend GradedAlgebra quotient_algebra(const SimplicialComplex&, const CharMatrix&,
                                        const FieldSpec&);

  struct DegreeData {
    std::vector<std::vector<int>> monomials;  // all face-supported, descending grlex
    ExactMatrix ideal_rref;                   // rows: reduced ideal basis
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> standard;  // monomial positions kept as basis
    std::size_t first_basis_index = 0;
  };

  FieldSpec field_;
  std::vector<std::vector<int>> monomials_;
  std::vector<int> degrees_;
  std::vector<std::size_t> generators_;
  std::vector<DegreeData> by_degree_;
  std::vector<std::vector<SparseVector>> table_;
  std::vector<VertexSet> faces_;
};

// Throws kNotLsop when the rank test fails.
GradedAlgebra quotient_algebra(const SimplicialComplex& k, const CharMatrix& lambda,
                               const FieldSpec& field);

struct KoszulOfAlgebraResult {
  // (homological degree s, internal degree) -> dim; internal degree counts
  // each u_i in degree 2 so d preserves it.
  std::map<std::pair<int, int>, std::size_t> dims;
  // Total degree (internal - s) -> dim.
  std::map<int, std::size_t> poincare;
};

// Homology of A ⊗ Λ(u_1..u_r), d(u_i) = z_i, over the declared generators.
KoszulOfAlgebraResult koszul_homology_of_algebra(const GradedAlgebra& a);

struct RecoveryReport {
  bool passed = false;
  // Per cohomological degree: (from the quotient's Koszul homology, from
  // the Hochster table).
  std::map<int, std::pair<std::size_t, std::size_t>> by_degree;
  std::string first_mismatch;
};

RecoveryReport verify_zp_recovery(const SimplicialComplex& k, const CharMatrix& lambda,
                                  const FieldSpec& field);

struct Certificate {
  bool certified = false;
  // The join split found when not certified.
  std::optional<DecompositionReport> split;
  std::string note;
};

inline constexpr const char* kJoinSplitCaveat =
    "the orbit polytope splits as a product, which does NOT imply that "
    "H*(M) decomposes as a tensor product (e.g. CP^3 # CP^3 over the prism "
    "Delta^1 x Delta^2 has indecomposable cohomology)";

// Sound one-directional certificate: K Gorenstein* and join-indecomposable
// implies H^*(M; k) has no nontrivial tensor decomposition.
// Throws kNotLsop or kNotGorenstein.
Certificate indecomposability_certificate(const SimplicialComplex& k,
                                          const CharMatrix& lambda,
                                          const FieldSpec& field);

struct AlgebraSplitSearch {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  // Degree-2 vectors spanning the two factors, when found.
  std::optional<std::pair<std::vector<Element>, std::vector<Element>>> split;
};

// Bounded randomized search for A ≅ B1 ⊗ B2 with B_i generated by
// complementary subspaces of A^2 drawn with small integer coordinates.
AlgebraSplitSearch search_algebra_tensor_split(const GradedAlgebra& a, std::uint64_t seed,
                                               std::size_t trials = 200);

// True iff the subalgebras generated by w1 and w2 (degree-2 elements)
// multiply isomorphically onto A.
bool is_tensor_split(const GradedAlgebra& a, const std::vector<Element>& w1,
                     const std::vector<Element>& w2);

namespace charmatrix {
// [I_n | -1] over ∂Δ^n: H^*(M) = H^*(CP^n).
CharMatrix standard_cpn(int n);
// [[1,0,1,0],[0,1,0,1]] over the 4-gon: H^*(M) = H^*(CP^1 × CP^1).
CharMatrix square_surface();
// [[1,0,-1,a],[0,1,0,-1]] over the 4-gon (Hirzebruch-type family).
CharMatrix hirzebruch(int a);
// Over the prism dual ∂Δ^1 ∗ ∂Δ^2: H^*(M) = H^*(CP^3 # CP^3).
CharMatrix cp3_sharp_cp3();
}  // namespace charmatrix

}  // namespace zkring
