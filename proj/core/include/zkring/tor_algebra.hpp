#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "zkring/algebra.hpp"
#include "zkring/betti.hpp"
#include "zkring/cochain.hpp"
#include "zkring/complex.hpp"
#include "zkring/field.hpp"

namespace zkring {

struct Projection;
class TorAlgebra;
TorAlgebra tor_algebra(const SimplicialComplex& k, const FieldSpec& field);
Projection project(const TorAlgebra& t, VertexSet j);

// A basis class of Tor_i(k[K],k)_J, represented by a simplicial cocycle on
// K_J of degree |J| - i - 1 (faces keep their labels in [m]).
struct TorClass {
  std::size_t id = 0;
  int homological_degree = 0;
  VertexSet multidegree;
  std::vector<std::pair<VertexSet, Scalar>> representative;

  int cohomological_degree() const {
    return 2 * multidegree.size() - homological_degree;
  }
};

// Koszul sign of the strand isomorphism: the cochain e_τ on K_J corresponds
// to ε_J(τ) v_τ u_{J∖τ} with ε_J(τ) = (-1)^{Σ_{t∈τ} #{x ∈ J : x < t}}.
int strand_sign(VertexSet j, VertexSet tau);
// Sign of sorting u_A ∧ u_B into ascending order (A, B disjoint).
int shuffle_sign(VertexSet a, VertexSet b);

// H^*(Z_K; k) as Tor^S(k[K], k), with its product computed in the Koszul
// complex. Basis order is (|J|, J, i, index within the block); class 0 is
// the unit. Products are computed on first use and memoised.
class TorAlgebra : public FiniteAlgebra {
 public:
  const SimplicialComplex& complex() const { return data_->complex; }
  const FieldSpec& field() const override { return data_->field; }
  std::size_t dimension() const override { return data_->basis.size(); }
  int degree(std::size_t index) const override {
    return data_->basis[index].cohomological_degree();
  }
  GradeLabel grade(std::size_t index) const override {
    const TorClass& c = data_->basis[index];
    return {c.homological_degree, c.multidegree.bits()};
  }
  std::size_t unit() const override { return 0; }
  SparseVector product(std::size_t a, std::size_t b) const override;

  const std::vector<TorClass>& basis() const { return data_->basis; }
  const TorClass& basis_class(std::size_t index) const { return data_->basis[index]; }
  std::vector<std::size_t> classes_with_multidegree(VertexSet j) const;
  std::optional<std::size_t> find_class(int i, VertexSet j, std::size_t offset = 0) const;

  BettiTable betti_table() const;

  // Pulls a Koszul cycle (written as a simplicial cochain on K_J in the
  // strand basis) back to class coordinates within multidegree J, or nullopt
  // if the cochain is not a cocycle.
  std::optional<SparseVector> classify(VertexSet j, int cochain_degree,
                                       const std::vector<std::pair<VertexSet, Scalar>>& cochain) const;

  // Number of products computed so far (memo size).
  std::size_t cached_products() const;

 private:
  friend TorAlgebra tor_algebra(const SimplicialComplex&, const FieldSpec&);
  friend Projection project(const TorAlgebra&, VertexSet);

  struct Strand {
    VertexSet j;
    CochainComplex cochains;
    CohomologyResult cohomology;
    // class_ids[q - min_degree] lists the basis classes in cochain degree q.
    std::vector<std::vector<std::size_t>> class_ids;
  };
  struct Data {
    SimplicialComplex complex = SimplicialComplex::empty();
    FieldSpec field;
    std::vector<TorClass> basis;
    std::vector<Strand> strands;
    std::vector<std::size_t> strand_of_class;
    std::vector<std::pair<std::uint64_t, std::size_t>> strand_index;  // sorted by J
  };
  struct Cache;

  const Strand* find_strand(VertexSet j) const;

  std::shared_ptr<const Data> data_;
  std::shared_ptr<Cache> cache_;
};

TorAlgebra tor_algebra(const SimplicialComplex& k, const FieldSpec& field);

// Missing faces paired with the Tor_1 basis classes they index.
std::vector<std::pair<VertexSet, TorClass>> tor1_basis(
    const SimplicialComplex& k, const FieldSpec& field = FieldSpec::rationals());

// proj_{⊆J}: the subalgebra of classes with multidegree ⊆ J, re-indexed as
// the Tor algebra of K_J, with the map from ids of T to ids of the result.
struct Projection {
  TorAlgebra algebra;
  std::vector<std::optional<std::size_t>> id_map;
  std::vector<int> labels;  // new vertex -> original vertex

  Element apply(const Element& x) const;
};
Projection project(const TorAlgebra& t, VertexSet j);

}  // namespace zkring
