#pragma once

#include <optional>
#include <span>
#include <vector>

#include "zkring/complex.hpp"
#include "zkring/field.hpp"
#include "zkring/linalg.hpp"

namespace zkring {

// A finite cochain complex C^lo -> ... -> C^hi with labelled bases.
// differential(q) maps C^q to C^{q+1}: rows index C^{q+1}, columns C^q.
struct CochainComplex {
  int min_degree = -1;
  std::vector<std::vector<VertexSet>> bases;
  std::vector<ExactMatrix> differentials;

  int max_degree() const { return min_degree + static_cast<int>(bases.size()) - 1; }
  std::size_t dimension(int q) const;
  const std::vector<VertexSet>& basis(int q) const;
  // Zero-size matrix outside the stored range.
  ExactMatrix differential(int q) const;
};

// Reduced simplicial cochain complex in degrees -1 .. dim K. Simplices are
// oriented by ascending vertex order and δ picks up (-1)^j for the vertex
// inserted at position j.
CochainComplex reduced_cochain_complex(const SimplicialComplex& k,
                                       const FieldSpec& field);
// Same, from an explicit face list (sorted by size then bits, ∅ first). Used
// for full subcomplexes K_J without re-indexing.
CochainComplex reduced_cochain_complex(std::span<const VertexSet> faces,
                                       const FieldSpec& field);

// Cohomology in one degree, with the data needed to express any cocycle in
// the chosen basis.
//
// image_rows is the RREF of the coboundaries. Representatives extend it: each
// is zero on every image pivot, and together they are in RREF among
// themselves, so a cocycle's class coordinates are read off at rep_pivots
// after clearing the image pivots.
struct DegreeCohomology {
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<std::vector<Scalar>> representatives;
  std::vector<std::vector<Scalar>> image_rows;
  std::vector<std::size_t> image_pivots;
  std::vector<std::size_t> rep_pivots;
};

class CohomologyResult {
 public:
  CohomologyResult() = default;
  CohomologyResult(FieldSpec field, int min_degree, std::vector<DegreeCohomology> degrees)
      : field_(field), min_degree_(min_degree), degrees_(std::move(degrees)) {}

  const FieldSpec& field() const { return field_; }
  int min_degree() const { return min_degree_; }
  int max_degree() const { return min_degree_ + static_cast<int>(degrees_.size()) - 1; }
  std::size_t dimension(int q) const;
  const DegreeCohomology& at(int q) const;
  std::size_t total_dimension() const;

  // Class coordinates of a cocycle; nullopt if `cocycle` is not in
  // span(image) + span(representatives).
  std::optional<std::vector<Scalar>> coordinates(int q,
                                                 std::vector<Scalar> cocycle) const;

 private:
  FieldSpec field_;
  int min_degree_ = 0;
  std::vector<DegreeCohomology> degrees_;
};

// Throws kNotAComplex if some δ∘δ ≠ 0.
CohomologyResult cohomology(const CochainComplex& c, const FieldSpec& field);

// Dimensions only (rank-nullity), indexed from c.min_degree.
std::vector<std::size_t> cohomology_dimensions(const CochainComplex& c,
                                               const FieldSpec& field);

// Reduced cohomology dimensions of K over the field, degrees -1 .. dim K.
std::vector<std::size_t> reduced_cohomology_dimensions(const SimplicialComplex& k,
                                                       const FieldSpec& field);

}  // namespace zkring
