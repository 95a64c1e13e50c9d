#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zkring/field.hpp"

namespace zkring {

// Sparse coordinate vector: (basis index, nonzero coefficient), sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

// Label of the finest homogeneous component a basis element lives in. For
// Tor algebras this is (homological degree, multidegree bits); for plain
// graded algebras (degree, 0).
using GradeLabel = std::pair<long long, std::uint64_t>;

// Finite-dimensional graded-commutative algebra given by a homogeneous basis
// and structure constants. Both the Tor algebra and the quasitoric quotient
// expose themselves through this view so the socle/duality code is shared.
class FiniteAlgebra {
 public:
  virtual ~FiniteAlgebra() = default;

  virtual const FieldSpec& field() const = 0;
  virtual std::size_t dimension() const = 0;
  virtual int degree(std::size_t basis_index) const = 0;
  virtual GradeLabel grade(std::size_t basis_index) const = 0;
  virtual std::size_t unit() const = 0;
  virtual SparseVector product(std::size_t a, std::size_t b) const = 0;

  // Highest degree carrying a basis element.
  int top_degree() const;
  std::vector<std::size_t> basis_in_degree(int d) const;
};

using Element = std::vector<Scalar>;

Element zero_element(const FiniteAlgebra& a);
Element basis_element(const FiniteAlgebra& a, std::size_t index);
Element multiply(const FiniteAlgebra& a, const Element& x, const Element& y);
Element add(const FiniteAlgebra& a, const Element& x, const Element& y);
Element scale(const FiniteAlgebra& a, const Scalar& c, const Element& x);
bool is_zero(const FiniteAlgebra& a, const Element& x);
// Restriction of x to the basis elements of the given grade.
Element component(const FiniteAlgebra& a, const Element& x, GradeLabel grade);

}  // namespace zkring
