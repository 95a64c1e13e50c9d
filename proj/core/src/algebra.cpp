#include "zkring/algebra.hpp"

#include <algorithm>

#include "zkring/error.hpp"

namespace zkring {

int FiniteAlgebra::top_degree() const {
  int top = 0;
  for (std::size_t i = 0; i < dimension(); ++i) top = std::max(top, degree(i));
  return top;
}

std::vector<std::size_t> FiniteAlgebra::basis_in_degree(int d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (degree(i) == d) out.push_back(i);
  }
  return out;
}

namespace {

void check_size(const FiniteAlgebra& a, const Element& x) {
  if (x.size() != a.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "element length differs from algebra dimension");
  }
}

}  // namespace

Element zero_element(const FiniteAlgebra& a) { return Element(a.dimension()); }

Element basis_element(const FiniteAlgebra& a, std::size_t index) {
  Element e(a.dimension());
  e.at(index) = 1;
  return e;
}

Element multiply(const FiniteAlgebra& a, const Element& x, const Element& y) {
  check_size(a, x);
  check_size(a, y);
  const FieldSpec& f = a.field();
  Element out(a.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (f.is_zero(y[j])) continue;
      const Scalar c = f.mul(x[i], y[j]);
      for (const auto& [k, v] : a.product(i, j)) out[k] = f.add(out[k], f.mul(c, v));
    }
  }
  return out;
}

Element add(const FiniteAlgebra& a, const Element& x, const Element& y) {
  check_size(a, x);
  check_size(a, y);
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a.field().add(x[i], y[i]);
  return out;
}

Element scale(const FiniteAlgebra& a, const Scalar& c, const Element& x) {
  check_size(a, x);
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a.field().mul(c, x[i]);
  return out;
}

bool is_zero(const FiniteAlgebra& a, const Element& x) {
  return std::all_of(x.begin(), x.end(), [&](const Scalar& v) { return a.field().is_zero(v); });
}

Element component(const FiniteAlgebra& a, const Element& x, GradeLabel grade) {
  check_size(a, x);
  Element out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (a.grade(i) == grade) out[i] = x[i];
  }
  return out;
}

}  // namespace zkring
