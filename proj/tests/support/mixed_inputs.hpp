#pragma once

#include <array>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "zkring/algebra.hpp"
#include "zkring/tor_algebra.hpp"

namespace zkring::testing {

// Highest-degree class of multidegree J (the fundamental class of K_J when
// K_J is a sphere).
inline std::size_t top_class(const TorAlgebra& t, VertexSet j) {
  std::size_t best = 0;
  int best_degree = -1;
  for (std::size_t id : t.classes_with_multidegree(j)) {
    if (t.degree(id) > best_degree) {
      best = id;
      best_degree = t.degree(id);
    }
  }
  return best;
}

inline Scalar nonzero_coefficient(std::mt19937_64& rng) {
  static constexpr int kChoices[] = {-3, -2, -1, 1, 2, 3};
  return Scalar(kChoices[rng() % 6]);
}

inline Scalar small_coefficient(std::mt19937_64& rng) {
  return Scalar(static_cast<long>(rng() % 7) - 3);
}

// Random combination of the degree-d classes supported inside J.
inline Element random_in_degree(const TorAlgebra& t, int d, VertexSet j, std::mt19937_64& rng) {
  Element x = zero_element(t);
  for (std::size_t id : t.basis_in_degree(d)) {
    if (t.basis_class(id).multidegree.subset_of(j)) x[id] = small_coefficient(rng);
  }
  return x;
}

// t1, t2 are the top classes of the two factors of some tensor
// decomposition of H*(Z_K) ≅ B1 ⊗ B2, written in the Tor basis.
struct MixedInput {
  std::string family;
  SimplicialComplex k;
  TorAlgebra t;
  Element t1;
  Element t2;
};

// A rank-2 matrix over ℚ with small entries.
inline std::array<Scalar, 4> random_gl2(std::mt19937_64& rng) {
  for (;;) {
    std::array<Scalar, 4> m{small_coefficient(rng), small_coefficient(rng), small_coefficient(rng),
                            small_coefficient(rng)};
    if (m[0] * m[3] - m[1] * m[2] != 0) return m;
  }
}

// family 0: 4-gon = ∂Δ¹ ∗ ∂Δ¹. Λ(x, y) with x, y in degree 3; B1 = ⟨a x + b y⟩,
// B2 = ⟨c x + d y⟩ for any invertible (a b; c d).
inline MixedInput mixed_square(std::mt19937_64& rng) {
  const auto k = catalog::polygon(4);
  const auto t = tor_algebra(k, FieldSpec::rationals());
  const Element x = basis_element(t, top_class(t, VertexSet::of({1, 3})));
  const Element y = basis_element(t, top_class(t, VertexSet::of({2, 4})));
  const auto g = random_gl2(rng);
  return {"polygon4", k, t, add(t, scale(t, g[0], x), scale(t, g[1], y)),
          add(t, scale(t, g[2], x), scale(t, g[3], y))};
}

// family 1: pentagon ∗ ∂Δ¹ = P ⊗ Λ(s). B1 = P with top c·τ_P, B2 = ⟨c' s + p⟩
// for any p in P³; multiplication P ⊗ B2 → A is triangular in the s-degree.
inline MixedInput mixed_pentagon_edge(std::mt19937_64& rng) {
  const auto k = join(catalog::polygon(5), catalog::boundary_simplex(1));
  const auto t = tor_algebra(k, FieldSpec::rationals());
  const VertexSet pent = VertexSet::range(5);
  const Element tau_p = basis_element(t, top_class(t, pent));
  const Element s = basis_element(t, top_class(t, VertexSet::of({6, 7})));
  Element t1 = scale(t, nonzero_coefficient(rng), tau_p);
  Element t2 = add(t, scale(t, nonzero_coefficient(rng), s), random_in_degree(t, 3, pent, rng));
  if (rng() % 2 == 1) std::swap(t1, t2);
  return {"pentagon*bd1", k, t, t1, t2};
}

// family 2: ∂Δ¹ ∗ ∂Δ² ∗ ∂Δ¹ = Λ(x1, x2, x3), degrees 3, 5, 3. Mix x1, x3 by an
// invertible matrix into y1, y3, then group {y1, x2, y3} into two factors.
inline MixedInput mixed_three_spheres(std::mt19937_64& rng) {
  const auto k = join(join(catalog::boundary_simplex(1), catalog::boundary_simplex(2)),
                      catalog::boundary_simplex(1));
  const auto t = tor_algebra(k, FieldSpec::rationals());
  const Element x1 = basis_element(t, top_class(t, VertexSet::of({1, 2})));
  const Element x2 = basis_element(t, top_class(t, VertexSet::of({3, 4, 5})));
  const Element x3 = basis_element(t, top_class(t, VertexSet::of({6, 7})));
  const auto g = random_gl2(rng);
  const Element y1 = add(t, scale(t, g[0], x1), scale(t, g[1], x3));
  const Element y3 = add(t, scale(t, g[2], x1), scale(t, g[3], x3));
  Element t1, t2;
  switch (rng() % 3) {
    case 0:
      t1 = y1;
      t2 = multiply(t, x2, y3);
      break;
    case 1:
      t1 = y3;
      t2 = multiply(t, y1, x2);
      break;
    default:
      t1 = x2;
      t2 = multiply(t, y1, y3);
      break;
  }
  if (rng() % 2 == 1) std::swap(t1, t2);
  return {"bd1*bd2*bd1", k, t, t1, t2};
}

inline MixedInput mixed_input(int family, std::mt19937_64& rng) {
  switch (family % 3) {
    case 0:
      return mixed_square(rng);
    case 1:
      return mixed_pentagon_edge(rng);
    default:
      return mixed_three_spheres(rng);
  }
}

// Brute-force check of a returned split: U ⊔ V = [m] and every missing face
// lies inside U or inside V.
inline bool split_is_valid(const SimplicialComplex& k, VertexSet u, VertexSet v) {
  if (!u.disjoint(v) || (u | v) != VertexSet::range(k.vertex_count()) || u.empty() || v.empty()) {
    return false;
  }
  for (VertexSet f : brute_missing_faces(k)) {
    if (!f.subset_of(u) && !f.subset_of(v)) return false;
  }
  return true;
}

}  // namespace zkring::testing
