#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "zkring/catalog.hpp"
#include "zkring/complex.hpp"
#include "zkring/field.hpp"

namespace zkring::testing {

struct Named {
  std::string name;
  SimplicialComplex k;
};

inline SimplicialComplex facets(int m, std::vector<std::vector<int>> f) {
  return SimplicialComplex::from_facets(m, f);
}

// Small complexes that are deliberately not Gorenstein over any field.
inline std::vector<Named> non_gorenstein() {
  return {
      {"path4", catalog::path(4)},
      {"path5", catalog::path(5)},
      {"points3", catalog::points(3)},
      {"points4", catalog::points(4)},
      {"edge+point", facets(3, {{1, 2}, {3}})},
      {"two_edges", facets(4, {{1, 2}, {3, 4}})},
      {"triangle_with_tail", facets(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}})},
      {"star3", facets(4, {{1, 2}, {1, 3}, {1, 4}})},
      {"bowtie", facets(5, {{1, 2, 3}, {3, 4, 5}})},
      {"fan3", facets(5, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}})},
      {"triangle+edge", facets(5, {{1, 2, 3}, {4, 5}})},
      {"hollow_triangles_glued", facets(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 5}})},
  };
}

// Gorenstein* complexes with m <= 8.
inline std::vector<Named> gorenstein_star() {
  std::vector<Named> out;
  for (int m = 3; m <= 8; ++m) out.push_back({"polygon" + std::to_string(m), catalog::polygon(m)});
  for (int n = 1; n <= 4; ++n) out.push_back({"bd_simplex" + std::to_string(n), catalog::boundary_simplex(n)});
  for (int n = 2; n <= 3; ++n) out.push_back({"cross" + std::to_string(n), catalog::cross_polytope(n)});
  out.push_back({"prism3", catalog::prism_dual(3)});
  out.push_back({"prism4", catalog::prism_dual(4)});
  out.push_back({"bott_1_2", catalog::product_of_simplices_dual({1, 2})});
  out.push_back({"pentagon*bd1", join(catalog::polygon(5), catalog::boundary_simplex(1))});
  out.push_back({"bd2*bd2", join(catalog::boundary_simplex(2), catalog::boundary_simplex(2))});
  out.push_back({"bd1*bd2*bd1", join(join(catalog::boundary_simplex(1), catalog::boundary_simplex(2)),
                                      catalog::boundary_simplex(1))});
  return out;
}

// The oracle catalog: polygons, sphere boundaries, cross-polytopes, joins,
// cones, non-Gorenstein examples and 5 random complexes per m = 2..8.
inline std::vector<Named> oracle_catalog() {
  std::vector<Named> out = gorenstein_star();
  out.push_back({"cross4", catalog::cross_polytope(4)});
  out.push_back({"simplex2", catalog::simplex(2)});
  out.push_back({"simplex3", catalog::simplex(3)});
  out.push_back({"cone_polygon4", cone(catalog::polygon(4))});
  out.push_back({"cone_polygon5", cone(catalog::polygon(5))});
  out.push_back({"cone_bd2", cone(catalog::boundary_simplex(2))});
  out.push_back({"path3", catalog::path(3)});
  out.push_back({"path3*bd1", join(catalog::path(3), catalog::boundary_simplex(1))});
  for (auto& n : non_gorenstein()) out.push_back(std::move(n));
  for (int m = 2; m <= 8; ++m) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const std::uint64_t seed = 1000 * static_cast<std::uint64_t>(m) + s;
      out.push_back({"random" + std::to_string(m) + "_" + std::to_string(s),
                     catalog::random_complex(m, seed)});
    }
  }
  return out;
}

inline std::vector<int> random_permutation(int m, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(m));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Brute force over all 2^m subsets: minimal non-faces.
inline std::vector<VertexSet> brute_missing_faces(const SimplicialComplex& k) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << k.vertex_count();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const VertexSet s(bits);
    if (k.is_face(s)) continue;
    bool minimal = true;
    for (int v : s.vertices()) minimal = minimal && k.is_face(s - VertexSet::singleton(v));
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

// χ̃(K_J) = Σ_{σ ∈ K_J} (-1)^{|σ|-1}, ∅ included, by direct face counting.
inline long long reduced_euler_by_counting(const SimplicialComplex& k, VertexSet j) {
  long long chi = 0;
  const std::uint64_t full = j.bits();
  for (std::uint64_t s = full;; s = (s - 1) & full) {
    if (k.is_face(VertexSet(s))) chi += (std::popcount(s) % 2 == 1) ? 1 : -1;
    if (s == 0) break;
  }
  return chi;
}

}  // namespace zkring::testing
