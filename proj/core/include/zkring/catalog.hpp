#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zkring/complex.hpp"

namespace zkring::catalog {

// Δ^n on n + 1 vertices.
SimplicialComplex simplex(int n);
// ∂Δ^n on n + 1 vertices, n >= 1.
SimplicialComplex boundary_simplex(int n);
// The m-cycle, m >= 3 (dual of the m-gon).
SimplicialComplex polygon(int m);
// Boundary of the n-dimensional cross-polytope = ∂Δ^1 ∗ ... ∗ ∂Δ^1.
SimplicialComplex cross_polytope(int n);
// Path 1-2-...-m (Gorenstein only for m <= 3).
SimplicialComplex path(int m);
// m disjoint points.
SimplicialComplex points(int m);

PolytopeIncidence simplex_polytope(int n);
PolytopeIncidence polygon_polytope(int m);
PolytopeIncidence product(const PolytopeIncidence& p, const PolytopeIncidence& q);

// Dual of Δ^{n_1} × ... × Δ^{n_h}.
SimplicialComplex product_of_simplices_dual(const std::vector<int>& dims);
// Dual of the prism Δ^1 × G_m.
SimplicialComplex prism_dual(int m);
// Dual of Δ^{n_1} × ... × Δ^{n_h} × G_m, the orbit polytope of an iterated
// projective bundle over a quasitoric surface.
SimplicialComplex projective_bundle_base(int polygon_sides,
                                         const std::vector<int>& dims);

// Seeded random complex on m vertices: a handful of random subsets as
// facets, padded with singletons so every vertex is present.
SimplicialComplex random_complex(int m, std::uint64_t seed);

struct Entry {
  std::string name;
  std::string params;
  std::string description;
};

// Named builders for the CLI. Throws kUnknownCatalogEntry / kBadParams.
SimplicialComplex build(std::string_view name, const std::vector<int>& params);
std::vector<Entry> inventory();

}  // namespace zkring::catalog
