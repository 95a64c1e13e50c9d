#include "zkring/catalog.hpp"

#include <random>

#include "zkring/error.hpp"

namespace zkring::catalog {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kBadParams, what);
}

}  // namespace

SimplicialComplex simplex(int n) {
  require(n >= 0 && n + 1 <= kMaxVertices, "simplex dimension out of range");
  return SimplicialComplex::from_facets(n + 1, {VertexSet::range(n + 1)});
}

SimplicialComplex boundary_simplex(int n) {
  require(n >= 1 && n + 1 <= kMaxVertices, "boundary_simplex needs 1 <= n <= 62");
  const VertexSet all = VertexSet::range(n + 1);
  std::vector<VertexSet> facets;
  for (int v = 1; v <= n + 1; ++v) facets.push_back(all - VertexSet::singleton(v));
  return SimplicialComplex::from_facets(n + 1, std::move(facets));
}

SimplicialComplex polygon(int m) {
  require(m >= 3 && m <= kMaxVertices, "polygon needs 3 <= m <= 63");
  std::vector<VertexSet> edges;
  for (int i = 1; i <= m; ++i) edges.push_back(VertexSet::of({i, i % m + 1}));
  return SimplicialComplex::from_facets(m, std::move(edges));
}

SimplicialComplex cross_polytope(int n) {
  require(n >= 1 && 2 * n <= kMaxVertices, "cross_polytope needs 1 <= n <= 31");
  SimplicialComplex k = boundary_simplex(1);
  for (int i = 1; i < n; ++i) k = join(k, boundary_simplex(1));
  return k;
}

SimplicialComplex path(int m) {
  require(m >= 1 && m <= kMaxVertices, "path needs 1 <= m <= 63");
  if (m == 1) return simplex(0);
  std::vector<VertexSet> edges;
  for (int i = 1; i < m; ++i) edges.push_back(VertexSet::of({i, i + 1}));
  return SimplicialComplex::from_facets(m, std::move(edges));
}

SimplicialComplex points(int m) {
  require(m >= 1 && m <= kMaxVertices, "points needs 1 <= m <= 63");
  std::vector<VertexSet> facets;
  for (int i = 1; i <= m; ++i) facets.push_back(VertexSet::singleton(i));
  return SimplicialComplex::from_facets(m, std::move(facets));
}

PolytopeIncidence simplex_polytope(int n) {
  require(n >= 1 && n + 1 <= kMaxVertices, "simplex polytope dimension out of range");
  PolytopeIncidence p{n, n + 1, {}};
  const VertexSet all = VertexSet::range(n + 1);
  for (int v = 1; v <= n + 1; ++v) p.vertices.push_back(all - VertexSet::singleton(v));
  return p;
}

PolytopeIncidence polygon_polytope(int m) {
  require(m >= 3 && m <= kMaxVertices, "polygon needs 3 <= m <= 63");
  PolytopeIncidence p{2, m, {}};
  for (int i = 1; i <= m; ++i) p.vertices.push_back(VertexSet::of({i, i % m + 1}));
  return p;
}

PolytopeIncidence product(const PolytopeIncidence& p, const PolytopeIncidence& q) {
  require(p.m + q.m <= kMaxVertices, "product has too many facets");
  PolytopeIncidence out{p.n + q.n, p.m + q.m, {}};
  for (VertexSet a : p.vertices) {
    for (VertexSet b : q.vertices) out.vertices.emplace_back(a.bits() | (b.bits() << p.m));
  }
  return out;
}

SimplicialComplex product_of_simplices_dual(const std::vector<int>& dims) {
  require(!dims.empty(), "need at least one simplex factor");
  PolytopeIncidence p = simplex_polytope(dims.front());
  for (std::size_t i = 1; i < dims.size(); ++i) p = product(p, simplex_polytope(dims[i]));
  return dual_of_polytope(p);
}

SimplicialComplex prism_dual(int m) {
  return dual_of_polytope(product(simplex_polytope(1), polygon_polytope(m)));
}

SimplicialComplex projective_bundle_base(int polygon_sides, const std::vector<int>& dims) {
  PolytopeIncidence p = polygon_polytope(polygon_sides);
  if (!dims.empty()) {
    PolytopeIncidence s = simplex_polytope(dims.front());
    for (std::size_t i = 1; i < dims.size(); ++i) s = product(s, simplex_polytope(dims[i]));
    p = product(s, p);
  }
  return dual_of_polytope(p);
}

SimplicialComplex random_complex(int m, std::uint64_t seed) {
  require(m >= 1 && m <= 20, "random complexes support 1 <= m <= 20");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> facet_count(1, m + 1);
  std::uniform_int_distribution<int> facet_size(1, std::min(m, 4));
  std::uniform_int_distribution<int> vertex(1, m);
  std::vector<VertexSet> facets;
  VertexSet covered;
  const int count = facet_count(rng);
  for (int f = 0; f < count; ++f) {
    const int size = facet_size(rng);
    VertexSet s;
    while (s.size() < size) s = s | VertexSet::singleton(vertex(rng));
    facets.push_back(s);
    covered = covered | s;
  }
  for (int v : (VertexSet::range(m) - covered).vertices()) {
    facets.push_back(VertexSet::singleton(v));
  }
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex build(std::string_view name, const std::vector<int>& params) {
  auto want = [&](std::size_t count) {
    require(params.size() == count, std::string(name) + " takes " + std::to_string(count) +
                                        " parameter(s)");
  };
  if (name == "simplex") return want(1), simplex(params[0]);
  if (name == "boundary_simplex") return want(1), boundary_simplex(params[0]);
  if (name == "polygon") return want(1), polygon(params[0]);
  if (name == "cross_polytope") return want(1), cross_polytope(params[0]);
  if (name == "path") return want(1), path(params[0]);
  if (name == "points") return want(1), points(params[0]);
  if (name == "prism") return want(1), prism_dual(params[0]);
  if (name == "cone_polygon") return want(1), cone(polygon(params[0]));
  if (name == "bott_base") {
    require(!params.empty(), "bott_base needs at least one height");
    return product_of_simplices_dual(params);
  }
  if (name == "projective_bundle_base") {
    require(!params.empty(), "projective_bundle_base needs the polygon size first");
    return projective_bundle_base(params[0], {params.begin() + 1, params.end()});
  }
  if (name == "random") {
    want(2);
    return random_complex(params[0], static_cast<std::uint64_t>(params[1]));
  }
  throw Error(ErrorCode::kUnknownCatalogEntry, "no catalog entry named '" +
                                                   std::string(name) + "'");
}

std::vector<Entry> inventory() {
  return {
      {"simplex", "n", "full simplex Delta^n; Gorenstein, a cone, Tor = k"},
      {"boundary_simplex", "n", "boundary of Delta^n; Z_K = S^{2n+1}"},
      {"polygon", "m", "m-cycle, dual of the m-gon G_m; Gorenstein*, indecomposable"},
      {"cross_polytope", "n", "boundary of the n-cross-polytope = join of n copies of S^0"},
      {"path", "m", "path 1-2-...-m; Gorenstein only for m <= 3 (a cone over S^0 at m = 3)"},
      {"points", "m", "m disjoint points; Gorenstein only for m = 2"},
      {"prism", "m", "dual of Delta^1 x G_m; prism 3 carries the CP^3#CP^3 matrix"},
      {"cone_polygon", "m", "cone over the m-cycle; Gorenstein but not Gorenstein*"},
      {"bott_base", "n1 ... nh", "dual of Delta^n1 x ... x Delta^nh (generalized Bott manifolds)"},
      {"projective_bundle_base", "m n1 ... nh",
       "dual of Delta^n1 x ... x Delta^nh x G_m (iterated projective bundles over a "
       "quasitoric surface)"},
      {"random", "m seed", "seeded random complex on m vertices"},
  };
}

}  // namespace zkring::catalog
