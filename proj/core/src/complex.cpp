#include "zkring/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "zkring/error.hpp"

namespace zkring {

namespace {

// Drops faces contained in another face and sorts by bitmask.
std::vector<VertexSet> maximal_only(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [s](VertexSet f) { return s.subset_of(f); });
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void check_budget(int m) {
  if (m < 0 || m > kMaxVertices) {
    throw Error(ErrorCode::kVertexBudgetExceeded,
                "vertex count " + std::to_string(m) + " outside 0.." +
                    std::to_string(kMaxVertices));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<VertexSet> facets) {
  if (m < 1) throw Error(ErrorCode::kEmptyInput, "vertex count must be at least 1");
  check_budget(m);
  if (facets.empty()) throw Error(ErrorCode::kEmptyInput, "no facets given");
  const VertexSet all = VertexSet::range(m);
  VertexSet covered;
  for (VertexSet f : facets) {
    if (!f.subset_of(all)) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "facet " + f.to_string() + " uses a vertex above " + std::to_string(m));
    }
    covered = covered | f;
  }
  if (covered != all) {
    VertexSet missing = all - covered;
    throw Error(ErrorCode::kMissingVertex,
                "vertex " + std::to_string(missing.min_vertex()) + " lies in no facet");
  }
  return SimplicialComplex(m, maximal_only(std::move(facets)));
}

SimplicialComplex SimplicialComplex::from_facets(int m,
                                                 const std::vector<std::vector<int>>& facets) {
  std::vector<VertexSet> sets;
  sets.reserve(facets.size());
  for (const auto& f : facets) {
    for (int v : f) {
      if (v < 1 || v > m || v > kMaxVertices) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
      }
    }
    sets.push_back(VertexSet::of(f));
  }
  return from_facets(m, std::move(sets));
}

SimplicialComplex SimplicialComplex::from_missing_faces(int m,
                                                        const std::vector<VertexSet>& missing) {
  if (m == 0) return empty();
  if (m > 24) {
    throw Error(ErrorCode::kVertexBudgetExceeded,
                "reconstruction from missing faces enumerates 2^m subsets; m <= 24");
  }
  std::vector<VertexSet> faces;
  const std::uint64_t limit = std::uint64_t{1} << m;
  for (std::uint64_t s = 0; s < limit; ++s) {
    VertexSet set(s);
    bool ok = std::none_of(missing.begin(), missing.end(),
                           [set](VertexSet n) { return n.subset_of(set); });
    if (ok) faces.push_back(set);
  }
  return from_facets(m, maximal_only(std::move(faces)));
}

SimplicialComplex SimplicialComplex::empty() {
  return SimplicialComplex(0, {VertexSet()});
}

int SimplicialComplex::dimension() const {
  int d = 0;
  for (VertexSet f : facets_) d = std::max(d, f.size());
  return d - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [this](VertexSet f) {
    return f.size() == facets_.front().size();
  });
}

bool SimplicialComplex::is_face(VertexSet sigma) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [sigma](VertexSet f) { return sigma.subset_of(f); });
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<std::uint64_t> seen;
  std::vector<VertexSet> out;
  for (VertexSet f : facets_) {
    // Enumerate all submasks of the facet.
    std::uint64_t full = f.bits();
    std::uint64_t s = full;
    while (true) {
      if (seen.insert(s).second) out.emplace_back(s);
      if (s == 0) break;
      s = (s - 1) & full;
    }
  }
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> counts(static_cast<std::size_t>(dimension() + 2), 0);
  for (VertexSet f : faces()) ++counts[static_cast<std::size_t>(f.size())];
  return counts;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
  long long chi = 0;
  auto counts = face_counts();
  for (std::size_t s = 0; s < counts.size(); ++s) {
    // A face with s vertices has dimension s - 1.
    long long sign = (s % 2 == 1) ? 1 : -1;
    chi += sign * static_cast<long long>(counts[s]);
  }
  return chi;
}

std::vector<VertexSet> missing_faces(const SimplicialComplex& k) {
  if (k.is_empty_complex()) return {};
  const auto faces = k.faces();
  std::unordered_set<std::uint64_t> face_set;
  for (VertexSet f : faces) face_set.insert(f.bits());
  auto is_face = [&](std::uint64_t s) { return face_set.count(s) != 0; };

  std::unordered_set<std::uint64_t> found;
  std::vector<VertexSet> out;
  const int m = k.vertex_count();
  for (VertexSet f : faces) {
    for (int v = 1; v <= m; ++v) {
      if (f.contains(v)) continue;
      const std::uint64_t n = f.bits() | (std::uint64_t{1} << (v - 1));
      if (is_face(n) || found.count(n)) continue;
      bool minimal = true;
      for (std::uint64_t b = n; b != 0; b &= b - 1) {
        if (!is_face(n & ~(b & -b))) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        found.insert(n);
        out.emplace_back(n);
      }
    }
  }
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

Relabeled full_subcomplex(const SimplicialComplex& k, VertexSet subset) {
  if (subset.empty()) throw Error(ErrorCode::kEmptySelection, "empty vertex selection");
  if (!subset.subset_of(VertexSet::range(k.vertex_count()))) {
    throw Error(ErrorCode::kVertexOutOfRange, "selection " + subset.to_string() +
                                                  " exceeds the vertex set");
  }
  std::vector<VertexSet> facets;
  facets.reserve(k.facets().size());
  for (VertexSet f : k.facets()) {
    facets.emplace_back(compress_bits((f & subset).bits(), subset.bits()));
  }
  return {SimplicialComplex::from_facets(subset.size(), std::move(facets)), subset.vertices()};
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
  const int m1 = k1.vertex_count();
  const int m = m1 + k2.vertex_count();
  if (m > kMaxVertices) {
    throw Error(ErrorCode::kVertexBudgetExceeded,
                "join needs " + std::to_string(m) + " vertices");
  }
  if (m == 0) return SimplicialComplex::empty();
  std::vector<VertexSet> facets;
  facets.reserve(k1.facets().size() * k2.facets().size());
  for (VertexSet a : k1.facets()) {
    for (VertexSet b : k2.facets()) facets.emplace_back(a.bits() | (b.bits() << m1));
  }
  return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& k) {
  return join(k, SimplicialComplex::from_facets(1, {VertexSet::singleton(1)}));
}

Relabeled link(const SimplicialComplex& k, VertexSet sigma) {
  if (!k.is_face(sigma)) {
    throw Error(ErrorCode::kNotAFace, sigma.to_string() + " is not a face");
  }
  if (sigma.empty()) {
    std::vector<int> labels(static_cast<std::size_t>(k.vertex_count()));
    std::iota(labels.begin(), labels.end(), 1);
    return {k, labels};
  }
  std::vector<VertexSet> rest;
  VertexSet support;
  for (VertexSet f : k.facets()) {
    if (sigma.subset_of(f)) {
      rest.push_back(f - sigma);
      support = support | (f - sigma);
    }
  }
  if (support.empty()) return {SimplicialComplex::empty(), {}};
  std::vector<VertexSet> facets;
  facets.reserve(rest.size());
  for (VertexSet r : rest) facets.emplace_back(compress_bits(r.bits(), support.bits()));
  return {SimplicialComplex::from_facets(support.size(), std::move(facets)), support.vertices()};
}

CoreResult core(const SimplicialComplex& k) {
  if (k.is_empty_complex()) return {{k, {}}, VertexSet()};
  VertexSet common = VertexSet::range(k.vertex_count());
  for (VertexSet f : k.facets()) common = common & f;
  VertexSet rest = VertexSet::range(k.vertex_count()) - common;
  if (rest.empty()) return {{SimplicialComplex::empty(), {}}, common};
  return {full_subcomplex(k, rest), common};
}

SimplicialComplex dual_of_polytope(const PolytopeIncidence& p) {
  if (p.vertices.empty()) throw Error(ErrorCode::kEmptyInput, "polytope without vertices");
  for (VertexSet v : p.vertices) {
    if (v.size() != p.n) {
      throw Error(ErrorCode::kNotSimple, "vertex " + v.to_string() + " lies on " +
                                             std::to_string(v.size()) + " facets, expected " +
                                             std::to_string(p.n));
    }
  }
  return SimplicialComplex::from_facets(p.m, p.vertices);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

DecompositionReport join_decomposition(const SimplicialComplex& k) {
  DecompositionReport report;
  CoreResult c = core(k);
  report.cone_vertices = c.cone_vertices;
  const int m = k.vertex_count();
  if (m == 0) return report;

  UnionFind uf(m);
  for (VertexSet mf : missing_faces(k)) {
    const int first = mf.min_vertex() - 1;
    for (int v : mf.vertices()) uf.unite(first, v - 1);
  }
  std::vector<std::uint64_t> by_root(static_cast<std::size_t>(m), 0);
  for (int v = 1; v <= m; ++v) {
    if (report.cone_vertices.contains(v)) continue;
    by_root[static_cast<std::size_t>(uf.find(v - 1))] |= std::uint64_t{1} << (v - 1);
  }
  for (std::uint64_t bits : by_root) {
    if (bits != 0) report.parts.emplace_back(bits);
  }
  std::sort(report.parts.begin(), report.parts.end(),
            [](VertexSet a, VertexSet b) { return a.min_vertex() < b.min_vertex(); });
  for (VertexSet part : report.parts) report.factors.push_back(full_subcomplex(k, part));
  return report;
}

SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != k.vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation length differs from vertex count");
  }
  if (k.is_empty_complex()) return k;
  std::vector<VertexSet> facets;
  for (VertexSet f : k.facets()) {
    std::uint64_t bits = 0;
    for (int v : f.vertices()) bits |= std::uint64_t{1} << (perm[v - 1] - 1);
    facets.emplace_back(bits);
  }
  return SimplicialComplex::from_facets(k.vertex_count(), std::move(facets));
}

std::string to_string(const SimplicialComplex& k) {
  std::string out = "K(m=" + std::to_string(k.vertex_count()) + "; ";
  bool first = true;
  for (VertexSet f : k.facets()) {
    if (!first) out += " ";
    out += f.to_string();
    first = false;
  }
  return out + ")";
}

}  // namespace zkring
