#include "zkring/betti.hpp"

#include <algorithm>
#include <unordered_set>

#include "zkring/cochain.hpp"
#include "zkring/error.hpp"

namespace zkring {

Multidegree Multidegree::of(VertexSet j, int m) {
  Multidegree d;
  d.exponents.assign(static_cast<std::size_t>(m), 0);
  for (int v : j.vertices()) d.exponents[static_cast<std::size_t>(v - 1)] = 1;
  return d;
}

bool Multidegree::is_square_free() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0 || e == 1; });
}

VertexSet Multidegree::support() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) bits |= std::uint64_t{1} << i;
  }
  return VertexSet(bits);
}

int Multidegree::total() const {
  int t = 0;
  for (int e : exponents) t += e;
  return t;
}

std::size_t BettiTable::at(int i, VertexSet j) const {
  auto it = entries.find(BettiKey{i, j});
  return it == entries.end() ? 0 : it->second;
}

std::size_t BettiTable::total() const {
  std::size_t t = 0;
  for (const auto& [key, dim] : entries) t += dim;
  return t;
}

std::map<int, std::size_t> BettiTable::by_cohomological_degree() const {
  std::map<int, std::size_t> out;
  for (const auto& [key, dim] : entries) out[key.cohomological_degree()] += dim;
  return out;
}

std::map<std::pair<int, int>, std::size_t> BettiTable::by_bidegree() const {
  std::map<std::pair<int, int>, std::size_t> out;
  for (const auto& [key, dim] : entries) out[{key.i, key.j.size()}] += dim;
  return out;
}

std::map<int, std::size_t> BettiTable::by_homological_degree() const {
  std::map<int, std::size_t> out;
  for (const auto& [key, dim] : entries) out[key.i] += dim;
  return out;
}

namespace {

constexpr int kMaxEnumeratedVertices = 24;

void check_enumerable(const SimplicialComplex& k) {
  if (k.vertex_count() > kMaxEnumeratedVertices) {
    throw Error(ErrorCode::kVertexBudgetExceeded,
                "Tor computations enumerate 2^m multidegrees; m <= " +
                    std::to_string(kMaxEnumeratedVertices));
  }
}

}  // namespace

BettiTable betti_table_hochster(const SimplicialComplex& k, const FieldSpec& field) {
  check_enumerable(k);
  BettiTable table{field, k.vertex_count(), {}};
  const auto all_faces = k.faces();
  const std::uint64_t limit = std::uint64_t{1} << k.vertex_count();
  std::vector<VertexSet> faces;
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet j(bits);
    faces.clear();
    for (VertexSet f : all_faces) {
      if (f.subset_of(j)) faces.push_back(f);
    }
    CochainComplex c = reduced_cochain_complex(std::span<const VertexSet>(faces), field);
    auto dims = cohomology_dimensions(c, field);
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
      if (dims[idx] == 0) continue;
      const int q = c.min_degree + static_cast<int>(idx);
      table.entries[BettiKey{j.size() - q - 1, j}] = dims[idx];
    }
  }
  return table;
}

ExactMatrix KoszulStrand::differential(int i) const {
  const auto top = static_cast<int>(basis.size()) - 1;
  if (i < 1 || i > top) {
    const std::size_t rows = (i - 1 >= 0 && i - 1 <= top) ? basis[static_cast<std::size_t>(i - 1)].size() : 0;
    const std::size_t cols = (i >= 0 && i <= top) ? basis[static_cast<std::size_t>(i)].size() : 0;
    return ExactMatrix(rows, cols);
  }
  return differentials[static_cast<std::size_t>(i)];
}

std::size_t KoszulStrand::index_of(const KoszulBasisElement& e) const {
  const auto& level = basis.at(static_cast<std::size_t>(e.exterior.size()));
  auto it = std::lower_bound(level.begin(), level.end(), e.exterior,
                             [](const KoszulBasisElement& x, VertexSet s) { return x.exterior < s; });
  if (it == level.end() || it->exterior != e.exterior || it->monomial != e.monomial) {
    throw Error(ErrorCode::kDimensionMismatch, "element is not in this strand's basis");
  }
  return static_cast<std::size_t>(it - level.begin());
}

KoszulStrand koszul_strand(const SimplicialComplex& k, const Multidegree& j,
                           const FieldSpec& field) {
  check_enumerable(k);
  if (static_cast<int>(j.exponents.size()) != k.vertex_count()) {
    throw Error(ErrorCode::kDimensionMismatch, "multidegree length differs from vertex count");
  }
  const VertexSet support = j.support();
  std::uint64_t ones = 0;  // coordinates with exponent exactly 1
  for (std::size_t i = 0; i < j.exponents.size(); ++i) {
    if (j.exponents[i] == 1) ones |= std::uint64_t{1} << i;
  }

  KoszulStrand strand;
  strand.j = j;
  strand.basis.resize(static_cast<std::size_t>(support.size()) + 1);
  const std::uint64_t full = support.bits();
  std::vector<std::uint64_t> exteriors;
  for (std::uint64_t s = full;; s = (s - 1) & full) {
    exteriors.push_back(s);
    if (s == 0) break;
  }
  std::sort(exteriors.begin(), exteriors.end());
  for (std::uint64_t s : exteriors) {
    // Monomial support loses the exterior coordinates whose exponent is 1.
    const VertexSet mono_support(full & ~(s & ones));
    if (!k.is_face(mono_support)) continue;
    KoszulBasisElement e;
    e.exterior = VertexSet(s);
    e.monomial = j.exponents;
    for (int v : e.exterior.vertices()) --e.monomial[static_cast<std::size_t>(v - 1)];
    strand.basis[static_cast<std::size_t>(e.exterior.size())].push_back(std::move(e));
  }

  const Scalar minus_one = field.from_int(-1);
  strand.differentials.resize(strand.basis.size());
  for (std::size_t i = 1; i < strand.basis.size(); ++i) {
    const auto& source = strand.basis[i];
    const auto& target = strand.basis[i - 1];
    ExactMatrix d(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto exterior = source[col].exterior.vertices();
      for (std::size_t pos = 0; pos < exterior.size(); ++pos) {
        const VertexSet rest = source[col].exterior - VertexSet::singleton(exterior[pos]);
        auto it = std::lower_bound(
            target.begin(), target.end(), rest,
            [](const KoszulBasisElement& x, VertexSet s) { return x.exterior < s; });
        if (it == target.end() || it->exterior != rest) continue;  // v-multiple vanishes in k[K]
        const auto row = static_cast<std::size_t>(it - target.begin());
        d(row, col) = (pos % 2 == 0) ? Scalar(1) : minus_one;
      }
    }
    strand.differentials[i] = std::move(d);
  }
  return strand;
}

std::vector<std::size_t> koszul_strand_homology(const SimplicialComplex& k, const Multidegree& j,
                                                const FieldSpec& field) {
  const KoszulStrand strand = koszul_strand(k, j, field);
  const int top = static_cast<int>(strand.basis.size()) - 1;
  std::vector<std::size_t> ranks(strand.basis.size() + 1, 0);  // ranks[i] = rank d_i
  for (int i = 1; i <= top; ++i) {
    ranks[static_cast<std::size_t>(i)] = rank(strand.differential(i), field);
  }
  std::vector<std::size_t> dims;
  for (int i = 0; i <= top; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    dims.push_back(strand.basis[idx].size() - ranks[idx] - ranks[idx + 1]);
  }
  return dims;
}

BettiTable betti_table_koszul(const SimplicialComplex& k, const FieldSpec& field) {
  check_enumerable(k);
  BettiTable table{field, k.vertex_count(), {}};
  const std::uint64_t limit = std::uint64_t{1} << k.vertex_count();
  for (std::uint64_t bits = 0; bits < limit; ++bits) {
    const VertexSet j(bits);
    auto dims = koszul_strand_homology(k, Multidegree::of(j, k.vertex_count()), field);
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (dims[i] != 0) table.entries[BettiKey{static_cast<int>(i), j}] = dims[i];
    }
  }
  return table;
}

}  // namespace zkring
