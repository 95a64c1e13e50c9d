#include "zkring/quasitoric.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <set>

#include "zkring/betti.hpp"
#include "zkring/error.hpp"
#include "zkring/ring_analysis.hpp"

namespace zkring {

namespace {

void check_shape(const SimplicialComplex& k, const CharMatrix& lambda) {
  if (lambda.m != k.vertex_count() || lambda.n != k.dimension() + 1 ||
      static_cast<int>(lambda.rows.size()) != lambda.n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "characteristic matrix must be (dim K + 1) x m = " +
                    std::to_string(k.dimension() + 1) + " x " + std::to_string(k.vertex_count()));
  }
  for (const auto& row : lambda.rows) {
    if (static_cast<int>(row.size()) != lambda.m) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged characteristic matrix");
    }
  }
}

VertexSet support_of(const std::vector<int>& exponents) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > 0) bits |= std::uint64_t{1} << i;
  }
  return VertexSet(bits);
}

// Face-supported monomials of polynomial degree d, descending lex order.
std::vector<std::vector<int>> monomials_of_degree(const std::vector<VertexSet>& faces, int m,
                                                  int d) {
  std::vector<std::vector<int>> out;
  if (d == 0) {
    out.emplace_back(static_cast<std::size_t>(m), 0);
    return out;
  }
  for (VertexSet face : faces) {
    const int s = face.size();
    if (s == 0 || s > d) continue;
    const auto verts = face.vertices();
    // Compositions of d into s positive parts.
    std::vector<int> parts(static_cast<std::size_t>(s), 1);
    std::function<void(std::size_t, int)> place = [&](std::size_t pos, int left) {
      if (pos + 1 == parts.size()) {
        parts[pos] = left;
        std::vector<int> e(static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          e[static_cast<std::size_t>(verts[i] - 1)] = parts[i];
        }
        out.push_back(std::move(e));
        return;
      }
      const int rest = static_cast<int>(parts.size() - pos - 1);
      for (int v = 1; v <= left - rest; ++v) {
        parts[pos] = v;
        place(pos + 1, left - v);
      }
    };
    place(0, d);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<int> add_exponents(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

bool is_lsop(const SimplicialComplex& k, const CharMatrix& lambda, const FieldSpec& field) {
  check_shape(k, lambda);
  for (VertexSet facet : k.facets()) {
    const auto cols = facet.vertices();
    ExactMatrix sub(static_cast<std::size_t>(lambda.n), cols.size());
    for (int r = 0; r < lambda.n; ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        sub(static_cast<std::size_t>(r), c) = field.from_int(
            lambda.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cols[c] - 1)]);
      }
    }
    if (rank(sub, field) != cols.size()) return false;
  }
  return true;
}

GradedAlgebra quotient_algebra(const SimplicialComplex& k, const CharMatrix& lambda,
                               const FieldSpec& field) {
  if (!is_lsop(k, lambda, field)) {
    throw Error(ErrorCode::kNotLsop, "characteristic matrix fails the facet rank test over " +
                                         field.to_string());
  }
  const int m = k.vertex_count();
  GradedAlgebra a;
  a.field_ = field;
  a.faces_ = k.faces();

  std::vector<std::vector<int>> previous;  // all monomials of degree d - 1
  constexpr int kDegreeCap = 64;
  for (int d = 0; d < kDegreeCap; ++d) {
    GradedAlgebra::DegreeData data;
    data.monomials = monomials_of_degree(a.faces_, m, d);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < data.monomials.size(); ++i) index[data.monomials[i]] = i;

    std::vector<std::vector<Scalar>> generators;
    for (const auto& row : lambda.rows) {
      for (const auto& mono : previous) {
        std::vector<Scalar> g(data.monomials.size());
        bool nonzero = false;
        for (int i = 0; i < m; ++i) {
          const long long coeff = row[static_cast<std::size_t>(i)];
          if (coeff == 0) continue;
          auto product = mono;
          ++product[static_cast<std::size_t>(i)];
          auto it = index.find(product);
          if (it == index.end()) continue;  // support is not a face: zero in k[K]
          g[it->second] = field.add(g[it->second], field.from_int(coeff));
          nonzero = true;
        }
        if (nonzero) generators.push_back(std::move(g));
      }
    }
    if (!generators.empty()) {
      RowEchelon e = reduced_row_echelon(
          ExactMatrix::from_rows(generators, data.monomials.size()), field);
      data.ideal_rref = std::move(e.reduced);
      data.pivots = std::move(e.pivot_columns);
    }
    std::vector<bool> is_pivot(data.monomials.size(), false);
    for (std::size_t p : data.pivots) is_pivot[p] = true;
    for (std::size_t i = 0; i < data.monomials.size(); ++i) {
      if (!is_pivot[i]) data.standard.push_back(i);
    }
    if (data.standard.empty()) break;
    data.first_basis_index = a.monomials_.size();
    for (std::size_t i : data.standard) {
      a.monomials_.push_back(data.monomials[i]);
      a.degrees_.push_back(2 * d);
      if (d == 1) a.generators_.push_back(a.monomials_.size() - 1);
    }
    previous = data.monomials;
    a.by_degree_.push_back(std::move(data));
  }

  const std::size_t n = a.monomials_.size();
  a.table_.assign(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Element e = a.normal_form({{add_exponents(a.monomials_[i], a.monomials_[j]), Scalar(1)}});
      SparseVector sv;
      for (std::size_t t = 0; t < e.size(); ++t) {
        if (!field.is_zero(e[t])) sv.emplace_back(t, e[t]);
      }
      a.table_[i][j] = sv;
      a.table_[j][i] = std::move(sv);
    }
  }
  return a;
}

SparseVector GradedAlgebra::product(std::size_t a, std::size_t b) const {
  return table_.at(a).at(b);
}

std::vector<std::size_t> GradedAlgebra::dimensions_by_degree() const {
  std::vector<std::size_t> dims;
  for (const auto& d : by_degree_) dims.push_back(d.standard.size());
  return dims;
}

Element GradedAlgebra::normal_form(const std::map<std::vector<int>, Scalar>& polynomial) const {
  Element out(dimension());
  std::map<int, std::vector<std::pair<std::vector<int>, Scalar>>> by_degree;
  for (const auto& [mono, coeff] : polynomial) {
    int d = 0;
    for (int e : mono) d += e;
    by_degree[d].emplace_back(mono, coeff);
  }
  for (const auto& [d, terms] : by_degree) {
    if (d >= static_cast<int>(by_degree_.size())) continue;  // beyond the socle degree
    const DegreeData& data = by_degree_[static_cast<std::size_t>(d)];
    std::vector<Scalar> v(data.monomials.size());
    for (const auto& [mono, coeff] : terms) {
      if (!std::binary_search(faces_.begin(), faces_.end(), support_of(mono), BySizeThenBits{})) {
        continue;
      }
      auto it = std::lower_bound(data.monomials.begin(), data.monomials.end(), mono,
                                 std::greater<>());
      if (it == data.monomials.end() || *it != mono) {
        throw Error(ErrorCode::kDimensionMismatch, "monomial length differs from vertex count");
      }
      auto& slot = v[static_cast<std::size_t>(it - data.monomials.begin())];
      slot = field_.add(slot, coeff);
    }
    for (std::size_t r = 0; r < data.pivots.size(); ++r) {
      const Scalar c = v[data.pivots[r]];
      if (field_.is_zero(c)) continue;
      for (std::size_t col = 0; col < v.size(); ++col) {
        const Scalar& x = data.ideal_rref(r, col);
        if (!field_.is_zero(x)) v[col] = field_.sub(v[col], field_.mul(c, x));
      }
    }
    for (std::size_t s = 0; s < data.standard.size(); ++s) {
      out[data.first_basis_index + s] = v[data.standard[s]];
    }
  }
  return out;
}

KoszulOfAlgebraResult koszul_homology_of_algebra(const GradedAlgebra& a) {
  const FieldSpec& f = a.field();
  const auto& z = a.generators();
  const std::size_t r = z.size();
  if (r > 20) throw Error(ErrorCode::kVertexBudgetExceeded, "too many Koszul generators");

  // C_s splits by internal degree w = deg(a) + 2s; basis (a, S), |S| = s.
  using Key = std::pair<int, int>;
  std::map<Key, std::vector<std::pair<std::size_t, std::uint64_t>>> basis;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << r); ++s) {
    const int size = std::popcount(s);
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      basis[{size, a.degree(i) + 2 * size}].emplace_back(i, s);
    }
  }
  auto position = [&](const Key& key, std::size_t i, std::uint64_t s) {
    const auto& b = basis.at(key);
    auto it = std::lower_bound(b.begin(), b.end(), std::make_pair(i, s), [](const auto& x, const auto& y) {
      return x.second != y.second ? x.second < y.second : x.first < y.first;
    });
    return static_cast<std::size_t>(it - b.begin());
  };
  for (auto& [key, b] : basis) {
    std::sort(b.begin(), b.end(), [](const auto& x, const auto& y) {
      return x.second != y.second ? x.second < y.second : x.first < y.first;
    });
  }

  // rank of d : C_{s,w} -> C_{s-1,w}
  std::map<Key, std::size_t> ranks;
  for (const auto& [key, source] : basis) {
    const auto [s, w] = key;
    if (s == 0) continue;
    const Key target_key{s - 1, w};
    auto target = basis.find(target_key);
    if (target == basis.end()) continue;
    ExactMatrix d(target->second.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const auto [elem, set] = source[col];
      int j = 0;
      for (std::uint64_t bits = set; bits != 0; bits &= bits - 1, ++j) {
        const auto idx = static_cast<std::size_t>(std::countr_zero(bits));
        const std::uint64_t rest = set & ~(std::uint64_t{1} << idx);
        const Scalar sign = f.from_int(j % 2 == 0 ? 1 : -1);
        for (const auto& [out, coeff] : a.product(z[idx], elem)) {
          const std::size_t row = position(target_key, out, rest);
          d(row, col) = f.add(d(row, col), f.mul(sign, coeff));
        }
      }
    }
    ranks[key] = rank(d, f);
  }

  KoszulOfAlgebraResult result;
  for (const auto& [key, b] : basis) {
    const auto [s, w] = key;
    const std::size_t out_rank = ranks.count(key) ? ranks.at(key) : 0;
    const Key above{s + 1, w};
    const std::size_t in_rank = ranks.count(above) ? ranks.at(above) : 0;
    const std::size_t dim = b.size() - out_rank - in_rank;
    if (dim == 0) continue;
    result.dims[key] = dim;
    result.poincare[w - s] += dim;
  }
  return result;
}

RecoveryReport verify_zp_recovery(const SimplicialComplex& k, const CharMatrix& lambda,
                                  const FieldSpec& field) {
  RecoveryReport report;
  const KoszulOfAlgebraResult kos = koszul_homology_of_algebra(quotient_algebra(k, lambda, field));
  const BettiTable hochster = betti_table_hochster(k, field);

  std::map<std::pair<int, int>, std::size_t> expected;  // (i, 2|J|)
  for (const auto& [key, dim] : hochster.entries) expected[{key.i, 2 * key.j.size()}] += dim;
  const auto totals = hochster.by_cohomological_degree();

  std::set<int> degrees;
  for (const auto& [d, dim] : kos.poincare) degrees.insert(d);
  for (const auto& [d, dim] : totals) degrees.insert(d);
  for (int d : degrees) {
    const std::size_t left = kos.poincare.count(d) ? kos.poincare.at(d) : 0;
    const std::size_t right = totals.count(d) ? totals.at(d) : 0;
    report.by_degree[d] = {left, right};
    if (left != right && report.first_mismatch.empty()) {
      report.first_mismatch = "degree " + std::to_string(d) + ": Koszul " + std::to_string(left) +
                              " vs Hochster " + std::to_string(right);
    }
  }
  std::set<std::pair<int, int>> keys;
  for (const auto& [key, dim] : kos.dims) keys.insert(key);
  for (const auto& [key, dim] : expected) keys.insert(key);
  for (const auto& key : keys) {
    const std::size_t left = kos.dims.count(key) ? kos.dims.at(key) : 0;
    const std::size_t right = expected.count(key) ? expected.at(key) : 0;
    if (left != right && report.first_mismatch.empty()) {
      report.first_mismatch = "bidegree (s=" + std::to_string(key.first) +
                              ", w=" + std::to_string(key.second) + "): Koszul " +
                              std::to_string(left) + " vs Hochster " + std::to_string(right);
    }
  }
  report.passed = report.first_mismatch.empty();
  return report;
}

Certificate indecomposability_certificate(const SimplicialComplex& k, const CharMatrix& lambda,
                                          const FieldSpec& field) {
  if (!is_lsop(k, lambda, field)) {
    throw Error(ErrorCode::kNotLsop, "characteristic matrix fails the facet rank test");
  }
  const GorensteinReport g = is_gorenstein(k, field);
  if (!g.algebraic) throw Error(ErrorCode::kNotGorenstein, "K is not Gorenstein over " + field.to_string());
  Certificate cert;
  DecompositionReport d = join_decomposition(k);
  if (g.is_gorenstein_star && d.is_trivial()) {
    cert.certified = true;
    cert.note = "K is Gorenstein* and not a join: H*(M) has no nontrivial tensor decomposition";
    return cert;
  }
  cert.split = std::move(d);
  cert.note = kJoinSplitCaveat;
  return cert;
}

namespace {

// Basis (RREF rows) of the subalgebra generated by `gens`.
std::vector<Element> generated_subalgebra(const GradedAlgebra& a, const std::vector<Element>& gens) {
  const FieldSpec& f = a.field();
  std::vector<Element> basis{basis_element(a, a.unit())};
  std::vector<Element> frontier = basis;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& w : gens) next.push_back(multiply(a, x, w));
    }
    std::vector<Element> rows = basis;
    rows.insert(rows.end(), next.begin(), next.end());
    RowEchelon e = reduced_row_echelon(ExactMatrix::from_rows(rows, a.dimension()), f);
    if (e.pivot_columns.size() == basis.size()) break;
    basis.clear();
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) basis.push_back(e.reduced.row(r));
    frontier = std::move(next);
  }
  return basis;
}

}  // namespace

bool is_tensor_split(const GradedAlgebra& a, const std::vector<Element>& w1,
                     const std::vector<Element>& w2) {
  const auto b1 = generated_subalgebra(a, w1);
  const auto b2 = generated_subalgebra(a, w2);
  if (b1.size() < 2 || b2.size() < 2) return false;
  if (b1.size() * b2.size() != a.dimension()) return false;
  std::vector<Element> images;
  for (const auto& x : b1) {
    for (const auto& y : b2) images.push_back(multiply(a, x, y));
  }
  return rank(ExactMatrix::from_rows(images, a.dimension()), a.field()) == a.dimension();
}

AlgebraSplitSearch search_algebra_tensor_split(const GradedAlgebra& a, std::uint64_t seed,
                                               std::size_t trials) {
  AlgebraSplitSearch search;
  search.seed = seed;
  const auto& gens = a.generators();
  const std::size_t r = gens.size();
  if (r < 2) return search;
  const FieldSpec& f = a.field();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++search.trials;
    ExactMatrix change(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) change(i, j) = f.from_int(coeff(rng));
    }
    if (rank(change, f) != r) continue;
    const std::size_t cut = 1 + trial % (r - 1);
    std::vector<Element> w1, w2;
    for (std::size_t i = 0; i < r; ++i) {
      Element w = zero_element(a);
      for (std::size_t j = 0; j < r; ++j) w[gens[j]] = change(i, j);
      (i < cut ? w1 : w2).push_back(std::move(w));
    }
    if (is_tensor_split(a, w1, w2)) {
      search.split = std::make_pair(std::move(w1), std::move(w2));
      return search;
    }
  }
  return search;
}

namespace charmatrix {

CharMatrix standard_cpn(int n) {
  if (n < 1) throw Error(ErrorCode::kBadParams, "standard_cpn needs n >= 1");
  CharMatrix c{n, n + 1, {}};
  for (int j = 0; j < n; ++j) {
    std::vector<long long> row(static_cast<std::size_t>(n + 1), 0);
    row[static_cast<std::size_t>(j)] = 1;
    row[static_cast<std::size_t>(n)] = -1;
    c.rows.push_back(std::move(row));
  }
  return c;
}

CharMatrix square_surface() { return {2, 4, {{1, 0, 1, 0}, {0, 1, 0, 1}}}; }

CharMatrix hirzebruch(int a) { return {2, 4, {{1, 0, -1, a}, {0, 1, 0, -1}}}; }

CharMatrix cp3_sharp_cp3() {
  return {3, 5, {{1, -1, 0, 0, -1}, {0, 0, 1, 0, -1}, {0, 0, 0, 1, -1}}};
}

}  // namespace charmatrix

}  // namespace zkring
