#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "zkring/catalog.hpp"
#include "zkring/error.hpp"
#include "zkring/quasitoric.hpp"
#include "zkring/ring_analysis.hpp"

namespace zkring {
namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);
const FieldSpec kF3 = FieldSpec::prime(3);

// An lsop over the pentagon: consecutive columns have determinant ±1.
CharMatrix pentagon_matrix() { return {2, 5, {{1, 0, -1, -1, 0}, {0, 1, 1, 0, -1}}}; }

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}, d = dim K + 1.
std::vector<std::size_t> h_vector(const SimplicialComplex& k) {
  const auto f = k.face_counts();
  const int d = k.dimension() + 1;
  std::vector<std::size_t> h;
  for (int j = 0; j <= d; ++j) {
    long long s = 0;
    for (int i = 0; i <= j; ++i) s += ((j - i) % 2 == 0 ? 1 : -1) * binomial(d - i, j - i) * static_cast<long long>(f[i]);
    h.push_back(static_cast<std::size_t>(s));
  }
  return h;
}

struct Pair {
  std::string name;
  SimplicialComplex k;
  CharMatrix lambda;
};

std::vector<Pair> shipped_pairs() {
  std::vector<Pair> out;
  for (int n = 1; n <= 4; ++n) out.push_back({"cp" + std::to_string(n), catalog::boundary_simplex(n), charmatrix::standard_cpn(n)});
  out.push_back({"square", catalog::polygon(4), charmatrix::square_surface()});
  for (int a = -2; a <= 2; ++a) out.push_back({"hirzebruch" + std::to_string(a), catalog::polygon(4), charmatrix::hirzebruch(a)});
  out.push_back({"cp3#cp3", catalog::prism_dual(3), charmatrix::cp3_sharp_cp3()});
  out.push_back({"pentagon", catalog::polygon(5), pentagon_matrix()});
  return out;
}

TEST(Lsop, Examples) {
  const auto edge = catalog::boundary_simplex(1);
  EXPECT_TRUE(is_lsop(edge, {1, 2, {{1, 1}}}, kQ));
  EXPECT_FALSE(is_lsop(edge, {1, 2, {{1, 0}}}, kQ));
  EXPECT_TRUE(is_lsop(catalog::polygon(4), charmatrix::square_surface(), kQ));
  EXPECT_TRUE(is_lsop(catalog::polygon(5), pentagon_matrix(), kF2));
  // det(1 1; 1 -1) = -2 vanishes in characteristic 2.
  const CharMatrix two{2, 4, {{1, 0, 1, 1}, {0, 1, 1, -1}}};
  EXPECT_TRUE(is_lsop(catalog::polygon(4), two, kQ));
  EXPECT_FALSE(is_lsop(catalog::polygon(4), two, kF2));
  EXPECT_THROW(is_lsop(catalog::polygon(4), charmatrix::standard_cpn(2), kQ), Error);
}

TEST(Lsop, FacetTestImpliesFaceTest) {
  std::mt19937_64 rng(8);
  for (const auto& [name, k] : testing::gorenstein_star()) {
    const int n = k.dimension() + 1;
    for (int trial = 0; trial < 10; ++trial) {
      CharMatrix lambda{n, k.vertex_count(), {}};
      for (int r = 0; r < n; ++r) {
        auto& row = lambda.rows.emplace_back();
        for (int c = 0; c < k.vertex_count(); ++c) row.push_back(static_cast<long long>(rng() % 5) - 2);
      }
      if (!is_lsop(k, lambda, kQ)) continue;
      for (VertexSet face : k.faces()) {
        ExactMatrix sub(static_cast<std::size_t>(n), static_cast<std::size_t>(face.size()));
        std::size_t col = 0;
        for (int v : face.vertices()) {
          for (int r = 0; r < n; ++r) sub(static_cast<std::size_t>(r), col) = Scalar(static_cast<long>(lambda.rows[r][v - 1]));
          ++col;
        }
        EXPECT_EQ(rank(sub, kQ), static_cast<std::size_t>(face.size())) << name;
      }
    }
  }
}

TEST(Quotient, Examples) {
  for (int n = 1; n <= 4; ++n) {
    const auto a = quotient_algebra(catalog::boundary_simplex(n), charmatrix::standard_cpn(n), kQ);
    EXPECT_EQ(a.dimensions_by_degree(), std::vector<std::size_t>(static_cast<std::size_t>(n + 1), 1));
    ASSERT_EQ(a.generators().size(), 1U);
    // z^n ≠ 0 and z^{n+1} = 0.
    Element p = basis_element(a, 0);
    for (int i = 0; i < n; ++i) p = multiply(a, p, basis_element(a, a.generators()[0]));
    EXPECT_FALSE(is_zero(a, p));
    EXPECT_TRUE(is_zero(a, multiply(a, p, basis_element(a, a.generators()[0]))));
  }
  EXPECT_EQ(quotient_algebra(catalog::polygon(4), charmatrix::square_surface(), kQ).dimensions_by_degree(),
            (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(quotient_algebra(catalog::prism_dual(3), charmatrix::cp3_sharp_cp3(), kQ).dimensions_by_degree(),
            (std::vector<std::size_t>{1, 2, 2, 1}));
  EXPECT_THROW(quotient_algebra(catalog::boundary_simplex(1), {1, 2, {{1, 0}}}, kQ), Error);
}

TEST(Quotient, DimensionsMatchHVectorAndDuality) {
  for (const FieldSpec& f : {kQ, kF3}) {
    for (const auto& [name, k, lambda] : shipped_pairs()) {
      if (!is_lsop(k, lambda, f)) continue;
      const auto a = quotient_algebra(k, lambda, f);
      EXPECT_EQ(a.dimensions_by_degree(), h_vector(k)) << name;
      EXPECT_EQ(a.generators().size(), static_cast<std::size_t>(k.vertex_count() - lambda.n)) << name;
      const auto s = socle(a);
      EXPECT_TRUE(s.is_poincare_duality) << name;
      EXPECT_EQ(s.top_degree, 2 * lambda.n) << name;
      // Commutative and associative on basis triples.
      for (std::size_t x = 0; x < a.dimension(); ++x)
        for (std::size_t y = 0; y < a.dimension(); ++y) {
          EXPECT_EQ(a.product(x, y), a.product(y, x)) << name;
          for (std::size_t z = 0; z < a.dimension(); ++z)
            EXPECT_EQ(multiply(a, multiply(a, basis_element(a, x), basis_element(a, y)), basis_element(a, z)),
                      multiply(a, basis_element(a, x), multiply(a, basis_element(a, y), basis_element(a, z))));
        }
    }
  }
}

TEST(Quotient, NormalFormKillsLinearForms) {
  const auto k = catalog::prism_dual(3);
  const auto lambda = charmatrix::cp3_sharp_cp3();
  const auto a = quotient_algebra(k, lambda, kQ);
  for (const auto& row : lambda.rows) {
    std::map<std::vector<int>, Scalar> t;
    for (int i = 0; i < k.vertex_count(); ++i) {
      if (row[i] == 0) continue;
      std::vector<int> mono(static_cast<std::size_t>(k.vertex_count()), 0);
      mono[static_cast<std::size_t>(i)] = 1;
      t[mono] = Scalar(static_cast<long>(row[i]));
    }
    EXPECT_TRUE(is_zero(a, a.normal_form(t)));
  }
}

TEST(KoszulOfAlgebra, Examples) {
  for (int n = 1; n <= 3; ++n) {
    const auto r = koszul_homology_of_algebra(quotient_algebra(catalog::boundary_simplex(n), charmatrix::standard_cpn(n), kQ));
    EXPECT_EQ(r.poincare, (std::map<int, std::size_t>{{0, 1}, {2 * n + 1, 1}})) << n;
    EXPECT_EQ(r.dims.at({0, 0}), 1U);
  }
  const auto sq = koszul_homology_of_algebra(quotient_algebra(catalog::polygon(4), charmatrix::square_surface(), kQ));
  EXPECT_EQ(sq.poincare, (std::map<int, std::size_t>{{0, 1}, {3, 2}, {6, 1}}));
  std::map<int, std::size_t> by_s;
  for (const auto& [key, d] : sq.dims) by_s[key.first] += d;
  EXPECT_EQ(by_s, (std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 1}}));

  const auto point = koszul_homology_of_algebra(quotient_algebra(catalog::simplex(0), {1, 1, {{1}}}, kQ));
  EXPECT_EQ(point.poincare, (std::map<int, std::size_t>{{0, 1}}));
}

TEST(Recovery, ShippedPairs) {
  for (const FieldSpec& f : {kQ, kF2, kF3}) {
    for (const auto& [name, k, lambda] : shipped_pairs()) {
      if (!is_lsop(k, lambda, f)) continue;
      const auto r = verify_zp_recovery(k, lambda, f);
      EXPECT_TRUE(r.passed) << name << " " << f.short_name() << ": " << r.first_mismatch;
      for (const auto& [deg, both] : r.by_degree) EXPECT_EQ(both.first, both.second) << name << " deg " << deg;
    }
  }
}

TEST(Certificate, Examples) {
  for (const FieldSpec& f : {kQ, kF2}) {
    const auto p = indecomposability_certificate(catalog::polygon(5), pentagon_matrix(), f);
    EXPECT_TRUE(p.certified);
    EXPECT_FALSE(p.split.has_value());

    const auto sq = indecomposability_certificate(catalog::polygon(4), charmatrix::square_surface(), f);
    EXPECT_FALSE(sq.certified);
    ASSERT_TRUE(sq.split.has_value());
    EXPECT_EQ(sq.split->parts, (std::vector<VertexSet>{VertexSet::of({1, 3}), VertexSet::of({2, 4})}));

    const auto cp = indecomposability_certificate(catalog::prism_dual(3), charmatrix::cp3_sharp_cp3(), f);
    EXPECT_FALSE(cp.certified);
    EXPECT_EQ(cp.note, kJoinSplitCaveat);
  }
  try {
    indecomposability_certificate(catalog::polygon(4), {2, 4, {{1, 0, 1, 0}, {1, 0, 1, 0}}}, kQ);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotLsop);
  }
}

TEST(TensorSplit, SearchIsSound) {
  const auto sq = quotient_algebra(catalog::polygon(4), charmatrix::square_surface(), kQ);
  const auto found = search_algebra_tensor_split(sq, 7);
  ASSERT_TRUE(found.split.has_value());
  EXPECT_TRUE(is_tensor_split(sq, found.split->first, found.split->second));
  EXPECT_EQ(found.seed, 7U);

  // Certified algebras: the search must come back empty.
  const auto p = quotient_algebra(catalog::polygon(5), pentagon_matrix(), kQ);
  EXPECT_FALSE(search_algebra_tensor_split(p, 7).split.has_value());
  const auto cp = quotient_algebra(catalog::prism_dual(3), charmatrix::cp3_sharp_cp3(), kQ);
  EXPECT_FALSE(search_algebra_tensor_split(cp, 7).split.has_value());
  const auto cp2 = quotient_algebra(catalog::boundary_simplex(2), charmatrix::standard_cpn(2), kQ);
  EXPECT_FALSE(search_algebra_tensor_split(cp2, 7).split.has_value());
}

}  // namespace
}  // namespace zkring
