// Chain-level oracle for the Tor product: a small Koszul DGA k[K] ⊗ Λ[u]
// written from scratch here, independent of the library's strand code.

#include <gtest/gtest.h>

#include <map>

#include "fixtures.hpp"
#include "zkring/catalog.hpp"
#include "zkring/linalg.hpp"
#include "zkring/tor_algebra.hpp"

namespace zkring {
namespace {

// (monomial exponents, exterior bits) -> coefficient.
using Key = std::pair<std::vector<int>, std::uint64_t>;
using Chain = std::map<Key, Scalar>;

struct Dga {
  const SimplicialComplex& k;
  FieldSpec f;

  bool supported(const std::vector<int>& a) const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] > 0) bits |= std::uint64_t{1} << i;
    return k.is_face(VertexSet(bits));
  }

  void add_to(Chain& c, const Key& key, const Scalar& x) const {
    if (f.is_zero(x) || !supported(key.first)) return;
    Scalar& slot = c[key];
    slot = f.add(slot, x);
    if (f.is_zero(slot)) c.erase(key);
  }

  Chain d(const Chain& x) const {
    Chain out;
    for (const auto& [key, coeff] : x) {
      int j = 0;
      for (std::uint64_t b = key.second; b != 0; b &= b - 1, ++j) {
        const int v = std::countr_zero(b);
        std::vector<int> mono = key.first;
        ++mono[static_cast<std::size_t>(v)];
        add_to(out, {mono, key.second & ~(std::uint64_t{1} << v)}, j % 2 == 0 ? coeff : f.neg(coeff));
      }
    }
    return out;
  }

  Chain mul(const Chain& x, const Chain& y) const {
    Chain out;
    for (const auto& [kx, cx] : x) {
      for (const auto& [ky, cy] : y) {
        if (kx.second & ky.second) continue;
        // Sign of u_S ∧ u_T -> u_{S ∪ T}: count pairs s > t.
        int inversions = 0;
        for (std::uint64_t b = ky.second; b != 0; b &= b - 1) {
          const std::uint64_t t = b & -b;
          inversions += std::popcount(kx.second & ~(t | (t - 1)));
        }
        std::vector<int> mono = kx.first;
        for (std::size_t i = 0; i < mono.size(); ++i) mono[i] += ky.first[i];
        const Scalar c = f.mul(cx, cy);
        add_to(out, {mono, kx.second | ky.second}, inversions % 2 == 0 ? c : f.neg(c));
      }
    }
    return out;
  }

  // e_τ on K_J ↦ ε_J(τ) v_τ u_{J∖τ}.
  Chain lift(const TorClass& c) const {
    Chain out;
    const std::uint64_t j = c.multidegree.bits();
    for (const auto& [tau, coeff] : c.representative) {
      int exponent = 0;
      for (int t : tau.vertices()) exponent += std::popcount(j & ((std::uint64_t{1} << (t - 1)) - 1));
      std::vector<int> mono(static_cast<std::size_t>(k.vertex_count()), 0);
      for (int t : tau.vertices()) mono[static_cast<std::size_t>(t - 1)] = 1;
      add_to(out, {mono, j & ~tau.bits()}, exponent % 2 == 0 ? coeff : f.neg(coeff));
    }
    return out;
  }

  // Is x (homogeneous of multidegree `md`, homological degree h) a boundary?
  bool is_boundary(const Chain& x, const std::vector<int>& md, int h) const {
    if (x.empty()) return true;
    std::uint64_t support = 0;
    for (std::size_t i = 0; i < md.size(); ++i)
      if (md[i] > 0) support |= std::uint64_t{1} << i;
    // Basis of degree h + 1 in this multidegree.
    std::vector<Key> source;
    for (std::uint64_t s = support;; s = (s - 1) & support) {
      if (std::popcount(s) == h + 1) {
        std::vector<int> mono = md;
        for (std::size_t i = 0; i < mono.size(); ++i)
          if ((s >> i) & 1U) --mono[i];
        if (supported(mono)) source.push_back({mono, s});
      }
      if (s == 0) break;
    }
    std::map<Key, std::size_t> rows;
    std::vector<Chain> images;
    for (const Key& key : source) {
      images.push_back(d(Chain{{key, Scalar(1)}}));
      for (const auto& [tk, tc] : images.back()) rows.emplace(tk, 0);
    }
    for (const auto& [tk, tc] : x) rows.emplace(tk, 0);
    std::size_t r = 0;
    for (auto& [key, idx] : rows) idx = r++;
    ExactMatrix m(rows.size(), source.size());
    for (std::size_t c = 0; c < images.size(); ++c)
      for (const auto& [tk, tc] : images[c]) m(rows.at(tk), c) = tc;
    std::vector<Scalar> b(rows.size());
    for (const auto& [tk, tc] : x) b[rows.at(tk)] = tc;
    return solve(m, b, f).has_value();
  }
};

std::vector<int> multidegree_of(const Chain& x, int m) {
  std::vector<int> md(static_cast<std::size_t>(m), 0);
  const auto& [mono, ext] = x.begin()->first;
  for (std::size_t i = 0; i < md.size(); ++i) md[i] = mono[i] + static_cast<int>((ext >> i) & 1U);
  return md;
}

class LiftTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(LiftTest, RepresentativesLiftToCyclesAndProductsAgreeUpToBoundary) {
  const FieldSpec f(GetParam());
  const std::vector<testing::Named> cases = {
      {"polygon4", catalog::polygon(4)},
      {"polygon5", catalog::polygon(5)},
      {"bd2", catalog::boundary_simplex(2)},
      {"prism3", catalog::prism_dual(3)},
      {"cross3", catalog::cross_polytope(3)},
      {"path4", catalog::path(4)},
      {"bowtie", testing::facets(5, {{1, 2, 3}, {3, 4, 5}})},
      {"random6", catalog::random_complex(6, 6002)},
  };
  for (const auto& [name, k] : cases) {
    const Dga dga{k, f};
    const auto t = tor_algebra(k, f);
    std::vector<Chain> lifts;
    for (const TorClass& c : t.basis()) {
      lifts.push_back(dga.lift(c));
      EXPECT_FALSE(lifts.back().empty()) << name << " class " << c.id;
      EXPECT_TRUE(dga.d(lifts.back()).empty()) << name << " class " << c.id;
      // A nonzero class is not a boundary.
      EXPECT_FALSE(dga.is_boundary(lifts.back(), multidegree_of(lifts.back(), k.vertex_count()),
                                   c.homological_degree))
          << name << " class " << c.id;
    }
    for (std::size_t a = 1; a < t.dimension(); ++a) {
      for (std::size_t b = 1; b < t.dimension(); ++b) {
        const Chain chain_product = dga.mul(lifts[a], lifts[b]);
        Chain lifted = {};
        for (const auto& [id, coeff] : t.product(a, b))
          for (const auto& [key, c] : lifts[id]) dga.add_to(lifted, key, f.mul(coeff, c));
        Chain diff = chain_product;
        for (const auto& [key, c] : lifted) dga.add_to(diff, key, f.neg(c));
        if (diff.empty()) continue;
        const int h = t.basis_class(a).homological_degree + t.basis_class(b).homological_degree;
        EXPECT_TRUE(dga.is_boundary(diff, multidegree_of(diff, k.vertex_count()), h))
            << name << " a=" << a << " b=" << b << " over " << f.short_name();
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, LiftTest, ::testing::Values(0U, 2U, 3U, 5U));

}  // namespace
}  // namespace zkring
