#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zkring/algebra.hpp"
#include "zkring/betti.hpp"
#include "zkring/complex.hpp"
#include "zkring/tor_algebra.hpp"

namespace zkring {

// soc(A) = ann_A(A_{>=1}). A is a Poincaré duality algebra iff the socle is
// one-dimensional and sits in the top nonzero degree.
struct SocleReport {
  std::vector<Element> basis;
  std::vector<int> degrees;
  int top_degree = 0;
  bool is_poincare_duality = false;
};

SocleReport socle(const FiniteAlgebra& a);

// Combinatorial side: every link lk(σ), σ ∈ K (σ = ∅ included), has the
// reduced cohomology of a sphere of dimension dim K - |σ|.
bool is_homology_sphere(const SimplicialComplex& k, const FieldSpec& field);

struct GorensteinReport {
  FieldSpec field;
  bool algebraic = false;      // H^*(Z_K) is a Poincaré duality algebra
  bool combinatorial = false;  // core(K) is a homology sphere
  bool is_gorenstein_star = false;
  SocleReport socle;
};

// Throws kVerdictMismatch if the two verdicts disagree (a bug, never a
// legal outcome).
GorensteinReport is_gorenstein(const SimplicialComplex& k, const FieldSpec& field);

struct JoinSplit {
  VertexSet u;
  VertexSet v;
  // Candidate pairs (U, V) with (t1)_U (t2)_V ≠ 0 examined before success.
  std::size_t candidates_examined = 0;
  bool first_candidate_valid = false;
};

// Given t1, t2 whose product spans the socle, finds multidegrees U, V with
// (t1)_U · (t2)_V ≠ 0; U ⊔ V = [m] is forced, and the split is returned once
// every missing face lies inside U or inside V, i.e. K = K_U ∗ K_V.
// Throws kNotPoincareDuality, kSocleNotSpanned or kNoValidSplit.
JoinSplit extract_join_from_tensor(const TorAlgebra& t, const Element& t1,
                                   const Element& t2);

// True iff MF(K) = MF(K_U) ⊔ MF(K_V) for the partition [m] = U ⊔ V.
bool is_join_split(const SimplicialComplex& k, VertexSet u, VertexSet v);

struct TensorSplitSearch {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::optional<JoinSplit> split;
};

// Bounded randomized search: draws homogeneous pairs (t1, t2) of
// complementary degrees with nonzero top product and runs the extraction.
// Finding nothing is not a proof of indecomposability.
TensorSplitSearch search_tensor_split(const TorAlgebra& t, std::uint64_t seed,
                                      std::size_t trials_per_degree = 8);

struct KunnethReport {
  bool passed = false;
  std::string first_discrepancy;
  std::size_t products_checked = 0;
  std::size_t dimension = 0;
  // Set when the join is a Poincaré duality algebra: (n1, n2, n).
  std::optional<std::tuple<int, int, int>> socle_degrees;
};

// Compares tor_algebra(K1 ∗ K2) with the signed tensor product of the factor
// algebras: Betti convolution, bijectivity of x ⊗ y ↦ x·y, and
// multiplicativity on all basis pairs.
KunnethReport verify_kunneth(const SimplicialComplex& k1, const SimplicialComplex& k2,
                             const FieldSpec& field);

struct FieldFingerprint {
  FieldSpec field;
  std::map<std::pair<int, int>, std::size_t> betti;  // (i, |J|) -> Σ dim
  std::map<std::pair<int, int>, std::vector<std::size_t>> block_dims;
  std::map<int, std::size_t> hilbert;
  int top_degree = 0;
  std::vector<int> socle_degrees;
  std::map<std::pair<int, int>, std::size_t> product_ranks;  // dim A^a · A^b

  friend bool operator==(const FieldFingerprint&, const FieldFingerprint&) = default;
};

// Relabeling-invariant bundle of ring invariants. Equal algebras give equal
// fingerprints; the converse is NOT claimed.
struct Fingerprint {
  std::vector<FieldFingerprint> fields;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::vector<FieldSpec> default_fields();
Fingerprint fingerprint(const SimplicialComplex& k,
                        const std::vector<FieldSpec>& fields = default_fields());
FieldFingerprint fingerprint(const TorAlgebra& t);

struct Comparison {
  bool distinguished = false;
  // Path of the first differing component, e.g. "Q.betti[i=1,|J|=2]".
  std::string component;
  std::string detail;
};

Comparison compare(const Fingerprint& a, const Fingerprint& b);
Comparison compare(const SimplicialComplex& k1, const SimplicialComplex& k2,
                   const std::vector<FieldSpec>& fields = default_fields());

}  // namespace zkring
