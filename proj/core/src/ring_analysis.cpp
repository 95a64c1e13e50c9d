#include "zkring/ring_analysis.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "zkring/cochain.hpp"
#include "zkring/error.hpp"
#include "zkring/linalg.hpp"

namespace zkring {

namespace {

std::map<GradeLabel, std::vector<std::size_t>> blocks_of(const FiniteAlgebra& a) {
  std::map<GradeLabel, std::vector<std::size_t>> blocks;
  for (std::size_t i = 0; i < a.dimension(); ++i) blocks[a.grade(i)].push_back(i);
  return blocks;
}

}  // namespace

SocleReport socle(const FiniteAlgebra& a) {
  SocleReport report;
  report.top_degree = a.top_degree();
  const FieldSpec& f = a.field();
  std::vector<std::size_t> positive;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    if (a.degree(i) >= 1) positive.push_back(i);
  }

  for (const auto& [label, block] : blocks_of(a)) {
    const int d = a.degree(block.front());
    // Rows of the stacked multiplication map, keyed by (partner, output index).
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> rows;
    for (std::size_t y : positive) {
      if (d + a.degree(y) > report.top_degree) continue;
      for (std::size_t c = 0; c < block.size(); ++c) {
        for (const auto& [out, coeff] : a.product(block[c], y)) {
          auto& row = rows[{y, out}];
          if (row.empty()) row.resize(block.size());
          row[c] = f.add(row[c], coeff);
        }
      }
    }
    std::vector<std::vector<Scalar>> kernel;
    if (rows.empty()) {
      for (std::size_t c = 0; c < block.size(); ++c) {
        std::vector<Scalar> e(block.size());
        e[c] = 1;
        kernel.push_back(std::move(e));
      }
    } else {
      ExactMatrix m(rows.size(), block.size());
      std::size_t r = 0;
      for (const auto& [key, row] : rows) {
        for (std::size_t c = 0; c < block.size(); ++c) m(r, c) = row[c];
        ++r;
      }
      kernel = kernel_basis(m, f);
    }
    for (const auto& v : kernel) {
      Element x = zero_element(a);
      for (std::size_t c = 0; c < block.size(); ++c) x[block[c]] = v[c];
      report.basis.push_back(std::move(x));
      report.degrees.push_back(d);
    }
  }
  report.is_poincare_duality =
      report.basis.size() == 1 && report.degrees.front() == report.top_degree;
  return report;
}

bool is_homology_sphere(const SimplicialComplex& k, const FieldSpec& field) {
  const int n = k.dimension();
  for (VertexSet sigma : k.faces()) {
    const Relabeled l = link(k, sigma);
    const auto dims = reduced_cohomology_dimensions(l.complex, field);
    const int want = n - sigma.size();  // cohomological degree of the sphere class
    for (std::size_t idx = 0; idx < dims.size(); ++idx) {
      const int q = static_cast<int>(idx) - 1;
      if (dims[idx] != (q == want ? 1U : 0U)) return false;
    }
    if (want < -1 || want > static_cast<int>(dims.size()) - 2) return false;
  }
  return true;
}

GorensteinReport is_gorenstein(const SimplicialComplex& k, const FieldSpec& field) {
  GorensteinReport report;
  report.field = field;
  report.socle = socle(tor_algebra(k, field));
  report.algebraic = report.socle.is_poincare_duality;
  const CoreResult c = core(k);
  report.combinatorial = c.core.complex.is_empty_complex() || is_homology_sphere(c.core.complex, field);
  if (report.algebraic != report.combinatorial) {
    throw Error(ErrorCode::kVerdictMismatch,
                "Poincaré duality of Tor (" + std::string(report.algebraic ? "yes" : "no") +
                    ") disagrees with the link criterion on the core (" +
                    (report.combinatorial ? "yes" : "no") + ") over " + field.to_string());
  }
  report.is_gorenstein_star = report.algebraic && c.cone_vertices.empty();
  return report;
}

bool is_join_split(const SimplicialComplex& k, VertexSet u, VertexSet v) {
  if (!u.disjoint(v) || (u | v) != VertexSet::range(k.vertex_count())) return false;
  for (VertexSet mf : missing_faces(k)) {
    if (!mf.subset_of(u) && !mf.subset_of(v)) return false;
  }
  return true;
}

namespace {

// Multidegree-homogeneous components, in BySizeThenBits order of J.
std::vector<std::pair<VertexSet, Element>> split_by_multidegree(const TorAlgebra& t,
                                                                const Element& x) {
  std::map<VertexSet, Element, BySizeThenBits> parts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (t.field().is_zero(x[i])) continue;
    auto& part = parts[t.basis_class(i).multidegree];
    if (part.empty()) part = zero_element(t);
    part[i] = x[i];
  }
  return {parts.begin(), parts.end()};
}

}  // namespace

JoinSplit extract_join_from_tensor(const TorAlgebra& t, const Element& t1, const Element& t2) {
  const SocleReport s = socle(t);
  if (!s.is_poincare_duality) {
    throw Error(ErrorCode::kNotPoincareDuality, "Tor algebra is not a Poincaré duality algebra");
  }
  const Element prod = multiply(t, t1, t2);
  if (is_zero(t, prod)) throw Error(ErrorCode::kSocleNotSpanned, "t1 · t2 = 0");
  // prod must be a nonzero multiple of the socle generator.
  const Element& tau = s.basis.front();
  std::size_t lead = 0;
  while (t.field().is_zero(tau[lead])) ++lead;
  const Scalar ratio = t.field().mul(prod[lead], t.field().inv(tau[lead]));
  if (prod != scale(t, ratio, tau)) {
    throw Error(ErrorCode::kSocleNotSpanned, "t1 · t2 is not a multiple of the top class");
  }

  const SimplicialComplex& k = t.complex();
  const VertexSet all = VertexSet::range(k.vertex_count());
  const auto mf = missing_faces(k);
  JoinSplit split;
  const auto parts1 = split_by_multidegree(t, t1);
  const auto parts2 = split_by_multidegree(t, t2);
  for (const auto& [u, x] : parts1) {
    for (const auto& [v, y] : parts2) {
      if (!u.disjoint(v)) continue;
      if (is_zero(t, multiply(t, x, y))) continue;
      ++split.candidates_examined;
      // Cone vertices carry no class; they can go to either side.
      const VertexSet u_full = all - v;
      const bool ok = std::all_of(mf.begin(), mf.end(), [&](VertexSet face) {
        return face.subset_of(u_full) || face.subset_of(v);
      });
      if (split.candidates_examined == 1) split.first_candidate_valid = ok;
      if (ok) {
        split.u = u_full;
        split.v = v;
        return split;
      }
    }
  }
  throw Error(ErrorCode::kNoValidSplit,
              "none of the " + std::to_string(split.candidates_examined) +
                  " socle-hitting multidegree pairs separates the missing faces");
}

TensorSplitSearch search_tensor_split(const TorAlgebra& t, std::uint64_t seed,
                                      std::size_t trials_per_degree) {
  TensorSplitSearch search;
  search.seed = seed;
  if (!socle(t).is_poincare_duality) return search;
  const int n = t.top_degree();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  auto draw = [&](const std::vector<std::size_t>& basis) {
    Element x = zero_element(t);
    while (is_zero(t, x)) {
      for (std::size_t i : basis) x[i] = t.field().from_int(coeff(rng));
    }
    return x;
  };
  for (int d = 1; d < n; ++d) {
    const auto b1 = t.basis_in_degree(d);
    const auto b2 = t.basis_in_degree(n - d);
    if (b1.empty() || b2.empty()) continue;
    for (std::size_t trial = 0; trial < trials_per_degree; ++trial) {
      ++search.trials;
      const Element t1 = draw(b1);
      const Element t2 = draw(b2);
      if (is_zero(t, multiply(t, t1, t2))) continue;
      try {
        search.split = extract_join_from_tensor(t, t1, t2);
        return search;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNoValidSplit) throw;
      }
    }
  }
  return search;
}

namespace {

std::string bidegree_path(int i, VertexSet j) {
  return "(" + std::to_string(i) + "," + j.to_string() + ")";
}

std::string describe(const SparseVector& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t n = 0; n < v.size(); ++n) {
    out << (n ? ", " : "") << v[n].first << ":" << v[n].second.get_str();
  }
  out << "}";
  return out.str();
}

SparseVector to_sparse(const FieldSpec& f, const Element& x) {
  SparseVector out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!f.is_zero(x[i])) out.emplace_back(i, x[i]);
  }
  return out;
}

}  // namespace

KunnethReport verify_kunneth(const SimplicialComplex& k1, const SimplicialComplex& k2,
                             const FieldSpec& field) {
  KunnethReport report;
  const TorAlgebra t1 = tor_algebra(k1, field);
  const TorAlgebra t2 = tor_algebra(k2, field);
  const SimplicialComplex k = join(k1, k2);
  const TorAlgebra t = tor_algebra(k, field);
  report.dimension = t.dimension();
  const int shift = k1.vertex_count();
  auto fail = [&](std::string what) {
    report.passed = false;
    report.first_discrepancy = std::move(what);
    return report;
  };
  auto shifted = [shift](VertexSet s) { return VertexSet(s.bits() << shift); };

  // Betti convolution.
  std::map<BettiKey, std::size_t> expected;
  for (const auto& [a, da] : t1.betti_table().entries) {
    for (const auto& [b, db] : t2.betti_table().entries) {
      expected[BettiKey{a.i + b.i, a.j | shifted(b.j)}] += da * db;
    }
  }
  const BettiTable actual = t.betti_table();
  for (const auto& [key, dim] : expected) {
    if (actual.at(key.i, key.j) != dim) {
      return fail("betti" + bidegree_path(key.i, key.j) + ": join has " +
                  std::to_string(actual.at(key.i, key.j)) + ", convolution " +
                  std::to_string(dim));
    }
  }
  if (actual.entries.size() != expected.size()) {
    return fail("betti: join has entries outside the convolution");
  }

  // Factor classes sit inside the join at the same (shifted) multidegrees
  // with identical representatives.
  auto embed = [&](const TorAlgebra& factor, bool second) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> ids;
    for (const TorClass& c : factor.basis()) {
      const VertexSet j = second ? shifted(c.multidegree) : c.multidegree;
      std::size_t offset = 0;
      for (std::size_t p = 0; p < ids.size(); ++p) {
        const TorClass& prev = factor.basis_class(p);
        if (prev.multidegree == c.multidegree && prev.homological_degree == c.homological_degree) {
          ++offset;
        }
      }
      auto id = t.find_class(c.homological_degree, j, offset);
      if (!id) return std::nullopt;
      auto rep = t.basis_class(*id).representative;
      auto want = c.representative;
      if (second) {
        for (auto& term : want) term.first = shifted(term.first);
      }
      if (rep != want) return std::nullopt;
      ids.push_back(*id);
    }
    return ids;
  };
  const auto e1 = embed(t1, false);
  const auto e2 = embed(t2, true);
  if (!e1 || !e2) return fail("factor classes do not reappear in the join");

  // Ψ(a ⊗ b) = a·b; bijective iff every multidegree block has full rank.
  std::map<VertexSet, std::vector<std::vector<Scalar>>, BySizeThenBits> columns;
  std::vector<std::vector<SparseVector>> psi(t1.dimension(), std::vector<SparseVector>(t2.dimension()));
  for (std::size_t a = 0; a < t1.dimension(); ++a) {
    for (std::size_t b = 0; b < t2.dimension(); ++b) {
      psi[a][b] = t.product((*e1)[a], (*e2)[b]);
      ++report.products_checked;
      columns[t1.basis_class(a).multidegree | shifted(t2.basis_class(b).multidegree)].push_back(
          [&] {
            Element x = zero_element(t);
            for (const auto& [i, c] : psi[a][b]) x[i] = c;
            return x;
          }());
    }
  }
  for (const auto& [j, cols] : columns) {
    const auto block = t.classes_with_multidegree(j);
    ExactMatrix m(block.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      for (std::size_t r = 0; r < block.size(); ++r) m(r, c) = cols[c][block[r]];
    }
    if (cols.size() != block.size() || rank(m, field) != block.size()) {
      return fail("tensor map not bijective in multidegree " + j.to_string());
    }
  }

  auto psi_of = [&](const SparseVector& x, const SparseVector& y) {
    Element out = zero_element(t);
    for (const auto& [a, ca] : x) {
      for (const auto& [b, cb] : y) {
        for (const auto& [i, c] : psi[a][b]) out[i] = field.add(out[i], field.mul(c, field.mul(ca, cb)));
      }
    }
    return out;
  };
  auto unit_vec = [](std::size_t i) { return SparseVector{{i, Scalar(1)}}; };

  // Factor embeddings are ring maps, and their images graded-commute; with
  // associativity this is multiplicativity of Ψ on all of T1 ⊗ T2.
  for (std::size_t a = 0; a < t1.dimension(); ++a) {
    for (std::size_t c = 0; c < t1.dimension(); ++c) {
      ++report.products_checked;
      const Element lhs = multiply(t, basis_element(t, (*e1)[a]), basis_element(t, (*e1)[c]));
      if (lhs != psi_of(t1.product(a, c), unit_vec(0))) {
        return fail("first factor product " + std::to_string(a) + "·" + std::to_string(c));
      }
    }
  }
  for (std::size_t b = 0; b < t2.dimension(); ++b) {
    for (std::size_t d = 0; d < t2.dimension(); ++d) {
      ++report.products_checked;
      const Element lhs = multiply(t, basis_element(t, (*e2)[b]), basis_element(t, (*e2)[d]));
      if (lhs != psi_of(unit_vec(0), t2.product(b, d))) {
        return fail("second factor product " + std::to_string(b) + "·" + std::to_string(d));
      }
    }
  }
  for (std::size_t a = 0; a < t1.dimension(); ++a) {
    for (std::size_t b = 0; b < t2.dimension(); ++b) {
      ++report.products_checked;
      const int sign = (t1.degree(a) * t2.degree(b)) % 2 == 0 ? 1 : -1;
      const SparseVector swapped = t.product((*e2)[b], (*e1)[a]);
      SparseVector want = psi[a][b];
      for (auto& [i, c] : want) c = field.mul(field.from_int(sign), c);
      if (swapped != want) {
        return fail("graded commutativity " + std::to_string(a) + "⊗" + std::to_string(b) + ": " +
                    describe(swapped) + " vs " + describe(want));
      }
    }
  }
  // Direct check of the signed tensor product rule on small tables.
  constexpr std::size_t kFullCheckLimit = 64;
  if (t.dimension() <= kFullCheckLimit) {
    for (std::size_t a = 0; a < t1.dimension(); ++a) {
      for (std::size_t b = 0; b < t2.dimension(); ++b) {
        for (std::size_t c = 0; c < t1.dimension(); ++c) {
          for (std::size_t d = 0; d < t2.dimension(); ++d) {
            ++report.products_checked;
            Element x = zero_element(t);
            for (const auto& [i, v] : psi[a][b]) x[i] = v;
            Element y = zero_element(t);
            for (const auto& [i, v] : psi[c][d]) y[i] = v;
            const Element lhs = multiply(t, x, y);
            const int sign = (t2.degree(b) * t1.degree(c)) % 2 == 0 ? 1 : -1;
            const Element rhs =
                scale(t, field.from_int(sign), psi_of(t1.product(a, c), t2.product(b, d)));
            if (lhs != rhs) {
              return fail("(" + std::to_string(a) + "⊗" + std::to_string(b) + ")·(" +
                          std::to_string(c) + "⊗" + std::to_string(d) + "): " +
                          describe(to_sparse(field, lhs)) + " vs " +
                          describe(to_sparse(field, rhs)));
            }
          }
        }
      }
    }
  }

  const SocleReport s = socle(t);
  if (s.is_poincare_duality) {
    const SocleReport s1 = socle(t1);
    const SocleReport s2 = socle(t2);
    if (!s1.is_poincare_duality || !s2.is_poincare_duality) {
      return fail("join has Poincaré duality but a factor does not");
    }
    report.socle_degrees = std::make_tuple(s1.top_degree, s2.top_degree, s.top_degree);
    if (s1.top_degree + s2.top_degree != s.top_degree) {
      return fail("socle degrees " + std::to_string(s1.top_degree) + " + " +
                  std::to_string(s2.top_degree) + " != " + std::to_string(s.top_degree));
    }
  }
  report.passed = true;
  return report;
}

std::vector<FieldSpec> default_fields() {
  return {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rationals()};
}

FieldFingerprint fingerprint(const TorAlgebra& t) {
  FieldFingerprint fp;
  fp.field = t.field();
  const FieldSpec& f = t.field();
  for (const auto& [key, dim] : t.betti_table().entries) {
    fp.betti[{key.i, key.j.size()}] += dim;
    fp.block_dims[{key.i, key.j.size()}].push_back(dim);
  }
  for (auto& [key, dims] : fp.block_dims) std::sort(dims.begin(), dims.end());
  for (std::size_t i = 0; i < t.dimension(); ++i) ++fp.hilbert[t.degree(i)];
  fp.top_degree = t.top_degree();
  fp.socle_degrees = socle(t).degrees;
  std::sort(fp.socle_degrees.begin(), fp.socle_degrees.end());

  // dim A^a · A^b, summed over target multidegrees (products are
  // multihomogeneous, so the span splits into blocks).
  std::vector<int> degrees;
  for (const auto& [d, count] : fp.hilbert) {
    if (d > 0) degrees.push_back(d);
  }
  for (std::size_t x = 0; x < degrees.size(); ++x) {
    for (std::size_t y = x; y < degrees.size(); ++y) {
      const int a = degrees[x];
      const int b = degrees[y];
      if (a + b > fp.top_degree) continue;
      std::map<VertexSet, std::vector<SparseVector>, BySizeThenBits> by_target;
      for (std::size_t i : t.basis_in_degree(a)) {
        for (std::size_t j : t.basis_in_degree(b)) {
          const VertexSet ji = t.basis_class(i).multidegree;
          const VertexSet jj = t.basis_class(j).multidegree;
          if (!ji.disjoint(jj)) continue;
          SparseVector p = t.product(i, j);
          if (!p.empty()) by_target[ji | jj].push_back(std::move(p));
        }
      }
      std::size_t total = 0;
      for (const auto& [target, vectors] : by_target) {
        const auto block = t.classes_with_multidegree(target);
        ExactMatrix m(vectors.size(), block.size());
        for (std::size_t r = 0; r < vectors.size(); ++r) {
          for (const auto& [idx, c] : vectors[r]) {
            const auto pos = std::lower_bound(block.begin(), block.end(), idx) - block.begin();
            m(r, static_cast<std::size_t>(pos)) = c;
          }
        }
        total += rank(m, f);
      }
      fp.product_ranks[{a, b}] = total;
    }
  }
  return fp;
}

Fingerprint fingerprint(const SimplicialComplex& k, const std::vector<FieldSpec>& fields) {
  Fingerprint fp;
  for (const FieldSpec& f : fields) fp.fields.push_back(fingerprint(tor_algebra(k, f)));
  return fp;
}

namespace {

std::string key_text(const std::pair<int, int>& key, const char* first, const char* second) {
  return std::string(first) + "=" + std::to_string(key.first) + "," + second + "=" +
         std::to_string(key.second);
}
std::string key_text(int key, const char*, const char*) { return std::to_string(key); }

std::string value_text(std::size_t v) { return std::to_string(v); }
std::string value_text(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

// First key where two maps differ (absent keys count as default values).
template <typename Map>
std::optional<Comparison> compare_maps(const std::string& path, const Map& a, const Map& b,
                                       const char* first, const char* second) {
  using Value = typename Map::mapped_type;
  std::set<typename Map::key_type> keys;
  for (const auto& [key, v] : a) keys.insert(key);
  for (const auto& [key, v] : b) keys.insert(key);
  for (const auto& key : keys) {
    const auto ia = a.find(key);
    const auto ib = b.find(key);
    const Value va = ia == a.end() ? Value{} : ia->second;
    const Value vb = ib == b.end() ? Value{} : ib->second;
    if (va != vb) {
      return Comparison{true, path + "[" + key_text(key, first, second) + "]",
                        value_text(va) + " vs " + value_text(vb)};
    }
  }
  return std::nullopt;
}

std::string int_list(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

}  // namespace

Comparison compare(const Fingerprint& a, const Fingerprint& b) {
  if (a.fields.size() != b.fields.size()) {
    return {false, "fields", "fingerprints were taken over different field lists"};
  }
  for (std::size_t n = 0; n < a.fields.size(); ++n) {
    const FieldFingerprint& x = a.fields[n];
    const FieldFingerprint& y = b.fields[n];
    if (x.field != y.field) return {false, "fields", "field lists differ"};
    const std::string p = x.field.short_name() + ".";
    if (auto c = compare_maps(p + "betti", x.betti, y.betti, "i", "|J|")) return *c;
    if (auto c = compare_maps(p + "block_dims", x.block_dims, y.block_dims, "i", "|J|")) return *c;
    if (auto c = compare_maps(p + "hilbert", x.hilbert, y.hilbert, "", "")) return *c;
    if (x.top_degree != y.top_degree) {
      return {true, p + "top_degree", std::to_string(x.top_degree) + " vs " + std::to_string(y.top_degree)};
    }
    if (x.socle_degrees != y.socle_degrees) {
      return {true, p + "socle_degrees", int_list(x.socle_degrees) + " vs " + int_list(y.socle_degrees)};
    }
    if (auto c = compare_maps(p + "product_ranks", x.product_ranks, y.product_ranks, "a", "b")) {
      return *c;
    }
  }
  return {false, "", "indistinguishable by the implemented invariants (not an isomorphism claim)"};
}

Comparison compare(const SimplicialComplex& k1, const SimplicialComplex& k2,
                   const std::vector<FieldSpec>& fields) {
  return compare(fingerprint(k1, fields), fingerprint(k2, fields));
}

}  // namespace zkring
