#include "zkring/tor_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "zkring/error.hpp"

namespace zkring {

int strand_sign(VertexSet j, VertexSet tau) {
  int exponent = 0;
  for (int t : tau.vertices()) exponent += (j & VertexSet(VertexSet::singleton(t).bits() - 1)).size();
  return exponent % 2 == 0 ? 1 : -1;
}

int shuffle_sign(VertexSet a, VertexSet b) {
  int inversions = 0;
  for (int x : b.vertices()) inversions += (a - VertexSet::range(x)).size();
  return inversions % 2 == 0 ? 1 : -1;
}

struct TorAlgebra::Cache {
  std::mutex mutex;
  std::unordered_map<std::uint64_t, SparseVector> products;
};

namespace {

constexpr int kMaxAlgebraVertices = 24;

std::vector<VertexSet> faces_within(const std::vector<VertexSet>& all, VertexSet j) {
  std::vector<VertexSet> out;
  for (VertexSet f : all) {
    if (f.subset_of(j)) out.push_back(f);
  }
  return out;
}

std::vector<VertexSet> multidegrees_by_size(int m) {
  std::vector<VertexSet> out;
  const std::uint64_t limit = std::uint64_t{1} << m;
  out.reserve(limit);
  for (std::uint64_t bits = 0; bits < limit; ++bits) out.emplace_back(bits);
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

}  // namespace

TorAlgebra tor_algebra(const SimplicialComplex& k, const FieldSpec& field) {
  if (k.vertex_count() > kMaxAlgebraVertices) {
    throw Error(ErrorCode::kVertexBudgetExceeded,
                "Tor algebra enumerates 2^m multidegrees; m <= " +
                    std::to_string(kMaxAlgebraVertices));
  }
  auto data = std::make_shared<TorAlgebra::Data>();
  data->complex = k;
  data->field = field;
  const auto all_faces = k.faces();

  for (VertexSet j : multidegrees_by_size(k.vertex_count())) {
    const auto faces = faces_within(all_faces, j);
    CochainComplex cochains = reduced_cochain_complex(std::span<const VertexSet>(faces), field);
    const auto dims = cohomology_dimensions(cochains, field);
    if (std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) continue;

    TorAlgebra::Strand strand;
    strand.j = j;
    strand.cohomology = cohomology(cochains, field);
    cochains.differentials.clear();  // only the bases are needed from here on
    strand.cochains = std::move(cochains);
    strand.class_ids.resize(strand.cochains.bases.size());
    const std::size_t strand_id = data->strands.size();

    // Increasing i within a block means decreasing cochain degree.
    for (int q = strand.cochains.max_degree(); q >= strand.cochains.min_degree; --q) {
      const DegreeCohomology& h = strand.cohomology.at(q);
      const auto& basis = strand.cochains.basis(q);
      for (const auto& rep : h.representatives) {
        TorClass c;
        c.id = data->basis.size();
        c.homological_degree = j.size() - q - 1;
        c.multidegree = j;
        for (std::size_t idx = 0; idx < rep.size(); ++idx) {
          if (!field.is_zero(rep[idx])) c.representative.emplace_back(basis[idx], rep[idx]);
        }
        strand.class_ids[static_cast<std::size_t>(q - strand.cochains.min_degree)].push_back(c.id);
        data->basis.push_back(std::move(c));
        data->strand_of_class.push_back(strand_id);
      }
    }
    data->strand_index.emplace_back(j.bits(), strand_id);
    data->strands.push_back(std::move(strand));
  }
  std::sort(data->strand_index.begin(), data->strand_index.end());

  TorAlgebra t;
  t.data_ = std::move(data);
  t.cache_ = std::make_shared<TorAlgebra::Cache>();
  return t;
}

const TorAlgebra::Strand* TorAlgebra::find_strand(VertexSet j) const {
  const auto& index = data_->strand_index;
  auto it = std::lower_bound(index.begin(), index.end(), std::make_pair(j.bits(), std::size_t{0}));
  if (it == index.end() || it->first != j.bits()) return nullptr;
  return &data_->strands[it->second];
}

std::vector<std::size_t> TorAlgebra::classes_with_multidegree(VertexSet j) const {
  std::vector<std::size_t> out;
  const Strand* s = find_strand(j);
  if (s == nullptr) return out;
  for (const auto& ids : s->class_ids) out.insert(out.end(), ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> TorAlgebra::find_class(int i, VertexSet j, std::size_t offset) const {
  const Strand* s = find_strand(j);
  if (s == nullptr) return std::nullopt;
  const int q = j.size() - i - 1;
  if (q < s->cochains.min_degree || q > s->cochains.max_degree()) return std::nullopt;
  const auto& ids = s->class_ids[static_cast<std::size_t>(q - s->cochains.min_degree)];
  if (offset >= ids.size()) return std::nullopt;
  return ids[offset];
}

BettiTable TorAlgebra::betti_table() const {
  BettiTable table{data_->field, data_->complex.vertex_count(), {}};
  for (const TorClass& c : data_->basis) ++table.entries[BettiKey{c.homological_degree, c.multidegree}];
  return table;
}

std::optional<SparseVector> TorAlgebra::classify(
    VertexSet j, int cochain_degree,
    const std::vector<std::pair<VertexSet, Scalar>>& cochain) const {
  const FieldSpec& f = data_->field;
  const Strand* s = find_strand(j);
  if (s == nullptr) {
    // H̃^*(K_J) = 0, so every cocycle is exact; only the cocycle test remains.
    std::map<std::uint64_t, Scalar> delta;
    for (const auto& [face, coeff] : cochain) {
      if (f.is_zero(coeff)) continue;
      if (!face.subset_of(j) || face.size() != cochain_degree + 1 || !data_->complex.is_face(face)) {
        return std::nullopt;
      }
      for (int v : (j - face).vertices()) {
        const VertexSet added = VertexSet::singleton(v);
        const VertexSet target = face | added;
        if (!data_->complex.is_face(target)) continue;
        const int position = (face & VertexSet(added.bits() - 1)).size();
        auto& slot = delta[target.bits()];
        slot = position % 2 == 0 ? f.add(slot, coeff) : f.sub(slot, coeff);
      }
    }
    for (const auto& [bits, value] : delta) {
      if (!f.is_zero(value)) return std::nullopt;
    }
    return SparseVector{};
  }
  const auto& basis = s->cochains.basis(cochain_degree);
  std::vector<Scalar> dense(basis.size());
  for (const auto& [face, coeff] : cochain) {
    auto it = std::lower_bound(basis.begin(), basis.end(), face);
    if (it == basis.end() || *it != face) {
      if (f.is_zero(coeff)) continue;
      return std::nullopt;
    }
    auto& slot = dense[static_cast<std::size_t>(it - basis.begin())];
    slot = f.add(slot, coeff);
  }
  auto coords = s->cohomology.coordinates(cochain_degree, std::move(dense));
  if (!coords) return std::nullopt;
  SparseVector out;
  if (coords->empty()) return out;
  const auto& ids = s->class_ids[static_cast<std::size_t>(cochain_degree - s->cochains.min_degree)];
  for (std::size_t r = 0; r < coords->size(); ++r) {
    if (!f.is_zero((*coords)[r])) out.emplace_back(ids[r], (*coords)[r]);
  }
  return out;
}

SparseVector TorAlgebra::product(std::size_t a, std::size_t b) const {
  const auto n = dimension();
  if (a >= n || b >= n) throw Error(ErrorCode::kDimensionMismatch, "class index out of range");
  if (a == unit()) return {{b, Scalar(1)}};
  if (b == unit()) return {{a, Scalar(1)}};
  const TorClass& x = data_->basis[a];
  const TorClass& y = data_->basis[b];
  if (!x.multidegree.disjoint(y.multidegree)) return {};

  const std::uint64_t key = static_cast<std::uint64_t>(a) * n + b;
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->products.find(key);
    if (it != cache_->products.end()) return it->second;
  }

  const FieldSpec& f = data_->field;
  const VertexSet i_set = x.multidegree;
  const VertexSet j_set = y.multidegree;
  const VertexSet u = i_set | j_set;
  SparseVector result;
  if (const Strand* target = find_strand(u); target != nullptr) {
    const int q = (x.multidegree.size() - x.homological_degree - 1) +
                  (y.multidegree.size() - y.homological_degree - 1) + 1;
    const auto& basis = target->cochains.basis(q);
    std::vector<Scalar> dense(basis.size());
    for (const auto& [tau, ca] : x.representative) {
      const int sign_a = strand_sign(i_set, tau);
      for (const auto& [rho, cb] : y.representative) {
        const VertexSet face = tau | rho;
        auto it = std::lower_bound(basis.begin(), basis.end(), face);
        if (it == basis.end() || *it != face) continue;  // v_τ v_ρ = 0 in k[K]
        const int sign = sign_a * strand_sign(j_set, rho) *
                         shuffle_sign(i_set - tau, j_set - rho) * strand_sign(u, face);
        auto& slot = dense[static_cast<std::size_t>(it - basis.begin())];
        slot = f.add(slot, f.mul(f.from_int(sign), f.mul(ca, cb)));
      }
    }
    auto coords = target->cohomology.coordinates(q, std::move(dense));
    if (!coords) {
      throw Error(ErrorCode::kNotAComplex, "product of cocycles is not a cocycle");
    }
    const auto& ids = target->class_ids[static_cast<std::size_t>(q - target->cochains.min_degree)];
    for (std::size_t r = 0; r < coords->size(); ++r) {
      if (!f.is_zero((*coords)[r])) result.emplace_back(ids[r], (*coords)[r]);
    }
  }

  std::lock_guard lock(cache_->mutex);
  cache_->products.emplace(key, result);
  return result;
}

std::size_t TorAlgebra::cached_products() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->products.size();
}

std::vector<std::pair<VertexSet, TorClass>> tor1_basis(const SimplicialComplex& k,
                                                       const FieldSpec& field) {
  std::vector<std::pair<VertexSet, TorClass>> out;
  const auto all_faces = k.faces();
  for (VertexSet j : missing_faces(k)) {
    const auto faces = faces_within(all_faces, j);
    const CochainComplex c = reduced_cochain_complex(std::span<const VertexSet>(faces), field);
    const CohomologyResult h = cohomology(c, field);
    const int q = j.size() - 2;
    for (const auto& rep : h.at(q).representatives) {
      TorClass cls;
      cls.id = out.size();
      cls.homological_degree = 1;
      cls.multidegree = j;
      const auto& basis = c.basis(q);
      for (std::size_t idx = 0; idx < rep.size(); ++idx) {
        if (!field.is_zero(rep[idx])) cls.representative.emplace_back(basis[idx], rep[idx]);
      }
      out.emplace_back(j, std::move(cls));
    }
  }
  return out;
}

Projection project(const TorAlgebra& t, VertexSet j) {
  const auto& src = *t.data_;
  const std::uint64_t mask = j.bits();
  auto squeeze = [mask](VertexSet s) { return VertexSet(compress_bits(s.bits(), mask)); };

  Projection p;
  Relabeled sub = full_subcomplex(src.complex, j);
  p.labels = sub.labels;
  auto data = std::make_shared<TorAlgebra::Data>();
  data->complex = std::move(sub.complex);
  data->field = src.field;
  p.id_map.assign(src.basis.size(), std::nullopt);

  std::vector<std::optional<std::size_t>> new_strand(src.strands.size());
  for (const TorClass& c : src.basis) {
    if (!c.multidegree.subset_of(j)) continue;
    const std::size_t old_strand = src.strand_of_class[c.id];
    if (!new_strand[old_strand]) {
      const TorAlgebra::Strand& s = src.strands[old_strand];
      TorAlgebra::Strand copy;
      copy.j = squeeze(s.j);
      copy.cochains.min_degree = s.cochains.min_degree;
      for (const auto& level : s.cochains.bases) {
        auto& out = copy.cochains.bases.emplace_back();
        for (VertexSet f : level) out.push_back(squeeze(f));
      }
      copy.cohomology = s.cohomology;
      copy.class_ids.resize(s.class_ids.size());
      new_strand[old_strand] = data->strands.size();
      data->strand_index.emplace_back(copy.j.bits(), data->strands.size());
      data->strands.push_back(std::move(copy));
    }
    TorClass moved = c;
    moved.id = data->basis.size();
    moved.multidegree = squeeze(c.multidegree);
    for (auto& term : moved.representative) term.first = squeeze(term.first);
    const std::size_t sid = *new_strand[old_strand];
    const int q = c.multidegree.size() - c.homological_degree - 1;
    auto& strand = data->strands[sid];
    strand.class_ids[static_cast<std::size_t>(q - strand.cochains.min_degree)].push_back(moved.id);
    p.id_map[c.id] = moved.id;
    data->strand_of_class.push_back(sid);
    data->basis.push_back(std::move(moved));
  }
  std::sort(data->strand_index.begin(), data->strand_index.end());
  p.algebra.data_ = std::move(data);
  p.algebra.cache_ = std::make_shared<TorAlgebra::Cache>();
  return p;
}

Element Projection::apply(const Element& x) const {
  if (x.size() != id_map.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "element does not belong to the source algebra");
  }
  Element out(algebra.dimension());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (id_map[i]) out[*id_map[i]] = x[i];
  }
  return out;
}

}  // namespace zkring
