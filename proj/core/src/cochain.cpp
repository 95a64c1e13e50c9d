#include "zkring/cochain.hpp"

#include <algorithm>

#include "zkring/error.hpp"

namespace zkring {

std::size_t CochainComplex::dimension(int q) const {
  if (q < min_degree || q > max_degree()) return 0;
  return bases[static_cast<std::size_t>(q - min_degree)].size();
}

const std::vector<VertexSet>& CochainComplex::basis(int q) const {
  static const std::vector<VertexSet> kEmpty;
  if (q < min_degree || q > max_degree()) return kEmpty;
  return bases[static_cast<std::size_t>(q - min_degree)];
}

ExactMatrix CochainComplex::differential(int q) const {
  if (q < min_degree || q >= max_degree()) return ExactMatrix(dimension(q + 1), dimension(q));
  return differentials[static_cast<std::size_t>(q - min_degree)];
}

CochainComplex reduced_cochain_complex(std::span<const VertexSet> faces, const FieldSpec& field) {
  if (faces.empty() || !faces.front().empty()) {
    throw Error(ErrorCode::kEmptyInput, "face list must start with the empty face");
  }
  CochainComplex c;
  c.min_degree = -1;
  for (VertexSet f : faces) {
    const auto slot = static_cast<std::size_t>(f.size());
    if (c.bases.size() <= slot) c.bases.resize(slot + 1);
    c.bases[slot].push_back(f);
  }
  const Scalar minus_one = field.from_int(-1);
  for (std::size_t s = 0; s + 1 < c.bases.size(); ++s) {
    const auto& source = c.bases[s];
    const auto& target = c.bases[s + 1];
    ExactMatrix d(target.size(), source.size());
    for (std::size_t col = 0; col < source.size(); ++col) {
      const VertexSet tau = source[col];
      for (std::size_t row = 0; row < target.size(); ++row) {
        const VertexSet rho = target[row];
        if (!tau.subset_of(rho)) continue;
        const VertexSet added = rho - tau;
        // Position of the inserted vertex inside ρ, counted from 0.
        const int position = (tau & VertexSet(added.bits() - 1)).size();
        d(row, col) = (position % 2 == 0) ? Scalar(1) : minus_one;
      }
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

CochainComplex reduced_cochain_complex(const SimplicialComplex& k, const FieldSpec& field) {
  const auto faces = k.faces();
  return reduced_cochain_complex(std::span<const VertexSet>(faces), field);
}

std::size_t CohomologyResult::dimension(int q) const {
  if (q < min_degree_ || q > max_degree()) return 0;
  return degrees_[static_cast<std::size_t>(q - min_degree_)].dimension;
}

const DegreeCohomology& CohomologyResult::at(int q) const {
  if (q < min_degree_ || q > max_degree()) {
    throw Error(ErrorCode::kDimensionMismatch, "degree " + std::to_string(q) + " out of range");
  }
  return degrees_[static_cast<std::size_t>(q - min_degree_)];
}

std::size_t CohomologyResult::total_dimension() const {
  std::size_t total = 0;
  for (const auto& d : degrees_) total += d.dimension;
  return total;
}

std::optional<std::vector<Scalar>> CohomologyResult::coordinates(
    int q, std::vector<Scalar> cocycle) const {
  if (q < min_degree_ || q > max_degree()) {
    for (const auto& x : cocycle) {
      if (!field_.is_zero(x)) return std::nullopt;
    }
    return std::vector<Scalar>{};
  }
  const DegreeCohomology& d = at(q);
  for (auto& x : cocycle) x = field_.normalize(x);
  auto eliminate = [&](const std::vector<Scalar>& row, std::size_t pivot) {
    if (field_.is_zero(cocycle[pivot])) return Scalar(0);
    const Scalar f = cocycle[pivot];
    for (std::size_t c = 0; c < cocycle.size(); ++c) {
      if (!field_.is_zero(row[c])) cocycle[c] = field_.sub(cocycle[c], field_.mul(f, row[c]));
    }
    return f;
  };
  for (std::size_t r = 0; r < d.image_rows.size(); ++r) eliminate(d.image_rows[r], d.image_pivots[r]);
  std::vector<Scalar> coords(d.dimension);
  for (std::size_t r = 0; r < d.representatives.size(); ++r) {
    coords[r] = eliminate(d.representatives[r], d.rep_pivots[r]);
  }
  for (const auto& x : cocycle) {
    if (!field_.is_zero(x)) return std::nullopt;
  }
  return coords;
}

namespace {

void check_complex(const CochainComplex& c, const FieldSpec& field) {
  for (int q = c.min_degree; q + 1 < c.max_degree(); ++q) {
    if (!multiply(c.differential(q + 1), c.differential(q), field).is_zero()) {
      throw Error(ErrorCode::kNotAComplex, "d∘d ≠ 0 starting in degree " + std::to_string(q));
    }
  }
}

}  // namespace

CohomologyResult cohomology(const CochainComplex& c, const FieldSpec& field) {
  check_complex(c, field);
  std::vector<DegreeCohomology> degrees;
  for (int q = c.min_degree; q <= c.max_degree(); ++q) {
    DegreeCohomology out;
    out.degree = q;
    const std::size_t n = c.dimension(q);

    RowEchelon image = reduced_row_echelon(c.differential(q - 1).transposed(), field);
    for (std::size_t r = 0; r < image.pivot_columns.size(); ++r) {
      out.image_rows.push_back(image.reduced.row(r));
    }
    out.image_pivots = image.pivot_columns;

    std::vector<std::vector<Scalar>> cocycles;
    ExactMatrix d_out = c.differential(q);
    if (d_out.rows() == 0) {
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Scalar> e(n);
        e[i] = 1;
        cocycles.push_back(std::move(e));
      }
    } else {
      cocycles = kernel_basis(d_out, field);
    }

    auto reduce = [&](std::vector<Scalar>& z, const std::vector<Scalar>& row, std::size_t pivot) {
      if (field.is_zero(z[pivot])) return;
      const Scalar f = z[pivot];
      for (std::size_t i = 0; i < n; ++i) {
        if (!field.is_zero(row[i])) z[i] = field.sub(z[i], field.mul(f, row[i]));
      }
    };
    for (auto& z : cocycles) {
      for (std::size_t r = 0; r < out.image_rows.size(); ++r) {
        reduce(z, out.image_rows[r], out.image_pivots[r]);
      }
      for (std::size_t r = 0; r < out.representatives.size(); ++r) {
        reduce(z, out.representatives[r], out.rep_pivots[r]);
      }
      auto lead = std::find_if(z.begin(), z.end(), [&](const Scalar& x) { return !field.is_zero(x); });
      if (lead == z.end()) continue;
      const auto pivot = static_cast<std::size_t>(lead - z.begin());
      const Scalar inv = field.inv(z[pivot]);
      for (auto& x : z) x = field.mul(x, inv);
      for (std::size_t r = 0; r < out.representatives.size(); ++r) {
        reduce(out.representatives[r], z, pivot);
      }
      out.representatives.push_back(std::move(z));
      out.rep_pivots.push_back(pivot);
    }
    // Canonical order: by pivot column.
    std::vector<std::size_t> order(out.representatives.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return out.rep_pivots[a] < out.rep_pivots[b]; });
    std::vector<std::vector<Scalar>> reps;
    std::vector<std::size_t> pivots;
    for (std::size_t i : order) {
      reps.push_back(std::move(out.representatives[i]));
      pivots.push_back(out.rep_pivots[i]);
    }
    out.representatives = std::move(reps);
    out.rep_pivots = std::move(pivots);
    out.dimension = out.representatives.size();
    degrees.push_back(std::move(out));
  }
  return CohomologyResult(field, c.min_degree, std::move(degrees));
}

std::vector<std::size_t> cohomology_dimensions(const CochainComplex& c, const FieldSpec& field) {
  const int lo = c.min_degree;
  const int hi = c.max_degree();
  std::vector<std::size_t> ranks;  // ranks[q - lo] = rank of C^q -> C^{q+1}
  for (int q = lo; q <= hi; ++q) ranks.push_back(q < hi ? rank(c.differential(q), field) : 0);
  std::vector<std::size_t> dims;
  for (int q = lo; q <= hi; ++q) {
    const std::size_t idx = static_cast<std::size_t>(q - lo);
    const std::size_t incoming = q > lo ? ranks[idx - 1] : 0;
    dims.push_back(c.dimension(q) - ranks[idx] - incoming);
  }
  return dims;
}

std::vector<std::size_t> reduced_cohomology_dimensions(const SimplicialComplex& k,
                                                       const FieldSpec& field) {
  return cohomology_dimensions(reduced_cochain_complex(k, field), field);
}

}  // namespace zkring
