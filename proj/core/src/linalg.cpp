#include "zkring/linalg.hpp"

#include <numeric>

#include "zkring/detail/dense.hpp"
#include "zkring/error.hpp"

namespace zkring {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(static_cast<long>(rows[r][c]));
  }
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                                   std::size_t cols) {
  ExactMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Scalar> ExactMatrix::row(std::size_t r) const {
  return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

std::vector<Scalar> ExactMatrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const Scalar& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

namespace {

// Bareiss over ℤ after clearing each row's denominators. Every intermediate
// entry is a minor of the scaled input, so the divisions are exact.
std::size_t bareiss_rank(const ExactMatrix& m, PivotOrder order) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<mpz_class> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      a[r * cols + c] = m(r, c).get_num() * (lcm / m(r, c).get_den());
    }
  }
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };

  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    if (order == PivotOrder::kTopDown) {
      for (std::size_t i = rank; i < rows; ++i) {
        if (at(i, c) != 0) {
          pivot = i;
          break;
        }
      }
    } else {
      for (std::size_t i = rows; i-- > rank;) {
        if (at(i, c) != 0) {
          pivot = i;
          break;
        }
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const mpz_class p = at(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const mpz_class f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = p * at(i, j) - f * at(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, c) = 0;
    }
    previous = p;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const ExactMatrix& m, const FieldSpec& field, PivotOrder order) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (field.is_rational()) return bareiss_rank(m, order);
  detail::PrimeOps ops{field.characteristic()};
  return detail::forward_rank(detail::to_dense(m, ops), ops, order);
}

RowEchelon reduced_row_echelon(const ExactMatrix& m, const FieldSpec& field) {
  return detail::with_ops(field, [&](const auto& ops) {
    auto d = detail::to_dense(m, ops);
    auto pivots = detail::gauss_jordan(d, ops);
    return RowEchelon{detail::from_dense(d, ops, pivots.size()), std::move(pivots)};
  });
}

std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m, const FieldSpec& field) {
  RowEchelon e = reduced_row_echelon(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
      v[e.pivot_columns[r]] = field.neg(e.reduced(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, const std::vector<Scalar>& b,
                                         const FieldSpec& field) {
  if (b.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side length differs from row count");
  }
  ExactMatrix augmented(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented(r, c) = m(r, c);
    augmented(r, m.cols()) = b[r];
  }
  RowEchelon e = reduced_row_echelon(augmented, field);
  std::vector<Scalar> x(m.cols());
  for (std::size_t r = 0; r < e.pivot_columns.size(); ++r) {
    if (e.pivot_columns[r] == m.cols()) return std::nullopt;
    x[e.pivot_columns[r]] = e.reduced(r, m.cols());
  }
  return x;
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b, const FieldSpec& field) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "inner dimensions differ");
  }
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (sgn(b(k, c)) == 0) continue;
        out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out(r, c) = field.normalize(out(r, c));
  }
  return out;
}

std::vector<Scalar> apply(const ExactMatrix& m, const std::vector<Scalar>& x,
                          const FieldSpec& field) {
  if (x.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length differs from column count");
  }
  std::vector<Scalar> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(x[c]) != 0 && sgn(m(r, c)) != 0) out[r] += m(r, c) * x[c];
    }
    out[r] = field.normalize(out[r]);
  }
  return out;
}

}  // namespace zkring
