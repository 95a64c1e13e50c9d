#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zkring/field.hpp"

namespace zkring {

// Dense row-major matrix of exact field elements. Entries are interpreted
// in whatever FieldSpec the caller passes to the algorithms below.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix from_rows(const std::vector<std::vector<long long>>& rows);
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                               std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;
  ExactMatrix transposed() const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

// Which row to take as pivot among the candidates in the current column.
// Both orders give the same rank; having two is a cheap self-check.
enum class PivotOrder { kTopDown, kBottomUp };

// Fraction-free (Bareiss) elimination over ℚ, plain elimination mod p.
std::size_t rank(const ExactMatrix& m, const FieldSpec& field,
                 PivotOrder order = PivotOrder::kTopDown);

// Reduced row echelon form with zero rows dropped.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
RowEchelon reduced_row_echelon(const ExactMatrix& m, const FieldSpec& field);

// Basis of {x : m x = 0}, one vector per free column of the RREF, each with
// a 1 in its free column (deterministic).
std::vector<std::vector<Scalar>> kernel_basis(const ExactMatrix& m,
                                              const FieldSpec& field);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& m,
                                         const std::vector<Scalar>& b,
                                         const FieldSpec& field);

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b,
                     const FieldSpec& field);
std::vector<Scalar> apply(const ExactMatrix& m, const std::vector<Scalar>& x,
                          const FieldSpec& field);

}  // namespace zkring
