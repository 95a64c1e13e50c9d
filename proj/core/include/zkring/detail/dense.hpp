#pragma once

// Field-specialised elimination kernels behind the ExactMatrix facade.

#include <cstdint>
#include <utility>
#include <vector>

#include "zkring/field.hpp"
#include "zkring/linalg.hpp"

namespace zkring::detail {

struct RationalOps {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from(const Scalar& s) const { return s; }
  Scalar to_scalar(const Elem& e) const { return e; }
  bool is_zero(const Elem& e) const { return sgn(e) == 0; }
  Elem inv(const Elem& e) const { return Elem(1) / e; }
  // a -= f * b
  void sub_mul(Elem& a, const Elem& f, const Elem& b) const { a -= f * b; }
  void scale(Elem& a, const Elem& f) const { a *= f; }
};

struct PrimeOps {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from(const Scalar& s) const {
    mpz_class num = s.get_num() % p;
    if (num < 0) num += p;
    mpz_class den = s.get_den() % p;
    Elem n = static_cast<Elem>(num.get_ui());
    Elem d = static_cast<Elem>(den.get_ui());
    return mul(n, inv(d));
  }
  Scalar to_scalar(Elem e) const { return Scalar(static_cast<unsigned long>(e)); }
  bool is_zero(Elem e) const { return e == 0; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
  }
  Elem inv(Elem a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint32_t e = p - 2; e != 0; e >>= 1) {
      if (e & 1U) result = result * base % p;
      base = base * base % p;
    }
    return static_cast<Elem>(result);
  }
  void sub_mul(Elem& a, Elem f, Elem b) const {
    std::uint64_t t = static_cast<std::uint64_t>(f) * b % p;
    a = static_cast<Elem>((a + p - t) % p);
  }
  void scale(Elem& a, Elem f) const { a = mul(a, f); }
};

template <class Ops>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<typename Ops::Elem> a;

  typename Ops::Elem& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const typename Ops::Elem& at(std::size_t r, std::size_t c) const {
    return a[r * cols + c];
  }
  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
  }
};

template <class Ops>
Dense<Ops> to_dense(const ExactMatrix& m, const Ops& ops) {
  Dense<Ops> d{m.rows(), m.cols(), {}};
  d.a.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) d.a.push_back(ops.from(m(r, c)));
  }
  return d;
}

template <class Ops>
ExactMatrix from_dense(const Dense<Ops>& d, const Ops& ops, std::size_t row_count) {
  ExactMatrix m(row_count, d.cols);
  for (std::size_t r = 0; r < row_count; ++r) {
    for (std::size_t c = 0; c < d.cols; ++c) m(r, c) = ops.to_scalar(d.at(r, c));
  }
  return m;
}

// Gauss-Jordan in place; returns the pivot columns. Rows [0, pivots.size())
// hold the reduced nonzero rows afterwards.
template <class Ops>
std::vector<std::size_t> gauss_jordan(Dense<Ops>& d, const Ops& ops,
                                      PivotOrder order = PivotOrder::kTopDown) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < d.cols && r < d.rows; ++c) {
    std::size_t pivot = d.rows;
    if (order == PivotOrder::kTopDown) {
      for (std::size_t i = r; i < d.rows; ++i) {
        if (!ops.is_zero(d.at(i, c))) {
          pivot = i;
          break;
        }
      }
    } else {
      for (std::size_t i = d.rows; i-- > r;) {
        if (!ops.is_zero(d.at(i, c))) {
          pivot = i;
          break;
        }
      }
    }
    if (pivot == d.rows) continue;
    d.swap_rows(r, pivot);
    auto inv = ops.inv(d.at(r, c));
    for (std::size_t j = c; j < d.cols; ++j) ops.scale(d.at(r, j), inv);
    for (std::size_t i = 0; i < d.rows; ++i) {
      if (i == r || ops.is_zero(d.at(i, c))) continue;
      auto f = d.at(i, c);
      for (std::size_t j = c; j < d.cols; ++j) ops.sub_mul(d.at(i, j), f, d.at(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Rank by forward elimination only (no back substitution).
template <class Ops>
std::size_t forward_rank(Dense<Ops> d, const Ops& ops, PivotOrder order) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < d.cols && r < d.rows; ++c) {
    std::size_t pivot = d.rows;
    if (order == PivotOrder::kTopDown) {
      for (std::size_t i = r; i < d.rows; ++i) {
        if (!ops.is_zero(d.at(i, c))) {
          pivot = i;
          break;
        }
      }
    } else {
      for (std::size_t i = d.rows; i-- > r;) {
        if (!ops.is_zero(d.at(i, c))) {
          pivot = i;
          break;
        }
      }
    }
    if (pivot == d.rows) continue;
    d.swap_rows(r, pivot);
    auto inv = ops.inv(d.at(r, c));
    for (std::size_t i = r + 1; i < d.rows; ++i) {
      if (ops.is_zero(d.at(i, c))) continue;
      auto f = d.at(i, c);
      ops.scale(f, inv);
      for (std::size_t j = c; j < d.cols; ++j) ops.sub_mul(d.at(i, j), f, d.at(r, j));
    }
    ++r;
  }
  return r;
}

// Dispatches `fn(ops)` with the elimination kernel matching `field`.
template <class Fn>
decltype(auto) with_ops(const FieldSpec& field, Fn&& fn) {
  if (field.is_rational()) return fn(RationalOps{});
  return fn(PrimeOps{field.characteristic()});
}

}  // namespace zkring::detail
