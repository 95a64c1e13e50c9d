#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zkring {

// Exact field element exchanged across module boundaries. Over 𝔽_p the
// value is always the canonical integer representative in [0, p).
using Scalar = mpq_class;

// Coefficient field: ℚ (characteristic 0) or 𝔽_p for a prime p < 2^31.
class FieldSpec {
 public:
  FieldSpec() = default;
  // Throws kInvalidField if p is neither 0 nor a prime below 2^31.
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(std::uint32_t p) { return FieldSpec(p); }
  // Accepts "Q", "F<p>" and "Fp:<p>".
  static FieldSpec parse(std::string_view text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  // "Q" or "Fp:<p>" (the JSON spelling).
  std::string to_string() const;
  // "Q" or "F<p>" (the CLI spelling).
  std::string short_name() const;

  Scalar normalize(const Scalar& x) const;
  Scalar from_int(long long v) const { return normalize(Scalar(static_cast<long>(v))); }
  Scalar add(const Scalar& a, const Scalar& b) const { return normalize(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return normalize(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return normalize(a * b); }
  Scalar neg(const Scalar& a) const { return normalize(-a); }
  Scalar inv(const Scalar& a) const;
  bool is_zero(const Scalar& a) const { return sgn(a) == 0; }

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

}  // namespace zkring
