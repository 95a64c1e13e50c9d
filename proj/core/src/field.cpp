#include "zkring/field.hpp"

#include <charconv>

#include "zkring/error.hpp"

namespace zkring {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (p_ != 0 && (!is_prime(p_) || p_ >= (std::uint32_t{1} << 31))) {
    throw Error(ErrorCode::kInvalidField,
                "characteristic " + std::to_string(p_) + " is not a prime below 2^31");
  }
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "q") return FieldSpec();
  std::string_view digits;
  if (text.starts_with("Fp:")) {
    digits = text.substr(3);
  } else if (text.starts_with("F") || text.starts_with("f")) {
    digits = text.substr(1);
  } else {
    throw Error(ErrorCode::kInvalidField, "expected Q, F<p> or Fp:<p>, got '" +
                                              std::string(text) + "'");
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorCode::kInvalidField, "bad characteristic in '" + std::string(text) + "'");
  }
  if (p == 0) throw Error(ErrorCode::kInvalidField, "use Q for characteristic 0");
  return FieldSpec(p);
}

std::string FieldSpec::to_string() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

std::string FieldSpec::short_name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar FieldSpec::normalize(const Scalar& x) const {
  if (p_ == 0) return x;
  mpz_class num = x.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = x.get_den() % p_;
  if (den == 0) {
    throw Error(ErrorCode::kInvalidField, "denominator divisible by the characteristic");
  }
  if (den != 1) {
    mpz_class inv;
    mpz_class modulus(p_);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    num = num * inv % p_;
  }
  return Scalar(num);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (is_zero(a)) throw Error(ErrorCode::kInvalidField, "division by zero");
  return normalize(Scalar(1) / a);
}

}  // namespace zkring
