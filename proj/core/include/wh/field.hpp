#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace wh {

/// Exact scalar. Over ℚ it is a canonical GMP rational; over GF(p) it holds an
/// integer residue in [0, p). Which one applies is decided by the owning Field.
using Scalar = mpq_class;

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ground field K. Every arithmetic operation goes through the field so
/// residues stay reduced; values never carry their own tag.
class Field {
 public:
  enum class Kind { Rational, Prime };

  static Field rationals() { return Field(Kind::Rational, 0); }
  /// Throws FieldError unless p is prime and p < 2^31.
  static Field prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rational; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const { return Scalar(0); }
  Scalar one() const { return Scalar(1); }
  Scalar from_int(long v) const { return reduce(Scalar(v)); }

  /// Maps an arbitrary rational into the field (for GF(p): a/b ↦ a·b⁻¹ mod p).
  Scalar reduce(const Scalar& v) const;

  Scalar add(const Scalar& a, const Scalar& b) const { return reduce(a + b); }
  Scalar sub(const Scalar& a, const Scalar& b) const { return reduce(a - b); }
  Scalar mul(const Scalar& a, const Scalar& b) const { return reduce(a * b); }
  Scalar neg(const Scalar& a) const { return reduce(-a); }
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }

  /// Accepts "n", "-n", "n/d". Throws FieldError on malformed text or a zero
  /// denominator (or a denominator divisible by p).
  Scalar parse(std::string_view text) const;
  static std::string format(const Scalar& a) { return a.get_str(); }

  /// "Q" or "GF(p)".
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  Field(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace wh
