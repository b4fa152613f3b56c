#include "wh/field.hpp"

#include <cctype>

namespace wh {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31)) {
    throw FieldError("prime field modulus must be below 2^31");
  }
  if (!is_prime(p)) {
    throw FieldError("modulus " + std::to_string(p) + " is not prime");
  }
  return Field(Kind::Prime, static_cast<std::uint32_t>(p));
}

Scalar Field::reduce(const Scalar& v) const {
  if (kind_ == Kind::Rational) return v;
  mpz_class modulus(p_);
  mpz_class num = v.get_num() % modulus;
  if (num < 0) num += modulus;
  if (v.get_den() == 1) return Scalar(num);
  mpz_class den = v.get_den() % modulus;
  mpz_class den_inv;
  if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw FieldError("denominator " + v.get_den().get_str() + " is zero in " + name());
  }
  mpz_class r = (num * den_inv) % modulus;
  return Scalar(r);
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) throw FieldError("division by zero");
  if (kind_ == Kind::Rational) return Scalar(1) / a;
  mpz_class modulus(p_);
  mpz_class r;
  mpz_class n = a.get_num();
  mpz_invert(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
  return Scalar(r);
}

Scalar Field::parse(std::string_view text) const {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+') {
    throw FieldError("malformed scalar '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw FieldError("zero denominator in '" + std::string(text) + "'");
  Scalar v(n, d);
  v.canonicalize();
  return reduce(v);
}

std::string Field::name() const {
  if (kind_ == Kind::Rational) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

}  // namespace wh
