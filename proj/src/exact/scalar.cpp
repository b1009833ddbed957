#include "hopflab/exact/scalar.hpp"

#include <charconv>

namespace hopflab::exact {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime_number(p))
    throw Error(ErrorCode::unsupported_field, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  return Field(p);
}

Field Field::parse(std::string_view tag) {
  if (tag == "rational" || tag == "Q") return rational();
  if (tag.substr(0, 3) == "fp:") {
    std::uint64_t p = 0;
    auto body = tag.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size() || p > 0xffffffffull)
      throw Error(ErrorCode::parse_error, "bad field tag '" + std::string(tag) + "'");
    return prime(static_cast<std::uint32_t>(p));
  }
  throw Error(ErrorCode::parse_error, "bad field tag '" + std::string(tag) + "'");
}

std::string Field::tag() const {
  return is_rational() ? std::string("rational") : "fp:" + std::to_string(modulus_);
}

Field Scalar::field_of(std::uint32_t modulus) { return modulus == 0 ? Field::rational() : Field(modulus); }

namespace {

std::int64_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return r < 0 ? r + p : r;
}

std::int64_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r.get_si();
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = t - q * new_t;
    std::swap(t, new_t);
    r = r - q * new_r;
    std::swap(r, new_r);
  }
  return t < 0 ? t + p : t;
}

}  // namespace

Scalar Scalar::zero(Field f) { return from_int(f, 0); }
Scalar Scalar::one(Field f) { return from_int(f, 1); }

Scalar Scalar::from_int(Field f, long long v) {
  if (f.is_prime()) return Scalar(Residue{reduce(v, f.modulus()), f.modulus()});
  return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
}

Scalar Scalar::from_fraction(Field f, long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator");
  return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  mpz_class num, den(1);
  try {
    if (slash == std::string::npos) {
      num = mpz_class(s, 10);
    } else {
      num = mpz_class(s.substr(0, slash), 10);
      den = mpz_class(s.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::parse_error, "bad scalar '" + s + "'");
  }
  if (den == 0) throw Error(ErrorCode::division_by_zero, "zero denominator in '" + s + "'");
  if (f.is_prime()) {
    Scalar n(Residue{reduce(num, f.modulus()), f.modulus()});
    Scalar d(Residue{reduce(den, f.modulus()), f.modulus()});
    return n / d;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(std::move(q));
}

void Scalar::require_same(const Scalar& o) const {
  const auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus))
    throw Error(ErrorCode::field_mismatch, field().tag() + " vs " + o.field().tag());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::division_by_zero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{inverse_mod(r->value, r->modulus), r->modulus});
  mpq_class q = 1 / std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if (a != nullptr && b != nullptr && a->modulus == b->modulus) {
    a->value += b->value;
    if (a->value >= a->modulus) a->value -= a->modulus;
    return *this;
  }
  require_same(o);
  std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if (a != nullptr && b != nullptr && a->modulus == b->modulus) {
    a->value -= b->value;
    if (a->value < 0) a->value += a->modulus;
    return *this;
  }
  require_same(o);
  std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  auto* a = std::get_if<Residue>(&value_);
  const auto* b = std::get_if<Residue>(&o.value_);
  if (a != nullptr && b != nullptr && a->modulus == b->modulus) {
    a->value = (a->value * b->value) % a->modulus;
    return *this;
  }
  require_same(o);
  std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  return *this;
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  mpq_class q = -std::get<mpq_class>(value_);
  return Scalar(std::move(q));
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) return r->value == std::get<Scalar::Residue>(b.value_).value;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  a.require_same(b);
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_)) return r->value < std::get<Scalar::Residue>(b.value_).value;
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::int64_t Scalar::residue() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorCode::field_mismatch, "residue() on a rational scalar");
}

const mpq_class& Scalar::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::field_mismatch, "rational() on a prime-field scalar");
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace hopflab::exact
