#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hopflab/error.hpp"

namespace hopflab::exact {

/// The base field: either Q or F_p for a prime p < 2^31.
class Scalar;

class Field {
 public:
  static Field rational() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "rational" and "fp:<p>".
  static Field parse(std::string_view tag);

  bool is_rational() const noexcept { return modulus_ == 0; }
  bool is_prime() const noexcept { return modulus_ != 0; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t characteristic() const noexcept { return modulus_; }
  std::string tag() const;

  friend bool operator==(Field, Field) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

bool is_prime_number(std::uint64_t n);

/// An exact field element. Rationals are kept reduced with a positive
/// denominator; residues live in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : value_(mpq_class(0)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long v);
  static Scalar from_fraction(Field f, long long num, long long den);
  /// "a/b" or "a" for rationals, "r" for residues (any integer is reduced).
  static Scalar parse(Field f, std::string_view text);

  Field field() const noexcept {
    if (const auto* r = std::get_if<Residue>(&value_)) return field_of(r->modulus);
    return Field::rational();
  }

  bool is_zero() const noexcept {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
    return sgn(std::get<mpq_class>(value_)) == 0;
  }
  bool is_one() const noexcept {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
    return std::get<mpq_class>(value_) == 1;
  }

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Residue in [0, p); only valid over a prime field.
  std::int64_t residue() const;
  const mpq_class& rational() const;

  std::string to_string() const;

  /// Strict total order used for canonical sorting (residue order, or
  /// numeric order for rationals). Only compares scalars of one field.
  friend bool canonical_less(const Scalar& a, const Scalar& b);

 private:
  struct Residue {
    std::int64_t value;
    std::uint32_t modulus;
  };

  static Field field_of(std::uint32_t modulus);
  explicit Scalar(Residue r) : value_(r) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  void require_same(const Scalar& o) const;

  std::variant<Residue, mpq_class> value_;
};

}  // namespace hopflab::exact
