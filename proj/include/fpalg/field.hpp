#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fpalg {

bool is_prime_u32(std::uint32_t n);

/// Coefficient domain: the rationals or a prime field GF(p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field gf(std::uint32_t p);  // throws std::invalid_argument unless p is prime

  /// 0 for the rationals, p for GF(p).
  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

  std::string str() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_;
};

/// An exact scalar: an arbitrary-precision rational kept in lowest terms, or
/// a residue in [0, p) for a prime p. Arithmetic between scalars of different
/// fields throws std::invalid_argument.
class Scalar {
 public:
  Scalar() : p_(0), r_(0) {}  // rational zero

  static Scalar zero(const Field& f) { return from_long(f, 0); }
  static Scalar one(const Field& f) { return from_long(f, 1); }
  static Scalar from_long(const Field& f, long v);
  static Scalar from_integer(const Field& f, const mpz_class& v);
  static Scalar rational(const mpq_class& q);
  static Scalar residue(std::uint32_t p, std::uint64_t v);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// True for rationals with denominator 1 and for all residues.
  bool is_integer() const;
  /// The integer value; requires is_integer(). For GF(p) this is the residue.
  mpz_class integer_value() const;

  const mpq_class& rat() const;     // requires rational field
  std::uint32_t residue_value() const;  // requires GF(p)

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws on division by zero
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Strict total order within one field (for canonical sorting only).
  int cmp(const Scalar& o) const;

  std::string str() const;

 private:
  Scalar(std::uint32_t p, std::uint32_t r) : p_(p), r_(r) {}
  void check_same_field(const Scalar& o) const;

  std::uint32_t p_;  // 0 => rational
  std::uint32_t r_;  // residue when p_ != 0
  mpq_class q_;      // value when p_ == 0
};

}  // namespace fpalg
