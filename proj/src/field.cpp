#include "fpalg/field.hpp"

#include <stdexcept>

namespace fpalg {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::gf(std::uint32_t p) {
  if (!is_prime_u32(p))
    throw std::invalid_argument("GF modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::str() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

namespace {

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::invalid_argument("division by zero in GF(p)");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

}  // namespace

Scalar Scalar::from_long(const Field& f, long v) {
  return from_integer(f, mpz_class(v));
}

Scalar Scalar::from_integer(const Field& f, const mpz_class& v) {
  if (f.is_rational()) return rational(mpq_class(v));
  std::uint32_t p = f.characteristic();
  std::uint32_t r = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
  return Scalar(p, r);
}

Scalar Scalar::rational(const mpq_class& q) {
  Scalar s;
  s.q_ = q;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::residue(std::uint32_t p, std::uint64_t v) {
  if (!is_prime_u32(p)) throw std::invalid_argument("modulus is not prime");
  return Scalar(p, static_cast<std::uint32_t>(v % p));
}

Field Scalar::field() const { return p_ == 0 ? Field::rationals() : Field::gf(p_); }

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

bool Scalar::is_integer() const {
  return p_ != 0 || q_.get_den() == 1;
}

mpz_class Scalar::integer_value() const {
  if (p_ != 0) return mpz_class(r_);
  if (q_.get_den() != 1) throw std::invalid_argument("scalar is not an integer");
  return q_.get_num();
}

const mpq_class& Scalar::rat() const {
  if (p_ != 0) throw std::invalid_argument("scalar is not rational");
  return q_;
}

std::uint32_t Scalar::residue_value() const {
  if (p_ == 0) throw std::invalid_argument("scalar is not a residue");
  return r_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  if (p_ == 0) return rational(-q_);
  return Scalar(p_, r_ == 0 ? 0 : p_ - r_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return rational(q_ + o.q_);
  std::uint64_t s = static_cast<std::uint64_t>(r_) + o.r_;
  return Scalar(p_, static_cast<std::uint32_t>(s % p_));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return rational(q_ * o.q_);
  std::uint64_t s = static_cast<std::uint64_t>(r_) * o.r_;
  return Scalar(p_, static_cast<std::uint32_t>(s % p_));
}

Scalar Scalar::inverse() const {
  if (p_ == 0) {
    if (q_ == 0) throw std::invalid_argument("division by zero");
    return rational(1 / q_);
  }
  return Scalar(p_, mod_inverse(r_, p_));
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

int Scalar::cmp(const Scalar& o) const {
  check_same_field(o);
  if (p_ == 0) return ::cmp(q_, o.q_);
  return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
}

std::string Scalar::str() const {
  return p_ == 0 ? q_.get_str() : std::to_string(r_);
}

}  // namespace fpalg
