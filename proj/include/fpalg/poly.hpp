#pragma once

#include <utility>
#include <vector>

#include "fpalg/field.hpp"
#include "fpalg/word.hpp"

namespace fpalg {

/// Sparse noncommutative polynomial: terms sorted strictly descending in
/// deglex, no zero coefficients, no duplicate words. The zero polynomial has
/// no terms.
class Polynomial {
 public:
  using Term = std::pair<Word, Scalar>;

  explicit Polynomial(const Field& f) : field_(f) {}

  /// Normalizes: sorts descending, merges duplicate words, drops zeros.
  static Polynomial from_terms(const Field& f, std::vector<Term> terms);
  static Polynomial zero(const Field& f) { return Polynomial(f); }
  static Polynomial monomial(const Field& f, const Word& w) {
    return from_terms(f, {{w, Scalar::one(f)}});
  }

  const Field& field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Degree of the leading word; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }
  /// All words of equal degree (vacuously true for zero).
  bool is_homogeneous() const;

  /// The greatest word with its coefficient. Throws on zero polynomial.
  const Term& leading_term() const;
  const Word& leading_word() const { return leading_term().first; }

  bool is_monic() const { return !terms_.empty() && terms_.front().second.is_one(); }
  Polynomial monic() const;  // divide by the leading coefficient

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Canonical three-way comparison: by degree, then leading words, then
  /// term lists. Total order on polynomials over one field.
  int cmp(const Polynomial& o) const;

  std::string str(const Alphabet& a) const;

 private:
  Field field_;
  std::vector<Term> terms_;
};

/// f + c * u * g * v  (the elementary two-sided ideal move).
Polynomial poly_add_scaled(const Polynomial& f, const Scalar& c, const Word& u,
                           const Polynomial& g, const Word& v);

/// u * f * v. Term order is preserved (deglex is compatible with
/// multiplication), so this is a cheap map.
Polynomial poly_shift(const Polynomial& f, const Word& u, const Word& v);

/// The leading term of a non-zero polynomial; throws std::invalid_argument
/// with "no leading term" on zero input.
std::pair<Word, Scalar> leading_term(const Polynomial& f);

/// Coefficient-wise reduction mod p of an integer-coefficient rational
/// polynomial. Throws if f has a non-integer coefficient or p is not prime.
Polynomial specialize_mod_p(const Polynomial& f, std::uint32_t p);

}  // namespace fpalg
