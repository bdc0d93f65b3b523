#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fpalg {

/// Rational generating function with dense integer coefficient lists in
/// ascending degree. Invariant: den[0] == 1. Not reduced to lowest terms
/// unless reduce() is applied; equality checks go through cross-multiplied
/// coefficient identities, never through a normal form.
struct RationalSeries {
  std::vector<mpz_class> num;
  std::vector<mpz_class> den;

  RationalSeries() : num{1}, den{1} {}
  RationalSeries(std::vector<mpz_class> n, std::vector<mpz_class> d);

  static RationalSeries from_ints(std::vector<long> n, std::vector<long> d);

  std::string str() const;  // e.g. "(1 - t^4 - t^5) / (1 - 3*t + ...)"
};

std::vector<mpz_class> poly_mul(const std::vector<mpz_class>& a,
                                const std::vector<mpz_class>& b);

/// num1 * den2 == num2 * den1 as polynomials.
bool series_equal(const RationalSeries& a, const RationalSeries& b);

/// Divide out the polynomial gcd of num and den (computed over Q) and rescale
/// so den[0] == 1 again. Throws std::logic_error if the rescaled coefficients
/// are not integral (cannot happen for series arising from integer transfer
/// matrices).
RationalSeries reduce(const RationalSeries& s);

}  // namespace fpalg
