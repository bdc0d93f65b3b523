#pragma once

#include <optional>

#include "fpalg/pattern.hpp"
#include "fpalg/presentation.hpp"
#include "fpalg/rational_series.hpp"

namespace fpalg {

/// Built-in presentations.
///   A       : x,y,z; relations x*y, y*z, x^2 - x*z - 2*z^2       (= exa1 with a=2, b=-3)
///   B       : x,y;   relations y^3, x^2*y - y*x^2 - y*x*y        (= exa2 with a=1)
///   C       : x,y,z,u; x*u - y*z, y*u - z*x, z*u - u*z, y*y, y*x, x*y, x*x
///   exa1(a,b): x,y,z; x*y, y*z, x^2 - x*z - a*z^2; requires b not in {0,1,-1},
///              4a = b^2 - 1 in the field, characteristic != 2
///   exa2(a) : x,y; y^3, x^2*y - a*y*x^2 - y*x*y; requires a != 0
enum class AlgebraName { A, B, C, Exa1, Exa2 };

struct BuiltinAlgebra {
  AlgebraName name = AlgebraName::A;
  std::uint32_t characteristic = 0;  // 0 = rationals, else a prime
  mpq_class a = 0;                   // exa1 / exa2 parameter
  mpq_class b = 0;                   // exa1 parameter
};

const char* algebra_name_str(AlgebraName n);
std::optional<AlgebraName> algebra_name_parse(const std::string& s);

/// The presentation of a built-in algebra over Q (characteristic 0) or
/// GF(p). A, B, C specialize their integer relations coefficient-wise;
/// exa1/exa2 validate their parameter hypotheses in the target field and
/// throw std::invalid_argument when violated.
Presentation builtin(const BuiltinAlgebra& alg);

/// Least m >= 1 with x^m = 1 in GF(p)*. Throws if x is 0 mod p.
int mult_order(long x, std::uint32_t p);
int mult_order(const Scalar& x);

/// Which closed-form regime a built-in algebra falls into.
enum class PatternCase {
  infinite_order,  // exa1, parameter s of infinite order: infinite basis
  finite_order_m,  // exa1 over GF(p): s of finite order m
  char0_B,         // exa2 with all partial sums 1+a+...+a^k nonzero
  finite_k_B,      // exa2 with minimal k: 1+a+...+a^k = 0 (finite basis)
};

struct ExpectedPattern {
  PatternCase tag;
  int m_or_k = 0;  // m for finite_order_m, k for finite_k_B, else 0
  std::vector<FactorPattern> patterns;
  RationalSeries series;
};

/// The leading-word pattern family and closed-form series for a built-in
/// algebra of the exa1/exa2 kind (A and B included). Throws
/// std::invalid_argument for cases outside the covered hypotheses
/// (e.g. exa1 in characteristic 2 or 3 with the A parameters).
ExpectedPattern expected_pattern(const BuiltinAlgebra& alg);

/// Numerator exponent of the finite-basis exa2 series: the closed form is
/// (1 - t^E) / ((1-t)^2 (1 - t^2 - t^E)). Fixed by cross-checking exact
/// basis-derived counts for several primes.
inline int exa2_series_exponent(int k) { return 2 * k + 3; }

/// Closed-form basis element constructors, truncated at degree <= D.
std::vector<Polynomial> family_elements_exa1(const Field& f, const Scalar& a,
                                             const Scalar& b, int D);
std::vector<Polynomial> family_elements_exa2(const Field& f, const Scalar& a, int D);
std::vector<Polynomial> family_elements_rgbC(const Field& f, int D);

/// The full reduced-basis element list of the algebra C up to degree D:
/// three binomials, two degree-2 monomials and four monomial families.
std::vector<Polynomial> rgbC_elements(const Field& f, int D);
std::vector<Word> rgbC_leading_words(int D);

}  // namespace fpalg
