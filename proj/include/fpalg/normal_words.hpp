#pragma once

#include "fpalg/automaton.hpp"
#include "fpalg/groebner.hpp"

namespace fpalg {

/// The degree-n words containing no leading word of gb as a factor, in
/// descending deglex order. Requires n <= gb.degree_bound (degree-n normality
/// is decided by leading words of degree <= n).
std::vector<Word> enumerate_normal(const TruncatedGB& gb, int n);

/// Per-degree counts of normal words for n <= N, computed by dynamic
/// programming over the factor-avoidance automaton of the degree-<= N leading
/// words (not by listing). Requires N <= gb.degree_bound.
CountTable count_normal(const TruncatedGB& gb, int N);

/// A claimed description of a reduced basis: leading-word patterns plus an
/// optional built-in closed-form element constructor.
struct ClaimedFamily {
  enum class Ctor { none, exa1, exa2, rgbC };

  std::vector<FactorPattern> patterns;
  Ctor ctor = Ctor::none;
  // constructor parameters as exact rationals, mapped into the presentation's
  // field at verification time
  mpq_class param_a = 0;
  mpq_class param_b = 0;
};

/// Family file: patterns one per line (pattern grammar), plus at most one
/// constructor line "exa1(a=2,b=-3)", "exa2(a=1)" or "rgbC".
ClaimedFamily parse_family(const std::string& text, const Alphabet& a);

struct FamilyVerification {
  bool leading_words_match = false;
  bool elements_in_ideal = false;
  /// Smallest degree with a leading-word discrepancy, or -1.
  int first_mismatch_degree = -1;
  std::vector<std::string> notes;

  bool all_ok() const { return leading_words_match && elements_in_ideal; }
};

/// Computes the truncated basis of P at degree D and checks that (i) every
/// constructed family element of degree <= D reduces to zero against it and
/// (ii) the family's leading-word instances of degree <= D equal the computed
/// leading words exactly.
FamilyVerification verify_family(const Presentation& p, const ClaimedFamily& fam,
                                 int degree_bound);

/// As above but against an already computed basis.
FamilyVerification verify_family_against(const Presentation& p,
                                         const ClaimedFamily& fam,
                                         const TruncatedGB& gb);

}  // namespace fpalg
