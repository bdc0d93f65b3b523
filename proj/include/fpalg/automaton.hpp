#pragma once

#include "fpalg/count_table.hpp"
#include "fpalg/pattern.hpp"
#include "fpalg/rational_series.hpp"

namespace fpalg {

/// Deterministic finite automaton with a total transition function. For
/// factor-avoidance automata the reject sink is `dead` (or -1 if absent) and
/// every other state accepts.
struct Dfa {
  int letters = 0;
  int start = 0;
  int dead = -1;
  std::vector<std::vector<int>> next;  // [state][letter]
  std::vector<char> accepting;

  int states() const { return static_cast<int>(next.size()); }
};

/// Compile a pattern set into the DFA of words containing NO pattern instance
/// as a factor: glue the pattern chains onto a wildcard start, determinize by
/// subset construction, complement, and collapse the absorbing reject class.
/// An empty pattern set yields the all-accepting one-state DFA.
Dfa compile_forbidden(const std::vector<FactorPattern>& patterns, const Alphabet& a);

/// Same, for a finite list of literal forbidden words.
Dfa compile_forbidden_words(const std::vector<Word>& words, const Alphabet& a);

/// a[n] = number of accepted words of length n for n <= N, by iterating the
/// state-count vector with exact integer arithmetic.
CountTable count_by_degree(const Dfa& dfa, int N);

/// The rational generating function of the DFA's accepted-word counts:
/// denominator det(I - t*M) from the transfer matrix M restricted to live
/// states, numerator by convolution. The expansion is verified against
/// count_by_degree for n <= 2*states + 5 before returning.
RationalSeries series_from_dfa(const Dfa& dfa);

}  // namespace fpalg
