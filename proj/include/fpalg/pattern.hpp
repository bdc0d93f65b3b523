#pragma once

#include <string>
#include <vector>

#include "fpalg/errors.hpp"
#include "fpalg/word.hpp"

namespace fpalg {

/// A factor pattern: a concatenation of atoms, each a fixed word or a starred
/// finite word "(w)*" (with "c*" shorthand for a single letter). Denotes the
/// family of words obtained by expanding each star to j >= 0 repetitions.
struct FactorPattern {
  struct Atom {
    Word word;
    bool starred = false;
  };
  std::vector<Atom> atoms;

  /// Literal pattern denoting exactly one word.
  static FactorPattern literal(const Word& w);

  bool has_star() const;
  /// Degree of the shortest instance (stars taken zero times).
  int min_degree() const;

  std::string str(const Alphabet& a) const;
};

/// Parse one pattern per non-blank line. Tokens: letter names, "(", ")", "*";
/// e.g. "x z* x" or "y y ( x y )* x y y". '#' starts a comment.
std::vector<FactorPattern> parse_patterns(const std::string& text, const Alphabet& a);

/// All instances of the pattern of degree <= max_degree, deduplicated and
/// sorted ascending in deglex.
std::vector<Word> pattern_instances(const FactorPattern& p, int max_degree);

/// Union of instances over a pattern list, sorted ascending, deduplicated.
std::vector<Word> pattern_set_instances(const std::vector<FactorPattern>& ps,
                                        int max_degree);

}  // namespace fpalg
