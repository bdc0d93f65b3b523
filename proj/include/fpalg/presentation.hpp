#pragma once

#include <string>
#include <vector>

#include "fpalg/errors.hpp"
#include "fpalg/poly.hpp"

namespace fpalg {

/// A finite presentation: alphabet with deglex precedence (listed order,
/// first letter largest), coefficient field, and a list of homogeneous
/// defining relations of degree >= 2.
struct Presentation {
  Alphabet alphabet;
  Field field = Field::rationals();
  std::vector<Polynomial> relations;

  DegLexOrder order() const { return DegLexOrder(alphabet); }

  /// Max relation degree (0 when there are no relations).
  int max_relation_degree() const;

  bool operator==(const Presentation& o) const {
    return alphabet == o.alphabet && field == o.field && relations == o.relations;
  }
};

/// Parse the presentation text format:
///   generators: x y z
///   field: Q            (or GF(p))
///   relations:
///   x*y
///   x^2 - x*z - 2*z^2
/// '#' starts a comment; blank lines are ignored. Coefficients are integers.
/// Throws ParseError with line/column on malformed input, unknown generators,
/// inhomogeneous or zero relations, and non-prime moduli.
Presentation parse_presentation(const std::string& text);

/// Canonical text form; parse_presentation(print_presentation(P)) == P.
std::string print_presentation(const Presentation& p);

/// Coefficient-wise mod-p specialization of every relation. Relations whose
/// image vanishes are dropped. Requires integer coefficients.
Presentation specialize_mod_p(const Presentation& p, std::uint32_t prime);

/// Relations sorted canonically (degree, then leading word, then term lists);
/// used for order-independent processing and hashing.
std::vector<Polynomial> canonical_relations(const Presentation& p);

/// FNV-1a hash of the canonicalized presentation text, as fixed-width hex.
/// Invariant under permutation of the relation list.
std::string presentation_hash(const Presentation& p);

}  // namespace fpalg
