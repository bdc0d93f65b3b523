#pragma once

#include <optional>

#include "fpalg/presentation.hpp"

namespace fpalg {

/// Multi-pattern factor index over a set of leading words (Aho-Corasick
/// automaton with output links). Rebuilt whenever the pattern set changes.
class FactorIndex {
 public:
  struct Occurrence {
    int pattern = -1;  // element index
    int start = 0;     // position of the factor in the scanned word
    int length = 0;
  };

  void build(const std::vector<Word>& patterns, int alphabet_size);

  bool empty() const { return pats_.empty(); }

  /// Does any pattern occur in w as a factor?
  bool matches(const Word& w) const;

  /// The occurrence to rewrite first: deglex-smallest pattern word, then
  /// leftmost position, then lowest element index. nullopt if w is normal.
  std::optional<Occurrence> best_occurrence(const Word& w) const;

 private:
  struct Node {
    std::vector<int> next;
    int fail = 0;
    int out = -1;       // pattern ending here (lowest index if words repeat)
    int out_link = -1;  // nearest proper suffix node with an output
  };
  std::vector<Node> nodes_;
  std::vector<Word> pats_;
  std::vector<int> word_rank_;  // pattern -> rank of its word among distinct words
  int letters_ = 0;
};

/// A set of monic rewriting elements with a factor index over their leading
/// words.
class RewriteSet {
 public:
  RewriteSet(const Field& field, int alphabet_size)
      : field_(field), letters_(alphabet_size) {}

  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Polynomial>& elements() const { return elems_; }
  const Polynomial& element(int i) const { return elems_.at(i); }
  const Word& leading(int i) const { return elems_.at(i).leading_word(); }
  const Field& field() const { return field_; }
  int alphabet_size() const { return letters_; }

  /// Adds a monic, non-zero element. Returns its index.
  int add(Polynomial p);
  /// Replaces an element without changing its leading word.
  void replace(int i, Polynomial p);
  void remove(int i);

  const FactorIndex& index() const;

 private:
  Field field_;
  int letters_;
  std::vector<Polynomial> elems_;
  mutable FactorIndex index_;
  mutable bool dirty_ = true;
};

/// An ambiguity: a word containing leading(left) at offset 0 and
/// leading(right) at offset_right. Proper suffix-prefix overlaps have
/// offset_right > 0 and the right word sticking out; containments have the
/// right word inside the left one.
struct Overlap {
  int left = 0;
  int right = 0;
  int offset_right = 0;
  Word ambiguity;

  int degree() const { return ambiguity.degree(); }
};

/// All proper overlaps (suffix-prefix and containment) between element
/// new_index and every element of the set, itself included. No duplicates.
std::vector<Overlap> find_overlaps(const RewriteSet& rs, int new_index);

/// The difference of the two one-step rewritings of the ambiguity word.
Polynomial overlap_spolynomial(const Overlap& o, const RewriteSet& rs);

/// Repeated rewriting of f by rs until no monomial contains a leading word
/// as a factor. Strategy: greatest reducible monomial first; within it the
/// leftmost occurrence of the deglex-smallest applicable leading word, ties
/// by element index. Terminates because each step strictly decreases the
/// term multiset in the well-order.
Polynomial normal_form(const Polynomial& f, const RewriteSet& rs);

/// Inter-reduction: returns an equivalent set in which every element is
/// monic and no leading word occurs as a factor of any monomial of another
/// element. Idempotent, deterministic.
RewriteSet interreduce(const RewriteSet& rs);

/// Degree-truncated reduced Groebner basis.
struct TruncatedGB {
  RewriteSet basis;
  int degree_bound = 0;
  /// True when completion provably terminated globally: every ambiguity of
  /// the final set has degree at most 2*maxdeg - 1 <= degree_bound, so no
  /// further elements can ever appear.
  bool complete = false;
  std::vector<Word> leading_words;  // ascending deglex

  int max_element_degree() const;
};

/// Buchberger completion for graded ideals, truncated at degree D: processes
/// ambiguities degree by degree, so the set of elements of degree <= D is
/// exactly the degree-<= D part of the reduced Groebner basis. Elements are
/// sorted ascending by leading word; the result is independent of the order
/// of the input relations.
TruncatedGB buchberger_truncated(const Presentation& p, int degree_bound);

/// True iff normal_form(f, gb.basis) == 0. Only valid for homogeneous f of
/// degree <= gb.degree_bound; throws std::invalid_argument beyond the bound.
bool ideal_member_up_to(const Polynomial& f, const TruncatedGB& gb);

}  // namespace fpalg
