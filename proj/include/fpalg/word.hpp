#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fpalg {

/// Ordered generator set. Position in the list is the letter's rank;
/// position 0 is the largest letter under the degree-lexicographic order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);  // validates names

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& name(int rank) const { return letters_.at(rank); }
  const std::vector<std::string>& letters() const { return letters_; }

  /// Rank of a generator name, or -1 if unknown.
  int rank_of(const std::string& name) const;

  bool operator==(const Alphabet& o) const { return letters_ == o.letters_; }
  bool operator!=(const Alphabet& o) const { return !(*this == o); }

  static bool valid_name(const std::string& s);

 private:
  std::vector<std::string> letters_;
};

/// A monomial of the free monoid: a finite sequence of letter ranks.
/// The empty sequence is the unit word 1. Degree is the length.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<std::uint8_t> letters) : letters_(std::move(letters)) {}

  static Word one() { return Word(); }
  static Word single(int rank) { return Word({static_cast<std::uint8_t>(rank)}); }

  int degree() const { return static_cast<int>(letters_.size()); }
  bool is_one() const { return letters_.empty(); }
  std::uint8_t operator[](int i) const { return letters_[i]; }
  const std::vector<std::uint8_t>& letters() const { return letters_; }

  Word prefix(int len) const;
  Word suffix_from(int start) const;
  Word subword(int start, int len) const;

  void append(const Word& w);
  void append_letter(int rank) { letters_.push_back(static_cast<std::uint8_t>(rank)); }

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return letters_ != o.letters_; }

  /// Rendering with runs compressed, e.g. "x*z^2*x"; the unit word is "1".
  std::string str(const Alphabet& a) const;

 private:
  std::vector<std::uint8_t> letters_;
};

/// Left-to-right degree-lexicographic order induced by an alphabet's ranks.
/// Shorter words are smaller; equal lengths compare letters left to right
/// (rank 0 being the largest letter). A well-order compatible with
/// multiplication on both sides.
class DegLexOrder {
 public:
  explicit DegLexOrder(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  const Alphabet& alphabet() const { return alphabet_; }

 private:
  Alphabet alphabet_;
};

/// Three-way deglex comparison. Throws std::invalid_argument if a rank falls
/// outside the order's alphabet.
std::strong_ordering cmp_deglex(const Word& u, const Word& v, const DegLexOrder& ord);

/// Rank-only comparison (no alphabet validation); same order as cmp_deglex.
std::strong_ordering cmp_deglex_ranks(const Word& u, const Word& v);

inline bool deglex_less(const Word& u, const Word& v) {
  return cmp_deglex_ranks(u, v) == std::strong_ordering::less;
}
inline bool deglex_greater(const Word& u, const Word& v) {
  return cmp_deglex_ranks(u, v) == std::strong_ordering::greater;
}

Word word_concat(const Word& u, const Word& v);

/// First position where `factor` occurs in `w` as a contiguous subword,
/// or -1 if none.
int find_factor(const Word& w, const Word& factor);

}  // namespace fpalg
